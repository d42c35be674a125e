#include "coxinv/root_system.hpp"

#include <gtest/gtest.h>

using namespace coxinv;

namespace {

struct Case {
  Family family;
  int n;
  std::size_t roots;
  bool minus_one;
};

const std::vector<Case> kCases = {
    {Family::A, 1, 2, true},    {Family::A, 4, 20, false},  {Family::A, 6, 42, false},
    {Family::B, 2, 8, true},    {Family::B, 5, 50, true},   {Family::D, 4, 24, true},
    {Family::D, 5, 40, false},  {Family::D, 6, 60, true},   {Family::E, 6, 72, false},
    {Family::E, 7, 126, true},  {Family::E, 8, 240, true},  {Family::F, 4, 48, true},
    {Family::H, 3, 30, true},   {Family::H, 4, 120, true},  {Family::I, 5, 10, false},
    {Family::I, 8, 16, true},
};

std::string name(const Case& c) { return Irreducible{c.family, c.n}.to_string(); }

}  // namespace

TEST(RootSystem, CountsOrdersAndMinusOne) {
  for (const auto& c : kCases) {
    RootSystem rs = RootSystem::build(c.family, c.n);
    SCOPED_TRACE(name(c));
    EXPECT_EQ(rs.num_roots(), c.roots);
    EXPECT_EQ(static_cast<std::size_t>(rs.type().reflections()), c.roots / 2);
    EXPECT_EQ(rs.group().order(), rs.type().order());
    EXPECT_EQ(rs.has_minus_one(), c.minus_one);
    EXPECT_EQ(rs.simple_roots().size(), static_cast<std::size_t>(rs.rank()));
  }
}

TEST(RootSystem, ReflectionsAreInvolutionsNegatingTheirRoot) {
  for (const auto& c : kCases) {
    RootSystem rs = RootSystem::build(c.family, c.n);
    SCOPED_TRACE(name(c));
    for (std::uint32_t r = 0; r < rs.num_roots(); ++r) {
      const Perm& s = rs.reflection_perm(r);
      EXPECT_TRUE((s * s).is_identity());
      EXPECT_EQ(s[r], rs.negative(r));
      EXPECT_EQ(rs.degree(s), 1);
    }
  }
}

TEST(RootSystem, ReflectionMatricesAreOrthogonalOfCorankOne) {
  for (const auto& c : kCases) {
    RootSystem rs = RootSystem::build(c.family, c.n);
    if (rs.is_dihedral_model()) continue;
    SCOPED_TRACE(name(c));
    const Matrix& g = rs.gram();
    Matrix id = Matrix::identity(static_cast<std::size_t>(rs.rank()));
    for (auto r : rs.positive_roots()) {
      Matrix m = rs.element_matrix(rs.reflection_perm(r));
      EXPECT_EQ(m.transpose() * g * m, g);
      EXPECT_EQ(rank(m - id), 1u);
      EXPECT_EQ(m * rs.coords(r), scale(Scalar(-1), rs.coords(r)));
    }
  }
}

TEST(RootSystem, PositiveRootsHaveNonnegativeCoordinates) {
  for (const auto& c : kCases) {
    RootSystem rs = RootSystem::build(c.family, c.n);
    if (rs.is_dihedral_model()) continue;
    SCOPED_TRACE(name(c));
    for (auto r : rs.positive_roots())
      for (const auto& x : rs.coords(r)) EXPECT_GE(x, Scalar(0));
  }
}

TEST(RootSystem, HighestRootDominates) {
  for (Family f : {Family::A, Family::B, Family::D}) {
    RootSystem rs = RootSystem::build(f, 5);
    auto theta = rs.highest_root();
    ASSERT_TRUE(theta);
    for (auto r : rs.positive_roots())
      for (std::size_t i = 0; i < 5; ++i) EXPECT_GE(rs.coords(*theta)[i], rs.coords(r)[i]);
  }
  RootSystem e8 = RootSystem::build(Family::E, 8);
  Scalar height = 0;
  for (const auto& x : e8.coords(*e8.highest_root())) height += x;
  EXPECT_EQ(height, Scalar(29));
}

TEST(RootSystem, CapabilityLimits) {
  EXPECT_THROW(RootSystem::build(Family::D, 2), CapabilityError);
  EXPECT_THROW(RootSystem::build(Family::E, 9), CapabilityError);
  EXPECT_THROW(RootSystem::build(Family::I, 2), CapabilityError);
  EXPECT_THROW(parse_type_name("Z3"), CapabilityError);
  EXPECT_EQ(RootSystem::build(Family::D, 3).type(), CoxeterType::A(3));
  EXPECT_EQ(RootSystem::build(Family::I, 6).type(), CoxeterType::parse("G2"));
}
