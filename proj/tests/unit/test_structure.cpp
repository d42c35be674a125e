#include "coxinv/classic_models.hpp"
#include "coxinv/structure.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace coxinv;

namespace {

const ClassAnalysis* find_class(const GroupAnalysis& ga, int degree, const std::string& label = "") {
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i].profile.degree == degree && ga[i].profile.label == label) return &ga[i];
  return nullptr;
}

struct MatrixImage {
  std::size_t order = 0;
  std::size_t reflections = 0;
  std::size_t fixed_dim = 0;
};

// Restriction of the centralizer to V_u^+, computed directly from the
// element matrices: basis of ker(u - 1), coordinates by solving.
MatrixImage restrict_to_plus(const RootSystem& rs, const ClassAnalysis& a) {
  std::size_t n = static_cast<std::size_t>(rs.rank());
  Matrix id = Matrix::identity(n);
  auto basis = kernel_basis(rs.element_matrix(a.u) - id);
  Matrix b = Matrix::from_columns(basis);
  std::size_t k = basis.size();
  std::vector<Matrix> gens;
  for (const auto& g : a.centralizer.generators()) {
    Matrix m = rs.element_matrix(g);
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto x = solve(b, m * basis[j]);
      EXPECT_TRUE(x);
      for (std::size_t i = 0; i < k; ++i) r(i, j) = (*x)[i];
    }
    gens.push_back(r);
  }
  std::vector<Matrix> elems = {Matrix::identity(k)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Matrix x = g * elems[i];
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
  MatrixImage out;
  out.order = elems.size();
  for (const auto& e : elems)
    if (rank(e - Matrix::identity(k)) == 1) ++out.reflections;
  std::vector<Vector> rows;
  for (const auto& g : gens) {
    Matrix d = g - Matrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(d.row(i));
  }
  out.fixed_dim = kernel_basis(Matrix::from_rows(rows)).size();
  return out;
}

}  // namespace

TEST(Structure, E6DegreeTwoPlusImageIsB3) {
  GroupAnalysis ga(RootSystem::build(Family::E, 6));
  const ClassAnalysis* a = find_class(ga, 2);
  ASSERT_TRUE(a);
  MatrixImage img = restrict_to_plus(ga.root_system(), *a);
  // B3 has order 48 and 9 reflections.  A1 x A3 would have the same order
  // but 7 reflections and no fixed line in a 4-dimensional space.
  EXPECT_EQ(img.order, 48u);
  EXPECT_EQ(img.reflections, 9u);
  EXPECT_EQ(img.fixed_dim, 1u);
  EXPECT_EQ(a->profile.tilde_plus, CoxeterType::B(3));
  EXPECT_EQ(a->profile.g_plus, CoxeterType::A(3));
}

TEST(Structure, TildeOrdersAgreeWithMatrixRestriction) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 4}, {Family::D, 5}, {Family::F, 4}, {Family::H, 3}}) {
    GroupAnalysis ga(RootSystem::build(f, n));
    for (std::size_t i = 0; i < ga.size(); ++i) {
      const ClassAnalysis& a = ga[i];
      if (a.profile.degree == ga.root_system().rank()) continue;
      MatrixImage img = restrict_to_plus(ga.root_system(), a);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(img.order)), a.tilde_plus.order)
          << ga.root_system().name() << " deg " << a.profile.degree << " " << a.profile.label;
      EXPECT_EQ(img.reflections, static_cast<std::size_t>(a.profile.tilde_plus.reflections()));
    }
  }
}

TEST(Structure, ProfileIdentities) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 5},
                                                          {Family::B, 5},
                                                          {Family::D, 6},
                                                          {Family::E, 6},
                                                          {Family::E, 7},
                                                          {Family::F, 4},
                                                          {Family::H, 4},
                                                          {Family::I, 7},
                                                          {Family::I, 10}}) {
    GroupAnalysis ga(RootSystem::build(f, n));
    const RootSystem& rs = ga.root_system();
    for (const auto& p : ga.profiles()) {
      SCOPED_TRACE(rs.name() + " deg " + std::to_string(p.degree) + " " + p.label);
      EXPECT_EQ(p.order * p.class_size, rs.type().order());
      EXPECT_EQ(p.order_g1, p.g_minus.order() * p.g_plus.order());
      EXPECT_EQ(p.order, p.order_g1 * static_cast<unsigned long>(p.gamma.order));
      EXPECT_EQ(p.g_minus.rank(), p.degree);
      EXPECT_TRUE(p.tilde_minus_reflection_generated);
      EXPECT_TRUE(p.tilde_plus_reflection_generated);
      // G_u^- sits inside ~G_u^- and G_u^+ inside ~G_u^+.
      EXPECT_EQ(p.tilde_minus.order() % p.g_minus.order(), 0);
      EXPECT_EQ(p.tilde_plus.order() % p.g_plus.order(), 0);
    }
  }
}

TEST(Structure, EngineMatchesSignedPermutationEnumeration) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 4}, {Family::B, 5}, {Family::D, 4}, {Family::D, 5}}) {
    GroupAnalysis ga(RootSystem::build(f, n));
    for (std::size_t i = 0; i < ga.size(); ++i) {
      const auto& inv = ga.census()[i].invariants;
      ASSERT_TRUE(inv);
      BruteForceOrders bf = brute_force_orders(f, n, inv->a, inv->a_prime, inv->b);
      const CentralizerProfile& p = ga[i].profile;
      SCOPED_TRACE(ga.root_system().name() + " " + p.label);
      EXPECT_EQ(bf.centralizer, p.order);
      EXPECT_EQ(bf.minus, p.g_minus.order());
      EXPECT_EQ(bf.plus, p.g_plus.order());
      EXPECT_EQ(bf.g1, p.order_g1);
      EXPECT_EQ(bf.tilde_minus, p.tilde_minus.order());
      EXPECT_EQ(bf.tilde_plus, p.tilde_plus.order());
    }
  }
}

TEST(Structure, PrintedGammaConventions) {
  GroupAnalysis d7(RootSystem::build(Family::D, 7));
  const ClassAnalysis* a = find_class(d7, 4, "2,1,2");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->profile.gamma.printed, "2,2");
  EXPECT_EQ(a->profile.gamma.structure.kind, GroupStructure::Kind::SymmetricTimesC2);

  GroupAnalysis a5(RootSystem::build(Family::A, 5));
  for (const auto& p : a5.profiles()) EXPECT_EQ(p.gamma.printed, std::to_string(p.degree));

  GroupAnalysis e7(RootSystem::build(Family::E, 7));
  const ClassAnalysis* c = find_class(e7, 4, "triangle");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->profile.gamma.printed, "3");
  EXPECT_EQ(c->profile.gamma.structure.label, "Sym3");
}

TEST(Structure, TildeImageMapsIntoImage) {
  GroupAnalysis ga(RootSystem::build(Family::F, 4));
  for (std::size_t i = 0; i < ga.size(); ++i) {
    const ClassAnalysis& a = ga[i];
    for (const auto& g : a.centralizer.generators()) {
      EXPECT_TRUE(a.tilde_minus.image.contains(a.tilde_minus.map(g)));
      EXPECT_TRUE(a.tilde_plus.image.contains(a.tilde_plus.map(g)));
    }
  }
}
