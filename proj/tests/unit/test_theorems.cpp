#include "coxinv/theorems.hpp"

#include <gtest/gtest.h>

using namespace coxinv;

namespace {

Scalar height(const RootSystem& rs, std::uint32_t r) {
  Scalar h = 0;
  for (const auto& x : rs.coords(r)) h += x;
  return h;
}

// Follows the chain by always taking the highest root of what is left;
// `skip` picks a lower component at the given step instead.
std::vector<CoxeterType> highest_root_chain(const RootSystem& rs, int steps, int branch_at = -1) {
  std::vector<std::uint32_t> left = rs.positive_roots(), picked;
  for (int i = 0; i < steps && !left.empty(); ++i) {
    std::uint32_t best = left.front();
    for (auto r : left)
      if (height(rs, r) > height(rs, best)) best = r;
    if (i == branch_at) {
      // A root orthogonal to everything else left: an A1 component.
      for (auto r : left) {
        bool isolated = true;
        for (auto s : left)
          if (s != r && !rs.orthogonal(r, s)) isolated = false;
        if (isolated) best = r;
      }
    }
    picked.push_back(best);
    std::vector<std::uint32_t> next;
    for (auto r : left)
      if (rs.orthogonal(r, best)) next.push_back(r);
    left = std::move(next);
  }
  return parabolic_chain(rs, picked);
}

std::vector<CoxeterType> types(std::initializer_list<const char*> names) {
  std::vector<CoxeterType> out;
  for (auto n : names) out.push_back(CoxeterType::parse(n));
  return out;
}

}  // namespace

TEST(ParabolicChain, E6) {
  RootSystem rs = RootSystem::build(Family::E, 6);
  EXPECT_EQ(highest_root_chain(rs, 4), types({"E6", "A5", "A3", "A1", "1"}));
}

TEST(ParabolicChain, E8BranchesAtA1xD4) {
  RootSystem rs = RootSystem::build(Family::E, 8);
  auto main = highest_root_chain(rs, 4);
  EXPECT_EQ(main, types({"E8", "E7", "D6", "A1xD4", "(A1)^4"}));
  auto other = highest_root_chain(rs, 4, 3);
  EXPECT_EQ(other, types({"E8", "E7", "D6", "A1xD4", "D4"}));
}

TEST(Theorems, CheckIdsAreStable) {
  EXPECT_EQ(check_ids().size(), 13u);
  EXPECT_EQ(check_ids().front(), "1.1");
  EXPECT_EQ(check_ids().back(), "3.3");
}

TEST(Theorems, NoViolationsOnSmallTypes) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 1},
                                                          {Family::A, 4},
                                                          {Family::B, 3},
                                                          {Family::B, 5},
                                                          {Family::D, 4},
                                                          {Family::D, 5},
                                                          {Family::F, 4},
                                                          {Family::H, 3},
                                                          {Family::H, 4},
                                                          {Family::E, 6},
                                                          {Family::I, 5},
                                                          {Family::I, 12}}) {
    GroupAnalysis ga(RootSystem::build(f, n));
    TheoremReport rep = run_theorems(ga);
    EXPECT_EQ(rep.count(CheckStatus::Fail), 0u) << rep.to_json_string();
    EXPECT_EQ(rep.count(CheckStatus::NotDetermined), 0u) << rep.to_json_string();
    EXPECT_GT(rep.count(CheckStatus::Pass), 0u);
  }
}

TEST(Theorems, ComplementIsVerified) {
  GroupAnalysis ga(RootSystem::build(Family::D, 7));
  TheoremOptions opt;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    const ClassAnalysis& a = ga[i];
    ComplementSearch cs = find_complement(ga.root_system(), a, opt);
    ASSERT_TRUE(cs.complement) << a.profile.label;
    PermGroup x(a.centralizer.degree(), *cs.complement);
    EXPECT_EQ(x.order() * a.g1.order(), a.centralizer.order());
    for (const auto& g : *cs.complement) EXPECT_TRUE(a.centralizer.contains(g));
  }
}

TEST(Theorems, OnlyFilterAndReport) {
  GroupAnalysis ga(RootSystem::build(Family::E, 6));
  TheoremOptions opt;
  opt.only = {"3.3"};
  TheoremReport rep = run_theorems(ga, opt);
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].id, "3.3");
  EXPECT_EQ(rep.results[0].status, CheckStatus::Pass);
  EXPECT_NE(rep.to_json_string().find("\"schema_version\": 1"), std::string::npos);
}
