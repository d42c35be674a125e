#include "coxinv/perm_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace coxinv;

namespace {

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Perm::point_type> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

// Closure by breadth-first multiplication, independent of the stabilizer
// chain.
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen = {Perm::identity(degree)};
  std::vector<Perm> queue = {Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm x = g * queue[i];
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen;
}

}  // namespace

TEST(Perm, CompositionConvention) {
  Perm p{1, 2, 0}, q{1, 0, 2};
  Perm pq = p * q;
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(pq[x], p[q[x]]);
  EXPECT_EQ(conjugate(p, q), p * q * p.inverse());
}

TEST(Perm, InverseAndOrder) {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    Perm p = random_perm(rng, 9);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    Perm q = Perm::identity(9);
    for (std::size_t k = 0; k < p.order(); ++k) q = q * p;
    EXPECT_TRUE(q.is_identity());
  }
}

TEST(SchreierSims, SymmetricOrders) {
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(symmetric_group(r).order(), factorial(static_cast<unsigned>(r)));
  EXPECT_EQ(symmetric_times_c2(3).order(), BigInt(12));
}

TEST(SchreierSims, OrderMatchesClosureOnRandomGroups) {
  std::mt19937 rng(2);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 6;
    std::vector<Perm> gens = {random_perm(rng, n)};
    if (i % 2) gens.push_back(random_perm(rng, n));
    PermGroup g(n, gens);
    auto elems = closure(gens, n);
    EXPECT_EQ(g.order(), BigInt(static_cast<unsigned long>(elems.size())));
    for (int k = 0; k < 20; ++k) {
      Perm x = random_perm(rng, n);
      EXPECT_EQ(g.contains(x), elems.count(x) == 1);
    }
  }
}

TEST(Orbit, OrbitStabilizerTheorem) {
  std::mt19937 rng(4);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 7;
    PermGroup g(n, {random_perm(rng, n), random_perm(rng, n)});
    auto os = orbit_stabilizer_points(g, 0);
    EXPECT_EQ(g.order(), os.stabilizer.order() * os.orbit_size);
    for (const auto& h : os.stabilizer.generators()) EXPECT_EQ(h[0], 0);

    Perm x = random_perm(rng, n);
    auto oc = orbit_stabilizer_conjugation(g, x);
    EXPECT_EQ(g.order(), oc.stabilizer.order() * oc.orbit_size);
    for (const auto& h : oc.stabilizer.generators()) EXPECT_TRUE(commute(h, x));
  }
}

TEST(Orbit, TransversalMapsSeed) {
  PermGroup g = symmetric_group(5);
  Orbit<OnPoints> orb(g.generators(), 0u);
  ASSERT_EQ(orb.size(), 5u);
  for (std::size_t k = 0; k < orb.size(); ++k) EXPECT_EQ(orb.transversal(k, 5)[0], orb[k]);
}

TEST(QuotientAction, SymmetricModAlternating) {
  PermGroup s4 = symmetric_group(4);
  // The 3-cycles generate A4.
  std::vector<Perm> three_cycles;
  for (const auto& x : enumerate_elements(s4, 100))
    if (x.order() == 3) three_cycles.push_back(x);
  PermGroup a4(4, three_cycles);
  ASSERT_EQ(a4.order(), BigInt(12));
  EXPECT_TRUE(is_normal(s4, a4));
  QuotientAction q(s4, a4);
  EXPECT_EQ(q.index(), 2u);
  EXPECT_EQ(q.image().order(), BigInt(2));
  EXPECT_EQ(fingerprint(q.image()).label, "Sym2");
}

TEST(Fingerprint, DistinguishesSmallGroups) {
  EXPECT_EQ(fingerprint(symmetric_group(3)).kind, GroupStructure::Kind::Symmetric);
  EXPECT_EQ(fingerprint(symmetric_group(3)).r, 3);
  GroupStructure k = fingerprint(symmetric_times_c2(2));
  EXPECT_EQ(k.kind, GroupStructure::Kind::SymmetricTimesC2);
  EXPECT_EQ(k.order, 4u);
  // C4 is not Sym_r or Sym_r x C2.
  EXPECT_EQ(fingerprint(PermGroup(4, {Perm{1, 2, 3, 0}})).kind, GroupStructure::Kind::Other);
}
