#include "coxinv/classic_models.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace coxinv;

namespace {

struct Tuple {
  int a, a_prime, b;
};

std::vector<Tuple> tuples(Family f, int n) {
  std::vector<Tuple> out;
  for (int b = 0; 2 * b <= n; ++b)
    for (int a = 0; a + 2 * b <= n; ++a) {
      if (f == Family::A && a != 0) continue;
      if (f == Family::D && a % 2) continue;
      out.push_back({a, n - a - 2 * b, b});
    }
  return out;
}

CentralizerProfile predict(Family f, int n, const Tuple& t) {
  switch (f) {
    case Family::A: return predict_profile_A(n, t.b);
    case Family::B: return predict_profile_B(n, t.a, t.a_prime, t.b);
    default:
      return predict_profile_D(n, t.a, t.a_prime, t.b, t.a == 0 && t.a_prime == 0 ? DSplit::Plus : DSplit::None);
  }
}

}  // namespace

TEST(SignedPerm, GroupLaw) {
  SignedPerm x({1, 0, 2}, {1, -1, 1});
  SignedPerm y({0, 2, 1}, {-1, 1, 1});
  std::vector<int> v = {3, 5, 7};
  EXPECT_EQ((x * y).apply(v), x.apply(y.apply(v)));
  EXPECT_EQ(x * SignedPerm::identity(3), x);
  EXPECT_FALSE(x.even());
}

// The closed-form profiles against orders counted by enumerating the
// whole group as signed permutations.
TEST(ClassicModels, FormulasMatchEnumeration) {
  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int n = f == Family::D ? 4 : 2; n <= 5; ++n) {
      for (const Tuple& t : tuples(f, n)) {
        SCOPED_TRACE(std::string(1, family_letter(f)) + " n=" + std::to_string(n) + " (" + std::to_string(t.a) +
                     "," + std::to_string(t.a_prime) + "," + std::to_string(t.b) + ")");
        BruteForceOrders bf = brute_force_orders(f, n, t.a, t.a_prime, t.b);
        CentralizerProfile p = predict(f, n, t);
        EXPECT_EQ(bf.centralizer, p.order);
        EXPECT_EQ(bf.minus, p.g_minus.order());
        EXPECT_EQ(bf.plus, p.g_plus.order());
        EXPECT_EQ(bf.g1, p.order_g1);
        EXPECT_EQ(bf.gamma, BigInt(static_cast<unsigned long>(p.gamma.order)));
        EXPECT_EQ(bf.tilde_minus, p.tilde_minus.order());
        EXPECT_EQ(bf.tilde_plus, p.tilde_plus.order());
      }
    }
  }
}

TEST(ClassicModels, TableShapes) {
  // B_n: one row per (a, a', b) with a + a' + 2b = n.
  EXPECT_EQ(predict_table(Family::B, 5).size(), 12u);
  // D_n with n even gets two rows for a = a' = 0.
  EXPECT_EQ(predict_table(Family::D, 6).size(), 11u);
  EXPECT_EQ(predict_table(Family::D, 5).size(), 6u);
  // A_{n-1}: degrees 0..floor(n/2).
  EXPECT_EQ(predict_table(Family::A, 6).size(), 4u);
}

TEST(ClassicModels, CaseFourGamma) {
  // a > 0 and a' > 0 in D_n: Gamma = Sym_b x C2.
  CentralizerProfile p = predict_profile_D(7, 2, 1, 2);
  EXPECT_EQ(p.gamma.printed, "2,2");
  EXPECT_EQ(p.gamma.order, 4u);
  EXPECT_EQ(p.gamma.structure.kind, GroupStructure::Kind::SymmetricTimesC2);
  // Smallest n admitting b = 2 with a, a' > 0 (a even): n = 2 + 1 + 4.
  for (int n = 4; n < 7; ++n)
    for (const auto& row : predict_table(Family::D, n)) EXPECT_NE(row.gamma.printed, "2,2") << n;
}

TEST(ClassicModels, OrderIdentities) {
  for (Family f : {Family::A, Family::B, Family::D})
    for (const auto& p : predict_table(f, 7)) {
      EXPECT_EQ(p.order, p.order_g1 * static_cast<unsigned long>(p.gamma.order));
      EXPECT_EQ(p.order_g1, p.g_minus.order() * p.g_plus.order());
    }
}
