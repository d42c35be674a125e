#pragma once

#include "coxinv/bigint.hpp"
#include "coxinv/coxeter_type.hpp"
#include "coxinv/structure.hpp"

#include <vector>

namespace coxinv {

// Closed-form profiles for A_{n-1} (n points), B_n and D_n.  The label
// follows the engine's class labels.
CentralizerProfile predict_profile_A(int n, int d);
CentralizerProfile predict_profile_B(int n, int a, int a_prime, int b);

enum class DSplit { None, Plus, Minus };
CentralizerProfile predict_profile_D(int n, int a, int a_prime, int b, DSplit split = DSplit::None);

// Every predicted row for a classical irreducible type of the given rank,
// sorted like the census (degree, then label).
std::vector<CentralizerProfile> predict_table(Family family, int rank);

// Signed permutation of {0..n-1}: i -> sign[i] * perm[i].
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(std::vector<int> perm, std::vector<int> sign);
  static SignedPerm identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int image(int i) const { return perm_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return sign_[static_cast<std::size_t>(i)]; }
  std::vector<int> apply(const std::vector<int>& v) const;
  bool even() const;  // even number of sign changes

  friend SignedPerm operator*(const SignedPerm& p, const SignedPerm& q);
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> sign_;
};

// Orders computed by enumerating the whole group, independently of the
// permutation engine.  Family A uses Sym_n acting on R^n.
struct BruteForceOrders {
  BigInt group, centralizer, minus, plus, g1, gamma, tilde_minus, tilde_plus;
};
BruteForceOrders brute_force_orders(Family family, int n, int a, int a_prime, int b);

}  // namespace coxinv
