#pragma once

#include "coxinv/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coxinv {

enum class Family { A, B, D, E, F, G, H, I };

char family_letter(Family f);

// One irreducible factor in canonical form; n is the rank, or m for I2(m).
struct Irreducible {
  Family family;
  int n;

  friend auto operator<=>(const Irreducible&, const Irreducible&) = default;

  int rank() const { return family == Family::I ? 2 : n; }
  BigInt order() const;
  int reflections() const;
  bool crystallographic() const { return family != Family::H && family != Family::I; }
  std::string to_string() const;
};

// Multiset of irreducible factors; empty means the trivial type "1".
class CoxeterType {
 public:
  CoxeterType() = default;

  // Applies the low-rank identifications (B1 = A1, D2 = A1xA1, I2(4) = B2, ...).
  static CoxeterType make(Family f, int n);
  static CoxeterType A(int n) { return make(Family::A, n); }
  static CoxeterType B(int n) { return make(Family::B, n); }
  static CoxeterType D(int n) { return make(Family::D, n); }
  static CoxeterType parse(std::string_view text);

  CoxeterType operator*(const CoxeterType& other) const;
  CoxeterType pow(int k) const;

  const std::vector<Irreducible>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_irreducible() const { return factors_.size() == 1; }
  int rank() const;
  BigInt order() const;
  int reflections() const;
  std::string to_string() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;

 private:
  std::vector<Irreducible> factors_;  // sorted
};

}  // namespace coxinv
