#pragma once

#include "coxinv/bigint.hpp"
#include "coxinv/perm_group.hpp"
#include "coxinv/root_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxinv {

// Pairwise orthogonal positive roots whose reflections multiply to u.
struct Cube {
  std::vector<std::uint32_t> roots;  // sorted

  friend bool operator==(const Cube&, const Cube&) = default;
};

// (a, a', b) of a signed permutation: a negated points, a' fixed points,
// b swapped pairs.
struct SignedInvariants {
  int a = 0;
  int a_prime = 0;
  int b = 0;

  friend bool operator==(const SignedInvariants&, const SignedInvariants&) = default;
};

struct InvolutionClass {
  Perm representative;
  int degree = 0;
  BigInt class_size;
  std::string label;
  Cube cube;                        // one decomposition of the representative
  std::optional<std::size_t> dual;  // class of -u when this class was derived from it
  std::optional<SignedInvariants> invariants;  // B and D only
};

Perm product_of_reflections(const RootSystem& rs, const std::vector<std::uint32_t>& roots);

// Backtracking over positive roots with u(alpha) = -alpha.  Stops after
// `limit` decompositions.
std::vector<Cube> cube_decompositions(const RootSystem& rs, const Perm& u, std::size_t limit = SIZE_MAX);

// Signed-permutation pattern of an element of W(B_n) or W(D_n).
SignedInvariants signed_invariants(const RootSystem& rs, const Perm& u);

// All involution classes, sorted by degree then label.  Built by level
// BFS; when -1 is in the group the classes above degree n/2 are the
// negatives of those below.
class InvolutionCensus {
 public:
  explicit InvolutionCensus(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<InvolutionClass>& classes() const { return classes_; }
  const InvolutionClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const { return classes_.size(); }

  bool contains(std::size_t cls, const Perm& x) const;
  std::optional<std::size_t> class_of(const Perm& x) const;

  // Conjugacy orbit carrying the Schreier tree: the class itself, or the
  // class of -u for derived classes.
  const Orbit<ByConjugation>& orbit(std::size_t cls) const;
  // Elements of the class (materialized, negated for derived classes).
  std::vector<Perm> elements(std::size_t cls) const;

  std::string to_json_string() const;

 private:
  void label_all();

  const RootSystem* rs_;
  std::vector<InvolutionClass> classes_;
  std::vector<std::shared_ptr<Orbit<ByConjugation>>> orbits_;
};

}  // namespace coxinv
