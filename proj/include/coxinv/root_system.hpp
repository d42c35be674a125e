#pragma once

#include "coxinv/coxeter_type.hpp"
#include "coxinv/matrix.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/perm_group.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxinv {

// Requested type/rank is outside what the engine supports.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildLimits {
  int max_classical_rank = 12;
  int max_dihedral_m = 1000;
};

struct GroupElement {
  Perm perm;
  Matrix matrix;  // simple-root basis
};

enum class Mod2Mode { RootModTwoWeight, RootModTwoRoot };

// Root system of an irreducible finite Coxeter group, or the abstract
// dihedral model for I2(m) (roots k mod 2m, no coordinates).
//
// Geometric systems index roots as: positive roots sorted by height, ties by
// descending simple-root coordinates (so simple root i has index i), then
// the negatives in the same order.
class RootSystem {
 public:
  static RootSystem build(Family family, int n, const BuildLimits& limits = {});
  static RootSystem build(const std::string& name, int n, const BuildLimits& limits = {});

  const Irreducible& irreducible() const { return irreducible_; }
  const CoxeterType& type() const { return type_; }
  const std::string& name() const { return name_; }
  bool is_dihedral_model() const { return dihedral_; }
  bool crystallographic() const { return !dihedral_ && cartan_.has_value(); }

  int rank() const { return rank_; }
  std::size_t num_roots() const { return negation_.size(); }
  std::size_t num_positive() const { return num_roots() / 2; }
  bool is_positive(std::uint32_t r) const { return positive_[r]; }
  std::uint32_t negative(std::uint32_t r) const { return negation_[r]; }
  // Positive member of {r, -r}.
  std::uint32_t positive_of(std::uint32_t r) const { return positive_[r] ? r : negation_[r]; }
  const std::vector<std::uint32_t>& negation() const { return negation_; }
  const std::vector<std::uint32_t>& simple_roots() const { return simple_; }
  std::vector<std::uint32_t> positive_roots() const;

  const Perm& reflection_perm(std::uint32_t r) const { return reflections_[r]; }
  const std::vector<Perm>& reflection_perms() const { return reflections_; }
  GroupElement reflection(std::uint32_t r) const;
  std::vector<Perm> simple_reflections() const;
  Perm minus_one_perm() const;
  bool orthogonal(std::uint32_t a, std::uint32_t b) const { return reflections_[a][b] == b; }

  // Geometric data; throws CapabilityError for the dihedral model.
  const Vector& coords(std::uint32_t r) const;
  const Vector& ambient(std::uint32_t r) const;
  std::size_t ambient_dim() const { return ambient_dim_; }
  const Matrix& gram() const;
  Scalar inner(const Vector& x, const Vector& y) const;  // simple-root coordinates
  Scalar norm2(std::uint32_t r) const { return inner(coords(r), coords(r)); }
  std::optional<std::uint32_t> find_root(const Vector& simple_coords) const;
  std::optional<std::uint32_t> find_ambient(const Vector& ambient_coords) const;
  Matrix element_matrix(const Perm& g) const;
  GroupElement element(const Perm& g) const { return {g, element_matrix(g)}; }

  const std::optional<Matrix>& cartan() const { return cartan_; }
  std::optional<std::uint32_t> highest_root() const { return highest_; }

  // dim V_g^- for an involution g.
  int degree(const Perm& g) const;

  const PermGroup& group() const;
  bool has_minus_one() const;

  std::vector<std::uint32_t> extended_diagram_Y() const;
  std::vector<std::uint8_t> mod2_vector(std::uint32_t r, Mod2Mode mode) const;
  // (x . y^vee) mod 2 for roots x, y.
  int mod2_form(std::uint32_t x, std::uint32_t y) const;

  std::string to_json_string() const;

 private:
  RootSystem() = default;
  static RootSystem build_geometric(Family family, int n, const std::vector<Vector>& simple_ambient);
  static RootSystem build_dihedral(int m);
  void require_geometric(const char* what) const;

  Irreducible irreducible_{Family::A, 1};
  CoxeterType type_;
  std::string name_;
  bool dihedral_ = false;
  int rank_ = 0;
  std::size_t ambient_dim_ = 0;

  std::vector<Vector> coords_;
  std::vector<Vector> ambient_;
  Matrix gram_;
  Matrix ambient_basis_;  // simple roots as columns
  std::vector<bool> positive_;
  std::vector<std::uint32_t> negation_;
  std::vector<std::uint32_t> simple_;
  std::vector<Perm> reflections_;
  std::optional<Matrix> cartan_;
  std::optional<std::uint32_t> highest_;
  std::unordered_map<std::string, std::uint32_t> by_coords_;
  std::unordered_map<std::string, std::uint32_t> by_ambient_;

  mutable std::shared_ptr<PermGroup> group_;
  mutable std::optional<bool> has_minus_one_;
};

// Parses "E7", "A", "I2", ... into a family and, when implied, the rank.
struct TypeRequest {
  Family family;
  std::optional<int> n;
};
TypeRequest parse_type_name(const std::string& name);

}  // namespace coxinv
