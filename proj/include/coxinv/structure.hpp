#pragma once

#include "coxinv/bigint.hpp"
#include "coxinv/coxeter_type.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/perm_group.hpp"
#include "coxinv/recognize.hpp"
#include "coxinv/root_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxinv {

// Subgroup generated by the reflections of a closed set of roots.
struct RootSubgroup {
  std::vector<std::uint32_t> roots;     // both signs, sorted
  std::vector<std::uint32_t> positive;  // sorted
  std::vector<std::uint32_t> simple;    // simple roots of the subsystem
  CoxeterType type;
  PermGroup group;
};

// Throws if the positive roots do not form a closed subsystem, or if the
// recognized type disagrees with the order of the generated group.
RootSubgroup root_subgroup(const RootSystem& rs, std::vector<std::uint32_t> positive_roots);
CoxeterType reflection_subgroup_type(const RootSystem& rs, const std::vector<std::uint32_t>& rootset);

struct PlusMinus {
  RootSubgroup plus;   // roots fixed by u
  RootSubgroup minus;  // roots negated by u
};
PlusMinus g_plus_minus(const RootSystem& rs, const Perm& u);

// Involutions of degree 1 and 2 commuting with u: single reflections and
// products of two orthogonal reflections.
struct LowDegreeInvolution {
  Perm element;
  std::vector<std::uint32_t> roots;  // one decomposition
};
std::vector<LowDegreeInvolution> low_degree_involutions(const RootSystem& rs, const Perm& u);

enum class Side { Plus, Minus };

// Image of G_u in GL(V_u^side), realized as a permutation group on the
// projected roots alpha +- u(alpha).
struct TildeGroup {
  Side side = Side::Plus;
  int dimension = 0;
  std::vector<Vector> points;  // projected roots, simple-root coordinates
  PermGroup image;
  std::vector<Perm> reflections;
  std::vector<std::uint32_t> normals;  // positive point per reflection
  CoxeterType type;
  bool reflection_generated = false;
  BigInt order;
  BigInt reflection_subgroup_order;

  std::vector<long> root_to_point;         // -1 where the projection vanishes
  std::vector<std::uint32_t> point_root;   // one root per point

  Perm map(const Perm& g) const;  // G_u element -> image element
};

TildeGroup tilde_group(const RootSystem& rs, const PermGroup& centralizer, const Perm& u, Side side,
                       const std::vector<LowDegreeInvolution>& candidates);

// Matrices of the generators of G_u restricted to V_u^side, in the basis
// returned by kernel_basis(u -+ I).
std::vector<Matrix> tilde_generator_matrices(const RootSystem& rs, const PermGroup& centralizer, const Perm& u,
                                             Side side);

struct GammaInfo {
  std::size_t order = 1;
  GroupStructure structure;
  bool identified = true;
  std::string printed;  // gamma_u as the tables print it
};

struct CentralizerProfile {
  int degree = 0;
  std::string label;
  BigInt class_size;
  BigInt order;  // |G_u|
  CoxeterType g_minus, tilde_minus, g_plus, tilde_plus;
  BigInt order_g1;
  GammaInfo gamma;
  bool tilde_minus_reflection_generated = false;
  bool tilde_plus_reflection_generated = false;
};

// Everything computed for one involution class.
struct ClassAnalysis {
  std::size_t index = 0;
  Perm u;
  PermGroup centralizer;
  PlusMinus pm;
  PermGroup g1;
  std::vector<LowDegreeInvolution> low_degree;
  TildeGroup tilde_minus, tilde_plus;
  std::shared_ptr<QuotientAction> gamma_action;
  CentralizerProfile profile;
};

PermGroup centralizer(const InvolutionCensus& census, std::size_t cls);

// The value printed in the gamma column.  Classical families print d or b
// (with ",2" in the fourth D_n case); the others print r for Gamma = Sym_r.
std::string printed_gamma(const RootSystem& rs, const InvolutionClass& cls, const GroupStructure& gamma);

class GroupAnalysis {
 public:
  explicit GroupAnalysis(RootSystem rs);

  const RootSystem& root_system() const { return *rs_; }
  const InvolutionCensus& census() const { return *census_; }
  std::size_t size() const { return classes_.size(); }
  const ClassAnalysis& operator[](std::size_t i) const { return *classes_[i]; }
  std::vector<CentralizerProfile> profiles() const;

 private:
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<InvolutionCensus> census_;
  std::vector<std::unique_ptr<ClassAnalysis>> classes_;
};

ClassAnalysis analyze_class(const InvolutionCensus& census, std::size_t cls);

}  // namespace coxinv
