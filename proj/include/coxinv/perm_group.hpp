#pragma once

#include "coxinv/bigint.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/stab_chain.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxinv {

// Subgroup given by generators; the stabilizer chain is built on first use.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  PermGroup(std::size_t degree, std::vector<Perm> gens, std::shared_ptr<const StabChain> chain);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm& x) const { return chain().contains(x); }
  bool contains_all(const std::vector<Perm>& xs) const;
  bool is_trivial() const { return order() == 1; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const StabChain> chain_;
};

// Action policies for orbit computations.
struct OnPoints {
  using State = std::uint32_t;
  State apply(const Perm& g, State x) const { return g[x]; }
  std::size_t hash(State x) const { return x; }
};

struct ByConjugation {
  using State = Perm;
  State apply(const Perm& g, const State& x) const { return conjugate(g, x); }
  std::size_t hash(const State& x) const { return x.hash(); }
};

// Sorted sets of points.
struct OnSets {
  using State = std::vector<std::uint32_t>;
  State apply(const Perm& g, const State& x) const {
    State y;
    y.reserve(x.size());
    for (auto p : x) y.push_back(g[p]);
    std::sort(y.begin(), y.end());
    return y;
  }
  std::size_t hash(const State& x) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto p : x) h = (h ^ p) * 1099511628211ULL;
    return h;
  }
};

// BFS orbit with a Schreier tree.  Orbit order is deterministic: generators
// are applied in order to points in discovery order.
template <class Action>
class Orbit {
 public:
  using State = typename Action::State;

  Orbit(std::vector<Perm> gens, State seed, Action action = Action())
      : gens_(std::move(gens)), action_(action) {
    push(std::move(seed), -1, -1);
    for (std::size_t k = 0; k < states_.size(); ++k) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        State y = action_.apply(gens_[s], states_[k]);
        if (!find(y)) push(std::move(y), static_cast<long>(k), static_cast<long>(s));
      }
    }
  }

  std::size_t size() const { return states_.size(); }
  const std::vector<State>& states() const { return states_; }
  const State& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::optional<std::size_t> find(const State& x) const {
    auto [lo, hi] = index_.equal_range(action_.hash(x));
    for (auto it = lo; it != hi; ++it) {
      if (states_[it->second] == x) return it->second;
    }
    return std::nullopt;
  }

  // Group element mapping the seed to states_[k], as a product of generators.
  Perm transversal(std::size_t k, std::size_t degree) const {
    Perm t = Perm::identity(degree);
    while (parent_[k] >= 0) {
      t = t * gens_[static_cast<std::size_t>(via_[k])];
      k = static_cast<std::size_t>(parent_[k]);
    }
    return t;
  }

  bool is_tree_edge(std::size_t from, std::size_t gen, std::size_t to) const {
    return parent_[to] == static_cast<long>(from) && via_[to] == static_cast<long>(gen);
  }

  // Stabilizer of the seed, from Schreier generators sifted into a growing
  // chain.  With a known target order the scan stops once it is reached.
  PermGroup stabilizer(std::size_t degree, const std::optional<BigInt>& target = std::nullopt) const {
    auto chain = std::make_shared<StabChain>(degree);
    std::vector<Perm> found;
    auto done = [&] { return target && chain->order() == *target; };
    if (!done()) {
      for (std::size_t k = 0; k < states_.size() && !done(); ++k) {
        Perm tk;
        bool have_tk = false;
        for (std::size_t s = 0; s < gens_.size() && !done(); ++s) {
          State y = action_.apply(gens_[s], states_[k]);
          std::size_t j = *find(y);
          if (is_tree_edge(k, s, j)) continue;
          if (!have_tk) {
            tk = transversal(k, degree);
            have_tk = true;
          }
          Perm h = transversal(j, degree).inverse() * gens_[s] * tk;
          if (h.is_identity() || chain->contains(h)) continue;
          chain->add_generator(h);
          found.push_back(std::move(h));
        }
      }
    }
    if (target && chain->order() != *target)
      throw std::logic_error("orbit stabilizer: order " + chain->order().get_str() + " differs from expected " +
                             target->get_str());
    return PermGroup(degree, std::move(found), std::move(chain));
  }

 private:
  void push(State x, long parent, long via) {
    index_.emplace(action_.hash(x), states_.size());
    states_.push_back(std::move(x));
    parent_.push_back(parent);
    via_.push_back(via);
  }

  std::vector<Perm> gens_;
  Action action_;
  std::vector<State> states_;
  std::vector<long> parent_;
  std::vector<long> via_;
  std::unordered_multimap<std::size_t, std::size_t> index_;  // state hash -> position
};

struct OrbitStabilizer {
  std::size_t orbit_size = 0;
  PermGroup stabilizer;
};

OrbitStabilizer orbit_stabilizer_points(const PermGroup& g, std::uint32_t seed);
OrbitStabilizer orbit_stabilizer_conjugation(const PermGroup& g, const Perm& seed);

// Stabilizer of a closed root set; throws if the set is not closed under
// negation and its own reflections.
PermGroup normalizer_of_reflection_subgroup(const PermGroup& g, const std::vector<std::uint32_t>& rootset,
                                            const std::vector<std::uint32_t>& negation,
                                            const std::vector<Perm>& reflections);

// Action of g on the right cosets of a normal subgroup n.
class QuotientAction {
 public:
  static constexpr std::size_t kMaxIndex = 10000;

  QuotientAction(const PermGroup& g, const PermGroup& n);

  const PermGroup& image() const { return image_; }
  std::size_t index() const { return reps_.size(); }
  std::size_t coset_of(const Perm& x) const;
  Perm map(const Perm& x) const;  // quotient map g -> image
  const std::vector<Perm>& coset_representatives() const { return reps_; }

 private:
  PermGroup n_;
  std::vector<Perm> reps_;
  PermGroup image_;
};

bool is_normal(const PermGroup& g, const PermGroup& n);

// Isomorphism-type label for the groups that occur as Gamma_u.
struct GroupStructure {
  enum class Kind { Symmetric, SymmetricTimesC2, Other };
  Kind kind = Kind::Symmetric;
  int r = 1;
  std::size_t order = 1;
  std::string label;  // "Sym3", "Sym2xC2", "other(order=8,...)"
};

struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t derived_order = 0;
  std::size_t center_order = 0;
  std::vector<std::size_t> element_orders;  // sorted multiset

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

constexpr std::size_t kFingerprintMaxOrder = 96;

GroupInvariants group_invariants(const PermGroup& g);
GroupStructure fingerprint(const PermGroup& g);

PermGroup symmetric_group(int r);
PermGroup symmetric_times_c2(int r);

// Elements of a small group, closure from generators.
std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit);

}  // namespace coxinv
