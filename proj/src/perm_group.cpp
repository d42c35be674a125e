#include "coxinv/perm_group.hpp"

#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace coxinv {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens, std::shared_ptr<const StabChain> chain)
    : PermGroup(degree, std::move(gens)) {
  chain_ = std::move(chain);
}

const StabChain& PermGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<StabChain>(degree_, gens_);
  return *chain_;
}

bool PermGroup::contains_all(const std::vector<Perm>& xs) const {
  for (const auto& x : xs) {
    if (!contains(x)) return false;
  }
  return true;
}

OrbitStabilizer orbit_stabilizer_points(const PermGroup& g, std::uint32_t seed) {
  Orbit<OnPoints> orbit(g.generators(), seed);
  BigInt target = g.order() / static_cast<unsigned long>(orbit.size());
  return {orbit.size(), orbit.stabilizer(g.degree(), target)};
}

OrbitStabilizer orbit_stabilizer_conjugation(const PermGroup& g, const Perm& seed) {
  Orbit<ByConjugation> orbit(g.generators(), seed);
  BigInt target = g.order() / static_cast<unsigned long>(orbit.size());
  return {orbit.size(), orbit.stabilizer(g.degree(), target)};
}

PermGroup normalizer_of_reflection_subgroup(const PermGroup& g, const std::vector<std::uint32_t>& rootset,
                                            const std::vector<std::uint32_t>& negation,
                                            const std::vector<Perm>& reflections) {
  std::vector<std::uint32_t> sorted = rootset;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<std::uint32_t> members(sorted.begin(), sorted.end());
  for (auto a : sorted) {
    if (!members.count(negation[a])) throw std::invalid_argument("normalizer: root set not closed under negation");
    for (auto b : sorted) {
      if (!members.count(reflections[a][b]))
        throw std::invalid_argument("normalizer: root set not closed under its reflections");
    }
  }
  Orbit<OnSets> orbit(g.generators(), sorted);
  BigInt target = g.order() / static_cast<unsigned long>(orbit.size());
  return orbit.stabilizer(g.degree(), target);
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : g.generators()) {
    for (const auto& y : n.generators()) {
      if (!n.contains(conjugate(x, y))) return false;
    }
  }
  return true;
}

QuotientAction::QuotientAction(const PermGroup& g, const PermGroup& n) : n_(n) {
  if (!g.contains_all(n.generators())) throw std::invalid_argument("quotient: subgroup not contained in group");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  BigInt index = g.order() / n.order();
  if (index > kMaxIndex) throw std::length_error("quotient: index " + index.get_str() + " exceeds limit");

  reps_.push_back(Perm::identity(g.degree()));
  std::vector<Perm> inv_gens;
  for (const auto& x : g.generators()) inv_gens.push_back(x.inverse());
  // g acts on N x by N x g^-1.
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    for (const auto& xi : inv_gens) {
      Perm y = reps_[k] * xi;
      bool known = false;
      for (const auto& r : reps_) {
        if (n_.contains(y * r.inverse())) {
          known = true;
          break;
        }
      }
      if (!known) reps_.push_back(std::move(y));
    }
  }
  if (reps_.size() != index) throw std::logic_error("quotient: coset enumeration incomplete");
  std::vector<Perm> images;
  for (const auto& x : g.generators()) images.push_back(map(x));
  image_ = PermGroup(reps_.size(), std::move(images));
}

std::size_t QuotientAction::coset_of(const Perm& x) const {
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (n_.contains(x * reps_[i].inverse())) return i;
  }
  throw std::invalid_argument("quotient: element outside the group");
}

Perm QuotientAction::map(const Perm& x) const {
  Perm xi = x.inverse();
  std::vector<Perm::point_type> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Perm::point_type>(coset_of(reps_[i] * xi));
  return Perm(std::move(img));
}

std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit) {
  if (g.order() > limit) throw std::length_error("group too large to enumerate: " + g.order().get_str());
  std::vector<Perm> out;
  g.chain().for_each_element([&](const Perm& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

GroupInvariants group_invariants(const PermGroup& g) {
  auto elems = enumerate_elements(g, kFingerprintMaxOrder);
  GroupInvariants inv;
  inv.order = elems.size();
  inv.abelian = true;
  for (const auto& x : g.generators())
    for (const auto& y : g.generators()) inv.abelian = inv.abelian && commute(x, y);
  std::vector<Perm> commutators;
  for (const auto& x : elems) {
    inv.element_orders.push_back(x.order());
    bool central = true;
    for (const auto& y : g.generators()) central = central && commute(x, y);
    if (central) ++inv.center_order;
    for (const auto& y : elems) commutators.push_back(x.inverse() * y.inverse() * x * y);
  }
  std::sort(inv.element_orders.begin(), inv.element_orders.end());
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  inv.derived_order = PermGroup(g.degree(), commutators).order().get_ui();
  return inv;
}

PermGroup symmetric_group(int r) {
  std::size_t n = static_cast<std::size_t>(std::max(r, 1));
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Perm::point_type a = static_cast<Perm::point_type>(i);
    std::vector<Perm::point_type> img(n);
    std::iota(img.begin(), img.end(), Perm::point_type{0});
    std::swap(img[a], img[a + 1]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup symmetric_times_c2(int r) {
  std::size_t n = static_cast<std::size_t>(std::max(r, 1));
  std::vector<Perm> gens;
  PermGroup sym = symmetric_group(r);
  for (const auto& s : sym.generators()) {
    std::vector<Perm::point_type> img(s.images());
    img.push_back(static_cast<Perm::point_type>(n));
    img.push_back(static_cast<Perm::point_type>(n + 1));
    gens.emplace_back(std::move(img));
  }
  std::vector<Perm::point_type> flip(n + 2);
  std::iota(flip.begin(), flip.end(), Perm::point_type{0});
  std::swap(flip[n], flip[n + 1]);
  gens.emplace_back(std::move(flip));
  return PermGroup(n + 2, std::move(gens));
}

GroupStructure fingerprint(const PermGroup& g) {
  GroupInvariants inv = group_invariants(g);
  GroupStructure out;
  out.order = inv.order;
  if (inv.order == 1) {
    out.kind = GroupStructure::Kind::Symmetric;
    out.r = 1;
    out.label = "Sym1";
    return out;
  }
  for (int r = 2; r <= 4; ++r) {
    if (inv == group_invariants(symmetric_group(r))) {
      out.kind = GroupStructure::Kind::Symmetric;
      out.r = r;
      out.label = "Sym" + std::to_string(r);
      return out;
    }
  }
  for (int r = 2; r <= 4; ++r) {
    if (inv == group_invariants(symmetric_times_c2(r))) {
      out.kind = GroupStructure::Kind::SymmetricTimesC2;
      out.r = r;
      out.label = r == 2 ? "C2xC2" : "Sym" + std::to_string(r) + "xC2";
      return out;
    }
  }
  out.kind = GroupStructure::Kind::Other;
  out.r = 0;
  out.label = "other(order=" + std::to_string(inv.order) + ",abelian=" + (inv.abelian ? "1" : "0") +
              ",derived=" + std::to_string(inv.derived_order) + ",center=" + std::to_string(inv.center_order) + ")";
  return out;
}

}  // namespace coxinv
