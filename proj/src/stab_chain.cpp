#include "coxinv/stab_chain.hpp"

#include <stdexcept>

namespace coxinv {

StabChain::StabChain(std::size_t degree) : degree_(degree) {}

StabChain::StabChain(std::size_t degree, std::span<const Perm> gens) : degree_(degree) {
  for (const auto& g : gens) add_generator(g);
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t level) const {
  for (; level < levels_.size(); ++level) {
    const Level& L = levels_[level];
    int k = L.where[g[L.point]];
    if (k < 0) return {std::move(g), level};
    g = L.inverse_transversal[static_cast<std::size_t>(k)] * g;
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("StabChain::contains: degree mismatch");
  auto [residue, level] = sift(g, 0);
  return level == levels_.size() && residue.is_identity();
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& L : levels_) r *= static_cast<unsigned long>(L.orbit.size());
  return r;
}

std::vector<std::size_t> StabChain::base() const {
  std::vector<std::size_t> b;
  for (const auto& L : levels_) b.push_back(L.point);
  return b;
}

void StabChain::add_strong(const Perm& h, std::size_t from, std::size_t to) {
  if (to == levels_.size()) {
    Level L;
    L.point = h.first_moved();
    L.where.assign(degree_, -1);
    L.where[L.point] = 0;
    L.orbit.push_back(L.point);
    L.transversal.push_back(Perm::identity(degree_));
    L.inverse_transversal.push_back(Perm::identity(degree_));
    L.checked.push_back(0);
    levels_.push_back(std::move(L));
  }
  std::size_t idx = strong_.size();
  strong_.push_back(h);
  for (std::size_t l = from; l <= to; ++l) levels_[l].gens.push_back(idx);
}

std::ptrdiff_t StabChain::process_level(std::size_t level) {
  for (std::size_t k = 0; k < levels_[level].orbit.size(); ++k) {
    while (levels_[level].checked[k] < levels_[level].gens.size()) {
      Level& L = levels_[level];
      const Perm& g = strong_[L.gens[L.checked[k]]];
      ++L.checked[k];
      std::size_t y = g[L.orbit[k]];
      if (L.where[y] < 0) {
        L.where[y] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(y);
        Perm t = g * L.transversal[k];
        L.inverse_transversal.push_back(t.inverse());
        L.transversal.push_back(std::move(t));
        L.checked.push_back(0);
        continue;
      }
      Perm h = L.inverse_transversal[static_cast<std::size_t>(L.where[y])] * g * L.transversal[k];
      if (h.is_identity()) continue;
      auto [residue, stop] = sift(std::move(h), level + 1);
      if (stop == levels_.size() && residue.is_identity()) continue;
      add_strong(residue, level + 1, stop);
      return static_cast<std::ptrdiff_t>(stop);
    }
  }
  return -1;
}

void StabChain::complete(std::size_t level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(level);
  while (i >= 0) {
    std::ptrdiff_t deeper = process_level(static_cast<std::size_t>(i));
    if (deeper >= 0) {
      i = deeper;
    } else {
      --i;
    }
  }
}

bool StabChain::add_generator(const Perm& g) {
  if (g.degree() != degree_) throw std::invalid_argument("StabChain::add_generator: degree mismatch");
  auto [residue, stop] = sift(g, 0);
  if (stop == levels_.size() && residue.is_identity()) return false;
  add_strong(residue, 0, stop);
  complete(stop);
  return true;
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& visit) const {
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t level, const Perm& prefix) {
    if (level == levels_.size()) {
      visit(prefix);
      return;
    }
    for (const auto& t : levels_[level].transversal) rec(level + 1, prefix * t);
  };
  rec(0, Perm::identity(degree_));
}

}  // namespace coxinv
