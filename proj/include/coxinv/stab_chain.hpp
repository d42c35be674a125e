#pragma once

#include "coxinv/bigint.hpp"
#include "coxinv/perm.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace coxinv {

// Base and strong generating set built by deterministic Schreier-Sims.
// Base points are chosen greedily as the smallest point moved by the
// element that forces a new level.
class StabChain {
 public:
  explicit StabChain(std::size_t degree);
  StabChain(std::size_t degree, std::span<const Perm> gens);

  std::size_t degree() const { return degree_; }

  // Returns true if the group grew.
  bool add_generator(const Perm& g);

  bool contains(const Perm& g) const;
  BigInt order() const;

  std::vector<std::size_t> base() const;
  const std::vector<Perm>& strong_generators() const { return strong_; }
  std::size_t depth() const { return levels_.size(); }
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

  // Visits every group element; intended for small groups.
  void for_each_element(const std::function<void(const Perm&)>& visit) const;

 private:
  struct Level {
    std::size_t point = 0;
    std::vector<int> where;            // point -> index in orbit, or -1
    std::vector<std::size_t> orbit;
    std::vector<Perm> transversal;     // maps base point to orbit[k]
    std::vector<Perm> inverse_transversal;
    std::vector<std::size_t> gens;     // indices into strong_
    std::vector<std::size_t> checked;  // per orbit point, number of gens processed
  };

  // Residue after stripping from `level`, and the level where it stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t level) const;
  void add_strong(const Perm& h, std::size_t from, std::size_t to);
  void complete(std::size_t level);
  // Returns the deepest level touched if a new strong generator appeared.
  std::ptrdiff_t process_level(std::size_t level);

  std::size_t degree_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace coxinv
