#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxinv {

// Permutation of {0..n-1}; (p * q)(x) = p(q(x)).
class Perm {
 public:
  using point_type = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t n);
  explicit Perm(std::vector<point_type> images);
  Perm(std::initializer_list<point_type> images);

  static Perm identity(std::size_t n) { return Perm(n); }

  std::size_t degree() const { return images_.size(); }
  point_type operator[](std::size_t x) const { return images_[x]; }
  const std::vector<point_type>& images() const { return images_; }

  bool is_identity() const;
  bool is_valid() const;  // bijection check
  Perm inverse() const;
  std::size_t order() const;
  // Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm& p, const Perm& q) = default;
  friend auto operator<=>(const Perm& p, const Perm& q) = default;

  std::size_t hash() const;
  std::string to_string() const;  // cycle notation

 private:
  std::vector<point_type> images_;
};

// g x g^-1
Perm conjugate(const Perm& g, const Perm& x);
bool commute(const Perm& x, const Perm& y);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace coxinv
