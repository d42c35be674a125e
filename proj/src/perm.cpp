#include "coxinv/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace coxinv {

Perm::Perm(std::size_t n) : images_(n) {
  if (n > 65536) throw std::invalid_argument("Perm: degree too large");
  std::iota(images_.begin(), images_.end(), point_type{0});
}

Perm::Perm(std::vector<point_type> images) : images_(std::move(images)) {}

Perm::Perm(std::initializer_list<point_type> images) : images_(images) {}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_valid() const {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<point_type> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<point_type>(i);
  return Perm(std::move(inv));
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<Perm::point_type> r(q.images_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.images_[q.images_[i]];
  return Perm(std::move(r));
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : images_) h = (h ^ x) * 1099511628211ULL;
  return h;
}

std::string Perm::to_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm conjugate(const Perm& g, const Perm& x) {
  // g x g^-1 maps g(i) to g(x(i)).
  std::vector<Perm::point_type> r(x.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[g[i]] = g[x[i]];
  return Perm(std::move(r));
}

bool commute(const Perm& x, const Perm& y) {
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (x[y[i]] != y[x[i]]) return false;
  }
  return true;
}

}  // namespace coxinv
