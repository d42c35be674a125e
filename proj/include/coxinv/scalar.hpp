#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace coxinv {

// a + b*sqrt(5) with a, b rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class a, mpq_class b = 0);

  static Scalar sqrt5() { return Scalar(0, 1); }
  static Scalar golden() { return Scalar(mpq_class(1, 2), mpq_class(1, 2)); }

  const mpq_class& rational() const { return a_; }
  const mpq_class& surd() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const;
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Ordering as real numbers.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  std::string to_string() const;
  static Scalar parse(std::string_view text);

  std::size_t hash() const;

 private:
  void canonicalize();

  mpq_class a_{0};
  mpq_class b_{0};
};

}  // namespace coxinv
