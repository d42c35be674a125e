#include "coxinv/scalar.hpp"

#include <functional>
#include <stdexcept>

namespace coxinv {

Scalar::Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) { canonicalize(); }

void Scalar::canonicalize() {
  a_.canonicalize();
  b_.canonicalize();
}

bool Scalar::is_integer() const { return is_rational() && a_.get_den() == 1; }

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = 5 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 5 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  mpq_class norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
  Scalar conj(o.a_ / norm, -o.b_ / norm);
  return *this *= conj;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string surd = b_.get_str() + "*sqrt5";
  if (sgn(a_) == 0) return surd;
  return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + surd;
}

Scalar Scalar::parse(std::string_view text) {
  auto rational = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty rational");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw std::invalid_argument("Scalar::parse: bad rational '" + str + "'");
    q.canonicalize();
    return q;
  };
  constexpr std::string_view kSurd = "*sqrt5";
  if (text.size() < kSurd.size() || text.substr(text.size() - kSurd.size()) != kSurd) {
    return Scalar(rational(text));
  }
  std::string_view body = text.substr(0, text.size() - kSurd.size());
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, rational(body));
  return Scalar(rational(body.substr(0, split)), rational(body.substr(split)));
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::string>{}(a_.get_str());
  if (!is_rational()) h ^= std::hash<std::string>{}(b_.get_str()) * 0x9e3779b97f4a7c15ULL;
  return h;
}

}  // namespace coxinv
