#include "coxinv/coxeter_type.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coxinv {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::H: return 'H';
    case Family::I: return 'I';
  }
  return '?';
}

BigInt Irreducible::order() const {
  unsigned k = static_cast<unsigned>(n);
  switch (family) {
    case Family::A: return factorial(k + 1);
    case Family::B: return power(2, k) * factorial(k);
    case Family::D: return power(2, k - 1) * factorial(k);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I: return 2 * n;
  }
  return 0;
}

int Irreducible::reflections() const {
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I: return n;
  }
  return 0;
}

std::string Irreducible::to_string() const {
  if (family == Family::I) return "I2(" + std::to_string(n) + ")";
  return std::string(1, family_letter(family)) + std::to_string(n);
}

CoxeterType CoxeterType::make(Family f, int n) {
  CoxeterType t;
  auto one = [&](Family g, int k) {
    t.factors_.push_back({g, k});
    return t;
  };
  switch (f) {
    case Family::A:
      if (n < -1) break;
      if (n <= 0) return t;
      return one(Family::A, n);
    case Family::B:
      if (n < 0) break;
      if (n == 0) return t;
      if (n == 1) return one(Family::A, 1);
      return one(Family::B, n);
    case Family::D:
      if (n < 0) break;
      if (n <= 1) return t;
      if (n == 2) {
        t.factors_ = {{Family::A, 1}, {Family::A, 1}};
        return t;
      }
      if (n == 3) return one(Family::A, 3);
      return one(Family::D, n);
    case Family::E:
      if (n < 6 || n > 8) break;
      return one(Family::E, n);
    case Family::F:
      if (n != 4) break;
      return one(Family::F, 4);
    case Family::G:
      if (n != 2) break;
      return one(Family::G, 2);
    case Family::H:
      if (n != 3 && n != 4) break;
      return one(Family::H, n);
    case Family::I:
      if (n < 2) break;
      if (n == 2) {
        t.factors_ = {{Family::A, 1}, {Family::A, 1}};
        return t;
      }
      if (n == 3) return one(Family::A, 2);
      if (n == 4) return one(Family::B, 2);
      if (n == 6) return one(Family::G, 2);
      return one(Family::I, n);
  }
  throw std::invalid_argument(std::string("unsupported Coxeter type ") + family_letter(f) + std::to_string(n));
}

CoxeterType CoxeterType::operator*(const CoxeterType& other) const {
  CoxeterType t;
  t.factors_ = factors_;
  t.factors_.insert(t.factors_.end(), other.factors_.begin(), other.factors_.end());
  std::sort(t.factors_.begin(), t.factors_.end());
  return t;
}

CoxeterType CoxeterType::pow(int k) const {
  CoxeterType t;
  for (int i = 0; i < k; ++i) t = t * *this;
  return t;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

BigInt CoxeterType::order() const {
  BigInt r = 1;
  for (const auto& f : factors_) r *= f.order();
  return r;
}

int CoxeterType::reflections() const {
  int r = 0;
  for (const auto& f : factors_) r += f.reflections();
  return r;
}

std::string CoxeterType::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!s.empty()) s += "x";
    std::string name = factors_[i].to_string();
    s += (j - i == 1) ? name : "(" + name + ")^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  CoxeterType parse() {
    skip();
    if (text_ == "1") return CoxeterType();
    CoxeterType t = factor();
    skip();
    while (pos_ < text_.size()) {
      expect('x');
      t = t * factor();
      skip();
    }
    return t;
  }

 private:
  CoxeterType factor() {
    skip();
    if (peek() == '(') {
      ++pos_;
      CoxeterType inner = irreducible();
      skip();
      expect(')');
      skip();
      expect('^');
      return inner.pow(number());
    }
    return irreducible();
  }

  CoxeterType irreducible() {
    skip();
    char c = peek();
    ++pos_;
    Family f;
    switch (c) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'D': f = Family::D; break;
      case 'E': f = Family::E; break;
      case 'F': f = Family::F; break;
      case 'G': f = Family::G; break;
      case 'H': f = Family::H; break;
      case 'I': f = Family::I; break;
      default: fail();
    }
    if (f == Family::I) {
      expect('2');
      expect('(');
      int m = number();
      expect(')');
      return CoxeterType::make(f, m);
    }
    return CoxeterType::make(f, number());
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail();
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail();
    ++pos_;
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("cannot parse Coxeter type '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CoxeterType CoxeterType::parse(std::string_view text) { return TypeParser(text).parse(); }

}  // namespace coxinv
