#include "coxinv/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace coxinv {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt power(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string factored(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("factored: non-positive integer");
  if (n == 1) return "1";
  std::string out;
  BigInt rest = n;
  auto emit = [&](const BigInt& p, unsigned e) {
    if (!out.empty()) out += ' ';
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (BigInt p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) emit(p, e);
  }
  if (rest > 1) emit(rest, 1);
  return out;
}

BigInt parse_factored(std::string_view text) {
  BigInt result = 1;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> BigInt {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("parse_factored: expected digits in '" + std::string(text) + "'");
    return BigInt(std::string(text.substr(start, i - start)));
  };
  skip_space();
  if (i == text.size()) throw std::invalid_argument("parse_factored: empty");
  while (i < text.size()) {
    BigInt p = read_int();
    unsigned e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = static_cast<unsigned>(read_int().get_ui());
    }
    result *= power(p, e);
    skip_space();
  }
  return result;
}

}  // namespace coxinv
