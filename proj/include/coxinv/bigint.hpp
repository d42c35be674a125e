#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxinv {

using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt power(const BigInt& base, unsigned exp);

// "2^10 3^2 5"; "1" for the unit.
std::string factored(const BigInt& n);
BigInt parse_factored(std::string_view text);

}  // namespace coxinv
