#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wittjet {

using Integer = mpz_class;

Integer ipow(const Integer& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);

// Floor division and the matching non-negative remainder (for positive divisors).
Integer floor_div(const Integer& a, const Integer& b);

bool fits_int64(const Integer& value);
std::string to_string(const Integer& value);

}  // namespace wittjet
