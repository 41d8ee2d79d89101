#ifndef HOCX_RATIONAL_HPP
#define HOCX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hocx {

// GMP keeps mpq_class values canonical after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view s);

// p/q in canonical form. Prefer this over the raw two-argument constructor,
// which leaves the fraction unreduced.
Rational frac(long p, long q);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace hocx

#endif
