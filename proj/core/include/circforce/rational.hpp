#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace circforce {

/// Arbitrary-precision rational in canonical form (positive denominator, lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long numerator, long denominator = 1)
{
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Always "p/q", including "0/1" and "3/1".
inline std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Accepts "p" or "p/q" with an optional sign on p; nullopt otherwise or when q = 0.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact square root when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

} // namespace circforce
