#pragma once

/// Exact scalar domain. All quantities in this project are arbitrary-precision
/// rationals (GMP mpq, canonical: positive denominator, coprime) or integers
/// (GMP mpz). Floating point never appears.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bernstir {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "a/b" or "a" with an optional leading sign. Decimal digits only.
std::optional<Rational> parse_rational(const std::string& text);

/// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);

Int factorial(unsigned long n);

/// Binomial coefficient with non-negative integer arguments; 0 when k > n.
Int binom_int(unsigned long n, unsigned long k);

/// binom(x, k) = x(x-1)...(x-k+1)/k! for rational x; binom(x, 0) = 1.
Rational binom_rat(const Rational& x, unsigned long k);

/// x(x-1)...(x-n+1); empty product for n = 0.
Rational falling(const Rational& x, unsigned long n);

/// x(x+1)...(x+n-1); empty product for n = 0.
Rational rising(const Rational& x, unsigned long n);

/// base^exp with 0^0 = 1.
Int pow_int(const Int& base, unsigned long exp);

}  // namespace bernstir
