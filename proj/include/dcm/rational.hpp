#pragma once

#include <gmpxx.h>

#include <string>

namespace dcm {

using Rational = mpq_class;

/// Canonicalized rational from machine integers.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num", "num/den" or "-num/den" (base 10). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational rat_parse(const std::string& s);

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double rat_to_double(const Rational& r) { return r.get_d(); }

Rational rat_pow(const Rational& base, unsigned long e);

Rational binomial(unsigned long n, unsigned long k);

}  // namespace dcm
