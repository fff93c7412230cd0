#pragma once

#include <complex>
#include <cstdint>

#include "dcm/rational.hpp"

namespace dcm {

/// Deterministic splitmix64 generator. Used instead of <random> so that
/// seeded runs produce identical streams on every platform and toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double real_in(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::complex<double> complex_box(double half_width) {
        double re = real_in(-half_width, half_width);
        double im = real_in(-half_width, half_width);
        return {re, im};
    }

    /// Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
    Rational rational(long max_num, long max_den) {
        long num = int_in(-max_num, max_num);
        long den = int_in(1, max_den);
        return rat(num, den);
    }

    Rational nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    /// Independent stream derived from the current state; advancing one does
    /// not affect the other.
    Rng fork(std::uint64_t stream) const {
        return Rng(state_ ^ (0xA0761D6478BD642Full * (stream + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace dcm
