#pragma once

#include <array>
#include <cstdint>

namespace dcm {

/// Generators of the coefficient ring, in the fixed canonical order.
/// pij stands for wp(x_i - x_j), qij for wp'(x_i - x_j); wp'' is not a
/// generator (it is always written as 6p² − g2/2).
enum Var : int {
    VarG2 = 0,
    VarG3,
    VarP12,
    VarP13,
    VarP23,
    VarQ12,
    VarQ13,
    VarQ23,
};

inline constexpr int kNumVars = 8;

struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool is_unit() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex: total degree first, ties broken on the exponent of the highest
/// generator (q23 down to g2). Ascending map order; canonical (leading-first)
/// listings iterate in reverse.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (int i = kNumVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);

}  // namespace dcm
