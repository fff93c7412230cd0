#include "dcm/reduce.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dcm {

namespace {

RingElement gen(Var v, int p = 1) { return RingElement::generator(v, p); }

// numerator of wp(u+v) over (p12 − p23)²:
//   ¼(q12 − q23)² − (p12 + p23)(p12 − p23)²
RingElement make_p13_numerator() {
    RingElement d = gen(VarP12) - gen(VarP23);
    RingElement q = gen(VarQ12) - gen(VarQ23);
    return rat(1, 4) * (q * q) - (gen(VarP12) + gen(VarP23)) * d * d;
}

// numerator of wp'(u+v) over (p12 − p23)³: d/du applied to N_p/D²
//   N_q = (d/du N_p)·D − 2·N_p·q12          (d/du = derive(·, 1) here)
RingElement make_q13_numerator() {
    const RingElement np = make_p13_numerator();
    RingElement d = gen(VarP12) - gen(VarP23);
    return derive(np, 1) * d - rat(2) * np * gen(VarQ12);
}

// multiply by p23 / reattach a p12 power without renormalization
RingElement shift_var(const RingElement& e, Var v, int by) {
    RingElement out;
    for (const auto& [m, c] : e.terms()) {
        Monomial s = m;
        s.e[v] = static_cast<std::uint8_t>(int(s.e[v]) + by);
        out.add_term(s, c);
    }
    return out;
}

}  // namespace

const RingElement& p13_numerator() {
    static const RingElement np = make_p13_numerator();
    return np;
}

const RingElement& q13_numerator() {
    static const RingElement nq = make_q13_numerator();
    return nq;
}

const RingElement& p12_minus_p23() {
    static const RingElement d = gen(VarP12) - gen(VarP23);
    return d;
}

RingElement relation_addition() {
    RingElement d = p12_minus_p23();
    RingElement q = gen(VarQ12) - gen(VarQ23);
    return rat(4) * (gen(VarP13) + gen(VarP12) + gen(VarP23)) * d * d - q * q;
}

RingElement relation_q13() {
    RingElement d = p12_minus_p23();
    return gen(VarQ13) * d * d * d - q13_numerator();
}

std::optional<RingElement> try_divide_p12_minus_p23(const RingElement& f) {
    if (f.is_zero()) return RingElement{};
    const int n = f.max_exponent(VarP12);
    if (n == 0) return std::nullopt;

    // f = sum c_d * p12^d with c_d free of p12; synthetic division by p12 − p23
    std::vector<RingElement> c(n + 1);
    for (const auto& [m, coeff] : f.terms()) {
        Monomial rest = m;
        const int d = rest.e[VarP12];
        rest.e[VarP12] = 0;
        c[d].add_term(rest, coeff);
    }
    std::vector<RingElement> b(n);
    b[n - 1] = c[n];
    for (int d = n - 2; d >= 0; --d) b[d] = c[d + 1] + shift_var(b[d + 1], VarP23, 1);
    RingElement rem = c[0] + shift_var(b[0], VarP23, 1);
    if (!rem.is_zero()) return std::nullopt;

    RingElement quotient;
    for (int d = 0; d < n; ++d) quotient += shift_var(b[d], VarP12, d);
    return quotient;
}

ReducedElement eliminate(const RingElement& e) {
    // group by (p13 exponent, q13 exponent); q13 exponent is 0/1 in normal form
    std::map<std::pair<int, int>, RingElement> groups;
    int need = 0;
    bool has13 = false;
    for (const auto& [m, c] : e.terms()) {
        const int a = m.e[VarP13];
        const int eps = m.e[VarQ13];
        if (a || eps) has13 = true;
        Monomial base = m;
        base.e[VarP13] = 0;
        base.e[VarQ13] = 0;
        groups[{a, eps}].add_term(base, c);
        need = std::max(need, 2 * a + 3 * eps);
    }
    if (!has13) return {e, 0};

    int max_a = 0;
    for (const auto& [key, g] : groups) max_a = std::max(max_a, key.first);
    std::vector<RingElement> np_pow(max_a + 1);
    np_pow[0] = RingElement::constant(rat(1));
    for (int a = 1; a <= max_a; ++a) np_pow[a] = np_pow[a - 1] * p13_numerator();
    std::vector<RingElement> d_pow(need + 1);
    d_pow[0] = RingElement::constant(rat(1));
    for (int k = 1; k <= need; ++k) d_pow[k] = d_pow[k - 1] * p12_minus_p23();

    RingElement num;
    for (const auto& [key, base] : groups) {
        const auto [a, eps] = key;
        RingElement t = base * np_pow[a];
        if (eps) t *= q13_numerator();
        num += t * d_pow[need - 2 * a - 3 * eps];
    }

    if (num.is_zero()) return {num, 0};
    int k = need;
    while (k > 0) {
        auto q = try_divide_p12_minus_p23(num);
        if (!q) break;
        num = std::move(*q);
        --k;
        if (num.is_zero()) return {RingElement{}, 0};
    }
    return {num, k};
}

bool is_zero_mod_relations(const RingElement& e) { return eliminate(e).is_zero(); }

}  // namespace dcm
