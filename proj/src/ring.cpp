#include "dcm/ring.hpp"

#include <stdexcept>

#include "dcm/errors.hpp"

namespace dcm {

namespace {

// q generator -> matching p generator
Var paired_p(Var q) {
    switch (q) {
        case VarQ12: return VarP12;
        case VarQ13: return VarP13;
        case VarQ23: return VarP23;
        default: throw std::logic_error("paired_p: not a q generator");
    }
}

// 4p³ − g2·p − g3 for the pair owning q (the square of q modulo the ODE)
const RingElement& ode_cubic(Var q) {
    static const auto make = [](Var p) {
        RingElement e;
        Monomial m3;
        m3.e[p] = 3;
        e.add_term(m3, rat(4));
        Monomial mg2p;
        mg2p.e[VarG2] = 1;
        mg2p.e[p] = 1;
        e.add_term(mg2p, rat(-1));
        Monomial mg3;
        mg3.e[VarG3] = 1;
        e.add_term(mg3, rat(-1));
        return e;
    };
    static const RingElement c12 = make(VarP12);
    static const RingElement c13 = make(VarP13);
    static const RingElement c23 = make(VarP23);
    switch (q) {
        case VarQ12: return c12;
        case VarQ13: return c13;
        default: return c23;
    }
}

// 6p² − g2/2, the second derivative of wp for the pair owning q
RingElement wpp_of(Var p) {
    RingElement e;
    Monomial m2;
    m2.e[p] = 2;
    e.add_term(m2, rat(6));
    Monomial mg2;
    mg2.e[VarG2] = 1;
    e.add_term(mg2, rat(-1, 2));
    return e;
}

// Rewrites one raw monomial into normal form and merges it into out.
void normalize_into(RingElement& out, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    const int h12 = m.e[VarQ12] / 2, h13 = m.e[VarQ13] / 2, h23 = m.e[VarQ23] / 2;
    if (h12 == 0 && h13 == 0 && h23 == 0) {
        out.add_term(m, c);
        return;
    }
    Monomial base = m;
    base.e[VarQ12] %= 2;
    base.e[VarQ13] %= 2;
    base.e[VarQ23] %= 2;
    RingElement acc = RingElement::monomial(base, c);  // base has q-exps <= 1: fast path
    if (h12) acc *= ring_pow(ode_cubic(VarQ12), h12);
    if (h13) acc *= ring_pow(ode_cubic(VarQ13), h13);
    if (h23) acc *= ring_pow(ode_cubic(VarQ23), h23);
    out += acc;
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) {
        const int s = int(a.e[i]) + int(b.e[i]);
        if (s > 255) throw std::overflow_error("mono_mul: exponent overflow");
        m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
}

RingElement RingElement::constant(const Rational& c) {
    RingElement e;
    e.add_term(Monomial{}, c);
    return e;
}

RingElement RingElement::generator(Var v, int power) {
    Monomial m;
    m.e[v] = static_cast<std::uint8_t>(power);
    return monomial(m, rat(1));
}

RingElement RingElement::monomial(const Monomial& m, const Rational& c) {
    RingElement e;
    normalize_into(e, m, c);
    return e;
}

RingElement RingElement::from_raw_terms(const TermMap& raw) {
    RingElement e;
    for (const auto& [m, c] : raw) normalize_into(e, m, c);
    return e;
}

Rational RingElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RingElement::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();  // graded order: last term has max degree
}

int RingElement::max_exponent(Var v) const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, int(m.e[v]));
    return mx;
}

Rational RingElement::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
    throw NonConstantSymbolError("constant_value: element is not a rational constant");
}

void RingElement::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            normalize_into(out, mono_mul(ma, mb), Rational(ca * cb));
        }
    }
    return out;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    *this = *this * o;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

RingElement& RingElement::scale(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

RingElement ring_pow(const RingElement& e, int power) {
    RingElement out = RingElement::constant(rat(1));
    for (int i = 0; i < power; ++i) out *= e;
    return out;
}

RingElement derive(const RingElement& e, int direction) {
    if (direction < 1 || direction > 3) throw std::invalid_argument("derive: direction must be 1..3");

    // chain-rule images of each generator under d/dx_direction
    auto rule = [&](Var v) -> RingElement {
        const int d = direction;
        switch (v) {
            case VarP12:
                if (d == 1) return RingElement::generator(VarQ12);
                if (d == 2) return -RingElement::generator(VarQ12);
                return {};
            case VarP13:
                if (d == 1) return RingElement::generator(VarQ13);
                if (d == 3) return -RingElement::generator(VarQ13);
                return {};
            case VarP23:
                if (d == 2) return RingElement::generator(VarQ23);
                if (d == 3) return -RingElement::generator(VarQ23);
                return {};
            case VarQ12:
                if (d == 1) return wpp_of(VarP12);
                if (d == 2) return -wpp_of(VarP12);
                return {};
            case VarQ13:
                if (d == 1) return wpp_of(VarP13);
                if (d == 3) return -wpp_of(VarP13);
                return {};
            case VarQ23:
                if (d == 2) return wpp_of(VarP23);
                if (d == 3) return -wpp_of(VarP23);
                return {};
            default:
                return {};  // g2, g3 are constants
        }
    };

    RingElement out;
    for (const auto& [m, c] : e.terms()) {
        for (int v = VarP12; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            RingElement r = rule(static_cast<Var>(v));
            if (r.is_zero()) continue;
            Monomial rest = m;
            rest.e[v] -= 1;
            out += r * RingElement::monomial(rest, Rational(c * m.e[v]));
        }
    }
    return out;
}

RingElement swap12(const RingElement& e) {
    RingElement out;
    for (const auto& [m, c] : e.terms()) {
        Monomial s = m;
        std::swap(s.e[VarP13], s.e[VarP23]);
        std::swap(s.e[VarQ13], s.e[VarQ23]);
        const Rational cc = (m.e[VarQ12] % 2 == 1) ? Rational(-c) : c;
        out.add_term(s, cc);  // q-exponents unchanged: still normal
    }
    return out;
}

namespace {

const char* kSubscript[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* kSuperscript[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int n) {
    std::string digits = std::to_string(n);
    std::string out;
    for (char d : digits) out += kSuperscript[d - '0'];
    return out;
}

std::string var_pretty(int v) {
    switch (v) {
        case VarG2: return std::string("g") + kSubscript[2];
        case VarG3: return std::string("g") + kSubscript[3];
        case VarP12: return std::string("℘") + kSubscript[1] + kSubscript[2];
        case VarP13: return std::string("℘") + kSubscript[1] + kSubscript[3];
        case VarP23: return std::string("℘") + kSubscript[2] + kSubscript[3];
        case VarQ12: return std::string("℘′") + kSubscript[1] + kSubscript[2];
        case VarQ13: return std::string("℘′") + kSubscript[1] + kSubscript[3];
        default: return std::string("℘′") + kSubscript[2] + kSubscript[3];
    }
}

std::string rational_pretty(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "(" + r.get_str() + ")";
}

}  // namespace

std::string pretty(const RingElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monos;
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            monos += var_pretty(v);
            if (m.e[v] > 1) monos += superscript(m.e[v]);
        }
        if (monos.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += rational_pretty(a);
            out += monos;
        }
    }
    return out;
}

nlohmann::ordered_json ring_terms_json(const RingElement& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        nlohmann::ordered_json t;
        t["coeff"] = it->second.get_str();
        t["exp"] = it->first.e;
        arr.push_back(std::move(t));
    }
    return arr;
}

RingElement ring_from_terms_json(const nlohmann::json& j) {
    RingElement::TermMap raw;
    for (const auto& t : j) {
        Monomial m;
        const auto& exp = t.at("exp");
        if (exp.size() != kNumVars) throw std::invalid_argument("ring_from_terms_json: bad exp length");
        for (int i = 0; i < kNumVars; ++i) m.e[i] = exp[i].get<std::uint8_t>();
        raw[m] = rat_parse(t.at("coeff").get<std::string>());
    }
    return RingElement::from_raw_terms(raw);
}

}  // namespace dcm
