#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "dcm/monomial.hpp"
#include "dcm/rational.hpp"

namespace dcm {

/// Exact polynomial over Q in the eight generators g2, g3, p12, p13, p23,
/// q12, q13, q23. Always stored in normal form:
///   - every exponent of q12, q13, q23 is 0 or 1 (higher powers rewritten
///     through q² = 4p³ − g2·p − g3 for the matching pair),
///   - no zero coefficients,
///   - terms in the canonical graded-lex order,
/// so equality of normal forms is structural equality.
class RingElement {
  public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    RingElement() = default;  // zero

    static RingElement constant(const Rational& c);
    static RingElement generator(Var v, int power = 1);
    /// Single monomial with arbitrary exponents; q-powers are rewritten.
    static RingElement monomial(const Monomial& m, const Rational& c);
    /// Arbitrary raw term set; q-powers are rewritten, like terms merged.
    static RingElement from_raw_terms(const TermMap& raw);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    int degree() const;  // total degree; -1 for the zero element
    int max_exponent(Var v) const;
    bool depends_on(Var v) const { return max_exponent(v) > 0; }
    /// The value as a rational constant; throws unless the element is a
    /// constant (zero counts as 0).
    Rational constant_value() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    RingElement operator-() const;
    RingElement& scale(const Rational& r);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Rational& r, RingElement a) {
        a.scale(r);
        return a;
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

    /// Merges one already-normalized term in place.
    void add_term(const Monomial& m, const Rational& c);

  private:
    TermMap terms_;
};

/// d/dx_i on the generators, extended by Leibniz; i in {1,2,3}.
RingElement derive(const RingElement& e, int direction);

/// The involution x1 <-> x2: p12 -> p12, q12 -> -q12, p13 <-> p23, q13 <-> q23.
RingElement swap12(const RingElement& e);

RingElement ring_pow(const RingElement& e, int power);

/// Re-normalization entry point; idempotent (elements are already normal).
inline RingElement normalize(const RingElement& e) { return e; }

/// Paper-style notation with unicode subscripts.
std::string pretty(const RingElement& e);

/// Canonical term list: [{"coeff": "num/den", "exp": [8 ints]}, ...],
/// leading monomial first.
nlohmann::ordered_json ring_terms_json(const RingElement& e);
RingElement ring_from_terms_json(const nlohmann::json& j);

}  // namespace dcm
