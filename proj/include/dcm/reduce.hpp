#pragma once

#include <optional>

#include "dcm/ring.hpp"

namespace dcm {

/// Canonical form of a ring element modulo the addition-theorem relation:
/// p13 and q13 eliminated, numerator over Q[g2,g3,p12,p23] in the module
/// basis {1, q12, q23, q12·q23}, denominator (p12 − p23)^denom_power with
/// all common factors cancelled. Zero iff the numerator has no terms.
struct ReducedElement {
    RingElement numerator;
    int denom_power = 0;

    bool is_zero() const { return numerator.is_zero(); }
    friend bool operator==(const ReducedElement&, const ReducedElement&) = default;
};

/// Substitutes, with u = x1−x2 and v = x2−x3:
///   p13 -> ¼((q12−q23)/(p12−p23))² − p12 − p23          (addition theorem)
///   q13 -> the u-derivative of the eliminated p13,
/// clears denominators, reduces q-powers by the ODE rule and cancels common
/// (p12 − p23) factors by exact division. Total function.
ReducedElement eliminate(const RingElement& e);

/// Complete zero decision modulo the ODE + addition-theorem relations.
bool is_zero_mod_relations(const RingElement& e);

/// Exact division by (p12 − p23); nullopt when not divisible.
std::optional<RingElement> try_divide_p12_minus_p23(const RingElement& f);

/// The relation generators, exposed for tests and ideal sampling.
RingElement relation_addition();      // 4(p13+p12+p23)(p12−p23)² − (q12−q23)²
RingElement relation_q13();           // q13·(p12−p23)³ − N_q
const RingElement& p13_numerator();   // N_p with p13 = N_p/(p12−p23)²
const RingElement& q13_numerator();   // N_q with q13 = N_q/(p12−p23)³
const RingElement& p12_minus_p23();

}  // namespace dcm
