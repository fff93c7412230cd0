#pragma once

#include <complex>

#include "dcm/rational.hpp"

namespace dcm {

/// Invariants (g2, g3) of the curve y² = 4x³ − g2·x − g3.
struct EllipticParams {
    std::complex<double> g2{0.0, 0.0};
    std::complex<double> g3{0.0, 0.0};

    std::complex<double> discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }

    /// The degenerate pair (0,0); routed to the exact 1/z² path.
    bool is_degenerate_pair() const { return g2 == 0.0 && g3 == 0.0; }
};

/// wp(z), wp'(z) and wp''(z); wp'' is always derived as 6p² − g2/2.
struct WpValue {
    std::complex<double> p;
    std::complex<double> dp;
    std::complex<double> ddp;
};

/// Weierstrass wp via the truncated Laurent series after halving the argument
/// below the series radius, climbing back with the duplication formula.
/// Throws PoleProximityError near lattice points / half-period chains and
/// InvalidParamsError when the discriminant vanishes away from (0,0).
WpValue wp(std::complex<double> z, const EllipticParams& params, double tol = 1e-13);

/// |wp'² − (4·wp³ − g2·wp − g3)| / max(1, |wp|³).
double ode_residual(std::complex<double> z, const EllipticParams& params, double tol = 1e-13);

/// Normalized defect of wp(u+v) against the addition formula
/// ¼((wp'(u)−wp'(v))/(wp(u)−wp(v)))² − wp(u) − wp(v).
/// Throws DegenerateConfigurationError when wp(u) ≈ wp(v).
double addition_residual(std::complex<double> u, std::complex<double> v,
                         const EllipticParams& params, double tol = 1e-13);

/// Exact rational-limit values at g2 = g3 = 0: wp = 1/z², wp' = -2/z³.
struct WpRational {
    Rational p;
    Rational dp;
};

WpRational wp_rational_limit(const Rational& z);

/// ODE residual on the rational path; identically zero by exact arithmetic.
Rational ode_residual_rational_limit(const Rational& z);

}  // namespace dcm
