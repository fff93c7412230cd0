#include "dcm/elliptic.hpp"

#include <cmath>
#include <vector>

#include "dcm/errors.hpp"

namespace dcm {

namespace {

constexpr double kSeriesRadius = 0.5;  // halve until |z| is below this
constexpr int kMaxSeriesTerms = 64;

// Laurent coefficients c_k of wp(z) = z^-2 + sum_{k>=2} c_k z^(2k-2):
// c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.
std::vector<std::complex<double>> laurent_coefficients(const EllipticParams& params, int kmax) {
    std::vector<std::complex<double>> c(kmax + 1, 0.0);
    if (kmax >= 2) c[2] = params.g2 / 20.0;
    if (kmax >= 3) c[3] = params.g3 / 28.0;
    for (int k = 4; k <= kmax; ++k) {
        std::complex<double> s = 0.0;
        for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
        c[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    return c;
}

WpValue wp_series(std::complex<double> z, const EllipticParams& params, double tol) {
    const auto c = laurent_coefficients(params, kMaxSeriesTerms);
    const std::complex<double> z2 = z * z;
    std::complex<double> p = 1.0 / z2;
    std::complex<double> dp = -2.0 / (z2 * z);
    std::complex<double> zpow = z2;  // z^(2k-2) for k = 2
    for (int k = 2; k <= kMaxSeriesTerms; ++k) {
        const std::complex<double> tp = c[k] * zpow;
        const std::complex<double> tdp = c[k] * (2.0 * k - 2.0) * zpow / z;
        p += tp;
        dp += tdp;
        if (k >= 4 && std::abs(tp) < tol * std::abs(p) && std::abs(tdp) < tol * std::abs(dp))
            break;
        zpow *= z2;
    }
    return {p, dp, 6.0 * p * p - params.g2 / 2.0};
}

}  // namespace

WpValue wp(std::complex<double> z, const EllipticParams& params, double tol) {
    if (z == 0.0) throw PoleProximityError("wp: z = 0 is a pole");
    if (tol <= 0.0) throw InvalidParamsError("wp: tol must be positive");
    if (params.is_degenerate_pair()) {
        const std::complex<double> z2 = z * z;
        const std::complex<double> p = 1.0 / z2;
        return {p, -2.0 / (z2 * z), 6.0 * p * p};
    }
    if (params.discriminant() == 0.0)
        throw InvalidParamsError("wp: discriminant vanishes and params != (0,0)");

    int halvings = 0;
    std::complex<double> w = z;
    while (std::abs(w) > kSeriesRadius) {
        w /= 2.0;
        ++halvings;
    }
    WpValue v = wp_series(w, params, tol);
    for (int i = 0; i < halvings; ++i) {
        // guard: wp' vanishes at half-periods; doubling through one is hopeless
        const double dpmag = std::abs(v.dp);
        if (!(dpmag > 1e-9 * std::max(1.0, std::pow(std::abs(v.p), 1.5))))
            throw PoleProximityError("wp: wp' ~ 0 on the doubling chain (half-period)");
        const std::complex<double> r = v.ddp / v.dp;
        const std::complex<double> p2 = -2.0 * v.p + 0.25 * r * r;
        const std::complex<double> dp2 =
            -v.dp + 0.25 * v.ddp * (12.0 * v.p * v.dp * v.dp - v.ddp * v.ddp) / (v.dp * v.dp * v.dp);
        v.p = p2;
        v.dp = dp2;
        v.ddp = 6.0 * v.p * v.p - params.g2 / 2.0;
    }
    if (!std::isfinite(v.p.real()) || !std::isfinite(v.p.imag()) ||
        !std::isfinite(v.dp.real()) || !std::isfinite(v.dp.imag()))
        throw PoleProximityError("wp: evaluation diverged (z near a lattice point)");
    return v;
}

double ode_residual(std::complex<double> z, const EllipticParams& params, double tol) {
    const WpValue v = wp(z, params, tol);
    const std::complex<double> lhs = v.dp * v.dp;
    const std::complex<double> rhs = 4.0 * v.p * v.p * v.p - params.g2 * v.p - params.g3;
    const double scale = std::max(1.0, std::pow(std::abs(v.p), 3.0));
    return std::abs(lhs - rhs) / scale;
}

double addition_residual(std::complex<double> u, std::complex<double> v,
                         const EllipticParams& params, double tol) {
    const WpValue a = wp(u, params, tol);
    const WpValue b = wp(v, params, tol);
    const std::complex<double> diff = a.p - b.p;
    if (std::abs(diff) < 1e-6 * std::max({1.0, std::abs(a.p), std::abs(b.p)}))
        throw DegenerateConfigurationError("addition_residual: wp(u) ~ wp(v)");
    const WpValue s = wp(u + v, params, tol);
    const std::complex<double> q = (a.dp - b.dp) / diff;
    const std::complex<double> predicted = 0.25 * q * q - a.p - b.p;
    return std::abs(s.p - predicted) / std::max(1.0, std::abs(s.p));
}

WpRational wp_rational_limit(const Rational& z) {
    if (z == 0) throw PoleProximityError("wp_rational_limit: z = 0 is a pole");
    Rational z2 = z * z;
    Rational p = 1 / z2;
    Rational dp = Rational(-2) / (z2 * z);
    return {p, dp};
}

Rational ode_residual_rational_limit(const Rational& z) {
    const WpRational v = wp_rational_limit(z);
    Rational r = v.dp * v.dp - 4 * v.p * v.p * v.p;
    return abs(r);
}

}  // namespace dcm
