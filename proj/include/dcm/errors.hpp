#pragma once

#include <stdexcept>
#include <string>

namespace dcm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// z (or an intermediate doubling point) is too close to a lattice point or
/// half-period for the series/duplication evaluation to stay conditioned.
struct PoleProximityError : Error {
    using Error::Error;
};

/// Degenerate invariants (discriminant zero away from the (0,0) pair) or an
/// out-of-domain constructor parameter.
struct InvalidParamsError : Error {
    using Error::Error;
};

/// A configuration where a required denominator (e.g. wp(u) - wp(v)) vanishes.
struct DegenerateConfigurationError : Error {
    using Error::Error;
};

/// highest_symbol() on an operator whose top-order coefficients are not pure
/// rational constants.
struct NonConstantSymbolError : Error {
    using Error::Error;
};

/// The symbol fiber for the sampled level set is not generic (solution count
/// after dedup differs from 6, or residuals fail).
struct DegenerateFiberError : Error {
    using Error::Error;
};

/// Admissible sample points could not be found within the retry budget.
struct SamplingExhaustedError : Error {
    using Error::Error;
};

}  // namespace dcm
