#pragma once

#include <string>
#include <vector>

#include "xilab/hadamard.hpp"
#include "xilab/types.hpp"

namespace xilab {

/// One verification check: `observed` is the measured residual (or count),
/// `tolerance` the bound it was held to.
struct CheckResult {
    std::string name;
    bool passed;
    double observed;
    double tolerance;
};

/// Reflection, realness, factorization, nu route agreement, local
/// coefficient relations, log-derivative identities, Z r = Xi.
std::vector<CheckResult> verify_identities(unsigned seed = 12345);

/// Forward/inverse spectral transforms, the complex-time transform, the
/// S_1 full-line transform, kernel symmetry and the shift law.
std::vector<CheckResult> verify_fourier();

/// Product-form machinery against the table: B routes, partial products,
/// log-derivative sums against finite differences, pairing realness and the
/// reflected-sum cancellation.
std::vector<CheckResult> verify_hadamard(const ZeroTable& z);

/// Monotonicity grid scan sigma in [0.6, 2], t in [0, 50].
std::vector<CheckResult> verify_monotonic(const ZeroTable& z, double step = 0.1);

}  // namespace xilab
