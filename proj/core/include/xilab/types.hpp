#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace xilab {

using Complex = std::complex<double>;

/// Truncation control shared by all infinite series (theta series, zeta
/// main sum, partial Dirichlet sums).
struct SeriesConfig {
    double abs_tol = 1e-16;
    int max_terms = 10000;
};

/// Truncation and refinement control shared by all adaptive quadratures.
/// omega_max = 4 keeps the spectral-kernel tail below 1e-100, since
/// S(omega) decays like exp(-pi e^{2 omega}).
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double omega_max = 4.0;
    int max_subdiv = 2000;
};

/// Value plus an a-posteriori error estimate; returned by every series- or
/// quadrature-backed evaluation. `degraded` marks evaluations outside the
/// validated accuracy window.
template <class T>
struct EvalResult {
    T value{};
    double abs_err = 0.0;
    bool degraded = false;
};

/// A point s = sigma + i t of the critical strip, carrying the shifted
/// coordinate lambda = sigma - 1/2 and the complex time tau = t - i lambda,
/// so that tau = -i (s - 1/2) holds exactly.
struct StripPoint {
    double sigma = 0.5;
    double t = 0.0;

    constexpr double lambda() const { return sigma - 0.5; }
    Complex s() const { return {sigma, t}; }
    Complex tau() const { return {t, -(sigma - 0.5)}; }

    static StripPoint from_s(Complex z) { return {z.real(), z.imag()}; }
    static StripPoint on_line(double t) { return {0.5, t}; }
    StripPoint reflected() const { return {1.0 - sigma, -t}; }
};

/// Amplitude/phase split of a complex value; amplitude may be negative
/// (r(t) is), the invariant is amplitude * e^{i phase} == value.
struct AmpPhase {
    double amplitude = 0.0;
    double phase = 0.0;

    Complex to_complex() const {
        return amplitude * Complex{std::cos(phase), std::sin(phase)};
    }
};

/// Evaluation at a pole of the function.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A series, quadrature or iteration did not reach its tolerance within the
/// configured caps.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace xilab
