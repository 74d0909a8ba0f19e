#pragma once

#include "xilab/types.hpp"

namespace xilab {

/// Spectral kernel S(omega) = 8 pi e^{5 omega/2} D(e^{2 omega}), extended to
/// the whole line. Positive wherever it does not underflow (it decays like
/// exp(-pi e^{2|omega|}), so it flushes to zero past |omega| ~ 2.75); the
/// symmetry S(-omega) = S(omega) holds exactly by construction because
/// big_D evaluates small arguments through D(1/u) = u^{5/2} D(u).
double S_kernel(double omega, const SeriesConfig& cfg = {});

/// Component kernel S_n(omega) = 8 pi e^{5 omega/2} D_n(e^{2 omega});
/// satisfies the shift law S_n(omega) = n^{-1/2} S_1(omega + log n).
double S_n_kernel(int n, double omega);

/// Xi(t) as the cosine transform of the spectral kernel:
/// Xi(t) = int_0^inf S(omega) cos(omega t) domega.
EvalResult<double> Xi_from_S(double t, const QuadratureConfig& quad = {});

/// The same transform continued off the line with complex time
/// tau = t - i lambda: xi(s) = int_0^inf S(omega) cos(omega tau) domega.
/// Requires |lambda| <= 8 to keep the cosh growth under the kernel decay.
EvalResult<Complex> xi_from_S_complex(const StripPoint& p,
                                      const QuadratureConfig& quad = {});

/// Inverse transform S(omega) = (2/pi) int_0^T_max Xi(t) cos(omega t) dt.
/// The result is flagged degraded when the truncated-tail estimate exceeds
/// the requested absolute tolerance.
EvalResult<double> S_from_Xi(double omega, double T_max = 60.0,
                             const QuadratureConfig& quad = {});

/// Full-line transform of the first component (Theorem on S_1):
/// g(s) = (1/2) int_{-inf}^{inf} S_1(omega) e^{i omega tau} domega.
/// Requires -5/2 < lambda < 5/2 (the negative-frequency side decays like
/// e^{-(5/2 + lambda) omega}).
EvalResult<Complex> g_from_S1(const StripPoint& p, const QuadratureConfig& quad = {});

/// n-th transform component xi_n(s) = g(s) n^{-s} (closed form).
Complex xi_n_component(int n, const StripPoint& p);

/// The same component by direct full-line quadrature of S_n; used to
/// cross-check the closed form.
EvalResult<Complex> xi_n_component_integral(int n, const StripPoint& p,
                                            const QuadratureConfig& quad = {});

/// Reflective component xi_bar_n(s) = (1/2)[xi_n(s) + xi_n(1-s)]; real on
/// the critical line, where it equals G_n(t).
Complex xi_bar_component(int n, const StripPoint& p);

}  // namespace xilab
