#pragma once

#include "xilab/types.hpp"

namespace xilab {

/// Principal branch of log Gamma (the branch that is real on the positive
/// real axis and continuous off the cut (-inf, 0]). Stirling for large
/// arguments, upward recurrence for moderate ones, Hare's corrected
/// reflection for Re s < 1/2. Relative accuracy ~1e-14 for |s| <= 100.
/// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex s);

/// Digamma Psi(s) = Gamma'(s)/Gamma(s). Throws PoleError at nonpositive
/// integers.
Complex digamma(Complex s);

/// Riemann zeta by Euler-Maclaurin continuation (cutoff N = max(24, |t|/2),
/// 14 Bernoulli correction terms). Validated window: -5 <= Re s <= 6,
/// |Im s| <= 200; outside it the result is still computed but flagged
/// degraded. The error estimate includes the binary64 roundoff floor of the
/// main sum, which dominates once |zeta| itself is large (far left of the
/// strip). Throws PoleError at s = 1.
EvalResult<Complex> zeta(Complex s, const SeriesConfig& cfg = {});

/// (s-1) * zeta(s) with the pole removed: near s = 1 the Stieltjes
/// expansion is used, so the value is smooth through the pole.
Complex zeta_pole_removed(Complex s, const SeriesConfig& cfg = {});

/// Theta series psi(x) = sum_{n>=1} exp(-n^2 pi x) and its first two
/// derivatives (order 0, 1, 2), differentiated termwise. For x < 1 the
/// evaluation routes through Jacobi's transformation applied to each order
/// separately, which keeps every order accurate down to x -> 0+.
/// Throws std::invalid_argument for x <= 0 or order outside {0,1,2},
/// ConvergenceError if max_terms is hit first.
EvalResult<double> theta_psi(double x, int order = 0, const SeriesConfig& cfg = {});

/// D(x) = sum_{n>=1} n^2 (n^2 pi x - 3/2) exp(-n^2 pi x). Positive for all
/// x > 0; for x < 1 evaluated through the exact transformation
/// D(1/u) = u^{5/2} D(u) (a consequence of Jacobi's identity), which avoids
/// the catastrophic cancellation of the naive small-x route.
EvalResult<double> big_D(double x, const SeriesConfig& cfg = {});

/// Single term D_n(x) = n^2 (n^2 pi x - 3/2) exp(-n^2 pi x).
double big_D_n(int n, double x);

}  // namespace xilab
