#pragma once

#include "xilab/types.hpp"

namespace xilab {

/// Completed zeta: xi(s) = (s(s-1)/2) pi^{-s/2} Gamma(s/2) zeta(s),
/// computed through the pole-removed arrangement
/// pi^{-s/2} Gamma(s/2+1) * [(s-1) zeta(s)], which is regular at s = 0 and
/// s = 1. Entire; at the trivial-zero points s = -2, -4, ... (where the
/// Gamma factor alone has a pole) the value is taken by reflection.
Complex xi_direct(const StripPoint& p);

/// g(s) = (s(s-1)/2) pi^{-s/2} Gamma(s/2), so that xi = g * zeta.
/// Has poles at s = -2, -4, ... (PoleError from the Gamma factor).
Complex g_func(const StripPoint& p);

/// nu(s) = pi^{-s/2} Gamma(s/2) zeta(s), closed form. Poles at s = 0, 1.
Complex nu_closed(const StripPoint& p);

/// nu by its integral representation
/// -1/(1-s) - 1/s + int_1^inf (x^{s/2-1} + x^{(1-s)/2-1}) psi(x) dx.
EvalResult<Complex> nu_integral(const StripPoint& p, const QuadratureConfig& quad = {});

/// Cross-checked nu: closed-form value with abs_err set to the disagreement
/// against the integral route.
EvalResult<Complex> nu_func(const StripPoint& p, const QuadratureConfig& quad = {});

/// xi by the integral representation
/// xi(s) = 1/2 - (s(1-s)/2) int_1^inf psi(x) (x^{s/2} + x^{(1-s)/2}) dx/x.
EvalResult<Complex> xi_integral(const StripPoint& p, const QuadratureConfig& quad = {});

/// Xi(t) = xi(1/2 + it), real on the line; the imaginary residue of the
/// complex evaluation is checked against 1e-12 (1 + |Xi|) and discarded.
double Xi(double t);

/// Riemann-Siegel theta, exact: Im log Gamma(1/4 + it/2) - (t/2) log pi.
/// Continuous (no mod-2pi wrapping) because log_gamma is principal-branch.
double theta_rs(double t);

/// Large-t form (t/2) log(t/(2 pi e)) - pi/8; error ~ 1/(48t).
double theta_rs_asymptotic(double t);

/// Hardy Z(t) = zeta(1/2+it) e^{i theta(t)}; real for real t. The imaginary
/// residue is checked against 1e-10 (1 + |Z|) and discarded.
double hardy_Z(double t);

/// Amplitude/phase of g on the critical line: g(1/2+it) = r(t) e^{i theta(t)}
/// with r(t) = -(1/2)(t^2 + 1/4) pi^{-1/4} e^{Re log Gamma(1/4+it/2)} < 0.
AmpPhase g_amp_phase(double t);

/// The positive split A(t) e^{i phi(t)} with A = -r > 0, phi = theta + pi.
AmpPhase g_amp_phase_positive(double t);

/// Stirling approximation of r(t):
/// -2^{-1/4} pi^{1/4} (t^2+1/4)^{7/8} e^{-1/4 - t arctan(2t)/2}.
double r_asymptotic(double t);

/// Large-t amplitude 2^{-1/4} pi^{1/4} t^{7/4} e^{-pi t/4} (the coefficient
/// consistent with r_asymptotic; accurate to O(1/t^2) relative).
double amp_A_asymptotic(double t);

/// Real/imaginary components of g on the critical line.
struct GComponents {
    double G;
    double G_hat;
};
GComponents G_pair(double t);

/// G_n(t) = A(t) n^{-1/2} cos(phi(t) - t log n); the n-th reflective
/// component of Xi on the line.
double G_n_term(int n, double t);

/// Local expansion coefficients at s = 1/2 + lambda + it, estimated by
/// 5-point central differences of xi over lambda with step h:
///   2a = d^2 Re xi / dlambda^2,  b = d Im xi / dlambda,
///   2alpha = d^2 Im xi / dlambda^2,  beta = d Re xi / dlambda.
/// step_warning flags h < 1e-4, where binary64 roundoff eps/h^2 starts to
/// dominate the h^4 truncation error.
struct LocalCoeffs {
    double a;
    double b;
    double alpha;
    double beta;
    bool step_warning;
};
LocalCoeffs local_coeffs(double lambda, double t, double h = 1e-3);

/// Residuals of the four log-derivative identities of a holomorphic f
/// (here f = xi), measured with finite differences at step h:
///   r_sigma:  (1/|f|) d|f|/dsigma - Re(f'/f)
///   r_t:      (1/|f|) d|f|/dt     + Im(f'/f)
///   r_sigma2: second-order sigma form minus Re(f''/f - (f'/f)^2)
///   r_t2:     second-order t form  plus  Re(f''/f - (f'/f)^2)
/// Throws std::domain_error when |xi| < 1e-8 at the sample point.
struct LogDerivReport {
    double r_sigma;
    double r_t;
    double r_sigma2;
    double r_t2;
    double abs_f;
};
LogDerivReport log_deriv_identities(const StripPoint& p, double h = 1e-3);

/// N(T) = phi(T)/pi with exact phi(T) = theta_rs(T) + pi, alongside the
/// asymptotic (T/2pi) log(T/(2 pi e)) + 7/8. below_validity marks
/// T < 2 pi e, where the asymptotic's log factor changes sign and the
/// formula stops tracking the true count.
struct NFormulaResult {
    double exact;
    double asymptotic;
    bool below_validity;
};
NFormulaResult N_formula(double T);

}  // namespace xilab
