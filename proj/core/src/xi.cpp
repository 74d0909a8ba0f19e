#include "xilab/xi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xilab/fdiff.hpp"
#include "xilab/quadrature.hpp"
#include "xilab/specfun.hpp"

namespace xilab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;

bool at_trivial_zero(const StripPoint& p) {
    if (p.t != 0.0 || p.sigma > -1.0) return false;
    const double half = p.sigma / 2.0;
    return std::abs(half - std::round(half)) < 1e-12;
}

Complex gamma_part(Complex s) {
    // pi^{-s/2} Gamma(s/2 + 1)
    return std::exp(log_gamma(0.5 * s + 1.0) - 0.5 * s * kLogPi);
}

}  // namespace

Complex xi_direct(const StripPoint& p) {
    StripPoint q = p;
    if (at_trivial_zero(q)) q = q.reflected();  // Gamma pole cancels a zeta zero
    const Complex s = q.s();
    return gamma_part(s) * zeta_pole_removed(s);
}

Complex g_func(const StripPoint& p) {
    const Complex s = p.s();
    return (s - 1.0) * gamma_part(s);
}

Complex nu_closed(const StripPoint& p) {
    const Complex s = p.s();
    if (std::abs(s) < 1e-13 || std::abs(s - 1.0) < 1e-13)
        throw PoleError("nu: poles at s = 0 and s = 1");
    // nu = pi^{-s/2} Gamma(s/2) zeta(s) = gamma_part(s) * 2/s * zeta(s)
    return gamma_part(s) * (2.0 / s) * zeta(s).value;
}

namespace {

// breakpoints for the x-space integrals over [1, inf): log-spaced so the
// oscillation cos((t/2) log x) is seeded with a few panels per wave, with a
// single stretch panel out to the configured cutoff
std::vector<double> psi_integral_breakpoints(double t, const QuadratureConfig& quad) {
    const double omega_end = 1.65;  // psi(e^{2w}) below 1e-36 past this
    const int waves = static_cast<int>(std::ceil(std::abs(t) * omega_end / kPi));
    const int n = std::max(8, 2 * waves);
    std::vector<double> pts;
    pts.reserve(n + 2);
    for (int i = 0; i <= n; ++i)
        pts.push_back(std::exp(2.0 * omega_end * i / n));
    const double x_max = std::exp(2.0 * quad.omega_max);
    if (x_max > pts.back()) pts.push_back(x_max);
    return pts;
}

}  // namespace

EvalResult<Complex> nu_integral(const StripPoint& p, const QuadratureConfig& quad) {
    const Complex s = p.s();
    if (std::abs(s) < 1e-13 || std::abs(s - 1.0) < 1e-13)
        throw PoleError("nu: poles at s = 0 and s = 1");
    auto integrand = [&](double x) -> Complex {
        const double psi = theta_psi(x).value;
        const double lx = std::log(x);
        return psi * (std::exp((0.5 * s - 1.0) * lx) +
                      std::exp((0.5 * (1.0 - s) - 1.0) * lx));
    };
    auto r = integrate_breakpoints(integrand, psi_integral_breakpoints(p.t, quad), quad);
    return {r.value - 1.0 / (1.0 - s) - 1.0 / s, r.abs_err};
}

EvalResult<Complex> nu_func(const StripPoint& p, const QuadratureConfig& quad) {
    const Complex closed = nu_closed(p);
    const auto integral = nu_integral(p, quad);
    return {closed, std::abs(closed - integral.value)};
}

EvalResult<Complex> xi_integral(const StripPoint& p, const QuadratureConfig& quad) {
    const Complex s = p.s();
    auto integrand = [&](double x) -> Complex {
        const double psi = theta_psi(x).value;
        const double lx = std::log(x);
        return psi * (std::exp(0.5 * s * lx) + std::exp(0.5 * (1.0 - s) * lx)) / x;
    };
    auto r = integrate_breakpoints(integrand, psi_integral_breakpoints(p.t, quad), quad);
    const Complex prefactor = 0.5 * s * (1.0 - s);
    return {0.5 - prefactor * r.value, std::abs(prefactor) * r.abs_err};
}

double Xi(double t) {
    const Complex v = xi_direct(StripPoint::on_line(t));
    if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
        throw ConvergenceError("Xi: imaginary residue exceeds tolerance");
    return v.real();
}

double theta_rs(double t) {
    return log_gamma(Complex{0.25, 0.5 * t}).imag() - 0.5 * t * kLogPi;
}

double theta_rs_asymptotic(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("theta_rs_asymptotic: requires t > 0");
    return 0.5 * t * std::log(t / (2.0 * kPi * std::numbers::e)) - kPi / 8.0;
}

double hardy_Z(double t) {
    const Complex z = zeta(Complex{0.5, t}).value;
    const double th = theta_rs(t);
    const Complex v = z * Complex{std::cos(th), std::sin(th)};
    if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
        throw ConvergenceError("hardy_Z: imaginary residue exceeds tolerance");
    return v.real();
}

AmpPhase g_amp_phase(double t) {
    const Complex lg = log_gamma(Complex{0.25, 0.5 * t});
    const double r = -0.5 * (t * t + 0.25) * std::pow(kPi, -0.25) * std::exp(lg.real());
    const double theta = lg.imag() - 0.5 * t * kLogPi;
    return {r, theta};
}

AmpPhase g_amp_phase_positive(double t) {
    const AmpPhase rp = g_amp_phase(t);
    return {-rp.amplitude, rp.phase + kPi};
}

double r_asymptotic(double t) {
    return -std::pow(2.0, -0.25) * std::pow(kPi, 0.25) *
           std::pow(t * t + 0.25, 0.875) *
           std::exp(-0.25 - 0.5 * t * std::atan(2.0 * t));
}

double amp_A_asymptotic(double t) {
    return std::pow(2.0, -0.25) * std::pow(kPi, 0.25) * std::pow(t, 1.75) *
           std::exp(-kPi * t / 4.0);
}

GComponents G_pair(double t) {
    const Complex g = g_func(StripPoint::on_line(t));
    return {g.real(), g.imag()};
}

double G_n_term(int n, double t) {
    if (n < 1) throw std::invalid_argument("G_n_term: requires n >= 1");
    const AmpPhase ap = g_amp_phase_positive(t);
    const double ln_n = std::log(static_cast<double>(n));
    return ap.amplitude / std::sqrt(static_cast<double>(n)) *
           std::cos(ap.phase - t * ln_n);
}

LocalCoeffs local_coeffs(double lambda, double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("local_coeffs: requires h > 0");
    auto f = [&](double lam) { return xi_direct(StripPoint{0.5 + lam, t}); };
    const Complex d1 = fd_deriv1(f, lambda, h);
    const Complex d2 = fd_deriv2(f, lambda, h);
    LocalCoeffs c;
    c.b = d1.imag();
    c.beta = d1.real();
    c.a = 0.5 * d2.real();
    c.alpha = 0.5 * d2.imag();
    c.step_warning = h < 1e-4;
    return c;
}

LogDerivReport log_deriv_identities(const StripPoint& p, double h) {
    auto f_of = [](double sig, double tt) { return xi_direct(StripPoint{sig, tt}); };
    const Complex f = f_of(p.sigma, p.t);
    const double af = std::abs(f);
    if (af < 1e-8)
        throw std::domain_error("log_deriv_identities: |xi| below 1e-8 at sample point");

    auto mod_sigma = [&](double sig) { return std::abs(f_of(sig, p.t)); };
    auto mod_t = [&](double tt) { return std::abs(f_of(p.sigma, tt)); };
    auto cx_sigma = [&](double sig) { return f_of(sig, p.t); };

    const double m_s1 = fd_deriv1(mod_sigma, p.sigma, h);
    const double m_s2 = fd_deriv2(mod_sigma, p.sigma, h);
    const double m_t1 = fd_deriv1(mod_t, p.t, h);
    const double m_t2 = fd_deriv2(mod_t, p.t, h);
    const Complex f1 = fd_deriv1(cx_sigma, p.sigma, h);  // f' (analytic, any direction)
    const Complex f2 = fd_deriv2(cx_sigma, p.sigma, h);

    const Complex lgd = f1 / f;
    const Complex curv = f2 / f - lgd * lgd;

    LogDerivReport r;
    r.abs_f = af;
    r.r_sigma = m_s1 / af - lgd.real();
    r.r_t = m_t1 / af + lgd.imag();
    r.r_sigma2 = (m_s2 / af - (m_s1 / af) * (m_s1 / af)) - curv.real();
    r.r_t2 = (m_t2 / af - (m_t1 / af) * (m_t1 / af)) + curv.real();
    return r;
}

NFormulaResult N_formula(double T) {
    if (!(T > 0.0)) throw std::invalid_argument("N_formula: requires T > 0");
    NFormulaResult r;
    r.exact = (theta_rs(T) + kPi) / kPi;
    r.asymptotic = T / (2.0 * kPi) * std::log(T / (2.0 * kPi * std::numbers::e)) + 0.875;
    r.below_validity = T < 2.0 * kPi * std::numbers::e;
    return r;
}

}  // namespace xilab
