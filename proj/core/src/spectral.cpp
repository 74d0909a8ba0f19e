#include "xilab/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xilab/quadrature.hpp"
#include "xilab/specfun.hpp"
#include "xilab/xi.hpp"

namespace xilab {

namespace {

constexpr double kPi = std::numbers::pi;

// S is numerically zero past here (exp underflow of the leading term)
constexpr double kOmegaDead = 2.8;

std::vector<double> forward_breakpoints(double freq, const QuadratureConfig& quad) {
    // seed ~2 panels per oscillation wave over the live part of the kernel,
    // one stretch panel out to the configured cutoff
    const double live = std::min(quad.omega_max, kOmegaDead);
    const int n = std::max(8, static_cast<int>(std::ceil(std::abs(freq) * live / 2.0)));
    std::vector<double> pts;
    pts.reserve(n + 2);
    for (int i = 0; i <= n; ++i) pts.push_back(live * i / n);
    if (quad.omega_max > live) pts.push_back(quad.omega_max);
    return pts;
}

std::vector<double> uniform_pts(double a, double b, int n) {
    std::vector<double> pts(n + 1);
    for (int i = 0; i <= n; ++i) pts[i] = a + (b - a) * i / n;
    return pts;
}

}  // namespace

double S_kernel(double omega, const SeriesConfig& cfg) {
    const double x = std::exp(2.0 * omega);
    // the kernel decays like exp(-pi e^{2|omega|}); once x itself under- or
    // overflows, the true value is far below the double range
    if (x == 0.0 || !std::isfinite(x)) return 0.0;
    return 8.0 * kPi * std::exp(2.5 * omega) * big_D(x, cfg).value;
}

double S_n_kernel(int n, double omega) {
    if (n < 1) throw std::invalid_argument("S_n_kernel: requires n >= 1");
    const double x = std::exp(2.0 * omega);
    if (x == 0.0 || !std::isfinite(x)) return 0.0;
    return 8.0 * kPi * std::exp(2.5 * omega) * big_D_n(n, x);
}

EvalResult<double> Xi_from_S(double t, const QuadratureConfig& quad) {
    auto f = [&](double w) { return S_kernel(w) * std::cos(w * t); };
    return integrate_breakpoints(f, forward_breakpoints(t, quad), quad);
}

EvalResult<Complex> xi_from_S_complex(const StripPoint& p, const QuadratureConfig& quad) {
    if (std::abs(p.lambda()) > 8.0)
        throw std::invalid_argument("xi_from_S_complex: requires |lambda| <= 8");
    const Complex tau = p.tau();
    auto f = [&](double w) -> Complex { return S_kernel(w) * std::cos(w * tau); };
    return integrate_breakpoints(f, forward_breakpoints(std::abs(p.t) + std::abs(p.lambda()), quad), quad);
}

EvalResult<double> S_from_Xi(double omega, double T_max, const QuadratureConfig& quad) {
    if (!(T_max > 0.0)) throw std::invalid_argument("S_from_Xi: requires T_max > 0");
    auto f = [&](double t) { return Xi(t) * std::cos(omega * t); };
    // Xi has zeros roughly every 2.5 units and the cosine adds omega/pi
    // waves per unit; seed accordingly
    const int n = std::max(24, static_cast<int>(std::ceil(T_max * (0.5 + std::abs(omega) / 2.0))));
    auto r = integrate_breakpoints(f, uniform_pts(0.0, T_max, n), quad);
    // truncated tail: |Xi(t)| <~ |Xi(T)| e^{-pi (t-T)/4} past the cutoff
    const double tail = std::abs(Xi(T_max)) * 4.0 / kPi;
    EvalResult<double> out;
    out.value = 2.0 / kPi * r.value;
    out.abs_err = 2.0 / kPi * (r.abs_err + tail);
    out.degraded = 2.0 / kPi * tail > quad.abs_tol;
    return out;
}

namespace {

// half-line pieces of the full-line transform of S_n: the kernel prefactor
// e^{5w/2} is folded with the transform factor e^{lambda w} into a single
// exponential, so the negative-frequency side stays finite all the way to
// the edge of the convergence strip (where e^{5w/2} alone would underflow
// against e^{-lambda w} overflowing)
EvalResult<Complex> full_line_transform(int n, const StripPoint& p,
                                        const QuadratureConfig& quad) {
    const double lambda = p.lambda();
    const double t = p.t;
    const double nn = static_cast<double>(n) * n;

    // D_n(x) with its x -> 0+ limit -3n^2/2 (reached when e^{-2w} underflows)
    auto d_n = [nn](double x) {
        return x == 0.0 ? -1.5 * nn : nn * (nn * kPi * x - 1.5) * std::exp(-nn * kPi * x);
    };

    auto pos = [&](double w) -> Complex {
        return 8.0 * kPi * std::exp((2.5 + lambda) * w) * d_n(std::exp(2.0 * w)) *
               Complex{std::cos(w * t), std::sin(w * t)};
    };
    auto neg = [&](double w) -> Complex {
        return 8.0 * kPi * std::exp(-(2.5 + lambda) * w) * d_n(std::exp(-2.0 * w)) *
               Complex{std::cos(w * t), -std::sin(w * t)};
    };

    auto rp = integrate_breakpoints(
        pos, forward_breakpoints(std::abs(t) + std::abs(lambda), quad), quad);

    // negative side decays like e^{-(5/2 + lambda) w}
    const double rate = 2.5 + lambda;
    const double w_end = 50.0 / rate;
    const int waves = static_cast<int>(std::ceil(std::abs(t) * w_end / kPi));
    const int seeds = std::max(16, 2 * waves);
    auto rn = integrate_breakpoints(neg, uniform_pts(0.0, w_end, seeds), quad);

    return {0.5 * (rp.value + rn.value), 0.5 * (rp.abs_err + rn.abs_err)};
}

}  // namespace

EvalResult<Complex> g_from_S1(const StripPoint& p, const QuadratureConfig& quad) {
    if (!(p.lambda() > -2.5 && p.lambda() < 2.5))
        throw std::invalid_argument("g_from_S1: requires -5/2 < lambda < 5/2");
    return full_line_transform(1, p, quad);
}

Complex xi_n_component(int n, const StripPoint& p) {
    if (n < 1) throw std::invalid_argument("xi_n_component: requires n >= 1");
    return g_func(p) * std::exp(-p.s() * std::log(static_cast<double>(n)));
}

EvalResult<Complex> xi_n_component_integral(int n, const StripPoint& p,
                                            const QuadratureConfig& quad) {
    if (n < 1) throw std::invalid_argument("xi_n_component_integral: requires n >= 1");
    if (!(p.lambda() > -2.5 && p.lambda() < 2.5))
        throw std::invalid_argument("xi_n_component_integral: requires -5/2 < lambda < 5/2");
    return full_line_transform(n, p, quad);
}

Complex xi_bar_component(int n, const StripPoint& p) {
    return 0.5 * (xi_n_component(n, p) + xi_n_component(n, p.reflected()));
}

}  // namespace xilab
