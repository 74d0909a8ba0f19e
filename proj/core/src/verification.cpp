#include "xilab/verification.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "xilab/fdiff.hpp"
#include "xilab/quadrature.hpp"
#include "xilab/specfun.hpp"
#include "xilab/spectral.hpp"
#include "xilab/xi.hpp"

namespace xilab {

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, double observed,
          double tol) {
    out.push_back({name, observed <= tol, observed, tol});
}

}  // namespace

std::vector<CheckResult> verify_identities(unsigned seed) {
    std::vector<CheckResult> out;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> sigma_dist(-2.0, 3.0);
    std::uniform_real_distribution<double> t_dist(-60.0, 60.0);

    double worst_refl = 0.0;
    double worst_realness = 0.0;
    double worst_split = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const StripPoint p{sigma_dist(rng), t_dist(rng)};
        const Complex a = xi_direct(p);
        const Complex b = xi_direct(StripPoint::from_s(1.0 - p.s()));
        worst_refl = std::max(worst_refl, std::abs(a - b) / (1.0 + std::abs(a)));

        const Complex m = xi_direct(StripPoint{1.0 - p.sigma, p.t});  // lambda -> -lambda
        worst_split = std::max(worst_split,
                               std::abs(a.real() - m.real()) / (1.0 + std::abs(a)));
        worst_split = std::max(worst_split,
                               std::abs(a.imag() + m.imag()) / (1.0 + std::abs(a)));

        const Complex on_line = xi_direct(StripPoint::on_line(p.t));
        worst_realness = std::max(
            worst_realness, std::abs(on_line.imag()) / (1.0 + std::abs(on_line.real())));
    }
    push(out, "reflection xi(1-s) = xi(s)", worst_refl, 1e-11);
    push(out, "realness of xi on the critical line", worst_realness, 1e-12);
    push(out, "Re xi even / Im xi odd in lambda", worst_split, 1e-11);

    double worst_fact = 0.0;
    for (int i = 0; i < 200; ++i) {
        const StripPoint p{sigma_dist(rng), t_dist(rng)};
        if (std::abs(p.s() - Complex{1.0, 0.0}) < 0.05) continue;
        const Complex a = xi_direct(p);
        const Complex b = g_func(p) * zeta(p.s()).value;
        worst_fact = std::max(worst_fact, std::abs(a - b) / (1.0 + std::abs(a)));
    }
    push(out, "factorization xi = g zeta", worst_fact, 1e-12);

    double worst_nu = 0.0;
    for (const StripPoint p : {StripPoint{2.0, 0.0}, StripPoint{0.3, 2.0},
                               StripPoint{1.5, -8.0}, StripPoint{0.5, 21.0}}) {
        worst_nu = std::max(worst_nu, nu_func(p).abs_err);
    }
    push(out, "nu closed form vs integral form", worst_nu, 1e-10);

    double worst_zr = 0.0;
    for (double t : {0.0, 3.0, 10.0, 14.5, 27.0, 41.0, 60.0}) {
        const double lhs = hardy_Z(t) * g_amp_phase(t).amplitude;
        const double rhs = Xi(t);
        worst_zr = std::max(worst_zr, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    push(out, "Z(t) r(t) = Xi(t)", worst_zr, 1e-9);

    // local-coefficient relations, finite differences in t at h = 1e-3
    double worst_local = 0.0;
    for (double t : {5.0, 10.0, 20.0}) {
        for (double lam : {0.0, 0.4, -0.7}) {
            const double h = 1e-3;
            const auto c = local_coeffs(lam, t, h);
            auto b_of = [&](double tt) { return local_coeffs(lam, tt, h).b; };
            auto beta_of = [&](double tt) { return local_coeffs(lam, tt, h).beta; };
            auto alpha_of = [&](double tt) { return local_coeffs(lam, tt, h).alpha; };
            auto a_lam = [&](double ll) { return local_coeffs(ll, t, h).a; };
            auto beta_lam = [&](double ll) { return local_coeffs(ll, t, h).beta; };
            const double scale = 1.0 + std::abs(c.a) + std::abs(c.b);
            worst_local = std::max(worst_local,
                                   std::abs(c.a - 0.5 * fd_deriv1(b_of, t, h)) / scale);
            worst_local = std::max(
                worst_local, std::abs(c.alpha + 0.5 * fd_deriv1(beta_of, t, h)) / scale);
            worst_local = std::max(
                worst_local,
                std::abs(fd_deriv1(a_lam, lam, h) - fd_deriv1(alpha_of, t, h)) / scale);
            worst_local = std::max(
                worst_local,
                std::abs(fd_deriv1(beta_lam, lam, h) - fd_deriv1(b_of, t, h)) / scale);
        }
    }
    push(out, "local coefficient relations (a, b, alpha, beta)", worst_local, 1e-4);

    double worst_logd = 0.0;
    for (const StripPoint p : {StripPoint{2.0, 0.0}, StripPoint{0.8, 5.0},
                               StripPoint{1.4, 17.0}, StripPoint{-0.6, 9.0}}) {
        const auto r = log_deriv_identities(p);
        worst_logd = std::max({worst_logd, std::abs(r.r_sigma), std::abs(r.r_t),
                               std::abs(r.r_sigma2), std::abs(r.r_t2)});
    }
    push(out, "log-derivative identities of holomorphic xi", worst_logd, 1e-5);

    // Jacobi identity residual for the theta series
    double worst_jacobi = 0.0;
    for (double x = 0.1; x <= 10.0; x += 0.3) {
        const double lhs = 2.0 * theta_psi(x).value + 1.0;
        const double rhs = (2.0 * theta_psi(1.0 / x).value + 1.0) / std::sqrt(x);
        worst_jacobi = std::max(worst_jacobi, std::abs(lhs - rhs));
    }
    push(out, "Jacobi transformation residual", worst_jacobi, 1e-13);

    return out;
}

std::vector<CheckResult> verify_fourier() {
    std::vector<CheckResult> out;

    double worst = 0.0;
    for (int t = 0; t <= 40; ++t)
        worst = std::max(worst, std::abs(Xi_from_S(t).value - Xi(t)));
    push(out, "Xi(t) = int S(w) cos(wt) dw on t = 0..40", worst, 1e-8);

    worst = 0.0;
    for (double lam : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
        for (double t : {0.0, 7.5, 15.0, 22.5, 30.0}) {
            const StripPoint p{0.5 + lam, t};
            worst = std::max(worst,
                             std::abs(xi_from_S_complex(p).value - xi_direct(p)));
        }
    }
    push(out, "xi(s) = int S(w) cos(w tau) dw on the grid", worst, 1e-8);

    worst = 0.0;
    for (double w = 0.0; w <= 2.0 + 1e-9; w += 0.25)
        worst = std::max(worst, std::abs(S_from_Xi(w).value - S_kernel(w)));
    push(out, "inverse transform S(w) = (2/pi) int Xi cos on [0,2]", worst, 1e-5);

    worst = 0.0;
    for (double lam : {-1.5, -0.75, 0.0, 0.75, 1.5}) {
        for (double t : {0.0, 7.5, 15.0, 22.5, 30.0}) {
            const StripPoint p{0.5 + lam, t};
            worst = std::max(worst, std::abs(g_from_S1(p).value - g_func(p)));
        }
    }
    push(out, "g(s) as the full-line transform of S_1", worst, 1e-7);

    worst = 0.0;
    for (double w = 0.25; w <= 3.0 + 1e-9; w += 0.25) {
        const double sp = S_kernel(w);
        const double sm = S_kernel(-w);
        worst = std::max(worst, std::abs(sp - sm) / (sp == 0.0 ? 1.0 : sp));
    }
    push(out, "kernel symmetry S(-w) = S(w)", worst, 1e-11);

    worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        for (double w : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
            const double a = S_n_kernel(n, w);
            const double b = S_n_kernel(1, w + std::log(static_cast<double>(n))) /
                             std::sqrt(static_cast<double>(n));
            worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
        }
    }
    push(out, "shift law S_n(w) = n^{-1/2} S_1(w + log n)", worst, 1e-12);

    const double xi0 = Xi(0.0);
    worst = 0.0;
    for (double t = 0.0; t <= 60.0; t += 0.25)
        worst = std::max(worst, std::abs(Xi(t)) - xi0);
    push(out, "bound |Xi(t)| <= Xi(0)", std::max(worst, 0.0), 0.0);

    worst = 0.0;
    for (double t = 0.0; t <= 20.0 + 1e-9; t += 2.5) {
        auto xi_round = integrate(
            [&](double w) { return S_from_Xi(w).value * std::cos(w * t); }, 0.0, 4.0,
            QuadratureConfig{1e-9, 1e-9, 4.0, 2000}, 16);
        worst = std::max(worst, std::abs(xi_round.value - Xi(t)));
    }
    push(out, "round trip Xi -> S -> Xi on [0, 20]", worst, 1e-5);

    return out;
}

std::vector<CheckResult> verify_hadamard(const ZeroTable& z) {
    std::vector<CheckResult> out;

    push(out, "B closed-form arrangements agree",
         std::abs((std::log(2.0 * std::numbers::pi) - 1.0 -
                   0.5 * std::log(std::numbers::pi) -
                   0.5 * 0.5772156649015329) -
                  B_closed()),
         1e-15);

    push(out, "B from zeros (integral tail) vs closed form",
         std::abs(B_from_zeros(z) - B_closed()), z.size() >= 10000 ? 1e-3 : 5e-3);

    const double xi_half = Xi(0.0);
    const std::size_t n_prod = std::min<std::size_t>(z.size(), 10000);
    const double prod =
        xi_partial_product(StripPoint{0.5, 0.0}, z, n_prod).real();
    push(out, "partial product at s = 1/2",
         std::abs(prod - xi_half) / std::abs(xi_half), n_prod >= 10000 ? 5e-3 : 2e-2);

    // partial sum vs finite-difference log derivative at s = 2
    const std::size_t n_sum = std::min<std::size_t>(z.size(), 1000);
    auto xi_sigma = [](double sg) { return xi_direct(StripPoint{sg, 0.0}); };
    const Complex fd =
        fd_deriv1(xi_sigma, 2.0, 1e-3) / xi_direct(StripPoint{2.0, 0.0});
    const Complex sum = log_deriv_sum(StripPoint{2.0, 0.0}, z, n_sum);
    push(out, "log-derivative sum vs finite difference at s = 2",
         std::abs(sum - fd), 1e-3);

    // route via digamma and zeta'/zeta
    const Complex s2{2.0, 0.0};
    auto zeta_line = [](double sg) { return zeta(Complex{sg, 0.0}).value; };
    const Complex zeta_ld = fd_deriv1(zeta_line, 2.0, 1e-3) / zeta(s2).value;
    const Complex gamma_route = 1.0 / s2 + 1.0 / (s2 - 1.0) -
                                0.5 * std::log(std::numbers::pi) +
                                0.5 * digamma(0.5 * s2) + zeta_ld;
    push(out, "log-derivative sum vs digamma route at s = 2",
         std::abs(sum - gamma_route), 1e-3);

    double worst_real = 0.0;
    for (double sg : {0.1, 0.9, 2.0, -1.0}) {
        const Complex p = xi_partial_product(StripPoint{sg, 0.0}, z,
                                             std::min<std::size_t>(z.size(), 500));
        worst_real = std::max(worst_real, std::abs(p.imag()));
        const Complex l = log_deriv_sum(StripPoint{sg, 0.0}, z,
                                        std::min<std::size_t>(z.size(), 500));
        worst_real = std::max(worst_real, std::abs(l.imag()));
    }
    push(out, "conjugate-pair arithmetic keeps real s real", worst_real, 1e-14);

    // sum 1/(s - rho) - sum 1/(s - (1 - rho)) over the zero multiset, term by
    // term: vanishes because rho -> 1 - rho permutes the zeros
    double worst_cancel = 0.0;
    for (const StripPoint p : {StripPoint{2.0, 3.0}, StripPoint{0.2, -11.0}}) {
        const Complex s = p.s();
        Complex diff = 0.0;
        const std::size_t n = std::min<std::size_t>(z.size(), 500);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex rho{z.sigma(i), z.ordinates[i]};
            const Complex rho_conj = std::conj(rho);
            diff += 1.0 / (s - rho) + 1.0 / (s - rho_conj);
            diff -= 1.0 / (s - (1.0 - rho)) + 1.0 / (s - (1.0 - rho_conj));
        }
        worst_cancel = std::max(worst_cancel, std::abs(diff));
    }
    push(out, "reflected zero-sum cancellation", worst_cancel, 1e-14);

    return out;
}

std::vector<CheckResult> verify_monotonic(const ZeroTable& z, double step) {
    std::vector<CheckResult> out;
    const auto report = monotonicity_scan(0.6, 2.0, 0.0, 50.0, step, z);
    push(out, "monotonicity violations on sigma in [0.6,2], t in [0,50]",
         static_cast<double>(report.violations.size()), 0.0);
    push(out, "zero-sum route sign agreement",
         static_cast<double>(report.sum_route_sign_mismatches), 0.0);
    return out;
}

}  // namespace xilab
