#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "reference_values.hpp"
#include "xilab/fdiff.hpp"
#include "xilab/specfun.hpp"
#include "xilab/xi.hpp"

using namespace xilab;
namespace ref = xilab_test_ref;

namespace {

constexpr double kFirstZero = 14.134725141734694;

StripPoint pt(const ref::CxSample& s) { return {s.in_re, s.in_im}; }
Complex val(const ref::CxSample& s) { return {s.out_re, s.out_im}; }

}  // namespace

TEST_CASE("xi_direct matches the high-precision reference samples") {
    for (const auto& s : ref::xi_samples) {
        const Complex got = xi_direct(pt(s));
        CAPTURE(s.in_re);
        CAPTURE(s.in_im);
        CHECK(std::abs(got - val(s)) <= 1e-12 * (1.0 + std::abs(val(s))));
    }
}

TEST_CASE("xi at the distinguished points") {
    CHECK(xi_direct({0.0, 0.0}).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(xi_direct({1.0, 0.0}).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(xi_direct({0.5, 0.0}).real() ==
          doctest::Approx(ref::xi_half).epsilon(1e-14));
    CHECK(std::abs(xi_direct({0.5, kFirstZero})) < 1e-9);
    // trivial-zero guard: the reflection route keeps xi finite and correct
    CHECK(xi_direct({-2.0, 0.0}).real() ==
          doctest::Approx(xi_direct({3.0, 0.0}).real()).epsilon(1e-14));
}

TEST_CASE("reflection and component parity on random strip points") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> sig(-2.0, 3.0);
    std::uniform_real_distribution<double> tt(-60.0, 60.0);
    for (int i = 0; i < 1000; ++i) {
        const StripPoint p{sig(rng), tt(rng)};
        const Complex a = xi_direct(p);
        const Complex b = xi_direct(StripPoint::from_s(1.0 - p.s()));
        CHECK(std::abs(a - b) <= 1e-11 * (1.0 + std::abs(a)));

        const Complex m = xi_direct({1.0 - p.sigma, p.t});
        CHECK(std::abs(a.real() - m.real()) <= 1e-11 * (1.0 + std::abs(a)));
        CHECK(std::abs(a.imag() + m.imag()) <= 1e-11 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("Xi is real, even, and bounded by Xi(0)") {
    CHECK(Xi(0.0) == doctest::Approx(ref::xi_half).epsilon(1e-14));
    CHECK(std::abs(Xi(kFirstZero)) < 1e-9);
    CHECK(Xi(-7.3) == doctest::Approx(Xi(7.3)).epsilon(1e-13));
    for (const auto& s : ref::xi_line_samples)
        CHECK(Xi(s.in) == doctest::Approx(s.out).epsilon(1e-12));
    for (double t = 0.5; t < 45.0; t += 0.7) CHECK(std::abs(Xi(t)) < Xi(0.0));
}

TEST_CASE("g_func values and the factorization xi = g zeta") {
    for (const auto& s : ref::g_samples) {
        const Complex got = g_func(pt(s));
        CHECK(std::abs(got - val(s)) <= 1e-13 * (1.0 + std::abs(val(s))));
    }
    CHECK(g_func({0.5, 0.0}).real() == doctest::Approx(ref::g_half).epsilon(1e-14));
    CHECK(g_func({2.0, 0.0}).real() ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    for (const StripPoint p :
         {StripPoint{2.0, 0.0}, StripPoint{0.5, 10.0}, StripPoint{-0.8, 33.0}}) {
        const Complex lhs = xi_direct(p);
        const Complex rhs = g_func(p) * zeta(p.s()).value;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("nu: closed form, integral form, reflection, and xi relation") {
    CHECK(nu_closed({2.0, 0.0}).real() ==
          doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-13));
    for (const auto& s : ref::nu_samples) {
        const Complex got = nu_closed(pt(s));
        CHECK(std::abs(got - val(s)) <= 1e-12 * (1.0 + std::abs(val(s))));
    }
    for (const StripPoint p : {StripPoint{2.0, 0.0}, StripPoint{0.3, 2.0},
                               StripPoint{1.5, -8.0}}) {
        const auto cross = nu_func(p);
        CHECK(cross.abs_err <= 1e-10);

        const Complex refl = nu_closed(StripPoint::from_s(1.0 - p.s()));
        CHECK(std::abs(cross.value - refl) <= 1e-11 * (1.0 + std::abs(refl)));

        const Complex s = p.s();
        CHECK(std::abs(-0.5 * s * (1.0 - s) * cross.value - xi_direct(p)) <=
              1e-11 * (1.0 + std::abs(xi_direct(p))));
    }
    CHECK_THROWS_AS(nu_closed({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(nu_closed({1.0, 0.0}), PoleError);
    // -(s(1-s)/2) nu(s) at s = 1/2 reproduces Xi(0)
    const Complex nu_half = nu_closed({0.5, 0.0});
    CHECK((-0.5 * 0.5 * 0.5 * nu_half).real() ==
          doctest::Approx(ref::xi_half).epsilon(1e-12));
}

TEST_CASE("xi_integral agrees with xi_direct across the strip") {
    CHECK(xi_integral({0.0, 0.0}).value.real() == doctest::Approx(0.5).epsilon(1e-11));
    for (const StripPoint p : {StripPoint{0.5, 5.0}, StripPoint{2.0, 0.0},
                               StripPoint{-1.0, 21.0}, StripPoint{1.4, 47.0}}) {
        const auto got = xi_integral(p);
        CAPTURE(p.sigma);
        CAPTURE(p.t);
        CHECK(std::abs(got.value - xi_direct(p)) <= 1e-10);
    }
}

TEST_CASE("theta_rs: reference values, root, and asymptotic form") {
    for (const auto& s : ref::siegel_theta_samples)
        CHECK(theta_rs(s.in) == doctest::Approx(s.out).epsilon(1e-13));
    CHECK(theta_rs(0.0) == 0.0);
    CHECK(std::abs(theta_rs(ref::gram_g0)) < 1e-10);
    for (double t : {50.0, 100.0, 200.0})
        CHECK(std::abs(theta_rs(t) - theta_rs_asymptotic(t)) < 1e-3);
    CHECK(std::abs(theta_rs(100.0) - theta_rs_asymptotic(100.0)) < 3e-4);
}

TEST_CASE("hardy_Z: reference values, zeros, and |Z| = |zeta|") {
    for (const auto& s : ref::hardy_z_samples)
        CHECK(hardy_Z(s.in) == doctest::Approx(s.out).epsilon(1e-11));
    CHECK(hardy_Z(0.0) == doctest::Approx(ref::zeta_half).epsilon(1e-13));
    CHECK(std::abs(hardy_Z(kFirstZero)) < 1e-8);
    CHECK(hardy_Z(14.0) * hardy_Z(15.0) < 0.0);  // brackets the first zero
    for (double t : {3.0, 21.5, 60.0}) {
        CHECK(std::abs(hardy_Z(t)) ==
              doctest::Approx(std::abs(zeta(Complex{0.5, t}).value)).epsilon(1e-12));
    }
    // Z(t) r(t) = Xi(t)
    for (double t : {0.0, 5.0, 18.0, 40.0, 60.0}) {
        CHECK(std::abs(hardy_Z(t) * g_amp_phase(t).amplitude - Xi(t)) <=
              1e-9 * (1.0 + std::abs(Xi(t))));
    }
}

TEST_CASE("g amplitude/phase split") {
    const AmpPhase r0 = g_amp_phase(0.0);
    CHECK(r0.amplitude == doctest::Approx(ref::g_half).epsilon(1e-14));
    CHECK(r0.phase == 0.0);

    for (double t : {0.0, 7.0, 25.0, 100.0, 200.0}) {
        const AmpPhase rp = g_amp_phase(t);
        const AmpPhase ap = g_amp_phase_positive(t);
        const Complex g = g_func(StripPoint::on_line(t));
        CHECK(ap.amplitude > 0.0);
        CHECK(std::abs(rp.to_complex() - g) <= 1e-11 * std::abs(g));
        CHECK(std::abs(ap.to_complex() - g) <= 1e-11 * std::abs(g));
    }
    // large-t asymptotic amplitude within 2 percent at t = 200
    const double a200 = g_amp_phase_positive(200.0).amplitude;
    CHECK(std::abs(amp_A_asymptotic(200.0) - a200) <= 0.02 * a200);
    CHECK(std::abs(-r_asymptotic(200.0) - a200) <= 0.02 * a200);
}

TEST_CASE("G components and G_n terms") {
    const GComponents g0 = G_pair(0.0);
    CHECK(g0.G == doctest::Approx(ref::g_half).epsilon(1e-14));
    CHECK(std::abs(g0.G_hat) < 1e-15);

    for (double t : {0.0, 12.0, 33.0}) {
        const GComponents gc = G_pair(t);
        const double a = g_amp_phase_positive(t).amplitude;
        CHECK(gc.G * gc.G + gc.G_hat * gc.G_hat ==
              doctest::Approx(a * a).epsilon(1e-12));
    }

    // n = 1 collapses to G; t = 0 scales by n^{-1/2}
    CHECK(G_n_term(1, 17.3) == doctest::Approx(G_pair(17.3).G).epsilon(1e-13));
    CHECK(G_n_term(2, 0.0) ==
          doctest::Approx(G_pair(0.0).G / std::sqrt(2.0)).epsilon(1e-13));

    // G_hat = A sin(phi) crosses zero exactly where phi hits a multiple of
    // pi, i.e. across the theta root at g_0
    CHECK(G_pair(ref::gram_g0 - 0.05).G_hat * G_pair(ref::gram_g0 + 0.05).G_hat <
          0.0);

    // the two closed forms agree
    for (int n : {2, 3, 7}) {
        for (double t : {4.0, 21.5, 38.0}) {
            const GComponents gc = G_pair(t);
            const double ln_n = std::log(static_cast<double>(n));
            const double form_b = (gc.G * std::cos(t * ln_n) + gc.G_hat * std::sin(t * ln_n)) /
                                  std::sqrt(static_cast<double>(n));
            CHECK(G_n_term(n, t) == doctest::Approx(form_b).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(G_n_term(0, 1.0), std::invalid_argument);
}

TEST_CASE("local_coeffs reproduce the derivative relations at lambda = 0") {
    for (double t : {5.0, 10.0, 20.0}) {
        const LocalCoeffs c = local_coeffs(0.0, t);
        auto xi_line = [](double tt) { return Xi(tt); };
        const double xi_d1 = fd_deriv1(xi_line, t, 1e-3);
        const double xi_d2 = fd_deriv2(xi_line, t, 1e-3);
        CAPTURE(t);
        // b(0,t) = -Xi'(t)
        CHECK(std::abs(c.b + xi_d1) <= 1e-6 * (1.0 + std::abs(xi_d1)));
        // a(0,t) = -Xi''(t)/2
        CHECK(std::abs(c.a + 0.5 * xi_d2) <= 1e-5 * (1.0 + std::abs(xi_d2)));
        // evenness of Re xi in lambda kills beta and alpha on the line
        CHECK(std::abs(c.beta) <= 1e-8);
        CHECK(std::abs(c.alpha) <= 1e-8);
    }
    CHECK(local_coeffs(0.2, 4.0, 1e-5).step_warning);
    CHECK_FALSE(local_coeffs(0.2, 4.0).step_warning);
    CHECK_THROWS_AS(local_coeffs(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("local degree-1/degree-2 behavior of xi near the line") {
    for (double t : {6.0, 15.0}) {
        const double b = local_coeffs(0.0, t).b;
        auto b_of = [&](double tt) { return local_coeffs(0.0, tt).b; };
        const double b_prime = fd_deriv1(b_of, t, 1e-3);
        const double lam = 1e-3;
        const Complex xi_l = xi_direct({0.5 + lam, t});
        CHECK(std::abs(xi_l.imag() / lam - b) <= 1e-4 * (1.0 + std::abs(b)));
        CHECK(std::abs((xi_l.real() - Xi(t)) / (lam * lam) - 0.5 * b_prime) <=
              1e-3 * (1.0 + std::abs(b_prime)));
    }
}

TEST_CASE("log-derivative identities of xi") {
    const auto r = log_deriv_identities({2.0, 0.0});
    CHECK(std::abs(r.r_sigma) <= 1e-6);
    CHECK(std::abs(r.r_t) <= 1e-6);
    const auto r2 = log_deriv_identities({0.8, 5.0});
    CHECK(std::abs(r2.r_sigma2) <= 1e-4);
    CHECK(std::abs(r2.r_t2) <= 1e-4);

    // the d|f|/dt identity carries the minus sign: at a point where
    // Im(f'/f) != 0 the identity with a plus sign must fail
    const StripPoint p{1.3, 7.0};
    auto f_of = [](double sg, double tt) { return xi_direct(StripPoint{sg, tt}); };
    const Complex f = f_of(p.sigma, p.t);
    auto mod_t = [&](double tt) { return std::abs(f_of(p.sigma, tt)); };
    const double lhs = fd_deriv1(mod_t, p.t, 1e-3) / std::abs(f);
    auto cx_sigma = [&](double sg) { return f_of(sg, p.t); };
    const Complex lgd = fd_deriv1(cx_sigma, p.sigma, 1e-3) / f;
    CHECK(std::abs(lhs + lgd.imag()) <= 1e-6);   // correct sign
    CHECK(std::abs(lhs - lgd.imag()) > 1e-3);    // wrong sign clearly off

    CHECK_THROWS_AS(log_deriv_identities({0.5, kFirstZero}), std::domain_error);
}

TEST_CASE("N_formula: exact vs asymptotic, validity flag, monotonicity") {
    const auto n100 = N_formula(100.0);
    CHECK(n100.exact == doctest::Approx(29.0).epsilon(0.05));
    CHECK(std::abs(n100.exact - n100.asymptotic) < 0.01);
    CHECK_FALSE(n100.below_validity);
    CHECK(N_formula(1.0).below_validity);
    CHECK(N_formula(200.0).exact > N_formula(100.0).exact);
    CHECK_THROWS_AS(N_formula(0.0), std::invalid_argument);
}
