#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "reference_values.hpp"
#include "xilab/fdiff.hpp"
#include "xilab/specfun.hpp"

using namespace xilab;
namespace ref = xilab_test_ref;

namespace {

Complex cx(const ref::CxSample& s) { return {s.in_re, s.in_im}; }
Complex val(const ref::CxSample& s) { return {s.out_re, s.out_im}; }

}  // namespace

TEST_CASE("log_gamma matches the high-precision reference samples") {
    for (const auto& s : ref::log_gamma_samples) {
        const Complex got = log_gamma(cx(s));
        CAPTURE(s.in_re);
        CAPTURE(s.in_im);
        CHECK(std::abs(got - val(s)) <= 1e-13 * (1.0 + std::abs(val(s))));
    }
}

TEST_CASE("log_gamma special values") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(log_gamma({0.5, 0.0}).real() ==
          doctest::Approx(std::log(std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), PoleError);
}

TEST_CASE("Gamma recurrence and reflection hold on a random grid") {
    std::mt19937 rng(421);
    std::uniform_real_distribution<double> re(-20.0, 20.0);
    std::uniform_real_distribution<double> im(-20.0, 20.0);
    int checked = 0;
    while (checked < 300) {
        const Complex s{re(rng), im(rng)};
        // keep away from the poles and the reflection formula's sin zeros
        if (std::abs(s.imag()) < 0.1 &&
            std::abs(s.real() - std::round(s.real())) < 0.1)
            continue;
        ++checked;
        const Complex gs = std::exp(log_gamma(s));
        const Complex gs1 = std::exp(log_gamma(s + 1.0));
        CHECK(std::abs(gs1 - s * gs) <= 1e-12 * std::abs(gs1));

        const Complex refl = std::exp(log_gamma(1.0 - s));
        const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * s);
        CHECK(std::abs(gs * refl - rhs) <= 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("digamma matches reference samples and its recurrence") {
    for (const auto& s : ref::digamma_samples) {
        const Complex got = digamma(cx(s));
        CAPTURE(s.in_re);
        CAPTURE(s.in_im);
        CHECK(std::abs(got - val(s)) <= 1e-13 * (1.0 + std::abs(val(s))));
    }
    // Psi(1) = -gamma, Psi(2) = 1 - gamma
    CHECK(digamma({1.0, 0.0}).real() ==
          doctest::Approx(-ref::euler_gamma).epsilon(1e-13));
    CHECK(digamma({2.0, 0.0}).real() ==
          doctest::Approx(1.0 - ref::euler_gamma).epsilon(1e-13));
    for (const Complex s : {Complex{0.3, 0.7}, Complex{-2.4, 1.1}, Complex{5.0, -40.0}}) {
        const Complex lhs = digamma(s + 1.0);
        const Complex rhs = digamma(s) + 1.0 / s;
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(rhs)));
    }
    CHECK_THROWS_AS(digamma({0.0, 0.0}), PoleError);
}

TEST_CASE("zeta matches reference samples on the strip") {
    for (const auto& s : ref::zeta_samples) {
        const auto got = zeta(cx(s));
        const double err = std::abs(got.value - val(s));
        CAPTURE(s.in_re);
        CAPTURE(s.in_im);
        // the reported estimate must bound the true error; left of the
        // imaginary axis the binary64 roundoff floor of the alternating
        // main sum dominates, so the estimate is the contract there
        CHECK(err <= 3.0 * got.abs_err + 1e-14);
        CHECK(got.abs_err <= 1e-6);
        if (s.in_re >= 0.0)
            CHECK(err <= 1e-11 * (1.0 + std::abs(val(s))));
    }
}

TEST_CASE("zeta special values and contracts") {
    CHECK(zeta({2.0, 0.0}).value.real() ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(zeta({0.5, 0.0}).value.real() ==
          doctest::Approx(ref::zeta_half).epsilon(1e-14));
    CHECK_THROWS_AS(zeta({1.0, 0.0}), PoleError);
    CHECK_FALSE(zeta({2.0, 30.0}).degraded);
    CHECK(zeta({2.0, 250.0}).degraded);
    CHECK(zeta({-5.5, 3.0}).degraded);

    // zeta'(0)/zeta(0) = log(2 pi), via the numerical-derivative helper
    auto zline = [](double sg) { return zeta(Complex{sg, 0.0}).value; };
    const Complex d0 = fd_deriv1(zline, 0.0, 1e-3);
    CHECK((d0 / zline(0.0)).real() ==
          doctest::Approx(std::log(2.0 * std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("zeta_pole_removed is smooth through s = 1") {
    // inside the switchover the Laurent route must agree with the direct
    // (s-1) zeta(s) product at the same point
    for (const Complex s : {Complex{1.0 + 0.99e-3, 0.0}, Complex{1.0, 0.99e-3},
                            Complex{1.0 - 0.7e-3, 0.3e-3}}) {
        const Complex laurent = zeta_pole_removed(s);
        const Complex direct = (s - 1.0) * zeta(s).value;
        CHECK(std::abs(laurent - direct) < 1e-11);
    }
    CHECK(zeta_pole_removed({1.0, 0.0}).real() == doctest::Approx(1.0));
    // value at the pole itself continues smoothly to the Laurent limit
    CHECK(std::abs(zeta_pole_removed({1.0, 1e-6}) - Complex{1.0, 0.0}) < 1e-5);
}

TEST_CASE("theta_psi matches reference samples in both Jacobi regimes") {
    const double tols[3] = {1e-14, 1e-13, 1e-12};
    for (int order = 0; order <= 2; ++order) {
        const ref::ReSample* table = order == 0   ? ref::theta_psi0_samples
                                     : order == 1 ? ref::theta_psi1_samples
                                                  : ref::theta_psi2_samples;
        const std::size_t n = order == 0 ? std::size(ref::theta_psi0_samples)
                              : order == 1
                                  ? std::size(ref::theta_psi1_samples)
                                  : std::size(ref::theta_psi2_samples);
        for (std::size_t i = 0; i < n; ++i) {
            const auto got = theta_psi(table[i].in, order);
            CAPTURE(order);
            CAPTURE(table[i].in);
            CHECK(std::abs(got.value - table[i].out) <=
                  tols[order] * (1.0 + std::abs(table[i].out)));
        }
    }
}

TEST_CASE("theta_psi printed values and identities") {
    CHECK(theta_psi(1.0).value == doctest::Approx(ref::psi1).epsilon(1e-14));
    CHECK(theta_psi(1.0, 1).value == doctest::Approx(ref::psi1_d1).epsilon(1e-14));
    CHECK(theta_psi(1.0, 2).value == doctest::Approx(ref::psi1_d2).epsilon(1e-14));
    // psi'(1) = -(1/8)(1 + 2 psi(1))
    CHECK(std::abs(theta_psi(1.0, 1).value +
                   0.125 * (1.0 + 2.0 * theta_psi(1.0).value)) < 1e-14);
    // Jacobi identity residual across the switchover
    for (double x = 0.1; x <= 10.0; x += 0.15) {
        const double lhs = 2.0 * theta_psi(x).value + 1.0;
        const double rhs = (2.0 * theta_psi(1.0 / x).value + 1.0) / std::sqrt(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13);
    }
}

TEST_CASE("theta_psi error contracts") {
    CHECK_THROWS_AS(theta_psi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_psi(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_psi(2.0, 3), std::invalid_argument);
    SeriesConfig tiny;
    tiny.max_terms = 1;
    tiny.abs_tol = 1e-30;
    CHECK_THROWS_AS(theta_psi(1.0, 0, tiny), ConvergenceError);
}

TEST_CASE("big_D matches reference samples and stays positive") {
    for (const auto& s : ref::big_d_samples) {
        const auto got = big_D(s.in);
        CAPTURE(s.in);
        CHECK(std::abs(got.value - s.out) <= 1e-13 * (1.0 + std::abs(s.out)));
    }
    CHECK(big_D(1.0).value == doctest::Approx(ref::big_d_1).epsilon(1e-14));
    for (double x = 0.05; x <= 20.0; x *= 1.37) CHECK(big_D(x).value > 0.0);
}

TEST_CASE("big_D_n term arithmetic and partial sums") {
    const double pi = std::numbers::pi;
    CHECK(big_D_n(1, 1.0) ==
          doctest::Approx((pi - 1.5) * std::exp(-pi)).epsilon(1e-15));
    CHECK(big_D_n(2, 1.0) ==
          doctest::Approx(4.0 * (4.0 * pi - 1.5) * std::exp(-4.0 * pi)).epsilon(1e-15));
    CHECK_THROWS_AS(big_D_n(0, 1.0), std::invalid_argument);

    // brute-force partial sums converge to big_D
    for (double x : {1.0, 2.0}) {
        double sum = 0.0;
        for (int n = 1; n <= 50; ++n) sum += big_D_n(n, x);
        CHECK(std::abs(sum - big_D(x).value) <= 1e-15 * (1.0 + sum));
    }
    // first-term dominance at x = 10
    const double full = big_D(10.0).value;
    CHECK(std::abs(big_D_n(1, 10.0) - full) <= 1e-12 * full);
}
