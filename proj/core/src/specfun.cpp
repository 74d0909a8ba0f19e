#include "xilab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace xilab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// B_2k / (2k (2k-1)), k = 1..15
constexpr double kStirlingCoef[] = {
    0.08333333333333333,    -0.002777777777777778, 0.0007936507936507937,
    -0.0005952380952380953, 0.0008417508417508417, -0.0019175269175269176,
    0.00641025641025641,    -0.029550653594771242, 0.17964437236883057,
    -1.3924322169059011,    13.402864044168393,    -156.84828462600203,
    2193.1033333333335,     -36108.77125372499,    691472.268851313,
};

// B_2k / (2k)!, k = 1..15
constexpr double kEulerMaclaurinCoef[] = {
    0.08333333333333333,     -0.001388888888888889,   3.306878306878307e-05,
    -8.267195767195768e-07,  2.08767569878681e-08,    -5.284190138687493e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13, 8.586062056277845e-15,
    -2.174868698558062e-16,  5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.534707039629467e-21,   -8.953517427037546e-23,  2.267952452337683e-24,
};

// B_2k / (2k), k = 1..8
constexpr double kDigammaCoef[] = {
    0.08333333333333333,   -0.008333333333333333, 0.003968253968253968,
    -0.004166666666666667, 0.007575757575757576,  -0.021092796092796094,
    0.08333333333333333,   -0.4432598039215686,
};

// Stieltjes constants for the Laurent expansion of (s-1) zeta(s) near s = 1.
constexpr double kStieltjes[] = {
    0.5772156649015329, -0.07281584548367673, -0.009690363192872319,
    0.002053834420303346,
};

bool near_nonpositive_integer(Complex s, double tol = 1e-13) {
    if (s.real() > 0.5 || std::abs(s.imag()) > tol) return false;
    return std::abs(s.real() - std::round(s.real())) <= tol;
}

// Stirling series; accurate for Re z >= 10 or |Im z| >= 10.
Complex log_gamma_stirling(Complex z) {
    Complex r = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
    const Complex z2 = z * z;
    Complex zp = z;
    for (double c : kStirlingCoef) {
        r += c / zp;
        zp *= z2;
    }
    return r;
}

}  // namespace

Complex log_gamma(Complex s) {
    if (near_nonpositive_integer(s))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (s.real() >= 0.5) {
        // shift into the Stirling region, summing principal logs of the
        // skipped factors (each factor has positive real part, so the sum
        // stays on the principal branch)
        Complex shift = 0.0;
        Complex z = s;
        if (std::abs(z.imag()) < 10.0) {
            while (z.real() < 10.0) {
                shift += std::log(z);
                z += 1.0;
            }
        }
        return log_gamma_stirling(z) - shift;
    }
    if (std::abs(s.imag()) >= 10.0) return log_gamma_stirling(s);
    // Hare's reflection with the winding correction that restores the
    // principal branch: log Gamma(z) = log(pi / sin(pi z))
    //                                  + 2 pi i sign(Im z) floor(Re z/2 + 1/4)
    //                                  - log Gamma(1 - z)
    const double winding =
        std::copysign(2.0 * kPi, s.imag()) * std::floor(0.5 * s.real() + 0.25);
    return std::log(kPi / std::sin(kPi * s)) + Complex{0.0, winding} -
           log_gamma(1.0 - s);
}

Complex digamma(Complex s) {
    if (near_nonpositive_integer(s))
        throw PoleError("digamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // reflection: Psi(z) = Psi(1-z) - pi cot(pi z)
        return digamma(1.0 - s) - kPi / std::tan(kPi * s);
    }
    Complex acc = 0.0;
    Complex z = s;
    while (z.real() < 10.0 && std::abs(z.imag()) < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    Complex r = std::log(z) - 0.5 / z;
    const Complex z2 = z * z;
    Complex zp = z2;
    for (double c : kDigammaCoef) {
        r -= c / zp;
        zp *= z2;
    }
    return r + acc;
}

namespace {

// Euler-Maclaurin tail starting at N, plus the partial sum below it.
EvalResult<Complex> zeta_euler_maclaurin(Complex s, const SeriesConfig& cfg) {
    const double t = std::abs(s.imag());
    int n_cut = std::max(24, static_cast<int>(std::ceil(0.5 * t)));
    n_cut = std::min(n_cut, std::max(24, cfg.max_terms));
    const double n_cut_d = static_cast<double>(n_cut);

    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (int n = 1; n < n_cut; ++n) {
        const Complex term = std::exp(-s * std::log(static_cast<double>(n)));
        sum += term;
        abs_sum += std::abs(term);
    }
    const Complex n_pow_ms = std::exp(-s * std::log(n_cut_d));  // N^{-s}
    sum += 0.5 * n_pow_ms;
    sum += n_pow_ms * n_cut_d / (s - 1.0);

    // correction terms B_2k/(2k)! * rising(s, 2k-1) * N^{1-s-2k}
    Complex rising = s;
    Complex n_pow = n_pow_ms / n_cut_d;  // N^{-s-1}
    double last_term = 0.0;
    for (int k = 1; k <= 14; ++k) {
        const Complex term = kEulerMaclaurinCoef[k - 1] * rising * n_pow;
        sum += term;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        n_pow /= n_cut_d * n_cut_d;
        last_term = std::abs(term);
    }

    EvalResult<Complex> out;
    out.value = sum;
    // remainder is bounded by a small multiple of the last included term;
    // roundoff floor: one ulp of the accumulated magnitudes plus the phase
    // error eps * |t log N| carried by every cexp
    const double eps = std::numeric_limits<double>::epsilon();
    const double phase = t * std::log(n_cut_d);
    out.abs_err = 4.0 * last_term + eps * abs_sum * (2.0 + phase);
    out.degraded = s.real() < -5.0 || s.real() > 6.0 || t > 200.0;
    return out;
}

}  // namespace

EvalResult<Complex> zeta(Complex s, const SeriesConfig& cfg) {
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-13)
        throw PoleError("zeta: pole at s = 1");
    if (s.real() >= 0.0) return zeta_euler_maclaurin(s, cfg);

    // left of the imaginary axis the Euler-Maclaurin main sum cancels
    // catastrophically (terms n^{|sigma|} against an O(1) value), so route
    // through the functional equation
    //   zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex one_minus = 1.0 - s;
    const auto base = zeta_euler_maclaurin(one_minus, cfg);
    const Complex chi = std::exp(s * std::log(2.0) + (s - 1.0) * kLogPi +
                                 log_gamma(one_minus)) *
                        std::sin(0.5 * kPi * s);
    EvalResult<Complex> out;
    out.value = chi * base.value;
    const double eps = std::numeric_limits<double>::epsilon();
    out.abs_err = std::abs(chi) * base.abs_err +
                  eps * std::abs(out.value) * (10.0 + 0.5 * std::abs(s.imag()));
    out.degraded = base.degraded || s.real() < -5.0;
    return out;
}

Complex zeta_pole_removed(Complex s, const SeriesConfig& cfg) {
    const Complex u = s - 1.0;
    if (std::abs(u) < 1e-3) {
        // (s-1) zeta(s) = 1 + g0 u - g1 u^2 + (g2/2) u^3 - (g3/6) u^4 + ...
        return 1.0 + u * (kStieltjes[0] +
                          u * (-kStieltjes[1] +
                               u * (kStieltjes[2] / 2.0 - u * kStieltjes[3] / 6.0)));
    }
    return u * zeta(s, cfg).value;
}

namespace {

// direct termwise series, valid for x >= 1 (converges for any x > 0 but
// needs ~1/sqrt(x) terms and loses accuracy as x -> 0)
EvalResult<double> theta_series_direct(double x, int order, const SeriesConfig& cfg) {
    double sum = 0.0;
    double term_mag = 0.0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        const double nn = static_cast<double>(n) * n;
        const double e = std::exp(-nn * kPi * x);
        double term = e;
        if (order == 1)
            term = -kPi * nn * e;
        else if (order == 2)
            term = kPi * kPi * nn * nn * e;
        sum += term;
        term_mag = std::abs(term);
        if (term_mag < cfg.abs_tol * (1.0 + std::abs(sum)))
            return {sum, term_mag + std::numeric_limits<double>::epsilon() * std::abs(sum)};
    }
    throw ConvergenceError("theta_psi: max_terms reached before abs_tol");
}

}  // namespace

EvalResult<double> theta_psi(double x, int order, const SeriesConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("theta_psi: requires x > 0");
    if (order < 0 || order > 2) throw std::invalid_argument("theta_psi: order must be 0, 1 or 2");
    if (x >= 1.0) return theta_series_direct(x, order, cfg);

    // Jacobi transformation, differentiated: with y = 1/x,
    //   psi(x)   = x^{-1/2} psi(y) + (x^{-1/2} - 1)/2
    //   psi'(x)  = -(1/4) x^{-3/2} - (1/2) x^{-3/2} psi(y) - x^{-5/2} psi'(y)
    //   psi''(x) = (3/8) x^{-5/2} + (3/4) x^{-5/2} psi(y)
    //              + 3 x^{-7/2} psi'(y) + x^{-9/2} psi''(y)
    const double y = 1.0 / x;
    const double rx = std::sqrt(x);
    if (order == 0) {
        auto p = theta_series_direct(y, 0, cfg);
        const double v = p.value / rx + (1.0 / rx - 1.0) / 2.0;
        return {v, p.abs_err / rx + std::numeric_limits<double>::epsilon() * std::abs(v)};
    }
    auto p0 = theta_series_direct(y, 0, cfg);
    auto p1 = theta_series_direct(y, 1, cfg);
    const double x32 = 1.0 / (x * rx);
    const double x52 = x32 / x;
    if (order == 1) {
        const double v = -0.25 * x32 - 0.5 * x32 * p0.value - x52 * p1.value;
        return {v, x32 * (0.5 * p0.abs_err) + x52 * p1.abs_err +
                       std::numeric_limits<double>::epsilon() * (0.25 * x32)};
    }
    auto p2 = theta_series_direct(y, 2, cfg);
    const double x72 = x52 / x;
    const double x92 = x72 / x;
    const double v = 0.375 * x52 + 0.75 * x52 * p0.value + 3.0 * x72 * p1.value +
                     x92 * p2.value;
    return {v, 0.75 * x52 * p0.abs_err + 3.0 * x72 * p1.abs_err + x92 * p2.abs_err +
                   std::numeric_limits<double>::epsilon() * (0.375 * x52)};
}

EvalResult<double> big_D(double x, const SeriesConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("big_D: requires x > 0");
    if (x < 1.0) {
        // D(1/u) = u^{5/2} D(u); exact consequence of the Jacobi identity,
        // free of the cancellation that the termwise small-x route suffers
        const double u = 1.0 / x;
        auto d = big_D(u, cfg);
        if (d.value == 0.0) return {0.0, 0.0};  // u^{5/2} may overflow against it
        const double scale = u * u * std::sqrt(u);
        return {scale * d.value, scale * d.abs_err};
    }
    double sum = 0.0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        const double term = big_D_n(n, x);
        sum += term;
        // terms are positive and decay monotonically once n^2 pi x > 5/2
        if (term < cfg.abs_tol * (1.0 + sum) && n >= 2)
            return {sum, term + std::numeric_limits<double>::epsilon() * sum};
    }
    throw ConvergenceError("big_D: max_terms reached before abs_tol");
}

double big_D_n(int n, double x) {
    if (n < 1) throw std::invalid_argument("big_D_n: requires n >= 1");
    if (!(x > 0.0)) throw std::invalid_argument("big_D_n: requires x > 0");
    const double nn = static_cast<double>(n) * n;
    return nn * (nn * kPi * x - 1.5) * std::exp(-nn * kPi * x);
}

}  // namespace xilab
