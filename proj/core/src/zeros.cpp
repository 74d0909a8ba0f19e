#include "xilab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xilab/specfun.hpp"
#include "xilab/xi.hpp"

namespace xilab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;

ZeroHit refine_bisect(double lo, double hi, double z_lo) {
    int iters = 0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = hardy_Z(mid);
        ++iters;
        if (z_mid == 0.0) {
            lo = mid - 1e-12;
            hi = mid + 1e-12;
            break;
        }
        if ((z_lo < 0.0) != (z_mid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            z_lo = z_mid;
        }
    }
    return {0.5 * (lo + hi), hi - lo, iters};
}

}  // namespace

std::vector<ZeroHit> find_zeros(double t_lo, double t_hi, double step) {
    if (!(t_lo >= 0.0 && t_lo < t_hi))
        throw std::invalid_argument("find_zeros: requires 0 <= t_lo < t_hi");
    if (t_hi > 200.0)
        throw std::invalid_argument("find_zeros: t_hi exceeds the validated cap t <= 200");
    if (!(step > 0.0 && step <= 0.1))
        throw std::invalid_argument("find_zeros: requires 0 < step <= 0.1");

    std::vector<ZeroHit> hits;
    double t_prev = t_lo;
    double z_prev = hardy_Z(t_prev);
    const auto n_steps = static_cast<long>(std::ceil((t_hi - t_lo) / step));
    for (long i = 1; i <= n_steps; ++i) {
        const double t = std::min(t_lo + static_cast<double>(i) * step, t_hi);
        const double z = hardy_Z(t);
        if (z_prev == 0.0) {
            hits.push_back({t_prev, 0.0, 0});
        } else if ((z_prev < 0.0) != (z < 0.0)) {
            hits.push_back(refine_bisect(t_prev, t, z_prev));
        }
        t_prev = t;
        z_prev = z;
    }
    return hits;
}

namespace {

double theta_rs_derivative(double t) {
    // d/dt Im log Gamma(1/4 + it/2) = Re Psi(1/4 + it/2) / 2
    return 0.5 * digamma(Complex{0.25, 0.5 * t}).real() - 0.5 * kLogPi;
}

// invert the asymptotic u (log u - 1) = n + 1/8 with u = g/(2 pi); the
// exponential rearrangement contracts for small n, the rational one for
// large n
double gram_initial_guess(int n) {
    const double rhs = n + 0.125;
    double u;
    if (n < 10) {
        u = std::numbers::e;
        for (int i = 0; i < 24; ++i) u = std::exp(1.0 + rhs / u);
    } else {
        u = rhs / std::log(rhs);
        for (int i = 0; i < 24; ++i) u = rhs / (std::log(u) - 1.0);
    }
    return 2.0 * kPi * u;
}

}  // namespace

std::vector<GramPoint> gram_points(int n_lo, int n_hi) {
    if (n_lo < -1) throw std::invalid_argument("gram_points: requires n_lo >= -1");
    if (n_hi < n_lo) throw std::invalid_argument("gram_points: requires n_hi >= n_lo");

    std::vector<GramPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        const double target = n * kPi;
        double t = gram_initial_guess(n);
        double r = theta_rs(t) - target;
        int iter = 0;
        while (std::abs(r) > 1e-12 && iter < 50) {
            const double dt = r / theta_rs_derivative(t);
            t -= dt;
            r = theta_rs(t) - target;
            ++iter;
            if (std::abs(dt) < 1e-13 * (1.0 + std::abs(t))) break;  // roundoff floor
        }
        if (std::abs(r) > 1e-10)
            throw ConvergenceError("gram_points: Newton failed for index " +
                                   std::to_string(n));
        pts.push_back({n, t});
    }
    return pts;
}

GramLawReport gram_law_report(int n_lo, int n_hi,
                              const std::vector<double>& ordinates) {
    if (n_hi <= n_lo)
        throw std::invalid_argument("gram_law_report: requires n_hi > n_lo");
    if (ordinates.empty())
        throw std::invalid_argument("gram_law_report: zero list does not cover the range");
    const auto gp = gram_points(n_lo, n_hi);
    if (ordinates.front() > gp.front().g || ordinates.back() < gp.back().g)
        throw std::invalid_argument("gram_law_report: zero list does not cover the range");

    GramLawReport report;
    for (std::size_t i = 0; i + 1 < gp.size(); ++i) {
        const double lo = gp[i].g;
        const double hi = gp[i + 1].g;
        const auto first = std::lower_bound(ordinates.begin(), ordinates.end(), lo);
        const auto last = std::lower_bound(ordinates.begin(), ordinates.end(), hi);
        const int count = static_cast<int>(last - first);
        report.intervals.push_back({gp[i].index, lo, hi, count});
        report.total_zeros_in_range += static_cast<std::size_t>(count);
        if (count == 1)
            ++report.exactly_one;
        else if (count == 0)
            ++report.empty_intervals;
        else
            ++report.multiple;
    }
    return report;
}

GramLawReport gram_law_report(int n_lo, int n_hi, const std::vector<ZeroHit>& zeros) {
    std::vector<double> ords;
    ords.reserve(zeros.size());
    for (const auto& z : zeros) ords.push_back(z.ordinate);
    return gram_law_report(n_lo, n_hi, ords);
}

CountReport count_vs_formula(double T, const std::vector<double>& ordinates) {
    CountReport r;
    r.count = static_cast<std::size_t>(
        std::upper_bound(ordinates.begin(), ordinates.end(), T) - ordinates.begin());
    const auto nf = N_formula(T);
    r.formula_exact = nf.exact;
    r.formula_asymptotic = nf.asymptotic;
    r.below_validity = nf.below_validity;
    r.abs_diff = std::abs(static_cast<double>(r.count) - nf.exact);
    return r;
}

CountReport count_vs_formula(double T, const std::vector<ZeroHit>& zeros) {
    std::vector<double> ords;
    ords.reserve(zeros.size());
    for (const auto& z : zeros) ords.push_back(z.ordinate);
    return count_vs_formula(T, ords);
}

}  // namespace xilab
