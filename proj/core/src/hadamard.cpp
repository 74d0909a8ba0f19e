#include "xilab/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "xilab/fdiff.hpp"
#include "xilab/xi.hpp"

namespace xilab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015329;

bool on_line(double sigma) { return std::abs(sigma - 0.5) < 1e-12; }

double tail_correction_scale(const ZeroTable& z, std::size_t N, const TailEstimate& tail) {
    // integral of 1/u^2 dN(u) from the truncation height onward
    if (tail.method == TailEstimate::Method::none || N == 0) return 0.0;
    if (tail.density_constant <= 0.0)
        throw std::invalid_argument("TailEstimate: density_constant must be > 0");
    const double T = z.ordinates[N - 1];
    return tail.density_constant * (std::log(T / (2.0 * kPi)) + 1.0) / T;
}

}  // namespace

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zeros: cannot open " + path);

    ZeroTable table;
    table.source_label = path;
    std::string line;
    int line_no = 0;
    bool any_sigma = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        double t = 0.0;
        if (!(ss >> t))
            throw ZeroTableParseError("load_zeros: malformed ordinate at line " +
                                          std::to_string(line_no),
                                      line_no);
        double sigma = 0.5;
        if (ss >> sigma) any_sigma = true;
        std::string rest;
        if (ss >> rest)
            throw ZeroTableParseError("load_zeros: trailing garbage at line " +
                                          std::to_string(line_no),
                                      line_no);
        if (!(t > 0.0))
            throw std::runtime_error("load_zeros: ordinate must be positive at line " +
                                     std::to_string(line_no));
        if (!table.ordinates.empty() && t <= table.ordinates.back())
            throw std::runtime_error(
                "load_zeros: ordinates not strictly increasing at line " +
                std::to_string(line_no));
        table.ordinates.push_back(t);
        table.sigmas.push_back(sigma);
    }
    if (!any_sigma) table.sigmas.clear();
    return table;
}

void save_zeros(const std::string& path, const ZeroTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_zeros: cannot open " + path);
    if (!table.source_label.empty()) out << "# " << table.source_label << "\n";
    out.precision(17);
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table.ordinates[i];
        if (!table.sigmas.empty() && std::abs(table.sigmas[i] - 0.5) > 1e-15)
            out << ' ' << table.sigmas[i];
        out << '\n';
    }
    if (!out) throw std::runtime_error("save_zeros: write failed for " + path);
}

double B_closed() {
    const double form_a = std::log(2.0 * kPi) - 1.0 - 0.5 * std::log(kPi) - 0.5 * kEulerGamma;
    const double form_b = 0.5 * std::log(4.0 * kPi) - 1.0 - 0.5 * kEulerGamma;
    if (std::abs(form_a - form_b) > 1e-15)
        throw std::logic_error("B_closed: the two arrangements disagree");
    return form_b;
}

double B_from_zeros(const ZeroTable& z, const TailEstimate& tail) {
    if (z.size() == 0) throw std::invalid_argument("B_from_zeros: empty table");
    double sum = 0.0;
    for (std::size_t i = z.size(); i-- > 0;) {  // ascending magnitudes
        const double s = z.sigma(i);
        const double t = z.ordinates[i];
        sum += s / (s * s + t * t);
        if (!on_line(s)) {
            const double m = 1.0 - s;  // mirrored zero 1 - conj(rho)
            sum += m / (m * m + t * t);
        }
    }
    return -2.0 * sum - tail_correction_scale(z, z.size(), tail);
}

namespace {

// (1 - s/rho)(1 - s/conj(rho)) = 1 - 2 sigma_n/|rho|^2 s + s^2/|rho|^2
Complex pair_factor(Complex s, double sigma_n, double t_n) {
    const double mod2 = sigma_n * sigma_n + t_n * t_n;
    return 1.0 - s * (2.0 * sigma_n / mod2) + s * s / mod2;
}

// 1/(s-rho) + 1/(s-conj(rho)) = 2(s-sigma_n) / ((s-sigma_n)^2 + t_n^2)
Complex pair_log_deriv(Complex s, double sigma_n, double t_n) {
    const Complex d = s - sigma_n;
    return 2.0 * d / (d * d + t_n * t_n);
}

}  // namespace

Complex xi_partial_product(const StripPoint& p, const ZeroTable& z, std::size_t N) {
    if (N > z.size()) throw std::out_of_range("xi_partial_product: N exceeds table size");
    const Complex s = p.s();
    Complex prod = 0.5;
    for (std::size_t i = 0; i < N; ++i) {
        const double sn = z.sigma(i);
        const double tn = z.ordinates[i];
        prod *= pair_factor(s, sn, tn);
        if (!on_line(sn)) prod *= pair_factor(s, 1.0 - sn, tn);
    }
    return prod;
}

Complex log_deriv_sum(const StripPoint& p, const ZeroTable& z, std::size_t N,
                      const TailEstimate& tail) {
    if (N > z.size()) throw std::out_of_range("log_deriv_sum: N exceeds table size");
    const Complex s = p.s();
    Complex sum = 0.0;
    for (std::size_t i = N; i-- > 0;) {
        const double sn = z.sigma(i);
        const double tn = z.ordinates[i];
        if (std::abs(s - Complex{sn, tn}) < 1e-12 || std::abs(s - Complex{sn, -tn}) < 1e-12)
            throw PoleError("log_deriv_sum: s coincides with a tabulated zero");
        sum += pair_log_deriv(s, sn, tn);
        if (!on_line(sn)) sum += pair_log_deriv(s, 1.0 - sn, tn);
    }
    return sum + 2.0 * (s - 0.5) * tail_correction_scale(z, N, tail);
}

double modulus_gradient(const StripPoint& p, const ZeroTable& z, std::size_t N,
                        const TailEstimate& tail) {
    return log_deriv_sum(p, z, N, tail).real();
}

MonotonicityReport monotonicity_scan(double sigma_lo, double sigma_hi, double t_lo,
                                     double t_hi, double step, const ZeroTable& z) {
    if (!(step > 0.0)) throw std::invalid_argument("monotonicity_scan: step must be > 0");
    if (sigma_lo > sigma_hi)
        throw std::invalid_argument("monotonicity_scan: empty sigma range");
    if (sigma_lo < 0.5 + step && sigma_hi > 0.5 - step)
        throw std::invalid_argument(
            "monotonicity_scan: sigma range must exclude the band (1/2-step, 1/2+step)");

    const std::size_t n_sum = std::min<std::size_t>(z.size(), 1000);
    constexpr double h = 1e-3;

    MonotonicityReport report;
    report.min_abs_derivative = std::numeric_limits<double>::infinity();
    const bool right_side = sigma_lo > 0.5;

    for (double sigma = sigma_lo; sigma <= sigma_hi + 1e-12; sigma += step) {
        for (double t = t_lo; t <= t_hi + 1e-12; t += step) {
            auto mod = [&](double sg) { return std::abs(xi_direct(StripPoint{sg, t})); };
            const double d = fd_deriv1(mod, sigma, h);
            ++report.points_checked;
            report.min_abs_derivative = std::min(report.min_abs_derivative, std::abs(d));
            const bool violation = right_side ? d <= 0.0 : d >= 0.0;
            if (violation) report.violations.push_back({sigma, t, d});
            if (n_sum > 0) {
                const double g = modulus_gradient(StripPoint{sigma, t}, z, n_sum);
                if ((g > 0.0) != (d > 0.0)) ++report.sum_route_sign_mismatches;
            }
        }
    }
    return report;
}

}  // namespace xilab
