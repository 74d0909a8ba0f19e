#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xilab/types.hpp"

namespace xilab {

/// Ordered table of nontrivial-zero ordinates t_1 < t_2 < ...; immutable
/// after load. sigmas is empty when every zero sits on the critical line
/// (the default reading), otherwise it parallels ordinates.
struct ZeroTable {
    std::vector<double> ordinates;
    std::vector<double> sigmas;
    std::string source_label;

    std::size_t size() const { return ordinates.size(); }
    double sigma(std::size_t i) const { return sigmas.empty() ? 0.5 : sigmas[i]; }
};

/// Parse error carrying the 1-based line number.
struct ZeroTableParseError : std::runtime_error {
    int line;
    ZeroTableParseError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
};

/// Loads a zero table: UTF-8 text, one decimal ordinate per line, optional
/// "#" comment lines, optional second whitespace-separated column with
/// sigma_n. Throws ZeroTableParseError (with line number) on malformed
/// input, std::runtime_error when ordinates are not strictly increasing
/// and positive.
ZeroTable load_zeros(const std::string& path);

/// Writes a table in the same format (round-trips through load_zeros).
void save_zeros(const std::string& path, const ZeroTable& table);

/// Integral tail correction for sums over the infinitely many zeros beyond
/// the table, using the zero-counting density dN ~ c log(t/2pi) dt with
/// c = 1/(2pi) by default.
struct TailEstimate {
    enum class Method { none, integral };
    Method method = Method::integral;
    double density_constant = 0.15915494309189535;  // 1/(2 pi)

    static TailEstimate none() { return {Method::none, 0.15915494309189535}; }
    static TailEstimate integral(double c = 0.15915494309189535) {
        return {Method::integral, c};
    }
};

/// The Hadamard constant B = (1/2) log(4 pi) - 1 - gamma/2, evaluated
/// through both printed arrangements (they agree to machine precision).
double B_closed();

/// B = -2 sum_n sigma_n/(sigma_n^2 + t_n^2) over the table, plus the
/// optional integral tail beyond the last ordinate.
double B_from_zeros(const ZeroTable& z, const TailEstimate& tail = {});

/// Partial Hadamard product xi(s) ~ (1/2) prod (1 - s/rho)(1 - s/conj rho)
/// over the first N table rows, folded into real-coefficient quadratic
/// factors; when sigma_n != 1/2 the mirrored pair at 1 - conj(rho) is
/// included as well, keeping the product reflective.
Complex xi_partial_product(const StripPoint& p, const ZeroTable& z, std::size_t N);

/// Partial log-derivative sum xi'(s)/xi(s) ~ sum_n 1/(s - rho_n) over
/// conjugate (and, off the line, mirrored) pairs of the first N rows, with
/// the integral tail correction 2(s - 1/2) c (log(T/2pi) + 1)/T by default.
/// Throws PoleError when s is within 1e-12 of a tabulated zero.
Complex log_deriv_sum(const StripPoint& p, const ZeroTable& z, std::size_t N,
                      const TailEstimate& tail = {});

/// Real part of the partial log-derivative sum: (1/|xi|) d|xi|/dsigma.
double modulus_gradient(const StripPoint& p, const ZeroTable& z, std::size_t N,
                        const TailEstimate& tail = {});

/// Grid scan of the horizontal-monotonicity statement: the finite
/// difference of |xi| along sigma must be positive for sigma > 1/2 and
/// negative for sigma < 1/2. Violations are data, not errors. Each grid
/// point also compares the sign of the zero-sum route (modulus_gradient)
/// against the finite difference.
struct MonotonicityReport {
    struct Violation {
        double sigma;
        double t;
        double derivative;
    };
    std::size_t points_checked = 0;
    std::vector<Violation> violations;
    double min_abs_derivative = 0.0;
    std::size_t sum_route_sign_mismatches = 0;
};
MonotonicityReport monotonicity_scan(double sigma_lo, double sigma_hi, double t_lo,
                                     double t_hi, double step, const ZeroTable& z);

}  // namespace xilab
