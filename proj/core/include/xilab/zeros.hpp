#pragma once

#include <cstddef>
#include <vector>

#include "xilab/types.hpp"

namespace xilab {

/// A refined critical-line zero: |Z(ordinate)| <= 1e-8 and the final
/// bisection bracket is no wider than 1e-9.
struct ZeroHit {
    double ordinate;
    double bracket_width;
    int refinement_iters;
};

/// Locates zeros of Hardy Z on [t_lo, t_hi] by scanning sign changes on a
/// grid of the given step and refining each bracket by bisection.
/// Requires 0 <= t_lo < t_hi <= 200 (the validated window of the
/// Euler-Maclaurin zeta route) and 0 < step <= 0.1. Pairs of zeros closer
/// than the step can be missed; the scan is deterministic.
std::vector<ZeroHit> find_zeros(double t_lo, double t_hi, double step = 0.05);

/// Gram point g_n: the solution of theta_rs(g_n) = n pi, n >= -1, found by
/// Newton iteration from an asymptotic initial guess.
struct GramPoint {
    int index;
    double g;
};
std::vector<GramPoint> gram_points(int n_lo, int n_hi);

/// Zero counts per Gram interval [g_n, g_{n+1}). Gram's law holds on an
/// interval when it contains exactly one zero; the report only counts, it
/// asserts nothing (the law has exceptions).
struct GramLawReport {
    struct Interval {
        int index;
        double g_lo;
        double g_hi;
        int zero_count;
    };
    std::vector<Interval> intervals;
    std::size_t exactly_one = 0;
    std::size_t empty_intervals = 0;
    std::size_t multiple = 0;
    std::size_t total_zeros_in_range = 0;
};

/// `ordinates` must cover [g_{n_lo}, g_{n_hi}]: at least one zero at or
/// below g_{n_lo} and one at or beyond g_{n_hi} (throws std::invalid_argument
/// otherwise, including for an empty list).
GramLawReport gram_law_report(int n_lo, int n_hi, const std::vector<double>& ordinates);
GramLawReport gram_law_report(int n_lo, int n_hi, const std::vector<ZeroHit>& zeros);

/// Compares the number of ordinates <= T against N(T) = phi(T)/pi.
/// The zero list must be complete up to T (caller's responsibility).
struct CountReport {
    std::size_t count = 0;
    double formula_exact = 0.0;
    double formula_asymptotic = 0.0;
    double abs_diff = 0.0;
    bool below_validity = false;
};
CountReport count_vs_formula(double T, const std::vector<double>& ordinates);
CountReport count_vs_formula(double T, const std::vector<ZeroHit>& zeros);

}  // namespace xilab
