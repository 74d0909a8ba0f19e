#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <type_traits>
#include <vector>

#include "xilab/types.hpp"

namespace xilab {

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <class T>
struct Panel {
    double a, b;
    T value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T, class F>
Panel<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    T fv[14];
    const T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const T f1 = f(c - dx);
        const T f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }

    // QUADPACK-style scaled error estimate
    const T reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

    double abserr = std::abs(h) * std::abs(resk - resg);
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        abserr = std::max(eps50 * resabs, abserr);

    return {a, b, resk * h, abserr};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 over the panels delimited by the
/// ascending breakpoints: worst-panel-first bisection until the summed error
/// estimate meets max(abs_tol, rel_tol * |result|) or max_subdiv splits are
/// spent (then ConvergenceError, message carries the residual estimate).
template <class F>
auto integrate_breakpoints(const F& f, const std::vector<double>& pts,
                           const QuadratureConfig& q = {}) {
    using T = std::invoke_result_t<F, double>;
    std::priority_queue<detail::Panel<T>> heap;
    T total{};
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        detail::Panel<T> p = detail::gk15<T>(f, pts[i], pts[i + 1]);
        total += p.value;
        total_err += p.err;
        heap.push(p);
    }

    int splits = 0;
    while (total_err > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
        if (splits >= q.max_subdiv) {
            std::ostringstream msg;
            msg << "quadrature failed to converge: residual estimate " << total_err
                << " after " << splits << " subdivisions";
            throw ConvergenceError(msg.str());
        }
        detail::Panel<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        detail::Panel<T> left = detail::gk15<T>(f, worst.a, mid);
        detail::Panel<T> right = detail::gk15<T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    return EvalResult<T>{total, total_err};
}

/// Same over [a, b] with an initial uniform split into seed_panels panels
/// (seed oscillatory integrands with a few panels per wave).
template <class F>
auto integrate(const F& f, double a, double b, const QuadratureConfig& q = {},
               int seed_panels = 8) {
    const int n = std::max(1, seed_panels);
    std::vector<double> pts(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        pts[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / n;
    return integrate_breakpoints(f, pts, q);
}

}  // namespace xilab
