#pragma once

namespace xilab {

// 5-point central differences, O(h^4) truncation. F may return double or
// Complex; the result has the same type.

template <class F>
auto fd_deriv1(F&& f, double x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
           (12.0 * h);
}

template <class F>
auto fd_deriv2(F&& f, double x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
            f(x + 2 * h)) /
           (12.0 * h * h);
}

}  // namespace xilab
