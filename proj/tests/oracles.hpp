#ifndef CMFLOW_TEST_ORACLES_HPP
#define CMFLOW_TEST_ORACLES_HPP

// Independent reference computations used only by the test suites.  These
// deliberately avoid the library's evaluation routes: sums over explicit index
// subsets, a derivative-free minimizer, and a high-order scalar ODE
// integrator.

#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace oracle {

// sigma_k by explicit enumeration of all k-element index subsets.
inline double sigma_subsets(std::span<const double> lambda, int k) {
    const int d = int(lambda.size());
    if (k == 0) return 1.0;
    if (k > d) return 0.0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    double total = 0.0;
    while (true) {
        double prod = 1.0;
        for (int i : idx) prod *= lambda[std::size_t(i)];
        total += prod;
        int pos = k - 1;
        while (pos >= 0 && idx[std::size_t(pos)] == d - k + pos) --pos;
        if (pos < 0) break;
        ++idx[std::size_t(pos)];
        for (int i = pos + 1; i < k; ++i) idx[std::size_t(i)] = idx[std::size_t(i - 1)] + 1;
    }
    return total;
}

// Scale that makes |a - b| <= tol * scale a meaningful relative comparison
// even when massive cancellation drives sigma_k itself toward zero.
inline double sigma_condition_scale(std::span<const double> lambda, int k) {
    std::vector<double> absl(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) absl[i] = std::abs(lambda[i]);
    return std::max(1.0, sigma_subsets(absl, k));
}

// Brent's method for one-dimensional minimization on [a, b].
inline double brent_min(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_iter = 200) {
    const double gold = 0.3819660112501051;
    double x = a + gold * (b - a), w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        double xm = 0.5 * (a + b);
        double tol1 = tol * std::abs(x) + 1e-15, tol2 = 2.0 * tol1;
        if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;
        bool parabolic = false;
        if (std::abs(e) > tol1) {
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            double etmp = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * etmp) && p > q * (a - x) && p < q * (b - x)) {
                parabolic = true;
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (xm >= x ? tol1 : -tol1);
            }
        }
        if (!parabolic) {
            e = (x >= xm ? a - x : b - x);
            d = gold * e;
        }
        double u = (std::abs(d) >= tol1 ? x + d : x + (d >= 0 ? tol1 : -tol1));
        double fu = f(u);
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; w = x; x = u;
            fv = fw; fw = fx; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return x;
}

// Derivative-free minimization of a smooth convex function by cyclic
// coordinate descent with Brent line searches.
inline std::vector<double> coordinate_descent_min(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
    int sweeps = 60, double span = 2.0) {
    const std::size_t n = x.size();
    double radius = span;
    for (int s = 0; s < sweeps; ++s) {
        for (std::size_t c = 0; c < n; ++c) {
            auto line = [&](double t) {
                std::vector<double> y = x;
                y[c] += t;
                return f(y);
            };
            double t = brent_min(line, -radius, radius);
            x[c] += t;
        }
        radius = std::max(radius * 0.5, 1e-9);
    }
    return x;
}

// Classical RK4 for dr/dt = g(r) with fixed substep, integrating to t_end.
inline double rk4_scalar(const std::function<double(double)>& g, double r0, double t_end,
                         double dt = 1e-5) {
    double r = r0, t = 0.0;
    while (t < t_end - 1e-14) {
        double h = std::min(dt, t_end - t);
        double k1 = g(r);
        double k2 = g(r + 0.5 * h * k1);
        double k3 = g(r + 0.5 * h * k2);
        double k4 = g(r + h * k3);
        r += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    return r;
}

}  // namespace oracle

#endif
