#ifndef CMFLOW_CORE_HPP
#define CMFLOW_CORE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmflow {

// Error taxonomy shared by all modules.  The CLI maps these onto distinct
// exit codes (config = 2, numerical fault = 3, non-convergence = 4).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Math-domain violations: sigma_k outside its admissible range, loss of the
// Garding cone, nonpositive densities, and similar.
struct NumericFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative procedures that ran out of budget.  The message carries the best
// iterate so callers can diagnose.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;

// Ambient vector in R^2 or R^3 (z stays 0 for the planar case).
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

// Legendre polynomial P_m(t), used by the zonal built-in density family.
inline double legendre(int m, double t) {
    if (m == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int l = 2; l <= m; ++l) {
        double p2 = ((2.0 * l - 1.0) * t * p1 - (l - 1.0) * p0) / double(l);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

using ScalarField = std::vector<double>;

inline double sup_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

inline double min_value(const ScalarField& f) {
    double m = f.empty() ? 0.0 : f[0];
    for (double v : f) m = std::min(m, v);
    return m;
}

inline double max_value(const ScalarField& f) {
    double m = f.empty() ? 0.0 : f[0];
    for (double v : f) m = std::max(m, v);
    return m;
}

}  // namespace cmflow

#endif
