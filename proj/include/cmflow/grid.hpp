#ifndef CMFLOW_GRID_HPP
#define CMFLOW_GRID_HPP

// Node layouts on S^1 and S^2 with solid-angle quadrature weights.
//
// circle   : N uniform nodes phi_j = j * 2pi/N on S^1 (ambient R^2).
// axisym   : N cell-centered colatitudes theta_i = (i+1/2) * pi/N on a
//            meridian of S^2; fields are independent of longitude.
// latlong  : ntheta cell-centered colatitude rows x nphi uniform longitude
//            columns on S^2.
//
// Cell-centered rows keep every node away from the poles, and the weights are
// normalized so that the total solid angle is exact.  Colatitude arrays are
// built mirror-symmetric about the equator so that odd moments of the
// quadrature cancel exactly.

#include <memory>
#include <string>

#include "cmflow/core.hpp"

namespace cmflow {

enum class GridMode { circle, axisym, latlong };

inline const char* to_string(GridMode m) {
    switch (m) {
        case GridMode::circle: return "circle";
        case GridMode::axisym: return "axisym";
        default: return "latlong";
    }
}

class DomainGrid {
  public:
    GridMode mode;
    int ambient_dim;  // n
    int tangent_dim;  // n - 1 on the circle, 2 on the sphere
    int ntheta = 0;
    int nphi = 0;
    double dtheta = 0.0;
    double dphi = 0.0;
    std::vector<double> theta, sin_theta, cos_theta, cot_theta;  // rows
    std::vector<double> phi;                                     // columns
    std::vector<Vec3> node;
    std::vector<double> weight;

    std::size_t node_count() const { return node.size(); }
    std::size_t index(int i, int j) const { return std::size_t(i) * nphi + j; }

    static DomainGrid circle(int n) {
        if (n < 4) throw ConfigError("circle grid needs at least 4 nodes");
        DomainGrid g;
        g.mode = GridMode::circle;
        g.ambient_dim = 2;
        g.tangent_dim = 1;
        g.nphi = n;
        g.dphi = kTwoPi / n;
        g.phi.resize(n);
        g.node.resize(n);
        g.weight.assign(n, kTwoPi / n);
        for (int j = 0; j < n; ++j) {
            g.phi[j] = j * g.dphi;
            g.node[j] = Vec3(std::cos(g.phi[j]), std::sin(g.phi[j]), 0.0);
        }
        return g;
    }

    static DomainGrid axisym(int n) {
        if (n < 4) throw ConfigError("axisym grid needs at least 4 rows");
        DomainGrid g;
        g.mode = GridMode::axisym;
        g.ambient_dim = 3;
        g.tangent_dim = 2;
        g.ntheta = n;
        g.dtheta = kPi / n;
        g.build_rows();
        g.node.resize(n);
        g.weight.resize(n);
        double raw_sum = 0.0;
        for (int i = 0; i < n; ++i) raw_sum += g.sin_theta[i];
        for (int i = 0; i < n; ++i) {
            g.node[i] = Vec3(g.sin_theta[i], 0.0, g.cos_theta[i]);
            g.weight[i] = kFourPi * g.sin_theta[i] / raw_sum;
        }
        return g;
    }

    static DomainGrid latlong(int ntheta, int nphi) {
        if (ntheta < 4) throw ConfigError("latlong grid needs at least 4 rows");
        if (nphi < 4 || nphi % 2 != 0)
            throw ConfigError("latlong grid needs an even number (>= 4) of columns");
        DomainGrid g;
        g.mode = GridMode::latlong;
        g.ambient_dim = 3;
        g.tangent_dim = 2;
        g.ntheta = ntheta;
        g.nphi = nphi;
        g.dtheta = kPi / ntheta;
        g.dphi = kTwoPi / nphi;
        g.build_rows();
        g.phi.resize(nphi);
        for (int j = 0; j < nphi; ++j) g.phi[j] = j * g.dphi;
        g.node.resize(std::size_t(ntheta) * nphi);
        g.weight.resize(g.node.size());
        double raw_sum = 0.0;
        for (int i = 0; i < ntheta; ++i) raw_sum += g.sin_theta[i];
        for (int i = 0; i < ntheta; ++i) {
            double w = kFourPi * g.sin_theta[i] / (raw_sum * nphi);
            for (int j = 0; j < nphi; ++j) {
                g.node[g.index(i, j)] = Vec3(g.sin_theta[i] * std::cos(g.phi[j]),
                                             g.sin_theta[i] * std::sin(g.phi[j]),
                                             g.cos_theta[i]);
                g.weight[g.index(i, j)] = w;
            }
        }
        return g;
    }

    std::string spec_string() const {
        if (mode == GridMode::circle) return "circle:" + std::to_string(nphi);
        if (mode == GridMode::axisym) return "axisym:" + std::to_string(ntheta);
        return "latlong:" + std::to_string(ntheta) + "x" + std::to_string(nphi);
    }

  private:
    void build_rows() {
        const int n = ntheta;
        theta.resize(n);
        sin_theta.resize(n);
        cos_theta.resize(n);
        cot_theta.resize(n);
        for (int i = 0; i < n / 2; ++i) {
            theta[i] = (i + 0.5) * dtheta;
            theta[n - 1 - i] = kPi - theta[i];
            sin_theta[i] = std::sin(theta[i]);
            sin_theta[n - 1 - i] = sin_theta[i];
            cos_theta[i] = std::cos(theta[i]);
            cos_theta[n - 1 - i] = -cos_theta[i];
        }
        if (n % 2 == 1) {
            theta[n / 2] = kPi / 2.0;
            sin_theta[n / 2] = 1.0;
            cos_theta[n / 2] = 0.0;
        }
        for (int i = 0; i < n; ++i) cot_theta[i] = cos_theta[i] / sin_theta[i];
    }
};

using GridPtr = std::shared_ptr<const DomainGrid>;

inline GridPtr make_circle(int n) { return std::make_shared<DomainGrid>(DomainGrid::circle(n)); }
inline GridPtr make_axisym(int n) { return std::make_shared<DomainGrid>(DomainGrid::axisym(n)); }
inline GridPtr make_latlong(int nt, int np) {
    return std::make_shared<DomainGrid>(DomainGrid::latlong(nt, np));
}

// Sample a closed-form function of the unit normal onto grid nodes.
template <typename F>
ScalarField sample(const DomainGrid& g, F&& f) {
    ScalarField out(g.node_count());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = f(g.node[p]);
    return out;
}

}  // namespace cmflow

#endif
