#ifndef CMFLOW_SYMFUNC_HPP
#define CMFLOW_SYMFUNC_HPP

// Elementary symmetric functions sigma_k on spectra and on small symmetric
// matrices (dimension d <= 6), together with their first derivatives and
// Garding-cone membership tests.  Everything here is dimension-generic but
// tuned for the d in {1,2} hot path of the curvature flow.

#include <algorithm>
#include <array>
#include <span>

#include "cmflow/core.hpp"

namespace cmflow {

constexpr int kMaxDim = 6;

using SpectrumVec = std::vector<double>;

// Symmetric d x d matrix stored as the packed upper triangle, so symmetry is
// exact by construction.
class SymMat {
  public:
    SymMat() = default;
    explicit SymMat(int d) : d_(d) {
        if (d < 1 || d > kMaxDim) throw NumericFault("SymMat: dimension out of range");
        a_.fill(0.0);
    }

    static SymMat identity(int d) {
        SymMat m(d);
        for (int i = 0; i < d; ++i) m.set(i, i, 1.0);
        return m;
    }

    static SymMat diagonal(std::span<const double> diag) {
        SymMat m(int(diag.size()));
        for (int i = 0; i < m.d_; ++i) m.set(i, i, diag[i]);
        return m;
    }

    int dim() const { return d_; }

    double operator()(int i, int j) const { return a_[pack(i, j)]; }
    void set(int i, int j, double v) { a_[pack(i, j)] = v; }
    void add(int i, int j, double v) { a_[pack(i, j)] += v; }

    SymMat operator+(const SymMat& o) const {
        SymMat r(d_);
        for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
        return r;
    }
    SymMat operator*(double s) const {
        SymMat r(d_);
        for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] * s;
        return r;
    }

  private:
    int pack(int i, int j) const {
        if (i > j) std::swap(i, j);
        return i * kMaxDim - i * (i - 1) / 2 + (j - i);
    }
    int d_ = 0;
    std::array<double, kMaxDim*(kMaxDim + 1) / 2> a_{};
};

// sigma_k(lambda) by incremental expansion of prod(1 + t*lambda_i); exact for
// the small dimensions used here and cross-checked against subset brute force.
inline double sigma(std::span<const double> lambda, int k) {
    const int d = int(lambda.size());
    if (d < 1 || d > kMaxDim) throw NumericFault("sigma: dimension out of range");
    if (k < 0 || k > d) throw NumericFault("sigma: order k out of range");
    if (k == 0) return 1.0;
    std::array<double, kMaxDim + 1> e{};
    e[0] = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] += lambda[i] * e[j - 1];
    return e[k];
}

inline double sigma(const SpectrumVec& lambda, int k) {
    return sigma(std::span<const double>(lambda.data(), lambda.size()), k);
}

namespace detail {

// Determinant of a dense m x m matrix (m <= 6) by LU with partial pivoting.
inline double small_det(std::array<std::array<double, kMaxDim>, kMaxDim>& m, int n) {
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        if (m[c][c] == 0.0) return 0.0;
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            double f = m[r][c] / m[c][c];
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

}  // namespace detail

// sigma_k(A) as the sum of k x k principal minors.  Equals sigma_k of the
// eigenvalues; the minor route avoids eigenvalue roundoff.
inline double sigma(const SymMat& a, int k) {
    const int d = a.dim();
    if (k < 0 || k > d) throw NumericFault("sigma: order k out of range");
    if (k == 0) return 1.0;
    if (k == 1) {
        double tr = 0.0;
        for (int i = 0; i < d; ++i) tr += a(i, i);
        return tr;
    }
    // Enumerate index subsets of size k.
    std::array<int, kMaxDim> idx{};
    for (int i = 0; i < k; ++i) idx[i] = i;
    double total = 0.0;
    while (true) {
        std::array<std::array<double, kMaxDim>, kMaxDim> sub{};
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub[r][c] = a(idx[r], idx[c]);
        total += detail::small_det(sub, k);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == d - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

// Gradient matrix sigma_k^{ij} = d sigma_k / d A_ij, i.e. the (k-1)-st Newton
// transform T_{k-1}(A) = sigma_{k-1} I - sigma_{k-2} A + ... +- A^{k-1}.
// For diagonal A this reduces to diag(sigma_{k-1}(lambda | i)).
inline SymMat sigma_partial(const SymMat& a, int k) {
    const int d = a.dim();
    if (k < 1 || k > d) throw NumericFault("sigma_partial: order k out of range");
    SymMat t = SymMat::identity(d);  // T_0
    for (int j = 1; j < k; ++j) {
        // T_j = sigma_j I - A T_{j-1}
        SymMat next(d);
        double sj = sigma(a, j);
        for (int r = 0; r < d; ++r) {
            for (int c = r; c < d; ++c) {
                double acc = 0.0;
                for (int m = 0; m < d; ++m) acc += a(r, m) * t(m, c);
                next.set(r, c, (r == c ? sj : 0.0) - acc);
            }
        }
        t = next;
    }
    return t;
}

inline bool in_gamma_k(std::span<const double> lambda, int k) {
    const int d = int(lambda.size());
    for (int i = 1; i <= k; ++i) {
        if (i > d) return false;
        if (!(sigma(lambda, i) > 0.0)) return false;
    }
    return true;
}

inline bool in_gamma_k(const SpectrumVec& lambda, int k) {
    return in_gamma_k(std::span<const double>(lambda.data(), lambda.size()), k);
}

inline bool in_gamma_k(const SymMat& a, int k) {
    for (int i = 1; i <= k; ++i) {
        if (i > a.dim()) return false;
        if (!(sigma(a, i) > 0.0)) return false;
    }
    return true;
}

// Eigenvalues of a small symmetric matrix by cyclic Jacobi sweeps, ascending.
inline SpectrumVec eigenvalues(const SymMat& a) {
    const int d = a.dim();
    std::array<std::array<double, kMaxDim>, kMaxDim> m{};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = a(i, j);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (m[p][q] == 0.0) continue;
                double theta = 0.5 * (m[q][q] - m[p][p]) / m[p][q];
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < d; ++i) {
                    double mip = m[i][p], miq = m[i][q];
                    m[i][p] = c * mip - s * miq;
                    m[i][q] = s * mip + c * miq;
                }
                for (int i = 0; i < d; ++i) {
                    double mpi = m[p][i], mqi = m[q][i];
                    m[p][i] = c * mpi - s * mqi;
                    m[q][i] = s * mpi + c * mqi;
                }
            }
        }
    }
    SpectrumVec lam(d);
    for (int i = 0; i < d; ++i) lam[i] = m[i][i];
    std::sort(lam.begin(), lam.end());
    return lam;
}

// ---- 2x2 fast path used per grid node by the flow ------------------------

struct Sym2 {
    double a11 = 0.0, a22 = 0.0, a12 = 0.0;
};

inline double sigma1(const Sym2& w) { return w.a11 + w.a22; }
inline double sigma2(const Sym2& w) { return w.a11 * w.a22 - w.a12 * w.a12; }

inline double sigma(const Sym2& w, int k) {
    switch (k) {
        case 0: return 1.0;
        case 1: return sigma1(w);
        case 2: return sigma2(w);
        default: throw NumericFault("sigma: order k out of range");
    }
}

inline void eigenvalues2(const Sym2& w, double& lo, double& hi) {
    double mean = 0.5 * (w.a11 + w.a22);
    double disc = std::sqrt(0.25 * (w.a11 - w.a22) * (w.a11 - w.a22) + w.a12 * w.a12);
    lo = mean - disc;
    hi = mean + disc;
}

// sigma_k^{ij} for d = 2: identity for k = 1, adjugate for k = 2.
inline Sym2 sigma_partial2(const Sym2& w, int k) {
    if (k == 1) return {1.0, 1.0, 0.0};
    if (k == 2) return {w.a22, w.a11, -w.a12};
    throw NumericFault("sigma_partial: order k out of range");
}

}  // namespace cmflow

#endif
