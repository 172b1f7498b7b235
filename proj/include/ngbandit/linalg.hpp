#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ngbandit {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

/// Dense symmetric positive-definite matrix, row-major storage.
///
/// Symmetry is expected to within 1e-12 absolute and every Cholesky pivot
/// must be strictly positive; `cholesky_lower` throws otherwise.
class SpdMatrix {
public:
    explicit SpdMatrix(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim, 0.0) {
        if (dim < 1) throw std::invalid_argument("SpdMatrix: dimension must be >= 1");
    }

    static SpdMatrix identity(int dim) {
        SpdMatrix out(dim);
        for (int i = 0; i < dim; ++i) out(i, i) = 1.0;
        return out;
    }

    int dim() const { return dim_; }

    double& operator()(int i, int j) { return m_[static_cast<std::size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * dim_ + j]; }

    bool is_symmetric(double tol = 1e-12) const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }

    Vec mul(const Vec& x) const {
        Vec y(dim_, 0.0);
        for (int i = 0; i < dim_; ++i) {
            double s = 0.0;
            const double* row = &m_[static_cast<std::size_t>(i) * dim_];
            for (int j = 0; j < dim_; ++j) s += row[j] * x[j];
            y[i] = s;
        }
        return y;
    }

    /// x^T M x
    double quad_form(const Vec& x) const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double r = 0.0;
            const double* row = &m_[static_cast<std::size_t>(i) * dim_];
            for (int j = 0; j < dim_; ++j) r += row[j] * x[j];
            s += x[i] * r;
        }
        return s;
    }

    /// M += scale * v v^T
    void add_outer(const Vec& v, double scale = 1.0) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                (*this)(i, j) += scale * v[i] * v[j];
    }

    /// Lower-triangular L with L L^T = M. Throws std::domain_error when a
    /// pivot is non-positive (matrix not positive definite) or the matrix
    /// is not symmetric.
    SpdMatrix cholesky_lower() const {
        if (!is_symmetric())
            throw std::domain_error("SpdMatrix: matrix is not symmetric");
        SpdMatrix L(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = (*this)(i, j);
                for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
                if (i == j) {
                    if (s <= 0.0 || !std::isfinite(s))
                        throw std::domain_error("SpdMatrix: non-positive Cholesky pivot");
                    L(i, i) = std::sqrt(s);
                } else {
                    L(i, j) = s / L(j, j);
                }
            }
        }
        return L;
    }

    /// Solve M x = b through the Cholesky factors.
    Vec solve(const Vec& b) const {
        const SpdMatrix L = cholesky_lower();
        Vec y(dim_);
        for (int i = 0; i < dim_; ++i) {
            double s = b[i];
            for (int k = 0; k < i; ++k) s -= L(i, k) * y[k];
            y[i] = s / L(i, i);
        }
        Vec x(dim_);
        for (int i = dim_ - 1; i >= 0; --i) {
            double s = y[i];
            for (int k = i + 1; k < dim_; ++k) s -= L(k, i) * x[k];
            x[i] = s / L(i, i);
        }
        return x;
    }

    SpdMatrix inverse() const {
        SpdMatrix inv(dim_);
        Vec e(dim_, 0.0);
        for (int j = 0; j < dim_; ++j) {
            e[j] = 1.0;
            Vec col = solve(e);
            e[j] = 0.0;
            for (int i = 0; i < dim_; ++i) inv(i, j) = col[i];
        }
        // Symmetrize away round-off from the columnwise solve.
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j) {
                const double v = 0.5 * (inv(i, j) + inv(j, i));
                inv(i, j) = v;
                inv(j, i) = v;
            }
        return inv;
    }

    double max_abs_diff(const SpdMatrix& other) const {
        double m = 0.0;
        for (std::size_t i = 0; i < m_.size(); ++i)
            m = std::max(m, std::abs(m_[i] - other.m_[i]));
        return m;
    }

private:
    int dim_;
    std::vector<double> m_;
};

/// y = L x for lower-triangular L (stored in an SpdMatrix shell).
inline Vec lower_tri_mul(const SpdMatrix& L, const Vec& x) {
    const int d = L.dim();
    Vec y(d, 0.0);
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j <= i; ++j) s += L(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

}  // namespace ngbandit
