#include "ngbandit/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace ngbandit {

namespace {

// Marsaglia & Tsang (2000) squeeze method, shape >= 1, unit rate.
double gamma_unit_rate_ge1(double shape, RngStream& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.next_gaussian();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_gamma(double shape, double rate, RngStream& rng) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("sample_gamma: shape and rate must be positive");
    if (shape >= 1.0) return gamma_unit_rate_ge1(shape, rng) / rate;
    // Shape boost: Gamma(a) = Gamma(a+1) * U^{1/a} for a < 1.
    const double g = gamma_unit_rate_ge1(shape + 1.0, rng);
    const double u = rng.next_double();
    return g * std::pow(u, 1.0 / shape) / rate;
}

Vec sample_mvnormal_chol(const Vec& mean, const SpdMatrix& chol_lower, RngStream& rng) {
    const int d = chol_lower.dim();
    Vec z(d);
    for (int i = 0; i < d; ++i) z[i] = rng.next_gaussian();
    Vec x = lower_tri_mul(chol_lower, z);
    for (int i = 0; i < d; ++i) x[i] += mean[i];
    return x;
}

Vec sample_mvnormal(const Vec& mean, const SpdMatrix& covariance, RngStream& rng) {
    if (static_cast<int>(mean.size()) != covariance.dim())
        throw std::invalid_argument("sample_mvnormal: mean/covariance dimension mismatch");
    return sample_mvnormal_chol(mean, covariance.cholesky_lower(), rng);
}

}  // namespace ngbandit
