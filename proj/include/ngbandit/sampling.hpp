#pragma once

#include "ngbandit/linalg.hpp"
#include "ngbandit/rng.hpp"

namespace ngbandit {

/// Gamma draw in the rate parameterization (mean = shape/rate).
/// Throws std::invalid_argument for non-positive shape or rate.
double sample_gamma(double shape, double rate, RngStream& rng);

/// Multivariate normal draw: mean + L z with L the lower Cholesky factor
/// of the covariance. Throws std::domain_error when the covariance fails
/// the SPD factorization.
Vec sample_mvnormal(const Vec& mean, const SpdMatrix& covariance, RngStream& rng);

/// Same draw when the Cholesky factor is already at hand.
Vec sample_mvnormal_chol(const Vec& mean, const SpdMatrix& chol_lower, RngStream& rng);

}  // namespace ngbandit
