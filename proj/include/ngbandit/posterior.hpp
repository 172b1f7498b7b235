#pragma once

#include "ngbandit/linalg.hpp"
#include "ngbandit/rng.hpp"

#include <vector>

namespace ngbandit {

/// Normal-gamma posterior state for one arm.
///
/// Encodes the belief tau ~ Gamma(alpha, beta), theta | tau ~ N(u, (tau*Lambda)^-1).
/// `lambda_inv` is maintained alongside `lambda` by rank-one updates;
/// `chol_lambda_inv` caches the lower Cholesky factor of `lambda_inv` so
/// sampling stays O(d^2) per draw.
struct NormalGammaParams {
    Vec u;
    SpdMatrix lambda;
    SpdMatrix lambda_inv;
    SpdMatrix chol_lambda_inv;
    double alpha = 0.5;
    double beta = 1.0;
    long n_obs = 0;
    int updates_since_refactor = 0;

    explicit NormalGammaParams(int dim)
        : u(dim, 0.0),
          lambda(SpdMatrix::identity(dim)),
          lambda_inv(SpdMatrix::identity(dim)),
          chol_lambda_inv(SpdMatrix::identity(dim)) {}

    int dim() const { return static_cast<int>(u.size()); }
};

/// State after the first observation x1: u = x1*a, Lambda = I,
/// alpha = 1/2, beta = beta1, one observation digested.
NormalGammaParams initial_params(const Vec& context, double x1, double beta1 = 1.0);

/// One-step conjugate update with observation x under context a:
///   Lambda' = Lambda + a a^T
///   u'      = Lambda'^-1 (x a + Lambda u)
///   alpha'  = alpha + 1/2
///   beta'   = beta + (x^2 + u^T Lambda u - u'^T Lambda' u') / 2
/// The inverse is carried by the Sherman-Morrison identity with a full
/// re-factorization every 512 updates to cap drift.
/// Throws std::invalid_argument on dimension mismatch and
/// std::runtime_error if beta' becomes non-positive (corrupted state).
NormalGammaParams update(NormalGammaParams params, const Vec& context, double x);

/// Closed form after n observations under a unit-norm context:
///   Lambda_n = I + (n-1) a a^T,  u_n = n*mean*Lambda_n^-1 a,
///   alpha_n = n/2,               beta_n = beta1 + sum (x_i - mean)^2 / 2.
/// Guarantees a^T u_n = mean and a^T Lambda_n^-1 a = 1/n.
/// Throws std::invalid_argument unless ||context|| = 1 within 1e-12 and
/// observations is nonempty.
NormalGammaParams closed_form(const Vec& unit_context,
                              const std::vector<double>& observations,
                              double beta1 = 1.0);

struct QValueSample {
    double q = 0.0;
    double tau_tilde = 0.0;
};

/// Thompson draw for one arm: tau_tilde ~ Gamma(alpha, beta),
/// theta_tilde ~ N(u, (tau_tilde*Lambda)^-1), q = context^T theta_tilde.
QValueSample sample_qvalue(const NormalGammaParams& params, const Vec& context,
                           RngStream& rng);

/// theta_tilde ~ N(u, (tau*Lambda)^-1) at a fixed precision draw.
Vec sample_theta_given_tau(const NormalGammaParams& params, double tau, RngStream& rng);

}  // namespace ngbandit
