#pragma once

#include <vector>

namespace ngbandit {

/// Principal branch of Lambert's W on x >= 0: the w >= 0 with w*exp(w) = x.
/// Relative accuracy 1e-12 or better. Throws std::domain_error for x < 0.
double lambert_w0(double x);

/// Gaussian upper-tail probability Q(c) = 1 - Phi(c).
/// Satisfies Q(c) <= 0.5*exp(-c*c/2) for all c >= 0.
double gaussian_q(double c);

/// Standard normal CDF Phi(x).
double normal_cdf(double x);

/// Chi-square tail threshold: dof + 2*sqrt(dof*x) + 2*x.
/// For U ~ chi^2_dof, P(U >= threshold) <= exp(-x) (Laurent-Massart).
double chi_square_threshold(int dof, double x);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// CDF of the chi-square distribution with `dof` degrees of freedom.
double chi_square_cdf(double x, int dof);

/// Asymptotic Kolmogorov tail Q_KS(lambda) = 2 * sum_j (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_tail(double lambda);

/// Critical value c with Q_KS(c) = level (reject when sqrt(n)*D_n > c).
double kolmogorov_critical(double level);

/// Slack summary for the two logarithm inequalities:
///   ln(1+x) >= 2x/(2+x)        for x >= 0
///   1/ln(1/x) >= x/(1-x)       for 0 < x < 1
struct AppendixReport {
    long points_checked = 0;
    long violations = 0;
    double min_slack_log1p = 0.0;   // min of ln(1+x) - 2x/(2+x)
    double max_slack_log1p = 0.0;
    double min_slack_recip = 0.0;   // min of 1/ln(1/x) - x/(1-x)
    double max_slack_recip = 0.0;
    bool pass() const { return violations == 0; }
};

/// Checks both logarithm inequalities on a grid. Points must satisfy
/// x >= 0 for the first inequality; points in (0,1) are additionally run
/// through the second. A grid value < 0 raises std::domain_error.
AppendixReport verify_appendix_inequalities(const std::vector<double>& grid);

}  // namespace ngbandit
