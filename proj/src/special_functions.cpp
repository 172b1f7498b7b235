#include "ngbandit/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ngbandit {

double lambert_w0(double x) {
    if (x < 0.0) throw std::domain_error("lambert_w0: requires x >= 0");
    if (x == 0.0) return 0.0;

    // Halley iteration; ln(1+x) is a good starting point on the whole
    // nonnegative axis (exact slope at 0, right asymptotic order for large x).
    double w = std::log1p(x);
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

double gaussian_q(double c) {
    // 0.5 * erfc(c / sqrt(2)); erfc keeps full relative precision in the tail.
    return 0.5 * std::erfc(c * 0x1.6a09e667f3bcdp-1);  // 1/sqrt(2)
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0x1.6a09e667f3bcdp-1);
}

double chi_square_threshold(int dof, double x) {
    if (dof < 1) throw std::invalid_argument("chi_square_threshold: dof must be >= 1");
    if (x <= 0.0) throw std::invalid_argument("chi_square_threshold: x must be positive");
    const double d = static_cast<double>(dof);
    return d + 2.0 * std::sqrt(d * x) + 2.0 * x;
}

namespace {

// Series expansion of P(a,x), reliable for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), reliable for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("regularized_gamma_p: a must be positive");
    if (x < 0.0) throw std::invalid_argument("regularized_gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double chi_square_cdf(double x, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_cdf: dof must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-18) break;
        sign = -sign;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

double kolmogorov_critical(double level) {
    if (level <= 0.0 || level >= 1.0)
        throw std::invalid_argument("kolmogorov_critical: level must lie in (0,1)");
    double lo = 1e-6, hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_tail(mid) > level)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

AppendixReport verify_appendix_inequalities(const std::vector<double>& grid) {
    AppendixReport rep;
    rep.min_slack_log1p = std::numeric_limits<double>::infinity();
    rep.max_slack_log1p = -std::numeric_limits<double>::infinity();
    rep.min_slack_recip = std::numeric_limits<double>::infinity();
    rep.max_slack_recip = -std::numeric_limits<double>::infinity();

    bool any_recip = false;
    for (const double x : grid) {
        if (x < 0.0)
            throw std::domain_error("verify_appendix_inequalities: grid value below 0");
        ++rep.points_checked;

        const double slack1 = std::log1p(x) - 2.0 * x / (2.0 + x);
        rep.min_slack_log1p = std::min(rep.min_slack_log1p, slack1);
        rep.max_slack_log1p = std::max(rep.max_slack_log1p, slack1);
        if (slack1 < -1e-15) ++rep.violations;

        if (x > 0.0 && x < 1.0) {
            any_recip = true;
            const double slack2 = 1.0 / std::log(1.0 / x) - x / (1.0 - x);
            rep.min_slack_recip = std::min(rep.min_slack_recip, slack2);
            rep.max_slack_recip = std::max(rep.max_slack_recip, slack2);
            if (slack2 < -1e-15) ++rep.violations;
        }
    }
    if (!any_recip) {
        rep.min_slack_recip = 0.0;
        rep.max_slack_recip = 0.0;
    }
    return rep;
}

}  // namespace ngbandit
