#include "robindisk/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "robindisk/arcs.hpp"

namespace robindisk {

double tilde_R(double p) {
    if (!(p > 2.0)) throw std::domain_error("tilde_R: requires p > 2");
    double log_val = (std::log(3.0) + (p - 1.0) * std::log(4.0 / kPi) +
                      0.5 * (p - 2.0) * std::log(p)) /
                     p;
    return std::exp(log_val);
}

double lambda_p(double p) {
    if (!(p >= 2.0)) throw std::domain_error("lambda_p: requires p >= 2");
    if (p == 2.0) return 1.0;
    return 2.0 * tilde_R(p);
}

// Per-p requirement (lambda_p^p / p^{(p-2)/2})^{1/(p-2)}, in log space.
double majorant_requirement(double p) {
    if (!(p > 2.0)) throw std::domain_error("majorant_requirement: requires p > 2");
    double log_lp = std::log(2.0) + (std::log(3.0) + (p - 1.0) * std::log(4.0 / kPi) +
                                     0.5 * (p - 2.0) * std::log(p)) /
                                        p;
    return std::exp((p * log_lp - 0.5 * (p - 2.0) * std::log(p)) / (p - 2.0));
}

double majorant_C() {
    // Geometric grid on [3, 1e4], endpoints included, plus the analytic limit.
    const int grid = 400;
    double best = 8.0 / kPi;
    for (int j = 0; j <= grid; ++j) {
        double p = 3.0 * std::pow(1e4 / 3.0, static_cast<double>(j) / grid);
        best = std::max(best, majorant_requirement(p));
    }
    return best;
}

double q_coeff_log(int m) {
    if (m < 3) throw std::invalid_argument("q_coeff: m must be >= 3");
    // While the power/factorial pair is representable, the log of the exact
    // ratio is far more accurate than the analytic difference below, whose
    // ~1e2-sized parts cancel to ~1e1 and leave lgamma rounding in the result.
    if (m <= 150) return std::log(q_coeff(m));
    return std::log(4.0) + 0.5 * (m + 2.0) * std::log(m + 2.0) - std::lgamma(m + 2.0);
}

double q_coeff(int m) {
    if (m < 3) throw std::invalid_argument("q_coeff: m must be >= 3");
    // Direct rational-of-doubles evaluation while both factors fit the double
    // range (through m = 150); small even orders come out exact, e.g. the
    // m = 4 value 4 * 6^3 / 5! = 7.2.
    if (m <= 150) {
        double power = std::pow(m + 2.0, 0.5 * (m + 2.0));
        double factorial = std::tgamma(m + 2.0);
        return 4.0 * power / factorial;
    }
    return std::exp(q_coeff_log(m));
}

double r_entire_log(double z, double rel_tol) {
    if (!(z >= 0.0)) throw std::domain_error("R_entire: requires z >= 0");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
        throw std::domain_error("R_entire: rel_tol must lie in (0, 1e-6]");
    if (z == 0.0) return q_coeff_log(3);
    // Terms grow until m ~ e z^2 before the factorial wins, so the sum is
    // accumulated as exp(log_term - peak) against a running peak; that keeps
    // full precision at small z (no chained log1p/exp roundoff) and avoids
    // overflow at large z. Long double absorbs the length of the sum.
    const double log_z = std::log(z);
    double peak = q_coeff_log(3);
    long double scaled_sum = 1.0L;
    double log_q = peak;
    for (int m = 4;; ++m) {
        double log_q_next = q_coeff_log(m);
        double log_term = log_q_next + (m - 3.0) * log_z;
        if (log_term > peak) {
            scaled_sum = scaled_sum * std::exp(static_cast<long double>(peak) -
                                               static_cast<long double>(log_term)) +
                         1.0L;
            peak = log_term;
        } else {
            scaled_sum += std::exp(static_cast<long double>(log_term) -
                                   static_cast<long double>(peak));
        }
        // Ratio of consecutive terms; once < 1 the tail is geometrically dominated.
        double ratio = std::exp(log_q_next - log_q + log_z);
        log_q = log_q_next;
        if (ratio < 1.0) {
            double log_sum = peak + static_cast<double>(std::log(scaled_sum));
            double log_tail_bound = log_term + std::log(ratio) - std::log1p(-ratio);
            if (log_tail_bound < log_sum + std::log(rel_tol)) return log_sum;
        }
        if (m > 3000000) throw std::runtime_error("R_entire: series failed to converge");
    }
}

double R_entire(double z, double rel_tol) { return std::exp(r_entire_log(z, rel_tol)); }

double compute_M0(double phi_l2, double g_l2, bool allow_zero) {
    if (!(g_l2 >= 0.0)) throw std::invalid_argument("compute_M0: g_l2 must be >= 0");
    if (!(phi_l2 > 0.0) && !allow_zero)
        throw std::invalid_argument("compute_M0: phi_l2 must be > 0 (pass allow_zero for degenerate cases)");
    if (phi_l2 < 0.0) throw std::invalid_argument("compute_M0: phi_l2 must be >= 0");
    const double beta2 = lambda_p(2.0);
    return beta2 * (phi_l2 + g_l2);
}

namespace {

double log_bracket(double M0) {
    double t1 = 3.0 * std::log(lambda_p(3.0)) + std::log(M0);
    double t2 = 4.0 * std::log(lambda_p(4.0)) + 2.0 * std::log(M0);
    double log_cm0 = std::log(majorant_C()) + std::log(M0);
    double t3 = 3.0 * log_cm0 + r_entire_log(std::exp(log_cm0));
    double hi = std::max(t1, std::max(t2, t3));
    return hi + std::log(std::exp(t1 - hi) + std::exp(t2 - hi) + std::exp(t3 - hi));
}

}  // namespace

double compute_Lambda(double M0) {
    if (!(M0 > 0.0)) throw std::domain_error("compute_Lambda: requires M0 > 0");
    return std::exp(-log_bracket(M0));
}

double compute_Lambda_log10(double M0) {
    if (!(M0 > 0.0)) throw std::domain_error("compute_Lambda: requires M0 > 0");
    return -log_bracket(M0) / std::log(10.0);
}

Admissibility check_admissible(const std::vector<double>& varphi_samples, double xi,
                               double Lambda) {
    if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("check_admissible: xi must lie in (0,1)");
    if (!(Lambda >= 0.0)) throw std::invalid_argument("check_admissible: Lambda must be >= 0");
    if (varphi_samples.empty())
        throw std::invalid_argument("check_admissible: no samples supplied");
    Admissibility result;
    result.bound = xi * Lambda;
    result.min_sample = *std::min_element(varphi_samples.begin(), varphi_samples.end());
    result.max_sample = *std::max_element(varphi_samples.begin(), varphi_samples.end());
    result.margin = result.bound - result.max_sample;
    result.admissible = result.min_sample >= 0.0 && result.max_sample <= result.bound;
    return result;
}

ConstantsReport build_constants_report(double phi_l2, double g_l2, double xi,
                                       const std::vector<int>& p_list) {
    if (!(xi > 0.0 && xi < 1.0))
        throw std::invalid_argument("build_constants_report: xi must lie in (0,1)");
    ConstantsReport report;
    for (int p : p_list) report.lambda_table[p] = lambda_p(static_cast<double>(p));
    report.majorant_C = majorant_C();
    report.M0 = compute_M0(phi_l2, g_l2, /*allow_zero=*/true);
    report.xi = xi;
    report.K = xi;
    if (report.M0 > 0.0) {
        double log_cm0 = std::log(report.majorant_C * report.M0);
        double log_r = r_entire_log(std::exp(log_cm0));
        report.R_at_CM0 = std::exp(log_r);
        report.R_at_CM0_log10 = log_r / std::log(10.0);
        report.Lambda = compute_Lambda(report.M0);
        report.Lambda_log10 = compute_Lambda_log10(report.M0);
    } else {
        // Zero data: every bracket term vanishes, the threshold is unbounded.
        report.R_at_CM0 = q_coeff(3);
        report.R_at_CM0_log10 = q_coeff_log(3) / std::log(10.0);
        report.Lambda = std::numeric_limits<double>::infinity();
        report.Lambda_log10 = std::numeric_limits<double>::infinity();
    }
    return report;
}

}  // namespace robindisk
