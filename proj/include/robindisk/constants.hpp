#pragma once

#include <map>
#include <vector>

namespace robindisk {

// Embedding constant kernel (3 (4/pi)^{p-1} p^{(p-2)/2})^{1/p}, p > 2.
// Evaluated in log space.
double tilde_R(double p);

// Trace embedding constant: 2 tilde_R(p) for p > 2, and 1 at p = 2 (the
// H^{1/2} weights (1+k^2)^{1/2} dominate 1 term by term).
double lambda_p(double p);

// Per-p requirement (lambda_p^p / p^{(p-2)/2})^{1/(p-2)}: the smallest C that
// works at this particular p. Decreases from its p = 3 maximum towards the
// p -> infinity limit 8/pi.
double majorant_requirement(double p);

// Smallest C with lambda_p^p <= C^{p-2} p^{(p-2)/2} for all p >= 3, found as
// the sup of the per-p requirement over a geometric grid on [3, 1e4] together
// with the p -> infinity limit 8/pi. The sup is attained at p = 3.
double majorant_C();

// Series coefficient q_m = 4 (m+2)^{(m+2)/2} / (m+1)!, m >= 3 (log space).
double q_coeff(int m);

// Natural log of q_m, finite for every m (no factorial overflow).
double q_coeff_log(int m);

// R(z) = sum_{m>=3} q_m z^{m-3}, entire; the partial sum stops once the
// term-ratio tail bound drops below rel_tol times the partial sum.
// Overflows to +inf for z beyond roughly 75; use r_entire_log for those.
double R_entire(double z, double rel_tol = 1e-12);

// Natural log of R(z), finite for every z >= 0 (log-space accumulation).
double r_entire_log(double z, double rel_tol = 1e-12);

// M0 = beta_2 (|phi|_{L2(Gamma_N)} + |g|_{L2(Gamma_R)}) with beta_2 = lambda_2 = 1.
// phi_l2 = 0 is rejected unless allow_zero is set (degenerate test cases).
double compute_M0(double phi_l2, double g_l2, bool allow_zero = false);

// Admissibility threshold [lambda_3^3 M0 + lambda_4^4 M0^2 + (C M0)^3 R(C M0)]^{-1}.
// Computed through the log-space bracket; may underflow to 0 when the bracket
// exceeds the double range (the log10 companion stays finite).
double compute_Lambda(double M0);

// log10 of Lambda, finite for every M0 > 0.
double compute_Lambda_log10(double M0);

struct Admissibility {
    bool admissible = false;
    double bound = 0.0;       // xi * Lambda
    double min_sample = 0.0;
    double max_sample = 0.0;
    double margin = 0.0;      // bound - max_sample
};

// Verdict for sampled varphi values: admissible iff min >= 0 and max <= xi*Lambda.
Admissibility check_admissible(const std::vector<double>& varphi_samples, double xi,
                               double Lambda);

struct ConstantsReport {
    std::map<int, double> lambda_table;
    double majorant_C = 0.0;
    double M0 = 0.0;
    double Lambda = 0.0;          // may underflow to 0 for large M0
    double Lambda_log10 = 0.0;    // always finite for M0 > 0
    double xi = 0.0;
    double K = 0.0;               // theoretical contraction factor, = xi
    double R_at_CM0 = 0.0;        // may overflow to +inf for large M0
    double R_at_CM0_log10 = 0.0;  // always finite
};

// Assembles the report for data norms phi_l2, g_l2 and contraction parameter xi.
ConstantsReport build_constants_report(double phi_l2, double g_l2, double xi,
                                       const std::vector<int>& p_list = {2, 3, 4, 6, 8, 12});

}  // namespace robindisk
