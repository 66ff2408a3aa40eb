#pragma once

#include <optional>
#include <vector>

#include "robindisk/linear_step.hpp"

namespace robindisk {

struct SolverReport {
    int iterations = 0;
    std::vector<double> v_norms;     // |u_k|_V per completed step
    std::vector<double> increments;  // |w_k|_V = |u_k - u_{k-1}|_V; on a
                                     // pure-Robin circle (no Dirichlet arcs)
                                     // the constant mode is re-included
    std::vector<double> ratios;      // increments[k] / increments[k-1], k >= 2
    double theoretical_K = 0.0;      // = xi
    double M0 = 0.0;
    double dirichlet_tol = 0.0;
    std::vector<bool> in_ball;       // |u_k|_V <= M0 (1 + 1e-8) per iterate
    ResidualRecord final_residuals;
    bool converged = false;
    double tol = 0.0;
    int max_iter = 0;
};

// Fixed-point driver: u_0 = start (default zero trace); step k solves the
// linear problem with Robin weight f_alpha(u_{k-1}) at the quadrature nodes.
// Stops when |w_k|_V <= tol; a run that exhausts max_iter returns with
// converged = false (the report is still fully populated). A trace exceeding
// the overflow guard of f_alpha aborts with an exception (diverged iterate).
std::pair<TrigPoly, SolverReport> run_picard(const ProblemInstance& inst, double tol,
                                             int max_iter,
                                             const std::optional<TrigPoly>& start = std::nullopt);

struct ContractionSummary {
    double max_ratio = 0.0;
    double geometric_rate = 0.0;  // least-squares fit of log |w_k|
    double theoretical_K = 0.0;
    bool certified = false;       // max_ratio <= theoretical_K
    double cauchy_tail = 0.0;     // |w_last| / (1 - K)
};

// Requires at least 3 recorded iterations.
ContractionSummary contraction_report(const SolverReport& report);

// True iff every recorded |u_k|_V <= M0 (1 + 1e-8).
bool ball_check(const SolverReport& report);

}  // namespace robindisk
