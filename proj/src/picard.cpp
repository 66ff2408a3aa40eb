#include "robindisk/picard.hpp"

#include <cmath>
#include <stdexcept>

#include "robindisk/constants.hpp"

namespace robindisk {

std::pair<TrigPoly, SolverReport> run_picard(const ProblemInstance& inst, double tol,
                                             int max_iter,
                                             const std::optional<TrigPoly>& start) {
    validate_instance(inst);
    if (!(tol > 0.0)) throw std::invalid_argument("run_picard: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("run_picard: max_iter must be >= 1");

    SolverReport report;
    report.tol = tol;
    report.max_iter = max_iter;
    report.theoretical_K = inst.xi;
    auto [phi_l2, g_l2] = data_norms(inst);
    report.M0 = compute_M0(phi_l2, g_l2, /*allow_zero=*/true);
    report.dirichlet_tol =
        inst.dirichlet_tol > 0.0 ? inst.dirichlet_tol : default_dirichlet_tol(report.M0);

    const int dofs = 2 * inst.N + 1;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(dofs);
    if (start) {
        if (start->degree != inst.N)
            throw std::invalid_argument("run_picard: start trace degree must equal N");
        if (!start->is_real()) throw std::invalid_argument("run_picard: start trace not real");
        u = dofs_from_trace(*start);
    }

    // The Robin rule is fixed for the whole run; weights are evaluated there.
    ArcQuadrature qr = robin_quadrature(inst);
    Eigen::MatrixXd BR = basis_matrix(inst.N, qr.nodes);

    // The energy seminorm is a true norm on the mixed trial space (the
    // Dirichlet group pins the constant). On a pure-Robin circle the constant
    // mode is invisible to it, so there the increment re-includes that mode
    // with its L2 mass; otherwise a constant-mode update would stop the run.
    const bool include_constant = inst.partition.dirichlet.empty();

    for (int k = 1; k <= max_iter; ++k) {
        Eigen::VectorXd trace_values = BR * u;
        std::vector<double> weight(qr.nodes.size());
        for (size_t j = 0; j < weight.size(); ++j)
            weight[j] = f_alpha(inst.alpha, trace_values[j]);  // throws on diverged iterate

        GalerkinSystem sys = assemble(inst, weight);
        Eigen::VectorXd next = solve_step_vector(sys);

        double increment = v_norm_dofs(next - u);
        if (include_constant) {
            double dc = next[0] - u[0];
            increment = std::sqrt(increment * increment + kTwoPi * dc * dc);
        }
        double vnorm = v_norm_dofs(next);
        report.v_norms.push_back(vnorm);
        report.increments.push_back(increment);
        report.in_ball.push_back(vnorm <= report.M0 * (1.0 + 1e-8));
        if (k >= 2 && report.increments[k - 2] > 0.0)
            report.ratios.push_back(increment / report.increments[k - 2]);
        report.iterations = k;
        u = next;

        if (increment <= tol) {
            report.converged = true;
            break;
        }
    }

    TrigPoly trace = trace_from_dofs(u);
    report.final_residuals = boundary_residuals(trace, inst);
    return {trace, report};
}

ContractionSummary contraction_report(const SolverReport& report) {
    if (report.iterations < 3)
        throw std::invalid_argument("contraction_report: needs at least 3 iterations");
    ContractionSummary s;
    s.theoretical_K = report.theoretical_K;
    s.max_ratio = 0.0;
    for (double r : report.ratios) s.max_ratio = std::max(s.max_ratio, r);
    s.certified = !report.ratios.empty() && s.max_ratio <= report.theoretical_K;

    // Least-squares slope of log |w_k| against k over the positive increments.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (size_t k = 0; k < report.increments.size(); ++k) {
        if (!(report.increments[k] > 0.0)) continue;
        double x = static_cast<double>(k);
        double y = std::log(report.increments[k]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        double denom = count * sxx - sx * sx;
        s.geometric_rate = denom > 0.0 ? std::exp((count * sxy - sx * sy) / denom) : 0.0;
    }
    double last = report.increments.empty() ? 0.0 : report.increments.back();
    s.cauchy_tail = last / (1.0 - report.theoretical_K);
    return s;
}

bool ball_check(const SolverReport& report) {
    for (size_t k = 0; k < report.v_norms.size(); ++k)
        if (!(report.v_norms[k] <= report.M0 * (1.0 + 1e-8))) return false;
    return true;
}

}  // namespace robindisk
