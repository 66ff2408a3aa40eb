#include "robindisk/linear_step.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace robindisk {

int auto_panels(double arc_length, int N, const QuadratureSettings& q) {
    double needed = std::ceil(arc_length * N);
    int panels = q.min_panels_per_arc;
    if (needed > panels) panels = static_cast<int>(needed);
    return panels;
}

double default_penalty_eta(int N) { return 1e6 * kPi * N; }

double default_dirichlet_tol(double M0) { return 1e-5 * M0; }

void validate_instance(const ProblemInstance& inst) {
    if (inst.N < 4) throw std::invalid_argument("ProblemInstance: N must be >= 4");
    if (!(inst.xi > 0.0 && inst.xi < 1.0))
        throw std::invalid_argument("ProblemInstance: xi must lie in (0,1)");
    if (!inst.phi || !inst.g || !inst.varphi)
        throw std::invalid_argument("ProblemInstance: boundary functions must be set");
    if (inst.verification_mode) {
        for (const auto* group :
             {&inst.partition.dirichlet, &inst.partition.neumann, &inst.partition.robin})
            for (const auto& a : *group)
                if (!arc_well_formed(a))
                    throw std::invalid_argument("ProblemInstance: malformed arc");
        if (inst.penalty_eta < 0.0)
            throw std::invalid_argument("ProblemInstance: penalty_eta must be >= 0");
        if (!inst.partition.dirichlet.empty() && !(inst.penalty_eta > 0.0))
            throw std::invalid_argument(
                "ProblemInstance: penalty_eta must be > 0 when Dirichlet arcs exist");
        return;
    }
    auto vr = validate_partition(inst.partition);
    if (!vr.ok) throw std::invalid_argument("ProblemInstance: " + vr.message);
    if (!(inst.penalty_eta > 0.0))
        throw std::invalid_argument("ProblemInstance: penalty_eta must be > 0");
}

namespace {

ArcQuadrature scaled_quadrature(const std::vector<AngularArc>& arcs, int N,
                                const QuadratureSettings& q, int refine = 1) {
    ArcQuadrature out;
    for (const auto& a : arcs) {
        int panels = refine * auto_panels(a.length(), N, q);
        ArcQuadrature part = build_quadrature({a}, panels, q.points_per_panel);
        out.nodes.insert(out.nodes.end(), part.nodes.begin(), part.nodes.end());
        out.weights.insert(out.weights.end(), part.weights.begin(), part.weights.end());
    }
    return out;
}

}  // namespace

ArcQuadrature dirichlet_quadrature(const ProblemInstance& inst) {
    return scaled_quadrature(inst.partition.dirichlet, inst.N, inst.quad);
}

ArcQuadrature neumann_quadrature(const ProblemInstance& inst) {
    return scaled_quadrature(inst.partition.neumann, inst.N, inst.quad);
}

ArcQuadrature robin_quadrature(const ProblemInstance& inst) {
    return scaled_quadrature(inst.partition.robin, inst.N, inst.quad);
}

std::pair<double, double> data_norms(const ProblemInstance& inst) {
    ArcQuadrature qn = neumann_quadrature(inst);
    ArcQuadrature qr = robin_quadrature(inst);
    double phi2 = 0.0, g2 = 0.0;
    for (size_t j = 0; j < qn.nodes.size(); ++j) {
        double v = inst.phi(qn.nodes[j]);
        phi2 += qn.weights[j] * v * v;
    }
    for (size_t j = 0; j < qr.nodes.size(); ++j) {
        double v = inst.g(qr.nodes[j]);
        g2 += qr.weights[j] * v * v;
    }
    return {std::sqrt(phi2), std::sqrt(g2)};
}

Eigen::MatrixXd basis_matrix(int N, const std::vector<double>& nodes) {
    Eigen::MatrixXd B(nodes.size(), 2 * N + 1);
    for (size_t j = 0; j < nodes.size(); ++j) {
        B(j, 0) = 1.0;
        for (int n = 1; n <= N; ++n) {
            B(j, 2 * n - 1) = std::cos(n * nodes[j]);
            B(j, 2 * n) = std::sin(n * nodes[j]);
        }
    }
    return B;
}

namespace {

// B^T diag(d) B with d >= 0, via a rank update of diag(sqrt(d)) B; the
// result is exactly symmetric by construction.
Eigen::MatrixXd weighted_mass(const Eigen::MatrixXd& B, const Eigen::VectorXd& d) {
    Eigen::MatrixXd scaled = d.array().sqrt().matrix().asDiagonal() * B;
    const int dofs = static_cast<int>(B.cols());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dofs, dofs);
    M.selfadjointView<Eigen::Lower>().rankUpdate(scaled.transpose());
    M.triangularView<Eigen::StrictlyUpper>() = M.transpose();
    return M;
}

}  // namespace

GalerkinSystem assemble(const ProblemInstance& inst, const std::vector<double>& weight) {
    validate_instance(inst);
    const int dofs = 2 * inst.N + 1;

    ArcQuadrature qd = dirichlet_quadrature(inst);
    ArcQuadrature qn = neumann_quadrature(inst);
    ArcQuadrature qr = robin_quadrature(inst);
    if (weight.size() != qr.nodes.size())
        throw std::invalid_argument("assemble: weight/quadrature mismatch (expected " +
                                    std::to_string(qr.nodes.size()) + " Robin node values)");

    Eigen::VectorXd robin_d(qr.nodes.size());
    for (size_t j = 0; j < qr.nodes.size(); ++j) {
        if (!(weight[j] > 0.0))
            throw std::invalid_argument("assemble: non-positive weight (corrupted previous iterate)");
        double coeff = inst.varphi(qr.nodes[j]);
        if (coeff < 0.0)
            throw std::invalid_argument("assemble: negative Robin coefficient varphi");
        robin_d[j] = qr.weights[j] * coeff * weight[j];
    }
    Eigen::VectorXd dirichlet_d(qd.nodes.size());
    for (size_t j = 0; j < qd.nodes.size(); ++j) dirichlet_d[j] = qd.weights[j];

    GalerkinSystem sys;
    sys.matrix = Eigen::MatrixXd::Zero(dofs, dofs);
    for (int n = 1; n <= inst.N; ++n) {
        sys.matrix(2 * n - 1, 2 * n - 1) = kPi * n;
        sys.matrix(2 * n, 2 * n) = kPi * n;
    }
    Eigen::MatrixXd BR = basis_matrix(inst.N, qr.nodes);
    sys.matrix += weighted_mass(BR, robin_d);
    if (!qd.nodes.empty() && inst.penalty_eta > 0.0) {
        Eigen::MatrixXd BD = basis_matrix(inst.N, qd.nodes);
        sys.matrix += inst.penalty_eta * weighted_mass(BD, dirichlet_d);
    }

    sys.rhs = Eigen::VectorXd::Zero(dofs);
    Eigen::MatrixXd BN = basis_matrix(inst.N, qn.nodes);
    Eigen::VectorXd fn(qn.nodes.size());
    for (size_t j = 0; j < qn.nodes.size(); ++j) fn[j] = qn.weights[j] * inst.phi(qn.nodes[j]);
    sys.rhs += BN.transpose() * fn;
    Eigen::VectorXd fr(qr.nodes.size());
    for (size_t j = 0; j < qr.nodes.size(); ++j) fr[j] = qr.weights[j] * inst.g(qr.nodes[j]);
    sys.rhs += BR.transpose() * fr;
    return sys;
}

Eigen::VectorXd solve_step_vector(const GalerkinSystem& sys) {
    Eigen::LLT<Eigen::MatrixXd> llt(sys.matrix);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("solve_step: matrix not positive definite (bad penalty or quadrature)");
    Eigen::VectorXd x = llt.solve(sys.rhs);

    const int n = static_cast<int>(sys.matrix.rows());
    for (int sweep = 0; sweep < 2; ++sweep) {
        // Residual in extended precision, correction through the same factorization.
        Eigen::VectorXd r(n);
        for (int i = 0; i < n; ++i) {
            long double acc = static_cast<long double>(sys.rhs[i]);
            for (int j = 0; j < n; ++j)
                acc -= static_cast<long double>(sys.matrix(i, j)) * static_cast<long double>(x[j]);
            r[i] = static_cast<double>(acc);
        }
        x += llt.solve(r);
    }

    // Normwise backward error |Ax-b| / (|A||x| + |b|). With the Dirichlet
    // penalty at its default scale (~1e6 pi N), |Ax-b|/|b| alone cannot reach
    // 1e-10 in double precision: rounding x perturbs Ax by ~eps |A||x|. The
    // backward-error form is the attainable criterion; refinement puts it
    // near machine epsilon.
    double abs_res = (sys.matrix * x - sys.rhs).norm();
    double scale = sys.matrix.norm() * x.norm() + sys.rhs.norm();
    double rel = scale > 0.0 ? abs_res / scale : abs_res;
    if (!(rel <= 1e-10)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "solve_step: backward error %.3e exceeds 1e-10", rel);
        throw std::runtime_error(msg);
    }
    return x;
}

TrigPoly solve_step(const GalerkinSystem& sys) {
    return trace_from_dofs(solve_step_vector(sys));
}

TrigPoly trace_from_dofs(const Eigen::VectorXd& dofs) {
    const int N = (static_cast<int>(dofs.size()) - 1) / 2;
    TrigPoly f = TrigPoly::zero(N);
    f.set_coeff(0, dofs[0]);
    for (int n = 1; n <= N; ++n) {
        std::complex<double> cn(0.5 * dofs[2 * n - 1], -0.5 * dofs[2 * n]);
        f.set_coeff(n, cn);
        f.set_coeff(-n, std::conj(cn));
    }
    return f;
}

Eigen::VectorXd dofs_from_trace(const TrigPoly& f) {
    Eigen::VectorXd dofs = Eigen::VectorXd::Zero(2 * f.degree + 1);
    dofs[0] = f.coeff(0).real();
    for (int n = 1; n <= f.degree; ++n) {
        dofs[2 * n - 1] = 2.0 * f.coeff(n).real();
        dofs[2 * n] = -2.0 * f.coeff(n).imag();
    }
    return dofs;
}

double v_norm_dofs(const Eigen::VectorXd& dofs) {
    const int N = (static_cast<int>(dofs.size()) - 1) / 2;
    double sum = 0.0;
    for (int n = 1; n <= N; ++n)
        sum += n * (dofs[2 * n - 1] * dofs[2 * n - 1] + dofs[2 * n] * dofs[2 * n]);
    return std::sqrt(kPi * sum);
}

ResidualRecord boundary_residuals(const TrigPoly& u, const ProblemInstance& inst) {
    validate_instance(inst);
    ResidualRecord rec;
    TrigPoly du = dtn_apply(u);

    ArcQuadrature qd = scaled_quadrature(inst.partition.dirichlet, inst.N, inst.quad, 2);
    double sum = 0.0;
    for (size_t j = 0; j < qd.nodes.size(); ++j) {
        double v = eval_trace(u, qd.nodes[j]);
        sum += qd.weights[j] * v * v;
    }
    rec.dirichlet = std::sqrt(sum);

    ArcQuadrature qn = scaled_quadrature(inst.partition.neumann, inst.N, inst.quad, 2);
    sum = 0.0;
    for (size_t j = 0; j < qn.nodes.size(); ++j) {
        double v = eval_trace(du, qn.nodes[j]) - inst.phi(qn.nodes[j]);
        sum += qn.weights[j] * v * v;
    }
    rec.neumann = std::sqrt(sum);

    ArcQuadrature qr = scaled_quadrature(inst.partition.robin, inst.N, inst.quad, 2);
    sum = 0.0;
    for (size_t j = 0; j < qr.nodes.size(); ++j) {
        double uv = eval_trace(u, qr.nodes[j]);
        double v = eval_trace(du, qr.nodes[j]) +
                   inst.varphi(qr.nodes[j]) * f_alpha(inst.alpha, uv) * uv - inst.g(qr.nodes[j]);
        sum += qr.weights[j] * v * v;
    }
    rec.robin = std::sqrt(sum);
    return rec;
}

}  // namespace robindisk
