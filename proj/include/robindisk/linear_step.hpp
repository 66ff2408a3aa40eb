#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "robindisk/arcs.hpp"
#include "robindisk/nonlinearity.hpp"
#include "robindisk/trigpoly.hpp"

namespace robindisk {

using BoundaryFn = std::function<double(double)>;

struct QuadratureSettings {
    int points_per_panel = 8;
    int min_panels_per_arc = 16;
};

// Panels per arc scale with the spectral degree so that the per-panel phase
// h * 2N stays <= 2, which keeps Gauss(8) mass-matrix entries at roundoff
// accuracy; the floor is the default 16 panels.
int auto_panels(double arc_length, int N, const QuadratureSettings& q);

struct ProblemInstance {
    Alpha alpha;
    ArcPartition partition;
    BoundaryFn phi;     // Neumann data on Gamma_N
    BoundaryFn g;       // Robin data on Gamma_R
    BoundaryFn varphi;  // Robin coefficient on Gamma_R, >= 0
    double xi = 0.5;    // contraction parameter in (0,1)
    int N = 128;        // spectral degree, >= 4
    QuadratureSettings quad;
    double penalty_eta = 0.0;    // > 0; see default_penalty_eta
    double dirichlet_tol = 0.0;  // default 1e-5 * M0; see default_dirichlet_tol

    // Relaxes (H1) partition validation: permits empty Dirichlet/Neumann
    // groups and eta = 0, for analytic reference cases (e.g. the pure-Robin
    // full circle with a constant solution). Never settable from a config.
    bool verification_mode = false;
};

// 1e6 times the scale of the DtN block (pi * N).
double default_penalty_eta(int N);
double default_dirichlet_tol(double M0);

void validate_instance(const ProblemInstance& inst);

// Quadrature rules the instance's integrals are evaluated with. The Robin rule
// fixes the node set that assemble() expects weight values on.
ArcQuadrature dirichlet_quadrature(const ProblemInstance& inst);
ArcQuadrature neumann_quadrature(const ProblemInstance& inst);
ArcQuadrature robin_quadrature(const ProblemInstance& inst);

// Surface L2 norms of the data, (|phi|_{L2(Gamma_N)}, |g|_{L2(Gamma_R)}).
std::pair<double, double> data_norms(const ProblemInstance& inst);

// Real symmetric system over the 2N+1 basis functions
// [1, cos t, sin t, ..., cos Nt, sin Nt].
struct GalerkinSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};

// matrix = A_DtN + M_R[varphi * weight] + eta * M_D, where A_DtN is the
// diagonal {0, pi n, pi n}, M_R the Robin mass matrix weighted pointwise by
// varphi(theta) * weight(theta), and M_D the Dirichlet arc mass matrix.
// weight holds f_alpha values of the previous iterate at the robin_quadrature
// nodes and must be strictly positive.
GalerkinSystem assemble(const ProblemInstance& inst, const std::vector<double>& weight);

// SPD solve (Cholesky plus two iterative-refinement sweeps with long double
// residual accumulation). Enforces normwise backward error <= 1e-10.
TrigPoly solve_step(const GalerkinSystem& sys);

// Coefficient-vector variant used by the iteration driver.
Eigen::VectorXd solve_step_vector(const GalerkinSystem& sys);

struct ResidualRecord {
    double dirichlet = 0.0;  // |u|_{L2(Gamma_D)}
    double neumann = 0.0;    // |dtn(u) - phi|_{L2(Gamma_N)}
    double robin = 0.0;      // |dtn(u) + varphi f_alpha(u) u - g|_{L2(Gamma_R)}
};

// Surface L2 residuals of the three boundary conditions, evaluated on a
// doubled quadrature rule.
ResidualRecord boundary_residuals(const TrigPoly& u, const ProblemInstance& inst);

// Conversions between the real dof ordering and TrigPoly coefficients:
// dof 0 = constant, dof 2n-1 = cos(n t), dof 2n = sin(n t).
TrigPoly trace_from_dofs(const Eigen::VectorXd& dofs);
Eigen::VectorXd dofs_from_trace(const TrigPoly& f);

// Basis evaluation matrix B(j, i) = (i-th basis function)(nodes[j]).
Eigen::MatrixXd basis_matrix(int N, const std::vector<double>& nodes);

// V-norm of a dof vector: (pi sum n (a_n^2 + b_n^2))^{1/2}.
double v_norm_dofs(const Eigen::VectorXd& dofs);

}  // namespace robindisk
