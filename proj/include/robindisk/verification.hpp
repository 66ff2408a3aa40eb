#pragma once

#include <vector>

#include "robindisk/linear_step.hpp"
#include "robindisk/trigpoly.hpp"

namespace robindisk {

// Dirichlet energy of the harmonic extension by 2D tensor quadrature:
// Gauss-Legendre in the radial variable (under the substitution t = r^2, which
// makes the surviving integrands polynomial) times the uniform trapezoid rule
// in angle. Requires radial_points >= 2*degree and angular_points >= 4*degree.
// Exact to roundoff for trigonometric traces; used only to validate v_norm.
double vnorm_2d_oracle(const TrigPoly& f, int radial_points, int angular_points);

struct EmbeddingPerP {
    double p = 0.0;
    double lambda = 0.0;
    double max_ratio = 0.0;  // max over trials of lp / (lambda_p * hs)
    int violations = 0;
};

struct EmbeddingReport {
    int trials = 0;
    int degree = 0;
    unsigned long long seed = 0;
    std::vector<EmbeddingPerP> per_p;
    int total_violations = 0;
};

// Draws `trials` random trace polynomials (RandomTrigPolyStream ensemble) and
// checks the trace inequality lp_norm <= lambda_p * h12_norm for each p.
EmbeddingReport embedding_sampler(int trials, int degree, const std::vector<double>& p_list,
                                  unsigned long long seed);

struct HarmonicSumReport {
    bool all_hold = false;
    long long cases_checked = 0;
    double min_upper_slack = 0.0;   // min over cases of bound - sum
    double min_outer_slack = 0.0;   // min over cases of 2x-bound - inner bound
};

// For each theta in (0,1) and every N <= N_max, verifies
// sum_{k<=N} k^{-theta} <= 1 + N^{1-theta}/(1-theta) <= 2 N^{1-theta}/(1-theta).
HarmonicSumReport harmonic_sum_check(const std::vector<double>& theta_grid, long long N_max);

// Reference linear-step solver: doubled spectral degree, doubled quadrature,
// 10x penalty. weight_fn gives the Robin weight as a function of angle (the
// refined rule needs values at its own nodes). The main solution must agree
// with this one on shared modes to relative 1e-6 for smooth data.
TrigPoly linear_oracle(const ProblemInstance& inst, const BoundaryFn& weight_fn);

// V-norm distance between two traces of possibly different degree (the
// shorter one is zero-padded).
double v_norm_distance(const TrigPoly& a, const TrigPoly& b);

}  // namespace robindisk
