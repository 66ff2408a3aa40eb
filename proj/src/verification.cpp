#include "robindisk/verification.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "robindisk/constants.hpp"
#include "robindisk/gauss.hpp"

namespace robindisk {

double vnorm_2d_oracle(const TrigPoly& f, int radial_points, int angular_points) {
    if (radial_points < 2 * f.degree)
        throw std::invalid_argument("vnorm_2d_oracle: radial_points must be >= 2*degree");
    if (angular_points < 4 * f.degree)
        throw std::invalid_argument("vnorm_2d_oracle: angular_points must be >= 4*degree");
    if (radial_points < 2) radial_points = 2;
    if (angular_points < 4) angular_points = 4;

    const GaussRule& rule = gauss_legendre(radial_points);
    const int N = f.degree;
    double integral = 0.0;
    for (int i = 0; i < radial_points; ++i) {
        // Substitution t = r^2: int_0^1 F(r) r dr = (1/2) int_0^1 F(sqrt t) dt.
        double t = 0.5 * (rule.nodes[i] + 1.0);
        double wt = 0.5 * rule.weights[i];
        double r = std::sqrt(t);
        for (int j = 0; j < angular_points; ++j) {
            double theta = kTwoPi * j / angular_points;
            // Gradient of sum c_n r^{|n|} e^{in theta} in polar coordinates.
            std::complex<double> du_dr{0.0, 0.0};
            std::complex<double> du_dth{0.0, 0.0};
            for (int n = -N; n <= N; ++n) {
                if (n == 0) continue;
                int an = n < 0 ? -n : n;
                std::complex<double> phase(std::cos(n * theta), std::sin(n * theta));
                double rpow = std::pow(r, an - 1);
                du_dr += f.coeff(n) * (static_cast<double>(an) * rpow) * phase;
                du_dth += f.coeff(n) * std::complex<double>(0.0, static_cast<double>(n)) *
                          (rpow * r) * phase;
            }
            // |grad u|^2 r dr dtheta with r dr = dt/2 under the substitution.
            double grad2 = std::norm(du_dr) + std::norm(du_dth) / (r * r);
            integral += grad2 * 0.5 * wt * (kTwoPi / angular_points);
        }
    }
    return std::sqrt(integral);
}

EmbeddingReport embedding_sampler(int trials, int degree, const std::vector<double>& p_list,
                                  unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("embedding_sampler: trials must be >= 1");
    if (degree < 1) throw std::invalid_argument("embedding_sampler: degree must be >= 1");
    EmbeddingReport report;
    report.trials = trials;
    report.degree = degree;
    report.seed = seed;
    for (double p : p_list)
        report.per_p.push_back({p, lambda_p(p), 0.0, 0});

    RandomTrigPolyStream stream(seed);
    const int quad_points = 4 * degree + 4;
    const SobolevIndex half(0.5);
    std::vector<double> abs_values(quad_points);
    for (int trial = 0; trial < trials; ++trial) {
        TrigPoly f = stream.next(degree);
        double hs = hs_norm(f, half);
        for (int j = 0; j < quad_points; ++j)
            abs_values[j] = std::abs(eval_trace_complex(f, kTwoPi * j / quad_points));
        for (auto& entry : report.per_p) {
            double sum = 0.0;
            for (int j = 0; j < quad_points; ++j) sum += std::pow(abs_values[j], entry.p);
            double lp = std::pow(sum / quad_points, 1.0 / entry.p);
            double ratio = lp / (entry.lambda * hs);
            if (ratio > entry.max_ratio) entry.max_ratio = ratio;
            if (lp > entry.lambda * hs) {
                ++entry.violations;
                ++report.total_violations;
            }
        }
    }
    return report;
}

HarmonicSumReport harmonic_sum_check(const std::vector<double>& theta_grid, long long N_max) {
    if (N_max < 1) throw std::invalid_argument("harmonic_sum_check: N_max must be >= 1");
    HarmonicSumReport report;
    report.all_hold = true;
    report.min_upper_slack = std::numeric_limits<double>::infinity();
    report.min_outer_slack = std::numeric_limits<double>::infinity();
    for (double theta : theta_grid) {
        if (!(theta > 0.0 && theta < 1.0))
            throw std::invalid_argument("harmonic_sum_check: theta must lie in (0,1)");
        double sum = 0.0;
        for (long long N = 1; N <= N_max; ++N) {
            sum += std::pow(static_cast<double>(N), -theta);
            double growth = std::pow(static_cast<double>(N), 1.0 - theta) / (1.0 - theta);
            double inner = 1.0 + growth;
            double outer = 2.0 * growth;
            if (!(sum <= inner) || !(inner <= outer)) report.all_hold = false;
            report.min_upper_slack = std::min(report.min_upper_slack, inner - sum);
            report.min_outer_slack = std::min(report.min_outer_slack, outer - inner);
            ++report.cases_checked;
        }
    }
    return report;
}

TrigPoly linear_oracle(const ProblemInstance& inst, const BoundaryFn& weight_fn) {
    ProblemInstance refined = inst;
    refined.N = 2 * inst.N;
    refined.quad.min_panels_per_arc = 2 * inst.quad.min_panels_per_arc;
    refined.penalty_eta = 10.0 * inst.penalty_eta;
    if (inst.penalty_eta == 0.0) refined.penalty_eta = 0.0;  // verification mode stays penalty-free

    ArcQuadrature qr = robin_quadrature(refined);
    std::vector<double> weight(qr.nodes.size());
    for (size_t j = 0; j < weight.size(); ++j) weight[j] = weight_fn(qr.nodes[j]);
    return solve_step(assemble(refined, weight));
}

double v_norm_distance(const TrigPoly& a, const TrigPoly& b) {
    int degree = std::max(a.degree, b.degree);
    TrigPoly diff = TrigPoly::zero(degree);
    for (int n = -degree; n <= degree; ++n) diff.set_coeff(n, a.coeff(n) - b.coeff(n));
    return v_norm(diff);
}

}  // namespace robindisk
