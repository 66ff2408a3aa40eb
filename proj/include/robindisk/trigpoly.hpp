#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "robindisk/arcs.hpp"

namespace robindisk {

// Trigonometric polynomial sum_{|n| <= N} c_n e^{in theta}. Coefficients are
// stored densely as c[n + N]. Real-valued traces satisfy c_{-n} = conj(c_n);
// solver paths require that, norm and sampler paths also accept complex data.
struct TrigPoly {
    int degree = 0;
    std::vector<std::complex<double>> c;  // size 2*degree + 1

    static TrigPoly zero(int N);
    std::complex<double> coeff(int n) const;  // 0 outside [-degree, degree]
    void set_coeff(int n, std::complex<double> value);
    bool is_real(double tol = 1e-12) const;
};

struct SobolevIndex {
    double s;
    explicit SobolevIndex(double value);  // requires 0 <= s <= 1
};

// Degree-N truncation from M >= 2N+1 samples at uniform angles 2 pi j / M
// (trapezoid rule; exact to roundoff for band-limited input of degree <= N).
TrigPoly fourier_from_samples(const std::vector<double>& samples, int N);

// sum c_n e^{in theta}; the imaginary residue of real-symmetric input is discarded.
double eval_trace(const TrigPoly& f, double theta);
std::complex<double> eval_trace_complex(const TrigPoly& f, double theta);

// Normalized periodic norm ((1/2pi) int |f|^p)^{1/p} by the uniform grid rule.
// Requires quad_points >= 4*degree + 4.
double lp_norm_periodic(const TrigPoly& f, double p, int quad_points);

// (sum_k (1+k^2)^s |c_k|^2)^{1/2}.
double hs_norm(const TrigPoly& f, SobolevIndex s);

// Fourier symbol of the Dirichlet-to-Neumann map: c_n -> |n| c_n.
TrigPoly dtn_apply(const TrigPoly& f);

// Dirichlet energy of the harmonic extension: (2 pi sum |n| |c_n|^2)^{1/2}.
// A seminorm; zero exactly on constants.
double v_norm(const TrigPoly& f);

// Low/high frequency split at cutoff N: the first part keeps |k| < N, the
// second keeps |k| >= N; the parts sum to f exactly.
std::pair<TrigPoly, TrigPoly> split_low_high(const TrigPoly& f, int N);

// Surface-measure L2 norm (int_arcs |f|^2 dsigma)^{1/2} by the given rule.
// The rule must cover exactly the arcs (weight sum equals their measure).
double surface_l2_on_arcs(const TrigPoly& f, const std::vector<AngularArc>& arcs,
                          const ArcQuadrature& quad);

// Sampler ensemble: c_0 standard normal real; c_n (n >= 1) with independent
// standard-normal real and imaginary parts scaled by (1+n^2)^{-1/2}, then
// symmetrized. Keeps H^{1/2} norms O(1). Deterministic in the engine state.
class RandomTrigPolyStream {
  public:
    explicit RandomTrigPolyStream(unsigned long long seed);
    TrigPoly next(int degree);

  private:
    unsigned long long state_;
    double next_normal();
    double next_uniform();
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace robindisk
