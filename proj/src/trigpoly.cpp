#include "robindisk/trigpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace robindisk {

TrigPoly TrigPoly::zero(int N) {
    if (N < 0) throw std::invalid_argument("TrigPoly: degree must be >= 0");
    TrigPoly f;
    f.degree = N;
    f.c.assign(2 * N + 1, {0.0, 0.0});
    return f;
}

std::complex<double> TrigPoly::coeff(int n) const {
    if (n < -degree || n > degree) return {0.0, 0.0};
    return c[n + degree];
}

void TrigPoly::set_coeff(int n, std::complex<double> value) {
    if (n < -degree || n > degree) throw std::out_of_range("TrigPoly: mode outside degree");
    c[n + degree] = value;
}

bool TrigPoly::is_real(double tol) const {
    for (int n = 0; n <= degree; ++n)
        if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol) return false;
    return true;
}

SobolevIndex::SobolevIndex(double value) : s(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("SobolevIndex: s must lie in [0,1]");
}

TrigPoly fourier_from_samples(const std::vector<double>& samples, int N) {
    const int M = static_cast<int>(samples.size());
    if (M < 2 * N + 1)
        throw std::invalid_argument("fourier_from_samples: need M >= 2N+1 samples (aliasing)");
    TrigPoly f = TrigPoly::zero(N);
    for (int k = -N; k <= N; ++k) {
        std::complex<double> sum{0.0, 0.0};
        for (int j = 0; j < M; ++j) {
            double angle = -kTwoPi * k * j / M;
            sum += samples[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        f.set_coeff(k, sum / static_cast<double>(M));
    }
    return f;
}

std::complex<double> eval_trace_complex(const TrigPoly& f, double theta) {
    // Horner form in z = e^{i theta}: sum over n of c_n z^n = z^{-N} * poly(z).
    const std::complex<double> z(std::cos(theta), std::sin(theta));
    std::complex<double> acc{0.0, 0.0};
    for (int idx = 2 * f.degree; idx >= 0; --idx) acc = acc * z + f.c[idx];
    // Multiply by z^{-N} = conj(z)^N.
    std::complex<double> zbar = std::conj(z);
    std::complex<double> shift{1.0, 0.0};
    for (int k = 0; k < f.degree; ++k) shift *= zbar;
    return acc * shift;
}

double eval_trace(const TrigPoly& f, double theta) {
    return eval_trace_complex(f, theta).real();
}

double lp_norm_periodic(const TrigPoly& f, double p, int quad_points) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_periodic: p must be >= 1");
    if (quad_points < 4 * f.degree + 4)
        throw std::invalid_argument("lp_norm_periodic: need quad_points >= 4*degree + 4");
    double sum = 0.0;
    for (int j = 0; j < quad_points; ++j) {
        double theta = kTwoPi * j / quad_points;
        sum += std::pow(std::abs(eval_trace_complex(f, theta)), p);
    }
    return std::pow(sum / quad_points, 1.0 / p);
}

double hs_norm(const TrigPoly& f, SobolevIndex s) {
    double sum = 0.0;
    for (int k = -f.degree; k <= f.degree; ++k)
        sum += std::pow(1.0 + static_cast<double>(k) * k, s.s) * std::norm(f.coeff(k));
    return std::sqrt(sum);
}

TrigPoly dtn_apply(const TrigPoly& f) {
    TrigPoly g = TrigPoly::zero(f.degree);
    for (int k = -f.degree; k <= f.degree; ++k)
        g.set_coeff(k, std::abs(static_cast<double>(k)) * f.coeff(k));
    return g;
}

double v_norm(const TrigPoly& f) {
    double sum = 0.0;
    for (int k = -f.degree; k <= f.degree; ++k)
        sum += std::abs(static_cast<double>(k)) * std::norm(f.coeff(k));
    return std::sqrt(kTwoPi * sum);
}

std::pair<TrigPoly, TrigPoly> split_low_high(const TrigPoly& f, int N) {
    if (N < 0) throw std::invalid_argument("split_low_high: cutoff must be >= 0");
    TrigPoly low = TrigPoly::zero(f.degree);
    TrigPoly high = TrigPoly::zero(f.degree);
    for (int k = -f.degree; k <= f.degree; ++k) {
        if (std::abs(k) < N)
            low.set_coeff(k, f.coeff(k));
        else
            high.set_coeff(k, f.coeff(k));
    }
    return {low, high};
}

double surface_l2_on_arcs(const TrigPoly& f, const std::vector<AngularArc>& arcs,
                          const ArcQuadrature& quad) {
    double measure = total_measure(arcs);
    double wsum = 0.0;
    for (double w : quad.weights) wsum += w;
    if (std::abs(wsum - measure) > 1e-9 * (1.0 + measure))
        throw std::invalid_argument("surface_l2_on_arcs: quadrature does not cover the arcs");
    double sum = 0.0;
    for (size_t j = 0; j < quad.nodes.size(); ++j)
        sum += quad.weights[j] * std::norm(eval_trace_complex(f, quad.nodes[j]));
    return std::sqrt(sum);
}

// splitmix64: tiny, deterministic, platform-independent generator.
RandomTrigPolyStream::RandomTrigPolyStream(unsigned long long seed) : state_(seed) {}

double RandomTrigPolyStream::next_uniform() {
    state_ += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    // Top 53 bits to (0, 1]; never returns 0, so log() below is safe.
    return (static_cast<double>(z >> 11) + 1.0) * 0x1.0p-53;
}

double RandomTrigPolyStream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return radius * std::cos(kTwoPi * u2);
}

TrigPoly RandomTrigPolyStream::next(int degree) {
    TrigPoly f = TrigPoly::zero(degree);
    f.set_coeff(0, next_normal());
    for (int n = 1; n <= degree; ++n) {
        double scale = 1.0 / std::sqrt(1.0 + static_cast<double>(n) * n);
        std::complex<double> cn(scale * next_normal(), scale * next_normal());
        f.set_coeff(n, cn);
        f.set_coeff(-n, std::conj(cn));
    }
    return f;
}

}  // namespace robindisk
