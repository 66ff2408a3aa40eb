#include "robindisk/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace robindisk {

namespace {

constexpr double kOverflowGuard = 700.0;
constexpr double kSeriesThreshold = 1e-4;

void check_range(double r) {
    if (!std::isfinite(r)) throw std::domain_error("f_alpha: non-finite input");
    if (std::abs(r) > kOverflowGuard)
        throw std::domain_error("f_alpha: |r| > 700 exceeds the overflow guard");
}

}  // namespace

Alpha::Alpha(double v) : value(v), delta(v > 1.0 - v ? v : 1.0 - v) {
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("Alpha: value must lie in (0,1)");
}

double taylor_coeff_b(const Alpha& a, int m) {
    if (m < 1) throw std::invalid_argument("taylor_coeff_b: m must be >= 1");
    double am = std::pow(a.value, m);
    double bm = std::pow(1.0 - a.value, m);
    double num = (m % 2 == 0) ? am - bm : am + bm;
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= k;
    return num / fact;
}

double f_alpha(const Alpha& a, double r) {
    check_range(r);
    if (std::abs(r) < kSeriesThreshold) {
        // f(r) = 1 + sum_{m>=1} b_{m+1} r^m; six terms reach machine precision here.
        double sum = 1.0;
        double rm = 1.0;
        for (int m = 1; m <= 6; ++m) {
            rm *= r;
            sum += taylor_coeff_b(a, m + 1) * rm;
        }
        return sum;
    }
    // expm1 keeps the difference accurate when both exponentials are near 1.
    return (std::expm1(a.value * r) - std::expm1(-(1.0 - a.value) * r)) / r;
}

double p2_bound(const Alpha& a, double r, int terms) {
    if (terms < 1) throw std::invalid_argument("p2_bound: terms must be >= 1");
    check_range(r);
    double x = std::abs(r);
    // term_k = delta^k x^{k+1} / k!, accumulated by the ratio recurrence.
    double term = a.delta * x * x;
    double sum = term;
    for (int k = 2; k <= terms; ++k) {
        term *= a.delta * x / k;
        sum += term;
    }
    return 2.0 * sum;
}

double p3_bound(const Alpha& a, double r) {
    check_range(r);
    double dx = a.delta * std::abs(r);
    return 2.0 * a.delta * (1.0 + dx * std::exp(dx));
}

}  // namespace robindisk
