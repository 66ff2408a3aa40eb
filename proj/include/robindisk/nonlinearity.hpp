#pragma once

namespace robindisk {

// Exponent parameter of the boundary nonlinearity. delta = max(value, 1-value)
// is the decay/growth rate that all majorants are phrased in; it lies in [1/2, 1).
struct Alpha {
    double value;
    double delta;
    explicit Alpha(double v);
};

// f(r) = (e^{alpha r} - e^{-(1-alpha) r}) / r, extended by f(0) = 1.
// Strictly positive for all real r. Inputs with |r| > 700 are rejected
// (exponential overflow; such traces only arise from a diverged iteration).
// Below |r| = 1e-4 a degree-6 Taylor truncation replaces the closed form.
double f_alpha(const Alpha& a, double r);

// Taylor coefficient b_m = (alpha^m - (-1)^m (1-alpha)^m) / m!, m >= 1.
// Satisfies |b_m| <= 2/m! and b_1 = 1.
double taylor_coeff_b(const Alpha& a, int m);

// Majorant of |f(r) r - r|: the truncated series 2 sum_{k=1..terms} delta^k |r|^{k+1} / k!
// (= 2|r| (e^{delta |r|} - 1) in closed form). Default truncation keeps the
// tail below 1e-14 relative for |r| <= 20.
double p2_bound(const Alpha& a, double r, int terms = 60);

// Majorant of f(r): 2 delta (1 + delta |r| e^{delta |r|}).
double p3_bound(const Alpha& a, double r);

}  // namespace robindisk
