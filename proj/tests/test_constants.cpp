#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "robindisk/arcs.hpp"
#include "robindisk/constants.hpp"

using namespace robindisk;

namespace {
// Canonical data norms: phi = 1 on an arc of length pi/2, g = 1/2 on an arc
// of length pi, in the surface (arc length) L2 norm.
constexpr double kPhiL2 = 1.2533141373155002512;   // sqrt(pi/2)
constexpr double kGL2 = 0.88622692545275801365;    // 0.5 * sqrt(pi)
constexpr double kM0Canonical = 2.1395410627682582649;
}  // namespace

TEST_CASE("embedding constant tilde_R at reference orders") {
    // tilde_R(p) = (3 (4/pi)^{p-1} p^{(p-2)/2})^{1/p}.
    CHECK(tilde_R(3.0) == doctest::Approx(2.0347015056134364291).epsilon(1e-15));
    CHECK(tilde_R(4.0) == doctest::Approx(2.2308886835729489949).epsilon(1e-15));
    CHECK(tilde_R(8.0) == doctest::Approx(3.0909733152808307923).epsilon(1e-15));
    // Closed form at p = 4: (12 (4/pi)^3)^{1/4}.
    CHECK(tilde_R(4.0) ==
          doctest::Approx(std::pow(12.0 * std::pow(4.0 / kPi, 3.0), 0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(tilde_R(2.0), std::domain_error);
    CHECK_THROWS_AS(tilde_R(1.5), std::domain_error);
}

TEST_CASE("lambda_p table") {
    CHECK(lambda_p(2.0) == doctest::Approx(1.0));
    CHECK(lambda_p(3.0) == doctest::Approx(4.0694030112268728582).epsilon(1e-15));
    CHECK(lambda_p(4.0) == doctest::Approx(4.4617773671458979898).epsilon(1e-15));
    CHECK(lambda_p(6.0) == doctest::Approx(5.3377601343011141899).epsilon(1e-15));
    CHECK(lambda_p(8.0) == doctest::Approx(6.1819466305616615845).epsilon(1e-15));
    CHECK(lambda_p(12.0) == doctest::Approx(7.7022313892640536659).epsilon(1e-15));
    CHECK_THROWS_AS(lambda_p(1.9), std::domain_error);
}

TEST_CASE("lambda_p grows monotonically inside its sqrt(p) envelope") {
    double prev = lambda_p(3.0);
    for (double p : {4.0, 5.0, 6.0, 8.0, 12.0, 20.0, 50.0}) {
        double cur = lambda_p(p);
        CHECK(cur > prev);
        prev = cur;
    }
    // lambda_p / sqrt(p) = (8/pi) (3pi/(4p))^{1/p}: below 8/pi for p >= 3 and
    // increasing toward that limit.
    const double eight_over_pi = 2.5464790894703253723;
    for (double p : {3.0, 4.0, 10.0, 50.0, 200.0})
        CHECK(lambda_p(p) <= eight_over_pi * std::sqrt(p));
    CHECK(lambda_p(50.0) / std::sqrt(50.0) > lambda_p(4.0) / 2.0);
    CHECK(lambda_p(200.0) / std::sqrt(200.0) > lambda_p(50.0) / std::sqrt(50.0));
}

TEST_CASE("uniform majorant constant") {
    CHECK(majorant_C() == doctest::Approx(38.907334518657704234).epsilon(1e-13));
    CHECK(majorant_C() == doctest::Approx(384.0 / (kPi * kPi)).epsilon(1e-13));
    // The per-p requirement approaches 8/pi for large p and never exceeds C.
    double limit = 2.5464790894703253723;  // 8/pi
    CHECK(majorant_requirement(1e6) == doctest::Approx(limit).epsilon(1e-4));
    for (double p : {3.0, 4.0, 10.0, 50.0, 200.0}) {
        CHECK(majorant_requirement(p) <= majorant_C() * (1.0 + 1e-13));
        CHECK(majorant_requirement(p) >= limit * (1.0 - 1e-13));
    }
    // The sup is attained at p = 3.
    CHECK(majorant_requirement(3.0) == doctest::Approx(majorant_C()).epsilon(1e-13));
    // Direct inequality form lambda_p^p <= C^{p-2} p^{(p-2)/2} in log space.
    for (double p : {3.0, 7.0, 33.0, 150.0}) {
        double lhs = p * std::log(lambda_p(p));
        double rhs = (p - 2.0) * std::log(majorant_C()) + 0.5 * (p - 2.0) * std::log(p);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("series coefficients q_m") {
    // q_m = 4 (m+2)^{(m+2)/2} / (m+1)!.
    CHECK(q_coeff(3) == doctest::Approx(9.316949906249123735).epsilon(1e-14));
    CHECK(q_coeff(4) == 7.2);  // 4 * 216 / 120, exact in doubles
    // The rational and log-space evaluations agree across the switchover.
    for (int m : {3, 10, 100, 150, 151, 200}) {
        CHECK(q_coeff(m) == doctest::Approx(std::exp(q_coeff_log(m))).epsilon(1e-12));
    }
    // Root decay q_m^{1/m}, frozen from a high-precision evaluation.
    CHECK(std::exp(q_coeff_log(10) / 10.0) ==
          doctest::Approx(0.8863376035244547232).epsilon(1e-14));
    CHECK(std::exp(q_coeff_log(50) / 50.0) ==
          doctest::Approx(0.38067121437730286508).epsilon(1e-14));
    CHECK_THROWS_AS(q_coeff_log(2), std::invalid_argument);
}

TEST_CASE("entire series R(z)") {
    CHECK(R_entire(0.0) == doctest::Approx(9.316949906249123735).epsilon(1e-14));  // = q_3
    // The requested relative tolerance governs where the tail is cut, so the
    // default (1e-12) is only good to that level against the exact sum.
    CHECK(R_entire(1.0, 1e-15) == doctest::Approx(29.018031407081018945).epsilon(1e-13));
    CHECK(R_entire(1.0) == doctest::Approx(29.018031407081018945).epsilon(3e-12));
    CHECK_THROWS_AS(R_entire(-1.0), std::domain_error);
    CHECK_THROWS_AS(R_entire(1.0, /*rel_tol=*/0.1), std::domain_error);
    // Log-space evaluation agrees with the plain value where both are finite.
    CHECK(std::exp(r_entire_log(1.0)) == doctest::Approx(R_entire(1.0)).epsilon(1e-12));
    // Large arguments stay finite in log space even after exp overflows.
    double big = r_entire_log(500.0);
    CHECK(std::isfinite(big));
    CHECK(big > 1000.0);
}

TEST_CASE("data functional M0") {
    CHECK(compute_M0(kPhiL2, kGL2) == doctest::Approx(kM0Canonical).epsilon(1e-15));
    CHECK_THROWS_AS(compute_M0(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_M0(-1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(compute_M0(0.0, 0.0, /*allow_zero=*/true));
    CHECK(compute_M0(0.0, 0.0, true) == doctest::Approx(0.0));
}

TEST_CASE("smallness threshold Lambda") {
    CHECK(compute_Lambda(0.01) == doctest::Approx(0.67256369394373791107).epsilon(1e-12));
    CHECK(compute_Lambda(0.02) == doctest::Approx(0.088637274657776985652).epsilon(1e-12));
    // Monotone decreasing in M0.
    double prev = compute_Lambda(0.005);
    for (double m0 : {0.01, 0.02, 0.05, 0.1, 0.5}) {
        double cur = compute_Lambda(m0);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(compute_Lambda(0.0), std::domain_error);
    CHECK_THROWS_AS(compute_Lambda(-1.0), std::domain_error);
}

TEST_CASE("Lambda log10 stays finite after the double value underflows") {
    // At the canonical data size the threshold is ~1e-4091: zero in double
    // precision, but its base-10 logarithm is perfectly representable.
    CHECK(compute_Lambda(kM0Canonical) == 0.0);
    double lg = compute_Lambda_log10(kM0Canonical);
    CHECK(std::isfinite(lg));
    CHECK(lg < -4000.0);
    CHECK(lg > -4200.0);
    // Consistency where both representations are finite.
    CHECK(compute_Lambda_log10(0.02) ==
          doctest::Approx(std::log10(compute_Lambda(0.02))).epsilon(1e-12));
}

TEST_CASE("small-data regime: Lambda at one percent of the canonical data") {
    CHECK(compute_Lambda(0.01 * kM0Canonical) ==
          doctest::Approx(0.068780808087244641983).epsilon(1e-12));
}

TEST_CASE("admissibility check") {
    const double lambda = 0.068780808087244641983;
    Admissibility a = check_admissible({0.01, 0.02, 0.03}, 0.5, lambda);
    CHECK(a.admissible);
    CHECK(a.bound == doctest::Approx(0.034390404043622321).epsilon(1e-13));
    CHECK(a.max_sample == doctest::Approx(0.03));
    CHECK(a.min_sample == doctest::Approx(0.01));
    CHECK(a.margin == doctest::Approx(a.bound - 0.03).epsilon(1e-12));

    Admissibility b = check_admissible({0.01, 0.04}, 0.5, lambda);
    CHECK_FALSE(b.admissible);
    CHECK(b.margin < 0.0);

    // A negative coefficient is never admissible.
    Admissibility c = check_admissible({-1e-9, 0.01}, 0.5, lambda);
    CHECK_FALSE(c.admissible);

    // The inequality is non-strict: exact equality with the bound passes.
    Admissibility d = check_admissible({0.5 * lambda}, 0.5, lambda);
    CHECK(d.admissible);
    CHECK(d.margin == doctest::Approx(0.0));

    // Zero coefficient is admissible even when Lambda has underflowed to 0.
    Admissibility e = check_admissible({0.0, 0.0}, 0.5, 0.0);
    CHECK(e.admissible);

    CHECK_THROWS_AS(check_admissible({}, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(check_admissible({0.1}, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("constants report assembles every derived quantity consistently") {
    ConstantsReport rep = build_constants_report(kPhiL2, kGL2, 0.5);
    CHECK(rep.M0 == doctest::Approx(kM0Canonical).epsilon(1e-14));
    CHECK(rep.K == doctest::Approx(0.5));
    CHECK(rep.xi == doctest::Approx(0.5));
    CHECK(rep.majorant_C == doctest::Approx(38.907334518657704234).epsilon(1e-13));
    CHECK(rep.lambda_table.at(2) == doctest::Approx(1.0));
    CHECK(rep.lambda_table.at(3) == doctest::Approx(4.0694030112268728582).epsilon(1e-14));
    CHECK(rep.lambda_table.at(12) == doctest::Approx(7.7022313892640536659).epsilon(1e-14));
    CHECK(rep.Lambda == 0.0);  // underflow at this data size
    CHECK(std::isfinite(rep.Lambda_log10));
    CHECK(std::isinf(rep.R_at_CM0));  // CM0 ~ 83: R overflows in double
    CHECK(std::isfinite(rep.R_at_CM0_log10));

    // Small data: every field finite and the bound xi*Lambda is positive.
    ConstantsReport small = build_constants_report(0.01 * kPhiL2, 0.01 * kGL2, 0.45);
    CHECK(small.M0 == doctest::Approx(0.021395410627682582649).epsilon(1e-14));
    CHECK(small.Lambda == doctest::Approx(0.068780808087244641983).epsilon(1e-12));
    CHECK(std::isfinite(small.R_at_CM0));
    CHECK(small.xi * small.Lambda == doctest::Approx(0.030951363639260089).epsilon(1e-12));

    // Degenerate zero data: threshold reported as unbounded.
    ConstantsReport zero = build_constants_report(0.0, 0.0, 0.5);
    CHECK(zero.M0 == 0.0);
    CHECK(std::isinf(zero.Lambda));
}
