#include "robindisk/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robindisk/gauss.hpp"

namespace robindisk {

bool arc_well_formed(const AngularArc& a) {
    if (!std::isfinite(a.start) || !std::isfinite(a.end)) return false;
    if (a.start < 0.0 || a.start >= kTwoPi) return false;
    double len = a.end - a.start;
    return len > 0.0 && len < kTwoPi;
}

AngularArc make_arc(double start, double end) {
    AngularArc a{start, end};
    if (!arc_well_formed(a))
        throw std::invalid_argument("make_arc: need start in [0,2pi) and 0 < end-start < 2pi");
    return a;
}

double total_measure(const std::vector<AngularArc>& arcs) {
    double sum = 0.0;
    for (const auto& a : arcs) sum += a.length();
    return sum;
}

namespace {

// Unrolls an arc into one or two plain intervals inside [0, 2pi].
void unroll(const AngularArc& a, std::vector<std::pair<double, double>>& out) {
    if (a.end <= kTwoPi) {
        out.emplace_back(a.start, a.end);
    } else {
        out.emplace_back(a.start, kTwoPi);
        out.emplace_back(0.0, a.end - kTwoPi);
    }
}

}  // namespace

ValidationResult validate_partition(const ArcPartition& p) {
    for (const auto* group : {&p.dirichlet, &p.neumann, &p.robin})
        for (const auto& a : *group)
            if (!arc_well_formed(a))
                throw std::invalid_argument("validate_partition: malformed arc");

    // Clause 1: pairwise disjoint interiors.
    std::vector<std::pair<double, double>> intervals;
    for (const auto* group : {&p.dirichlet, &p.neumann, &p.robin})
        for (const auto& a : *group) unroll(a, intervals);
    std::sort(intervals.begin(), intervals.end());
    for (size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first < intervals[i - 1].second - 1e-12)
            return {false, "overlap: arc interiors intersect near angle " +
                               std::to_string(intervals[i].first)};
    }

    // Clause 2: closures cover the circle.
    double covered = total_measure(p.dirichlet) + total_measure(p.neumann) +
                     total_measure(p.robin);
    if (std::abs(covered - kTwoPi) > 1e-12)
        return {false, "coverage: total arc measure " + std::to_string(covered) +
                           " differs from 2pi by more than 1e-12"};

    // Clause 3: every group has positive measure.
    if (p.dirichlet.empty() || total_measure(p.dirichlet) <= 0.0)
        return {false, "empty group: Dirichlet arcs have zero measure"};
    if (p.neumann.empty() || total_measure(p.neumann) <= 0.0)
        return {false, "empty group: Neumann arcs have zero measure"};
    if (p.robin.empty() || total_measure(p.robin) <= 0.0)
        return {false, "empty group: Robin arcs have zero measure"};

    return {true, ""};
}

ArcQuadrature build_quadrature(const std::vector<AngularArc>& arcs, int panels_per_arc,
                               int points_per_panel) {
    if (panels_per_arc < 1)
        throw std::invalid_argument("build_quadrature: panels_per_arc must be >= 1");
    if (points_per_panel < 2)
        throw std::invalid_argument("build_quadrature: points_per_panel must be >= 2");
    const GaussRule& rule = gauss_legendre(points_per_panel);
    ArcQuadrature q;
    q.nodes.reserve(arcs.size() * panels_per_arc * points_per_panel);
    q.weights.reserve(q.nodes.capacity());
    for (const auto& a : arcs) {
        if (!arc_well_formed(a)) throw std::invalid_argument("build_quadrature: malformed arc");
        double h = a.length() / panels_per_arc;
        for (int panel = 0; panel < panels_per_arc; ++panel) {
            double lo = a.start + panel * h;
            for (int j = 0; j < points_per_panel; ++j) {
                q.nodes.push_back(lo + 0.5 * h * (rule.nodes[j] + 1.0));
                q.weights.push_back(0.5 * h * rule.weights[j]);
            }
        }
    }
    return q;
}

namespace {

// Offset of theta from the arc start, folded into [0, 2pi).
double offset_in(const AngularArc& a, double theta) {
    double phi = std::fmod(theta, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    double d = phi - a.start;
    if (d < 0.0) d += kTwoPi;
    return d;
}

}  // namespace

Region locate(double theta, const ArcPartition& p) {
    const std::vector<AngularArc>* groups[3] = {&p.dirichlet, &p.neumann, &p.robin};
    const Region tags[3] = {Region::Dirichlet, Region::Neumann, Region::Robin};
    for (int g = 0; g < 3; ++g)
        for (const auto& a : *groups[g]) {
            double d = offset_in(a, theta);
            if (d > 0.0 && d < a.length()) return tags[g];
        }
    return Region::BoundaryPoint;
}

}  // namespace robindisk
