#pragma once

#include <string>
#include <vector>

namespace robindisk {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Closed arc {theta mod 2pi : start <= theta <= end} on the unit circle.
// start lies in [0, 2pi); end > start and end - start < 2pi; arcs crossing
// theta = 0 use end > 2pi.
struct AngularArc {
    double start = 0.0;
    double end = 0.0;
    double length() const { return end - start; }
};

// Throws std::invalid_argument unless the arc is well-formed.
AngularArc make_arc(double start, double end);

bool arc_well_formed(const AngularArc& a);

// Three-way boundary split. Group membership is by open interior; shared
// endpoints are the "negligible set" where groups may touch.
struct ArcPartition {
    std::vector<AngularArc> dirichlet;
    std::vector<AngularArc> neumann;
    std::vector<AngularArc> robin;
};

double total_measure(const std::vector<AngularArc>& arcs);

struct ValidationResult {
    bool ok = false;
    std::string message;  // names the first violated clause when !ok
};

// Accepts iff: interiors pairwise disjoint, closures cover the circle
// (total measure 2pi within 1e-12), and each group has positive measure.
// Clauses are checked in that order and the first violation is reported.
ValidationResult validate_partition(const ArcPartition& p);

// Composite Gauss-Legendre nodes and arc-length weights on a list of arcs.
struct ArcQuadrature {
    std::vector<double> nodes;    // angles, monotone within each arc (may exceed 2pi on wrap arcs)
    std::vector<double> weights;  // positive, sum = total arc measure
};

// panels_per_arc >= 1, points_per_panel >= 2.
ArcQuadrature build_quadrature(const std::vector<AngularArc>& arcs, int panels_per_arc,
                               int points_per_panel);

enum class Region { Dirichlet, Neumann, Robin, BoundaryPoint };

// Region whose interior contains theta mod 2pi; shared endpoints (and any
// point not strictly inside an arc) report BoundaryPoint. Pre: validated p.
Region locate(double theta, const ArcPartition& p);

}  // namespace robindisk
