#pragma once

#include <vector>

namespace robindisk {

// Gauss-Legendre rule on [-1, 1]. Nodes computed by Newton iteration on the
// Legendre polynomial; results are cached per order, so repeated calls are cheap.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// order >= 1; exact for polynomials of degree <= 2*order - 1.
const GaussRule& gauss_legendre(int order);

}  // namespace robindisk
