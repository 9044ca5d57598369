#pragma once

#include <vector>

namespace starlike::detail {

// n-point Gauss-Legendre rule on [0,1]. Rules are computed once per size and
// cached; n must be one of 32, 64, 128, 256, 512, 1024.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const QuadRule& gauss_legendre_unit(int n);

} // namespace starlike::detail
