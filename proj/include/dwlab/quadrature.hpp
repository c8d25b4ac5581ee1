// One-dimensional quadrature rules used by the physical-space oracles.
#pragma once

#include <vector>

namespace dwlab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule of the given order on [-1, 1] (Newton iteration on the
// Legendre recurrence; nodes accurate to machine precision).  order >= 1.
QuadratureRule gauss_legendre(int order);

// The same rule mapped affinely onto [a, b].
QuadratureRule gauss_legendre(int order, double a, double b);

}  // namespace dwlab
