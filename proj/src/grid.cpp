#include "dwlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dwlab {

double Grid::max_freq() const { return nyquist() * std::sqrt(static_cast<double>(d)); }

bool operator==(const Grid& a, const Grid& b) {
  return a.d == b.d && a.n == b.n && a.box_length == b.box_length;
}

bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

Grid make_grid(int d, int n, double box_length) {
  if (d < 1 || d > 4) throw std::domain_error("make_grid: d must be in [1, 4]");
  if (n < 8 || n % 2 != 0)
    throw std::domain_error("make_grid: n must be even and >= 8");
  if (!(box_length > 0)) throw std::domain_error("make_grid: box length must be positive");
  Grid g;
  g.d = d;
  g.n = n;
  g.box_length = box_length;
  if (g.size() > (1LL << 28))
    throw std::domain_error("make_grid: grid exceeds the memory budget");
  return g;
}

Field make_field(const Grid& g, Rep rep) {
  Field f;
  f.grid = g;
  f.rep = rep;
  f.values.assign(static_cast<size_t>(g.size()), {0.0, 0.0});
  return f;
}

}  // namespace dwlab
