// Periodic spatial grids and sampled complex fields.
//
// The box is [-L/2, L/2)^d with n samples per axis at x_a = -L/2 + a*L/n.
// The frequency lattice is xi_k = 2*pi*k/L with k in {-n/2, ..., n/2-1} per
// axis, stored in standard FFT order (storage index a maps to k = a for
// a < n/2 and k = a - n otherwise).  Values are row-major over axes.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dwlab {

struct Grid {
  int d = 0;             // spatial dimension, 1..4
  int n = 0;             // points per axis, even, >= 8
  double box_length = 0; // L

  long long size() const {
    long long s = 1;
    for (int i = 0; i < d; ++i) s *= n;
    return s;
  }
  double dx() const { return box_length / n; }
  double cell_volume() const {
    double v = 1;
    for (int i = 0; i < d; ++i) v *= dx();
    return v;
  }
  // Storage index along one axis -> signed integer wavenumber.
  int wavenumber(int a) const { return a < n / 2 ? a : a - n; }
  // Storage index along one axis -> frequency 2*pi*k/L.
  double freq(int a) const { return 2.0 * 3.141592653589793238462643383279502884 * wavenumber(a) / box_length; }
  // Physical coordinate along one axis.
  double coord(int a) const { return -0.5 * box_length + a * dx(); }
  // Largest resolved frequency per axis (attained at k = -n/2).
  double nyquist() const { return 3.141592653589793238462643383279502884 * n / box_length; }
  // Largest resolved |xi| over the whole lattice.
  double max_freq() const;
};

bool operator==(const Grid& a, const Grid& b);
bool operator!=(const Grid& a, const Grid& b);

// Validates 1 <= d <= 4, n even >= 8, L > 0; throws std::domain_error.
Grid make_grid(int d, int n, double box_length);

enum class Rep : std::uint8_t { Physical = 0, Frequency = 1 };

struct Field {
  Grid grid;
  Rep rep = Rep::Physical;
  std::vector<std::complex<double>> values;  // length grid.size(), row-major
};

// Zero-filled field.
Field make_field(const Grid& g, Rep rep);

// Calls fn(idx, a[0..d-1]) for every lattice point in row-major order, where
// a holds the per-axis storage indices.  The loop shape is shared by every
// multiplier builder, so it lives here.
template <typename Fn>
void for_each_index(const Grid& g, Fn&& fn) {
  int a[4] = {0, 0, 0, 0};
  const long long total = g.size();
  for (long long idx = 0; idx < total; ++idx) {
    fn(idx, a);
    // Row-major: the last axis varies fastest.
    for (int ax = g.d - 1; ax >= 0; --ax) {
      if (++a[ax] < g.n) break;
      a[ax] = 0;
    }
  }
}

}  // namespace dwlab
