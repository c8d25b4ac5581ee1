// Fourier multipliers, Lebesgue/Sobolev norms, and small field arithmetic.
#pragma once

#include "dwlab/grid.hpp"
#include "dwlab/rational.hpp"

#include <array>
#include <functional>
#include <string>

namespace dwlab {

// A diagonal operator on the frequency lattice.
struct Multiplier {
  Grid grid;
  std::vector<std::complex<double>> values;  // one factor per lattice point
  std::string label;
};

// Builds a multiplier from a radial symbol m(|xi|).
Multiplier make_radial_multiplier(const Grid& g, const std::string& label,
                                  const std::function<std::complex<double>(double)>& m);

// Builds a multiplier from a full symbol m(xi_1..xi_d, |xi|).
Multiplier make_multiplier(
    const Grid& g, const std::string& label,
    const std::function<std::complex<double>(const std::array<double, 4>&, double)>& m);

// Pointwise product of two multipliers on the same grid.
Multiplier compose(const Multiplier& a, const Multiplier& b);

// Applies m on the frequency side; the result comes back in the input's
// representation.  Throws std::invalid_argument on grid mismatch.
Field apply_multiplier(const Multiplier& m, const Field& f);

// (sum |f|^r * cell_volume)^(1/r); max norm when r is infinite.  Requires the
// physical representation and r >= 1.
double lebesgue_norm(const Field& f, const Rational& r);
double lebesgue_norm(const Field& f, double r);  // same, float exponent

// || <nabla>^s f ||_{L^p}: weight (1+|xi|^2)^(s/2) on the frequency side, then
// the Lebesgue norm.  Accepts either representation.
double sobolev_norm(const Field& f, double s, const Rational& p);
double sobolev_norm(const Field& f, double s, double p);

// <nabla>^s f as a field, in the input's representation.
Field bessel_potential(const Field& f, double s);

// Field arithmetic (same grid and representation required).
Field add(const Field& a, const Field& b);
Field sub(const Field& a, const Field& b);
Field scale(const Field& f, std::complex<double> c);
// a += c * b, in place.
void axpy(Field& a, std::complex<double> c, const Field& b);

// L^2 inner product (with the cell-volume weight); representations must match.
std::complex<double> inner_product(const Field& a, const Field& b);

// max_x |a - b| over the lattice; representations must match.
double max_abs_diff(const Field& a, const Field& b);
double max_abs(const Field& f);

// Unit-coefficient single mode: frequency-side delta at the lattice point
// with per-axis signed wavenumbers k (entries beyond d are ignored).
Field single_mode(const Grid& g, const std::array<int, 4>& k);

// Spectral resampling to n_new points per axis in the same box: zero-pads or
// truncates the frequency lattice, with the unitary sqrt factor chosen so the
// represented function is unchanged on every mode both lattices resolve.
// Returns the input's representation.
Field resample(const Field& f, int n_new);

// Pointwise product of two physical-side fields on the same grid.
Field pointwise_product(const Field& a, const Field& b);

// fg evaluated on the doubled lattice and truncated back, so every retained
// Fourier coefficient of the product is alias-free.  Returns frequency side.
Field dealiased_product(const Field& f, const Field& g);

// f(2^m x) as a lattice function: each mode moves k -> 2^m k with indices
// wrapped modulo the lattice (exact for sampled exponentials).  m >= 0.
Field dyadic_dilate(const Field& f, int m);

}  // namespace dwlab
