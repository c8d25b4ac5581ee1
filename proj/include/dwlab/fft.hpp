// Unitary discrete Fourier transforms between the two field representations.
//
// Both directions carry the symmetric 1/sqrt(n^d) scaling, so the discrete
// Plancherel identity holds exactly and a round trip is the identity up to
// rounding.  The centered box enters through a per-coefficient parity phase
// (-1)^(k1+...+kd), making the stored coefficients genuine samples of the
// transform with respect to the x_a = -L/2 + a*L/n sample points.
#pragma once

#include "dwlab/grid.hpp"

namespace dwlab {

// Physical -> Frequency.  Throws std::invalid_argument if f is already
// frequency-side.
Field transform(const Field& f);

// Frequency -> Physical.  Throws std::invalid_argument on mismatch.
Field inverse_transform(const Field& f);

// Convert to the requested representation (no-op when already there).
Field to_rep(const Field& f, Rep target);

// Trigonometric-interpolant value of a frequency-side field at an arbitrary
// point: u(x) = (1/sqrt(n^d)) sum_k c_k e^{i xi_k . x}.  Coincides with the
// inverse transform at lattice points; O(size) per evaluation.  Requires
// x.size() == grid.d and the frequency representation.
std::complex<double> evaluate_at(const Field& f, const std::vector<double>& x);

}  // namespace dwlab
