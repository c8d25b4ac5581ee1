// The damped-wave solution operators.
//
// With mu = sqrt(1/4 - |xi|^2) below the branch point and
// nu = sqrt(|xi|^2 - 1/4) above it, the basic multiplier is
//   L(t, xi) = sinh(t mu)/mu   (|xi| <= 1/2),   sin(t nu)/nu   (|xi| > 1/2),
// and the solution of  u_tt - Lap u + u_t = 0  with data (u0, u1) is
//   u(t) = e^{-t/2} L (u0 + u1) + d/dt[e^{-t/2} L] u0.
// All damped symbols are evaluated in overflow-safe exponential forms; near
// the branch point both branches collapse to one Taylor series in the signed
// quantity m2 = 1/4 - |xi|^2.
#pragma once

#include "dwlab/field_ops.hpp"
#include "dwlab/grid.hpp"

#include <complex>
#include <vector>

namespace dwlab {

struct TimeGrid {
  double t_end = 1.0;  // horizon T; nodes t_i = i*T/steps, i = 0..steps
  int steps = 2;

  double dt() const { return t_end / steps; }
  double node(int i) const { return i * t_end / steps; }
};

// Validates T > 0 and steps >= 2.
TimeGrid make_time_grid(double t_end, int steps);

enum class PropagatorKind { D, DtD, Dt2D, HalfWave };

// A field trajectory sampled on the nodes of a uniform time grid
// (frames.size() == time.steps + 1).
struct Trajectory {
  TimeGrid time;
  std::vector<Field> frames;
};

struct StatePair {
  Field u;  // position
  Field v;  // velocity
};

// Scalar symbol of the damped operator of the given kind at radius rho >= 0.
// Overflow-safe for every t >= 0 (kinds D/DtD/Dt2D decay; HalfWave has
// modulus chi_{>1}(rho)).
std::complex<double> propagator_symbol(PropagatorKind kind, double t, double rho);

// The undamped multiplier L(t, xi) on the frequency lattice.  Note L itself
// grows like e^{t/2} near xi = 0, so extreme t legitimately produce inf here;
// the damped symbols below are the bounded objects.
Multiplier multiplier_L(const Grid& g, double t);

// The damped symbol of `kind` as a lattice multiplier.
Multiplier propagator_multiplier(const Grid& g, PropagatorKind kind, double t);

// Applies the damped operator; result in the input's representation.
Field apply_propagator(PropagatorKind kind, double t, const Field& f);

// (u(t), u_t(t)) from data (u0, u1), computed mode-by-mode with the exact
// 2x2 damped-oscillator flow.  Fields may arrive in either representation;
// the result is physical.
StatePair linear_solution(double t, const Field& u0, const Field& u1);

// Max over interior time nodes of ||u_tt - Lap u + u_t||_2 / ||u||_2 with
// time derivatives by second-order central differences and Lap spectral.
// Requires time_grid.steps >= 4.
double pde_residual(const Field& u0, const Field& u1, const TimeGrid& time_grid);

// t |-> int_0^t D(t-s) F(s) ds by composite trapezoid over the forcing nodes,
// with every operator application spectral (exact per mode).  Implemented as
// a one-step recursion on the (position, velocity) pair, which reproduces the
// composite trapezoid sum exactly while touching each node once.  Frames of
// the result are physical.
Trajectory duhamel(const Trajectory& forcing, const TimeGrid& time_grid);

}  // namespace dwlab
