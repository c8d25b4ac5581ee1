// Physical-space oracle for the d=3 damped-wave propagator, and the
// light-cone data family on which the endpoint space-time estimate degrades.
//
// The solution with data (0, g) splits into a sphere term and a volume term,
//   D(t) g = [volume term](t) + e^{-t/2} W(t) g,
//   W(t) g (x)      = t/(4 pi) int_{S^2} g(x + t w) dw,
//   [volume](t,g,x) = e^{-t/2}/(8 pi) int_0^t int_{S^2}
//                       K(sqrt(t^2-r^2)/2) g(x + r w) r^2 / sqrt(t^2-r^2) dw dr,
// where K is a modified-Bessel-type kernel.  Everything here is quadrature:
// Gauss-Legendre in the polar/radial directions, trapezoid in azimuth, with
// the radial endpoint singularity removed by the substitution r = t sin(theta).
// The spectral propagator provides the independent cross-check.
#pragma once

#include "dwlab/grid.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace dwlab {

// Two candidate normalizations for the volume-term kernel: the bare even
// series sum_m (z/2)^{2m} / (m! (m+1)!), and the conventional modified Bessel
// function of order one, I_1(z) = (z/2) times that series.  The decomposition
// is only consistent with one of them; cross_check_d3 settles which by
// comparison against the multiplier-exact spectral propagator and reports the
// winner rather than assuming it.
enum class BesselForm { Series, Conventional };

// The bare series (entire, all terms positive; value 1 at z = 0).
double bessel_kernel_series(double z);
// The series, times z/2 for the Conventional form.
double bessel_kernel(double z, BesselForm form);

// A compactly supported radial function, stored as samples on a
// Gauss-Legendre radial grid over [0, R] (plus the two endpoints) with a
// clamped cubic-spline interpolant (zero slope at both ends, which is exact
// for smooth radial data that has died off by R).  Evaluates to 0 for
// rho >= R.
struct RadialProfile {
  double R = 0;
  std::vector<double> rho;   // interpolation nodes, ascending, rho[0] = 0
  std::vector<double> val;   // samples g(rho[i])
  std::vector<double> mom;   // spline second derivatives at the nodes

  double operator()(double r) const;
};

RadialProfile make_radial_profile(const std::function<double(double)>& g,
                                  double R, int order = 96);

// A scalar function on R^3; the quadrature operators below only ever sample
// it pointwise.
using SpatialFn = std::function<double(const std::array<double, 3>&)>;

// The profile as a spatial function of |x|.
SpatialFn radial_fn(const RadialProfile& p);

// W(t) g (x) by product quadrature over the sphere: Gauss-Legendre of order
// `polar_order` in cos(alpha), trapezoid of order `azimuth_order` in the
// azimuth (exact for axisymmetric integrands).
double spherical_mean_W(const SpatialFn& g, double t,
                        const std::array<double, 3>& x, int polar_order = 32,
                        int azimuth_order = 64);

// The volume term, with the sphere rule above at each radial node and
// Gauss-Legendre of order `radial_order` in theta after r = t sin(theta).
double volume_term(const SpatialFn& g, double t, const std::array<double, 3>& x,
                   BesselForm form, int radial_order = 48, int polar_order = 32,
                   int azimuth_order = 64);

// ---------------------------------------------------------------------------
// Cross-check of the quadrature decomposition against the spectral propagator.

struct CrossCheckRow {
  double t = 0;
  std::array<double, 3> x{};
  double spectral = 0;      // D(t) g at x via the frequency lattice
  double quad_series = 0;   // volume(Series) + e^{-t/2} W
  double quad_conventional = 0;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;
  // Deviations are relative to the largest spectral magnitude in the row set.
  double max_rel_dev_series = 0;
  double max_rel_dev_conventional = 0;
  BesselForm resolved = BesselForm::Conventional;  // the smaller of the two
  double max_rel_dev = 0;                          // deviation of the winner
};

// Samples the profile on the lattice, applies the exact multiplier, reads the
// trigonometric interpolant at each x, and compares with the quadrature
// decomposition under both kernel normalizations.  Throws std::domain_error
// when profile support plus the largest light cone cannot stay inside the box
// (|x|_inf + t + R <= L/2 is required for every requested point).
CrossCheckReport cross_check_d3(const RadialProfile& g,
                                const std::vector<double>& t_list,
                                const std::vector<std::array<double, 3>>& x_list,
                                const Grid& grid);

// ---------------------------------------------------------------------------
// The light-cone data family.  With a fixed C^infinity bump b supported on
// [1, 2] and b_d(lambda) = e^{-lambda/2} b(lambda), the layer
//   psi(z) = b_d(|z|^2 / (2 z_1)) / z_1        (z_1 > 0)
// is nonnegative with support inside {|z| <= 4}, and the family member at
// truncation eta is  g_eta = psi 1{z_1 > eta} / || psi 1{z_1 > eta} ||_2.
// On the sphere of radius t around (t, 0, 0) the layer's argument
// |z|^2 / (2 z_1) equals t identically, so an observer riding that point
// collects the whole near-origin mass of the layer: the L^2_t trace integral
// grows like log(1/eta), while any fixed observer's trace stays bounded.

double family_bump(double lambda);         // the bump b
double family_bump_damped(double lambda);  // b_d = e^{-lambda/2} b

struct ConeFamily {
  double eta = 0;
  double layer_norm = 0;  // || psi 1{z_1 > eta} ||_2 before normalization
  SpatialFn data;         // g_eta, unit L^2 norm
};

// The amplitude scales psi before normalization and must cancel exactly.
ConeFamily make_cone_family(double eta, double amplitude = 1.0);

struct TraceSpec {
  double t_lo = 0.9;        // the damped bump confines the trace to [1, 2]
  double t_hi = 2.1;
  int t_nodes = 257;        // composite-trapezoid nodes in t
  int polar_order = 1024;   // high: the family piles up log mass at the
                            // near-origin end of the spheres
  int azimuth_order = 32;
};

// int |e^{-t/2} W(t) g (x0 + t dir)|^2 dt over [t_lo, t_hi] by composite
// trapezoid.  dir = e1 rides the light cone; dir = 0 parks the observer.
double w_trace_l2(const SpatialFn& g, const std::array<double, 3>& x0,
                  const std::array<double, 3>& dir, const TraceSpec& spec = {});

}  // namespace dwlab
