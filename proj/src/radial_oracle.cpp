#include "dwlab/radial_oracle.hpp"

#include "dwlab/cutoff.hpp"
#include "dwlab/fft.hpp"
#include "dwlab/field_ops.hpp"
#include "dwlab/propagator.hpp"
#include "dwlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dwlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Quadrature rules are requested repeatedly at a handful of orders; cache them.
const QuadratureRule& cached_gl(int order) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> rules;
  std::lock_guard<std::mutex> lock(mu);
  auto it = rules.find(order);
  if (it == rules.end()) it = rules.emplace(order, gauss_legendre(order)).first;
  return it->second;
}

// int_{S^2} g(x + radius * w) dw with the polar axis along e1: Gauss-Legendre
// in cos(alpha), uniform trapezoid in the azimuth.
double sphere_integral(const SpatialFn& g, double radius,
                       const std::array<double, 3>& x, int polar_order,
                       int azimuth_order) {
  const QuadratureRule& polar = cached_gl(polar_order);
  const double dmu = 2.0 * kPi / azimuth_order;
  std::vector<double> cmu(azimuth_order), smu(azimuth_order);
  for (int j = 0; j < azimuth_order; ++j) {
    cmu[j] = std::cos(dmu * j);
    smu[j] = std::sin(dmu * j);
  }
  double sum = 0;
  for (int i = 0; i < polar_order; ++i) {
    const double c = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double z1 = x[0] + radius * c;
    double ring = 0;
    for (int j = 0; j < azimuth_order; ++j) {
      ring += g({z1, x[1] + radius * s * cmu[j], x[2] + radius * s * smu[j]});
    }
    sum += polar.weights[i] * ring * dmu;
  }
  return sum;
}

}  // namespace

double bessel_kernel_series(double z) {
  if (z < 0) throw std::domain_error("bessel_kernel_series: z must be >= 0");
  const double q = 0.25 * z * z;  // (z/2)^2
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 1000; ++m) {
    term *= q / ((m + 1.0) * (m + 2.0));
    if (term < 1e-16 * sum) break;
    sum += term;
  }
  return sum;
}

double bessel_kernel(double z, BesselForm form) {
  const double s = bessel_kernel_series(z);
  return form == BesselForm::Conventional ? 0.5 * z * s : s;
}

// ---------------------------------------------------------------------------

double RadialProfile::operator()(double r) const {
  if (r >= R || rho.empty()) return 0.0;
  if (r <= rho.front()) r = rho.front();
  const auto hi =
      std::upper_bound(rho.begin(), rho.end(), r) - rho.begin();
  const size_t i = std::min(rho.size() - 1, static_cast<size_t>(hi)) - 1;
  const double h = rho[i + 1] - rho[i];
  const double a = (rho[i + 1] - r) / h, b = (r - rho[i]) / h;
  return a * val[i] + b * val[i + 1] +
         ((a * a * a - a) * mom[i] + (b * b * b - b) * mom[i + 1]) * h * h / 6.0;
}

RadialProfile make_radial_profile(const std::function<double(double)>& g,
                                  double R, int order) {
  if (R <= 0) throw std::domain_error("make_radial_profile: R must be > 0");
  if (order < 4) throw std::domain_error("make_radial_profile: order must be >= 4");
  RadialProfile p;
  p.R = R;
  p.rho.push_back(0.0);
  const QuadratureRule gl = gauss_legendre(order, 0.0, R);
  for (double x : gl.nodes) p.rho.push_back(x);
  p.rho.push_back(R);
  for (double x : p.rho) p.val.push_back(g(x));

  // Clamped cubic spline (zero end slopes) via the standard tridiagonal
  // system for the second derivatives.
  const size_t n = p.rho.size();
  std::vector<double> diag(n), off(n - 1), rhs(n);
  const auto h = [&](size_t i) { return p.rho[i + 1] - p.rho[i]; };
  const auto slope = [&](size_t i) { return (p.val[i + 1] - p.val[i]) / h(i); };
  diag[0] = h(0) / 3.0;
  off[0] = h(0) / 6.0;
  rhs[0] = slope(0) - 0.0;
  for (size_t i = 1; i + 1 < n; ++i) {
    diag[i] = (h(i - 1) + h(i)) / 3.0;
    off[i] = h(i) / 6.0;
    rhs[i] = slope(i) - slope(i - 1);
  }
  diag[n - 1] = h(n - 2) / 3.0;
  rhs[n - 1] = 0.0 - slope(n - 2);
  // Thomas elimination (the matrix is symmetric tridiagonal, sub = super).
  for (size_t i = 1; i < n; ++i) {
    const double m = off[i - 1] / diag[i - 1];
    diag[i] -= m * off[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  p.mom.assign(n, 0.0);
  p.mom[n - 1] = rhs[n - 1] / diag[n - 1];
  for (size_t i = n - 1; i-- > 0;)
    p.mom[i] = (rhs[i] - off[i] * p.mom[i + 1]) / diag[i];
  return p;
}

SpatialFn radial_fn(const RadialProfile& p) {
  return [p](const std::array<double, 3>& z) {
    return p(std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]));
  };
}

// ---------------------------------------------------------------------------

double spherical_mean_W(const SpatialFn& g, double t,
                        const std::array<double, 3>& x, int polar_order,
                        int azimuth_order) {
  if (t == 0) return 0.0;
  return t / (4.0 * kPi) * sphere_integral(g, t, x, polar_order, azimuth_order);
}

double volume_term(const SpatialFn& g, double t, const std::array<double, 3>& x,
                   BesselForm form, int radial_order, int polar_order,
                   int azimuth_order) {
  if (t == 0) return 0.0;
  // r = t sin(theta) removes the inverse-square-root endpoint factor:
  // dr r^2 / sqrt(t^2 - r^2) = t^2 sin^2(theta) d(theta).
  const QuadratureRule theta = gauss_legendre(radial_order, 0.0, 0.5 * kPi);
  double sum = 0;
  for (int i = 0; i < radial_order; ++i) {
    const double th = theta.nodes[i];
    const double s = std::sin(th), c = std::cos(th);
    const double ring =
        sphere_integral(g, t * s, x, polar_order, azimuth_order);
    sum += theta.weights[i] * bessel_kernel(0.5 * t * c, form) * t * t * s * s *
           ring;
  }
  return std::exp(-0.5 * t) / (8.0 * kPi) * sum;
}

// ---------------------------------------------------------------------------

CrossCheckReport cross_check_d3(const RadialProfile& g,
                                const std::vector<double>& t_list,
                                const std::vector<std::array<double, 3>>& x_list,
                                const Grid& grid) {
  if (grid.d != 3)
    throw std::invalid_argument("cross_check_d3: grid must be 3-dimensional");
  double t_max = 0, x_max = 0;
  for (double t : t_list) {
    if (t < 0) throw std::domain_error("cross_check_d3: t must be >= 0");
    t_max = std::max(t_max, t);
  }
  for (const auto& x : x_list)
    for (double c : x) x_max = std::max(x_max, std::abs(c));
  if (x_max + t_max + g.R > 0.5 * grid.box_length)
    throw std::domain_error(
        "cross_check_d3: support plus light cone leaves the box");

  // Lattice samples of the profile, once; the propagator is exact per mode.
  Field sample = make_field(grid, Rep::Physical);
  const SpatialFn gf = radial_fn(g);
  for_each_index(grid, [&](long long idx, const int* a) {
    sample.values[static_cast<size_t>(idx)] =
        gf({grid.coord(a[0]), grid.coord(a[1]), grid.coord(a[2])});
  });
  const Field freq = to_rep(sample, Rep::Frequency);

  CrossCheckReport rep;
  for (double t : t_list) {
    const Field ut = apply_multiplier(
        propagator_multiplier(grid, PropagatorKind::D, t), freq);
    for (const auto& x : x_list) {
      CrossCheckRow row;
      row.t = t;
      row.x = x;
      row.spectral = evaluate_at(ut, {x[0], x[1], x[2]}).real();
      const double w = std::exp(-0.5 * t) * spherical_mean_W(gf, t, x);
      row.quad_series = volume_term(gf, t, x, BesselForm::Series) + w;
      row.quad_conventional =
          volume_term(gf, t, x, BesselForm::Conventional) + w;
      rep.rows.push_back(row);
    }
  }

  double scale = 0;
  for (const auto& r : rep.rows) scale = std::max(scale, std::abs(r.spectral));
  if (scale == 0) scale = 1.0;
  for (const auto& r : rep.rows) {
    rep.max_rel_dev_series = std::max(
        rep.max_rel_dev_series, std::abs(r.quad_series - r.spectral) / scale);
    rep.max_rel_dev_conventional =
        std::max(rep.max_rel_dev_conventional,
                 std::abs(r.quad_conventional - r.spectral) / scale);
  }
  rep.resolved = rep.max_rel_dev_conventional <= rep.max_rel_dev_series
                     ? BesselForm::Conventional
                     : BesselForm::Series;
  rep.max_rel_dev = std::min(rep.max_rel_dev_series, rep.max_rel_dev_conventional);
  return rep;
}

// ---------------------------------------------------------------------------

double family_bump(double lambda) {
  return smooth_step(4.0 * (lambda - 1.0)) * smooth_step(4.0 * (2.0 - lambda));
}

double family_bump_damped(double lambda) {
  return std::exp(-0.5 * lambda) * family_bump(lambda);
}

ConeFamily make_cone_family(double eta, double amplitude) {
  if (!(eta > 0 && eta < 1))
    throw std::domain_error("make_cone_family: eta must lie in (0, 1)");
  if (!(amplitude > 0))
    throw std::domain_error("make_cone_family: amplitude must be > 0");

  // || psi 1{z1 > eta} ||_2^2 in spherical coordinates around the origin with
  // v = cos(angle to e1):  2 pi int int b_d(rho/(2v))^2 / v^2 dv drho over the
  // band v in [max(rho/4, eta/rho), min(rho/2, 1)].  The rho axis is split at
  // the points where the band's edges switch branch, so each panel has a
  // smooth integrand for Gauss-Legendre.
  const QuadratureRule& inner = cached_gl(40);
  double norm_sq = 0;
  const double edges[4] = {std::sqrt(2.0 * eta), 2.0 * std::sqrt(eta), 2.0, 4.0};
  for (int p = 0; p < 3; ++p) {
    const QuadratureRule outer = gauss_legendre(160, edges[p], edges[p + 1]);
    for (int i = 0; i < 160; ++i) {
      const double rho = outer.nodes[i];
      const double v_lo = std::max(0.25 * rho, eta / rho);
      const double v_hi = std::min(0.5 * rho, 1.0);
      if (v_lo >= v_hi) continue;
      const double mid = 0.5 * (v_lo + v_hi), half = 0.5 * (v_hi - v_lo);
      double band = 0;
      for (size_t j = 0; j < inner.nodes.size(); ++j) {
        const double v = mid + half * inner.nodes[j];
        const double b = family_bump_damped(rho / (2.0 * v));
        band += inner.weights[j] * half * b * b / (v * v);
      }
      norm_sq += outer.weights[i] * band;
    }
  }
  norm_sq *= 2.0 * kPi * amplitude * amplitude;

  ConeFamily fam;
  fam.eta = eta;
  fam.layer_norm = std::sqrt(norm_sq);
  const double norm = fam.layer_norm;
  fam.data = [eta, amplitude, norm](const std::array<double, 3>& z) {
    if (z[0] <= eta) return 0.0;
    const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    const double lambda = r2 / (2.0 * z[0]);
    if (lambda <= 1.0 || lambda >= 2.0) return 0.0;
    return amplitude * family_bump_damped(lambda) / (z[0] * norm);
  };
  return fam;
}

double w_trace_l2(const SpatialFn& g, const std::array<double, 3>& x0,
                  const std::array<double, 3>& dir, const TraceSpec& spec) {
  if (spec.t_nodes < 2 || !(spec.t_hi > spec.t_lo) || spec.t_lo < 0)
    throw std::domain_error("w_trace_l2: bad trace window");
  const double h = (spec.t_hi - spec.t_lo) / (spec.t_nodes - 1);
  double sum = 0;
  for (int i = 0; i < spec.t_nodes; ++i) {
    const double t = spec.t_lo + i * h;
    const std::array<double, 3> x{x0[0] + t * dir[0], x0[1] + t * dir[1],
                                  x0[2] + t * dir[2]};
    const double w =
        std::exp(-0.5 * t) *
        spherical_mean_W(g, t, x, spec.polar_order, spec.azimuth_order);
    const double weight = (i == 0 || i == spec.t_nodes - 1) ? 0.5 : 1.0;
    sum += weight * w * w;
  }
  return sum * h;
}

}  // namespace dwlab
