#include "dwlab/propagator.hpp"

#include "dwlab/cutoff.hpp"
#include "dwlab/fft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dwlab {

namespace {

// e^{-t/2} sinh(t mu)/mu and e^{-t/2} cosh(t mu) through the branch point,
// in forms that never exponentiate a positive quantity.  m2 = 1/4 - rho^2 is
// kept signed: the high branch is the same analytic function continued to
// m2 < 0, where sinh/cosh become sin/cos.
struct DampedParts {
  double dS = 0;  // e^{-t/2} L(t, rho)
  double dC = 0;  // e^{-t/2} dL/dt
  double m2 = 0;  // 1/4 - rho^2
};

DampedParts damped_parts(double t, double rho) {
  DampedParts out;
  out.m2 = (0.5 - rho) * (0.5 + rho);
  const double x = out.m2 * t * t;
  if (std::abs(x) < 1e-2) {
    // Both branches collapse to one series in x; 4 terms leave O(1e-14)
    // relative error at the switch radius.  This is the only stable route
    // through mu = 0, and it also covers t = 0.
    const double sh = 1 + x / 6 * (1 + x / 20 * (1 + x / 42));
    const double ch = 1 + x / 2 * (1 + x / 12 * (1 + x / 30));
    const double damp = std::exp(-0.5 * t);
    out.dS = damp * t * sh;
    out.dC = damp * ch;
  } else if (out.m2 > 0) {
    // Low branch: fold the damping into the exponentials so nothing grows.
    const double mu = std::sqrt(out.m2);
    const double ea = std::exp(-t * (0.5 - mu));  // mu <= 1/2, so both
    const double eb = std::exp(-t * (0.5 + mu));  // arguments are <= 0
    out.dS = (ea - eb) / (2 * mu);
    out.dC = (ea + eb) / 2;
  } else {
    const double nu = std::sqrt(-out.m2);
    const double damp = std::exp(-0.5 * t);
    out.dS = damp * std::sin(t * nu) / nu;
    out.dC = damp * std::cos(t * nu);
  }
  return out;
}

// Undamped L(t, rho); grows like e^{t mu} on the low branch, which the
// caller accepts (see header).
double undamped_L(double t, double rho) {
  const double m2 = (0.5 - rho) * (0.5 + rho);
  const double x = m2 * t * t;
  if (std::abs(x) < 1e-2) return t * (1 + x / 6 * (1 + x / 20 * (1 + x / 42)));
  if (m2 > 0) {
    const double mu = std::sqrt(m2);
    return std::sinh(t * mu) / mu;
  }
  const double nu = std::sqrt(-m2);
  return std::sin(t * nu) / nu;
}

void require_time(double t) {
  if (t < 0) throw std::domain_error("propagator: negative time");
}

const char* kind_name(PropagatorKind kind) {
  switch (kind) {
    case PropagatorKind::D: return "D";
    case PropagatorKind::DtD: return "DtD";
    case PropagatorKind::Dt2D: return "Dt2D";
    case PropagatorKind::HalfWave: return "HalfWave";
  }
  return "?";
}

}  // namespace

TimeGrid make_time_grid(double t_end, int steps) {
  if (!(t_end > 0)) throw std::domain_error("make_time_grid: horizon must be positive");
  if (steps < 2) throw std::domain_error("make_time_grid: need at least 2 steps");
  return TimeGrid{t_end, steps};
}

std::complex<double> propagator_symbol(PropagatorKind kind, double t, double rho) {
  require_time(t);
  switch (kind) {
    case PropagatorKind::D: {
      return damped_parts(t, rho).dS;
    }
    case PropagatorKind::DtD: {
      const DampedParts p = damped_parts(t, rho);
      return p.dC - 0.5 * p.dS;
    }
    case PropagatorKind::Dt2D: {
      // d/dt of the DtD symbol: e^{-t/2}((m2 + 1/4) L - dL/dt).
      const DampedParts p = damped_parts(t, rho);
      return (p.m2 + 0.25) * p.dS - p.dC;
    }
    case PropagatorKind::HalfWave: {
      const double w = cutoff_chi_gt1(rho);
      if (w == 0) return 0.0;  // profile support starts above rho = 1
      const double nu = std::sqrt((rho - 0.5) * (rho + 0.5));
      return std::polar(w, t * nu);
    }
  }
  throw std::logic_error("propagator_symbol: bad kind");
}

Multiplier multiplier_L(const Grid& g, double t) {
  require_time(t);
  return make_radial_multiplier(g, "L", [t](double rho) {
    return std::complex<double>(undamped_L(t, rho));
  });
}

Multiplier propagator_multiplier(const Grid& g, PropagatorKind kind, double t) {
  require_time(t);
  return make_radial_multiplier(g, kind_name(kind),
                                [kind, t](double rho) { return propagator_symbol(kind, t, rho); });
}

Field apply_propagator(PropagatorKind kind, double t, const Field& f) {
  return apply_multiplier(propagator_multiplier(f.grid, kind, t), f);
}

namespace {

double lattice_radius(const Grid& g, const int* a) {
  double rho2 = 0;
  for (int ax = 0; ax < g.d; ++ax) {
    const double xi = g.freq(a[ax]);
    rho2 += xi * xi;
  }
  return std::sqrt(rho2);
}

}  // namespace

StatePair linear_solution(double t, const Field& u0, const Field& u1) {
  require_time(t);
  if (u0.grid != u1.grid) throw std::invalid_argument("linear_solution: grid mismatch");
  const Grid& g = u0.grid;
  const Field f0 = to_rep(u0, Rep::Frequency);
  const Field f1 = to_rep(u1, Rep::Frequency);
  Field hu = make_field(g, Rep::Frequency);
  Field hv = make_field(g, Rep::Frequency);
  for_each_index(g, [&](long long idx, const int* a) {
    const double rho = lattice_radius(g, a);
    const DampedParts p = damped_parts(t, rho);
    // u(t) = (dC + dS/2) u0 + dS u1;  u_t(t) = -rho^2 dS u0 + (dC - dS/2) u1.
    hu.values[idx] = (p.dC + 0.5 * p.dS) * f0.values[idx] + p.dS * f1.values[idx];
    hv.values[idx] = -(rho * rho) * p.dS * f0.values[idx] + (p.dC - 0.5 * p.dS) * f1.values[idx];
  });
  return StatePair{inverse_transform(hu), inverse_transform(hv)};
}

double pde_residual(const Field& u0, const Field& u1, const TimeGrid& time_grid) {
  if (time_grid.steps < 4) throw std::domain_error("pde_residual: need at least 4 steps");
  if (u0.grid != u1.grid) throw std::invalid_argument("pde_residual: grid mismatch");
  const Grid& g = u0.grid;
  const Field f0 = to_rep(u0, Rep::Frequency);
  const Field f1 = to_rep(u1, Rep::Frequency);
  const long long total = g.size();

  std::vector<double> rho(total);
  for_each_index(g, [&](long long idx, const int* a) { rho[idx] = lattice_radius(g, a); });

  // Frequency-side positions in a rolling 3-node window: the stencil never
  // needs more, and large grids would not fit a full trajectory.
  auto position_at = [&](int i, std::vector<std::complex<double>>& out) {
    const double t = time_grid.node(i);
    for (long long idx = 0; idx < total; ++idx) {
      const DampedParts p = damped_parts(t, rho[idx]);
      out[idx] = (p.dC + 0.5 * p.dS) * f0.values[idx] + p.dS * f1.values[idx];
    }
  };
  const int m = time_grid.steps;
  std::vector<std::complex<double>> prev(total), cur(total), next(total);
  position_at(0, prev);
  position_at(1, cur);

  const double dt = time_grid.dt();
  const double vol = g.cell_volume();
  double worst = 0;
  for (int i = 1; i < m; ++i) {
    position_at(i + 1, next);
    double res_sq = 0, phi_sq = 0;
    for (long long idx = 0; idx < total; ++idx) {
      const std::complex<double> utt = (next[idx] - 2.0 * cur[idx] + prev[idx]) / (dt * dt);
      const std::complex<double> ut = (next[idx] - prev[idx]) / (2 * dt);
      const std::complex<double> r = utt + rho[idx] * rho[idx] * cur[idx] + ut;
      res_sq += std::norm(r);
      phi_sq += std::norm(cur[idx]);
    }
    const double nr = std::sqrt(res_sq * vol);
    const double nphi = std::sqrt(phi_sq * vol);
    if (nphi > 0) {
      worst = std::max(worst, nr / nphi);
    } else if (nr > 0) {
      worst = std::numeric_limits<double>::infinity();
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return worst;
}

Trajectory duhamel(const Trajectory& forcing, const TimeGrid& time_grid) {
  const int m = time_grid.steps;
  if (forcing.time.steps != m || forcing.time.t_end != time_grid.t_end)
    throw std::invalid_argument("duhamel: forcing not sampled on the time grid");
  if (static_cast<int>(forcing.frames.size()) != m + 1)
    throw std::invalid_argument("duhamel: frame count does not match the time grid");
  const Grid& g = forcing.frames[0].grid;
  for (const Field& f : forcing.frames)
    if (f.grid != g) throw std::invalid_argument("duhamel: grid mismatch across frames");

  const long long total = g.size();
  const double dt = time_grid.dt();

  // One-step flow matrix at lag dt, per lattice point.
  std::vector<double> a11(total), a12(total), a21(total), a22(total);
  for_each_index(g, [&](long long idx, const int* a) {
    const double rho = lattice_radius(g, a);
    const DampedParts p = damped_parts(dt, rho);
    a11[idx] = p.dC + 0.5 * p.dS;
    a12[idx] = p.dS;
    a21[idx] = -(rho * rho) * p.dS;
    a22[idx] = p.dC - 0.5 * p.dS;
  });

  // Trapezoid sums R_k = dt * sum'' P(t_k - t_i) (0, F_i) satisfy the exact
  // recursion R_{k+1} = P(dt)[R_k + (dt/2)(0, F_k)] + (dt/2)(0, F_{k+1}),
  // because P(t_{k+1} - t_i) = P(dt) P(t_k - t_i) mode by mode.
  std::vector<std::complex<double>> pu(total, 0.0), pv(total, 0.0);
  Trajectory out;
  out.time = time_grid;
  out.frames.reserve(m + 1);
  out.frames.push_back(make_field(g, Rep::Physical));

  Field cur_hat = to_rep(forcing.frames[0], Rep::Frequency);
  for (int k = 0; k < m; ++k) {
    Field next_hat = to_rep(forcing.frames[k + 1], Rep::Frequency);
    for (long long idx = 0; idx < total; ++idx) {
      const std::complex<double> v_in = pv[idx] + 0.5 * dt * cur_hat.values[idx];
      const std::complex<double> u_in = pu[idx];
      pu[idx] = a11[idx] * u_in + a12[idx] * v_in;
      pv[idx] = a21[idx] * u_in + a22[idx] * v_in + 0.5 * dt * next_hat.values[idx];
    }
    Field frame = make_field(g, Rep::Frequency);
    frame.values.assign(pu.begin(), pu.end());
    out.frames.push_back(inverse_transform(frame));
    cur_hat = std::move(next_hat);
  }
  return out;
}

}  // namespace dwlab
