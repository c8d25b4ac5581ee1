#include "dwlab/lp_besov.hpp"

#include "dwlab/cutoff.hpp"
#include "dwlab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dwlab {

namespace {

double leq_profile(int j, double rho) { return cutoff_chi(rho * std::ldexp(1.0, -j)); }

// Smallest lattice radius at which the variant's symbol can be nonzero, or
// a negative value for variants that act at every radius.  Only annulus-type
// variants (Eq/Range/Tilde) can slide entirely beyond the lattice.
double support_floor(const LPVariant& v) {
  switch (v.kind) {
    case LPKind::Eq: return std::ldexp(1.0, v.j - 1);
    case LPKind::Range: return std::ldexp(1.0, v.j - 1);
    case LPKind::Tilde: return std::ldexp(1.0, v.j - 2);
    default: return -1.0;
  }
}

void validate_band(const Grid& g, const LPVariant& v) {
  if (v.kind == LPKind::Range && v.j > v.l)
    throw std::invalid_argument("lp_project: empty range");
  const double floor_rho = support_floor(v);
  if (floor_rho >= g.max_freq())
    throw std::domain_error("lp_project: band beyond the resolvable lattice radii");
}

// l^q reduction in descending magnitude order.
double lq_sum(std::vector<double> terms, const Rational& q) {
  if (terms.empty()) return 0;
  if (q.is_infinite()) return *std::max_element(terms.begin(), terms.end());
  std::sort(terms.begin(), terms.end(), std::greater<>());
  const double qq = q.to_double();
  double acc = 0;
  for (const double t : terms) acc += std::pow(t, qq);
  return std::pow(acc, 1.0 / qq);
}

std::vector<double> lattice_radii(const Grid& g) {
  std::vector<double> rho(g.size());
  for_each_index(g, [&](long long idx, const int* a) {
    double r2 = 0;
    for (int ax = 0; ax < g.d; ++ax) r2 += g.freq(a[ax]) * g.freq(a[ax]);
    rho[idx] = std::sqrt(r2);
  });
  return rho;
}

// ||projected f||_p with the profile applied on a precomputed frequency-side
// copy; one inverse transform per call.
double block_norm(const Field& fhat, const std::vector<double>& rho, const LPVariant& v,
                  double p) {
  Field cut = fhat;
  for (long long i = 0; i < fhat.grid.size(); ++i)
    cut.values[i] *= lp_profile(v, rho[i]);
  return lebesgue_norm(inverse_transform(cut), p);
}

void validate_besov_spec(const BesovSpec& spec) {
  if (spec.p.is_infinite() || !(spec.p > Rational(1)))
    throw std::domain_error("besov_norm: p must lie in (1, inf)");
  if (spec.q < Rational(1)) throw std::domain_error("besov_norm: q must lie in [1, inf]");
}

}  // namespace

double lp_profile(const LPVariant& v, double rho) {
  switch (v.kind) {
    case LPKind::Eq: return leq_profile(v.j, rho) - leq_profile(v.j - 1, rho);
    case LPKind::Leq: return leq_profile(v.j, rho);
    case LPKind::Lt: return leq_profile(v.j - 1, rho);
    case LPKind::Gt: return 1.0 - leq_profile(v.j, rho);
    case LPKind::Geq: return 1.0 - leq_profile(v.j - 1, rho);
    case LPKind::Range: return leq_profile(v.l, rho) - leq_profile(v.j - 1, rho);
    case LPKind::Tilde: return leq_profile(v.j + 1, rho) - leq_profile(v.j - 2, rho);
    case LPKind::HighPass: return cutoff_chi_gt1(rho);
    case LPKind::LowPass: return cutoff_chi(rho);
  }
  throw std::logic_error("lp_profile: bad kind");
}

Multiplier lp_multiplier(const Grid& g, const LPVariant& v) {
  validate_band(g, v);
  return make_radial_multiplier(g, "lp", [v](double rho) {
    return std::complex<double>(lp_profile(v, rho));
  });
}

Field lp_project(const LPVariant& v, const Field& f) {
  return apply_multiplier(lp_multiplier(f.grid, v), f);
}

int full_coverage_j_max(const Grid& g) {
  return static_cast<int>(std::ceil(std::log2(g.max_freq()) - 1e-12));
}

int default_besov_j_max(const Grid& g) {
  return static_cast<int>(std::floor(std::log2(g.nyquist()) + 1e-12)) - 1;
}

BesovNorm besov_norm(const Field& f, const BesovSpec& spec, int j_max) {
  validate_besov_spec(spec);
  if (j_max < 1 || j_max > full_coverage_j_max(f.grid))
    throw std::domain_error("besov_norm: j_max outside [1, full coverage index]");
  const double p = spec.p.to_double();
  const Field fhat = to_rep(f, Rep::Frequency);
  const std::vector<double> rho = lattice_radii(f.grid);

  BesovNorm out;
  const double low = block_norm(fhat, rho, lp_leq(0), p);
  std::vector<double> ladder(j_max);
  double edge = 0;
  for (int j = 1; j <= j_max; ++j) {
    const double nj = block_norm(fhat, rho, lp_eq(j), p);
    ladder[j - 1] = std::pow(2.0, j * spec.s) * nj;
    if (j == j_max) edge = nj;
  }
  out.value = low + lq_sum(std::move(ladder), spec.q);
  const double total = lebesgue_norm(to_rep(f, Rep::Physical), p);
  out.tail_indicator = total > 0 ? edge / total : 0.0;
  return out;
}

namespace {

void validate_trajectory(const Trajectory& traj) {
  if (traj.frames.empty()) throw std::invalid_argument("mixed norm: empty trajectory");
  if (static_cast<int>(traj.frames.size()) != traj.time.steps + 1)
    throw std::invalid_argument("mixed norm: frame count does not match the time grid");
  for (const Field& f : traj.frames)
    if (f.grid != traj.frames[0].grid)
      throw std::invalid_argument("mixed norm: grid mismatch across frames");
}

// Trapezoid-in-time reduction of per-node spatial norms.
double time_reduce(const std::vector<double>& node_norms, const TimeGrid& tg,
                   const Rational& q_t) {
  if (q_t.is_infinite()) return *std::max_element(node_norms.begin(), node_norms.end());
  if (q_t < Rational(1)) throw std::domain_error("mixed norm: q must lie in [1, inf]");
  const double q = q_t.to_double();
  double acc = 0;
  for (size_t i = 0; i < node_norms.size(); ++i) {
    const double w = (i == 0 || i + 1 == node_norms.size()) ? 0.5 : 1.0;
    acc += w * std::pow(node_norms[i], q);
  }
  return std::pow(acc * tg.dt(), 1.0 / q);
}

}  // namespace

double mixed_norm(const Trajectory& traj, const Rational& q_t, const Rational& r_x) {
  validate_trajectory(traj);
  std::vector<double> norms(traj.frames.size());
  for (size_t i = 0; i < traj.frames.size(); ++i)
    norms[i] = lebesgue_norm(to_rep(traj.frames[i], Rep::Physical), r_x);
  return time_reduce(norms, traj.time, q_t);
}

BesovNorm mixed_besov_norm(const Trajectory& traj, const Rational& q_t,
                           const BesovSpec& spec, int j_max) {
  validate_trajectory(traj);
  std::vector<double> norms(traj.frames.size());
  double worst_tail = 0;
  for (size_t i = 0; i < traj.frames.size(); ++i) {
    const BesovNorm b = besov_norm(traj.frames[i], spec, j_max);
    norms[i] = b.value;
    worst_tail = std::max(worst_tail, b.tail_indicator);
  }
  return BesovNorm{time_reduce(norms, traj.time, q_t), worst_tail};
}

EquivalenceReport besov_tail_equivalence(const Field& f, double s, const Rational& p,
                                         const Rational& q, int J, TailSign sign) {
  if (!(s > 0)) throw std::domain_error("tail equivalence: s must be positive");
  if (J < 0) throw std::domain_error("tail equivalence: J must be non-negative");
  const BesovSpec spec{sign == TailSign::PlusS ? s : -s, p, q};
  const int j_top = full_coverage_j_max(f.grid);
  const double pd = p.to_double();

  EquivalenceReport rep;
  rep.lhs = besov_norm(f, spec, j_top).value;

  const Field fhat = to_rep(f, Rep::Frequency);
  const std::vector<double> rho = lattice_radii(f.grid);
  const double anchor = block_norm(fhat, rho, lp_leq(J), pd);

  std::vector<double> ladder;
  if (sign == TailSign::PlusS) {
    // Delta_{>=j} vanishes on the lattice once j exceeds the coverage index.
    for (int j = J; j <= j_top; ++j)
      ladder.push_back(std::pow(2.0, j * s) * block_norm(fhat, rho, lp_geq(j), pd));
    rep.rhs = anchor + lq_sum(std::move(ladder), q);
  } else {
    // Delta_{<=j} = Id from the coverage index on; the remaining geometric
    // ladder sums in closed form, making the truncation exact.
    const double full = lebesgue_norm(to_rep(f, Rep::Physical), pd);
    for (int j = J; j < j_top; ++j)
      ladder.push_back(std::pow(2.0, -j * s) * block_norm(fhat, rho, lp_leq(j), pd));
    double tail;
    if (q.is_infinite()) {
      tail = std::pow(2.0, -j_top * s) * full;
      rep.rhs = anchor + std::max(lq_sum(std::move(ladder), q), tail);
    } else {
      const double qd = q.to_double();
      double acc = 0;
      for (const double t : ladder) acc += std::pow(t, qd);
      const double r = std::pow(2.0, -s * qd);
      acc += std::pow(std::pow(2.0, -j_top * s) * full, qd) / (1 - r);
      rep.rhs = anchor + std::pow(acc, 1.0 / qd);
    }
  }

  if (rep.lhs == 0 && rep.rhs == 0) {
    rep.degenerate = true;
    rep.ratio = 0;
  } else {
    rep.ratio = rep.lhs / rep.rhs;
  }
  return rep;
}

double holder_besov_ratio(const Field& u, double alpha, double s, const Rational& p) {
  if (!(alpha > 0) || alpha > 1)
    throw std::domain_error("holder ratio: alpha must lie in (0, 1]");
  if (!(s > 0) || !(s < 1)) throw std::domain_error("holder ratio: s must lie in (0, 1)");
  if (p.is_infinite()) throw std::domain_error("holder ratio: p must be finite");
  if (!(p.to_double() * alpha > 1))
    throw std::domain_error("holder ratio: p*alpha must exceed 1");

  const Field up = to_rep(u, Rep::Physical);
  Field powed = make_field(up.grid, Rep::Physical);
  for (long long i = 0; i < up.grid.size(); ++i)
    powed.values[i] = std::pow(std::abs(up.values[i]), alpha);

  // p*alpha as an exact rational: snap alpha to denominator 720720, which
  // reproduces every fraction with denominator <= 16 exactly.
  const Rational alpha_rat(std::llround(alpha * 720720), 720720);
  const int jm = full_coverage_j_max(u.grid);
  const double num = besov_norm(powed, BesovSpec{s, p, Rational::infinity()}, jm).value;
  const BesovSpec den_spec{s / alpha, p * alpha_rat, Rational::infinity()};
  const double den = std::pow(besov_norm(up, den_spec, jm).value, alpha);
  if (den == 0) return 0;
  return num / den;
}

}  // namespace dwlab
