#include "dwlab/field_ops.hpp"

#include "dwlab/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace dwlab {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

void require_same_rep(const Field& a, const Field& b, const char* who) {
  require_same_grid(a.grid, b.grid, who);
  if (a.rep != b.rep)
    throw std::invalid_argument(std::string(who) + ": representation mismatch");
}

}  // namespace

Multiplier make_multiplier(
    const Grid& g, const std::string& label,
    const std::function<std::complex<double>(const std::array<double, 4>&, double)>& m) {
  Multiplier out;
  out.grid = g;
  out.label = label;
  out.values.resize(static_cast<size_t>(g.size()));
  for_each_index(g, [&](long long idx, const int* a) {
    std::array<double, 4> xi = {0, 0, 0, 0};
    double rho2 = 0;
    for (int ax = 0; ax < g.d; ++ax) {
      xi[ax] = g.freq(a[ax]);
      rho2 += xi[ax] * xi[ax];
    }
    out.values[static_cast<size_t>(idx)] = m(xi, std::sqrt(rho2));
  });
  return out;
}

Multiplier make_radial_multiplier(const Grid& g, const std::string& label,
                                  const std::function<std::complex<double>(double)>& m) {
  return make_multiplier(
      g, label, [&m](const std::array<double, 4>&, double rho) { return m(rho); });
}

Multiplier compose(const Multiplier& a, const Multiplier& b) {
  require_same_grid(a.grid, b.grid, "compose");
  Multiplier out = a;
  out.label = a.label + "*" + b.label;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

Field apply_multiplier(const Multiplier& m, const Field& f) {
  require_same_grid(m.grid, f.grid, "apply_multiplier");
  const Rep orig = f.rep;
  Field hat = to_rep(f, Rep::Frequency);
  for (size_t i = 0; i < hat.values.size(); ++i) hat.values[i] *= m.values[i];
  return to_rep(hat, orig);
}

double lebesgue_norm(const Field& f, double r) {
  if (f.rep != Rep::Physical)
    throw std::invalid_argument("lebesgue_norm: field is not physical-side");
  if (!(r >= 1.0)) throw std::domain_error("lebesgue_norm: r must be >= 1");
  if (std::isinf(r)) return max_abs(f);
  double acc = 0;
  for (const auto& v : f.values) acc += std::pow(std::abs(v), r);
  return std::pow(acc * f.grid.cell_volume(), 1.0 / r);
}

double lebesgue_norm(const Field& f, const Rational& r) {
  if (r.is_infinite()) {
    if (f.rep != Rep::Physical)
      throw std::invalid_argument("lebesgue_norm: field is not physical-side");
    return max_abs(f);
  }
  return lebesgue_norm(f, r.to_double());
}

Field bessel_potential(const Field& f, double s) {
  Multiplier m = make_radial_multiplier(
      f.grid, "<xi>^" + std::to_string(s),
      [s](double rho) { return std::pow(1.0 + rho * rho, 0.5 * s); });
  return apply_multiplier(m, f);
}

double sobolev_norm(const Field& f, double s, double p) {
  Field phys = to_rep(bessel_potential(f, s), Rep::Physical);
  return lebesgue_norm(phys, p);
}

double sobolev_norm(const Field& f, double s, const Rational& p) {
  Field phys = to_rep(bessel_potential(f, s), Rep::Physical);
  return lebesgue_norm(phys, p);
}

Field add(const Field& a, const Field& b) {
  require_same_rep(a, b, "add");
  Field out = a;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Field sub(const Field& a, const Field& b) {
  require_same_rep(a, b, "sub");
  Field out = a;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

Field scale(const Field& f, std::complex<double> c) {
  Field out = f;
  for (auto& v : out.values) v *= c;
  return out;
}

void axpy(Field& a, std::complex<double> c, const Field& b) {
  require_same_rep(a, b, "axpy");
  for (size_t i = 0; i < a.values.size(); ++i) a.values[i] += c * b.values[i];
}

std::complex<double> inner_product(const Field& a, const Field& b) {
  require_same_rep(a, b, "inner_product");
  std::complex<double> acc = 0;
  for (size_t i = 0; i < a.values.size(); ++i)
    acc += std::conj(a.values[i]) * b.values[i];
  return acc * a.grid.cell_volume();
}

double max_abs_diff(const Field& a, const Field& b) {
  require_same_rep(a, b, "max_abs_diff");
  double m = 0;
  for (size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

double max_abs(const Field& f) {
  double m = 0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

Field single_mode(const Grid& g, const std::array<int, 4>& k) {
  Field out = make_field(g, Rep::Frequency);
  long long idx = 0;
  for (int ax = 0; ax < g.d; ++ax) {
    int kk = k[ax];
    if (kk < -g.n / 2 || kk >= g.n / 2)
      throw std::domain_error("single_mode: wavenumber outside the lattice");
    const int a = kk >= 0 ? kk : kk + g.n;
    idx = idx * g.n + a;
  }
  out.values[static_cast<size_t>(idx)] = 1.0;
  return out;
}

Field resample(const Field& f, int n_new) {
  const Grid dst = make_grid(f.grid.d, n_new, f.grid.box_length);
  const Field src = to_rep(f, Rep::Frequency);
  Field out = make_field(dst, Rep::Frequency);
  // Modes both lattices resolve: wavenumbers in [-m/2, m/2) per axis.
  const int m = std::min(f.grid.n, n_new);
  std::vector<std::pair<long long, long long>> axis;  // (src index, dst index)
  axis.reserve(static_cast<size_t>(m));
  for (int w = -m / 2; w < m / 2; ++w)
    axis.emplace_back(w >= 0 ? w : w + f.grid.n, w >= 0 ? w : w + n_new);
  const double factor =
      std::sqrt(static_cast<double>(dst.size()) / static_cast<double>(src.grid.size()));
  const int d = f.grid.d;
  int digit[4] = {0, 0, 0, 0};
  const long long total = [&] {
    long long t = 1;
    for (int ax = 0; ax < d; ++ax) t *= m;
    return t;
  }();
  for (long long c = 0; c < total; ++c) {
    long long is = 0, id = 0;
    for (int ax = 0; ax < d; ++ax) {
      is = is * f.grid.n + axis[static_cast<size_t>(digit[ax])].first;
      id = id * n_new + axis[static_cast<size_t>(digit[ax])].second;
    }
    out.values[static_cast<size_t>(id)] = factor * src.values[static_cast<size_t>(is)];
    for (int ax = d - 1; ax >= 0; --ax) {
      if (++digit[ax] < m) break;
      digit[ax] = 0;
    }
  }
  return to_rep(out, f.rep);
}

Field pointwise_product(const Field& a, const Field& b) {
  require_same_rep(a, b, "pointwise_product");
  if (a.rep != Rep::Physical)
    throw std::invalid_argument("pointwise_product: physical representation required");
  Field out = a;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

Field dealiased_product(const Field& f, const Field& g) {
  require_same_grid(f.grid, g.grid, "dealiased_product");
  const int n2 = 2 * f.grid.n;
  Field ff = to_rep(resample(to_rep(f, Rep::Frequency), n2), Rep::Physical);
  {
    // Scoped so only two doubled-lattice fields are ever live at once.
    const Field gf = to_rep(resample(to_rep(g, Rep::Frequency), n2), Rep::Physical);
    for (size_t i = 0; i < ff.values.size(); ++i) ff.values[i] *= gf.values[i];
  }
  return resample(transform(ff), f.grid.n);
}

Field dyadic_dilate(const Field& f, int m) {
  if (m < 0 || m > 30) throw std::domain_error("dyadic_dilate: m must be in [0, 30]");
  const Field src = to_rep(f, Rep::Frequency);
  const Grid& g = f.grid;
  Field out = make_field(g, Rep::Frequency);
  for_each_index(g, [&](long long idx, const int* a) {
    long long target = 0;
    for (int ax = 0; ax < g.d; ++ax) {
      const long long w = (static_cast<long long>(g.wavenumber(a[ax])) << m) % g.n;
      // Wrap into [-n/2, n/2), then back to a storage index.
      long long ww = ((w + g.n / 2) % g.n + g.n) % g.n - g.n / 2;
      target = target * g.n + (ww >= 0 ? ww : ww + g.n);
    }
    out.values[static_cast<size_t>(target)] += src.values[static_cast<size_t>(idx)];
  });
  return to_rep(out, f.rep);
}

}  // namespace dwlab
