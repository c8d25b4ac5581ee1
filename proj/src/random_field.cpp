#include "dwlab/random_field.hpp"

#include "dwlab/fft.hpp"
#include "dwlab/field_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace dwlab {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double NormalSampler::uniform() {
  // 53 mantissa bits, shifted into (0, 1] so log() below never sees 0.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalSampler::next() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::complex<double> NormalSampler::next_complex() {
  // One Box-Muller pair gives two independent normals.
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return {radius * std::cos(2.0 * kPi * u2), radius * std::sin(2.0 * kPi * u2)};
}

Field random_field(const Grid& g, const Spectrum& spectrum, std::uint64_t seed) {
  Field out;

  if (const auto* band = std::get_if<WhiteBand>(&spectrum)) {
    if (band->j_lo >= band->j_hi)
      throw std::domain_error("random_field: white band needs j_lo < j_hi");
    const double lo = std::pow(2.0, band->j_lo);
    const double hi = std::pow(2.0, band->j_hi);
    if (hi > g.nyquist())
      throw std::domain_error("random_field: white band exceeds the frequency lattice");
    NormalSampler rng(seed);
    out = make_field(g, Rep::Frequency);
    long long hits = 0;
    for_each_index(g, [&](long long idx, const int* a) {
      double rho2 = 0;
      for (int ax = 0; ax < g.d; ++ax) {
        const double x = g.freq(a[ax]);
        rho2 += x * x;
      }
      const double rho = std::sqrt(rho2);
      if (rho > lo && rho <= hi) {
        out.values[static_cast<size_t>(idx)] = rng.next_complex();
        ++hits;
      }
    });
    if (hits == 0)
      throw std::domain_error("random_field: white band contains no lattice point");
    out = inverse_transform(out);
  } else if (const auto* bump = std::get_if<GaussianBump>(&spectrum)) {
    if (!(bump->sigma > 0)) throw std::domain_error("random_field: sigma must be positive");
    if (bump->sigma < g.dx() || bump->sigma > g.box_length / 8.0)
      throw std::domain_error("random_field: sigma not resolvable on this grid");
    out = make_field(g, Rep::Physical);
    const double inv = 1.0 / (2.0 * bump->sigma * bump->sigma);
    for_each_index(g, [&](long long idx, const int* a) {
      double r2 = 0;
      for (int ax = 0; ax < g.d; ++ax) {
        const double x = g.coord(a[ax]);
        r2 += x * x;
      }
      out.values[static_cast<size_t>(idx)] = std::exp(-r2 * inv);
    });
  } else {
    const auto& slab = std::get<KnappSlab>(spectrum);
    if (!(slab.width > 0) || !(slab.center_freq > 0))
      throw std::domain_error("random_field: slab parameters must be positive");
    if (slab.center_freq + slab.width > g.nyquist())
      throw std::domain_error("random_field: slab exceeds the frequency lattice");
    const double w_t = slab.width;
    const double w_l = slab.width * slab.width / slab.center_freq;
    out = make_field(g, Rep::Frequency);
    for_each_index(g, [&](long long idx, const int* a) {
      const double along = g.freq(a[0]) - slab.center_freq;
      double t2 = 0;
      for (int ax = 1; ax < g.d; ++ax) {
        const double x = g.freq(a[ax]);
        t2 += x * x;
      }
      out.values[static_cast<size_t>(idx)] =
          std::exp(-0.5 * (along * along) / (w_l * w_l) - 0.5 * t2 / (w_t * w_t));
    });
    out = inverse_transform(out);
  }

  const double norm = lebesgue_norm(out, 2.0);
  if (norm == 0) throw std::domain_error("random_field: degenerate spectrum");
  return scale(out, 1.0 / norm);
}

}  // namespace dwlab
