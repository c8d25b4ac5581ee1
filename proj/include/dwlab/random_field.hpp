// Seeded test-data generators.
//
// Every generated field is L^2-normalized and deterministic given
// (spectrum, seed) — normal variates come from a hand-rolled Box-Muller on
// top of mt19937_64 so the stream does not depend on the standard library's
// unspecified std::normal_distribution algorithm.
#pragma once

#include "dwlab/grid.hpp"

#include <cstdint>
#include <random>
#include <variant>

namespace dwlab {

// Default ensemble seed: the tag "0xD1SPER5" with its non-hex-digit
// characters expanded to their ASCII codes (D1 'S'=53 'P'=50 'E'=45 'R'=52
// '5'=35).
inline constexpr std::uint64_t kDefaultSeed = 0xD15350455235ull;

// Independent complex Gaussians on the frequency shell 2^j_lo < |xi| <= 2^j_hi.
struct WhiteBand {
  int j_lo = 0;
  int j_hi = 1;
};

// exp(-|x|^2 / (2 sigma^2)) centered at the origin (deterministic).
struct GaussianBump {
  double sigma = 1.0;
};

// Anisotropic frequency cap centered at (center_freq, 0, ..): transverse
// width `width`, longitudinal (radial) thickness width^2/center_freq — the
// curvature-matched slab shape (deterministic).
struct KnappSlab {
  double width = 1.0;
  double center_freq = 8.0;
};

using Spectrum = std::variant<WhiteBand, GaussianBump, KnappSlab>;

// Deterministic in (spectrum, seed); throws std::domain_error when the
// spectrum is not resolvable on the grid.  Returned physical-side.
Field random_field(const Grid& g, const Spectrum& spectrum, std::uint64_t seed);

// The underlying normal generator, exposed for other seeded samplers.  The
// engine is std::mt19937_64 (bit-exact across platforms by specification);
// only the uniform-to-normal map is hand-rolled, because the standard leaves
// std::normal_distribution's algorithm unspecified.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}
  double uniform();                     // in (0, 1]
  double next();                        // standard normal (Box-Muller)
  std::complex<double> next_complex();  // independent N(0,1) re and im

 private:
  std::mt19937_64 engine_;
};

}  // namespace dwlab
