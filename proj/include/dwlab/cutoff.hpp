// The fixed radial C^infinity cutoff profile behind every frequency
// projection: chi = 1 on [0,1], chi = 0 on [25/24, inf), monotone between.
//
// chi(rho) = theta((25/24 - rho)/(1/24)) with the standard smooth step
// theta(s) = B(s)/(B(s) + B(1-s)), B(s) = exp(-1/s) for s > 0 and 0
// otherwise.  Everything is elementary and deterministic across platforms.
#pragma once

#include <cmath>

namespace dwlab {

inline double bump_B(double s) { return s > 0 ? std::exp(-1.0 / s) : 0.0; }

// Smooth step: 0 for s <= 0, 1 for s >= 1, C^infinity and monotone.
inline double smooth_step(double s) {
  if (s <= 0) return 0.0;
  if (s >= 1) return 1.0;
  const double b = bump_B(s);
  return b / (b + bump_B(1.0 - s));
}

// The low-pass profile.
inline double cutoff_chi(double rho) { return smooth_step((25.0 / 24.0 - rho) * 24.0); }

// The complementary high-pass profile 1 - chi (vanishes for rho <= 1).
inline double cutoff_chi_gt1(double rho) { return 1.0 - cutoff_chi(rho); }

}  // namespace dwlab
