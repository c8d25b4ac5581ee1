// Exact exponent calculus for the damped-wave space-time estimates.
//
// A space-time Lebesgue pair (q, r) carries a derivative loss gamma; an
// inhomogeneous combination of two pairs carries an extra loss delta read off
// a four-row case table.  Admissibility checks return structured verdicts.
// Dimensions d >= 6 additionally get the exponent table of the auxiliary
// interpolation spaces (S, X, X', Y, W, W', the two S^1 components) and the
// three interpolation identities connecting them.
//
// Everything here is exact rational arithmetic on purpose: the case analysis
// rests on equality guards that floating point cannot decide.
#pragma once

#include "dwlab/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dwlab {

// A space-time exponent pair in dimension d: 2 <= q <= inf, 2 <= r < inf.
struct PairSpec {
  int d;
  Rational q;
  Rational r;
  // Validates the ranges above (and d >= 1); throws std::domain_error.
  PairSpec(int d_, const Rational& q_, const Rational& r_);
};

bool operator==(const PairSpec& a, const PairSpec& b);

enum class AdmissibilityCase { StrictHeat, EqualHeatOrdered, InfinityTwo, Rejected };
const char* to_string(AdmissibilityCase c);

struct AdmissibilityVerdict {
  bool admissible = false;
  AdmissibilityCase kind = AdmissibilityCase::Rejected;
  std::string reason;
};

// Thrown when the delta classification lands on a cell the case analysis
// proves empty; reaching it signals inconsistent inputs, not a math fact.
struct ImpossibleCase : std::logic_error {
  explicit ImpossibleCase(const std::string& what) : std::logic_error(what) {}
};

// gamma = max{ d(1/2 - 1/r) - 1/q, (d+1)/2 * (1/2 - 1/r) }.
Rational gamma(const PairSpec& p);

// Heat-type admissibility: d/2 * (1/2 - 1/r) >= 1/q.
AdmissibilityVerdict check_homogeneous(const PairSpec& p);

// The extra derivative loss for the inhomogeneous estimate with output pair
// (q, r) and dual input pair (q~, r~).  Rows are classified by which of the
// two pairs satisfies the wave-admissibility relation (d-1)/2*(1/2-1/r) >= 1/q,
// columns by the sign of (1/q~)(1/2-1/r) - (1/q)(1/2-1/r~); the diagonal
// (equal cross-products) always yields 0.  Throws ImpossibleCase on the two
// provably empty cells.
Rational delta(int d, const PairSpec& p, const PairSpec& pt);

// Admissibility of the pair combination: strict heat-scaling inequality, or
// equality with the ordering 1 < q~' < q < inf, or both pairs (inf, 2).
// With allow_wave_endpoint = false, additionally rejects (for d >= 4) any
// combination touching the wave endpoint pair (2, 2(d-1)/(d-3)).
AdmissibilityVerdict check_inhomogeneous(int d, const PairSpec& p, const PairSpec& pt,
                                         bool allow_wave_endpoint);

// (gamma + gamma~ + delta - 1, gamma + gamma~ + delta).  Throws
// std::domain_error when check_inhomogeneous (endpoint allowed) rejects.
std::pair<Rational, Rational> inhomogeneous_loss(int d, const PairSpec& p,
                                                 const PairSpec& pt);

// The wave endpoint pair (2, 2(d-1)/(d-3)); requires d >= 4.
PairSpec wave_endpoint_pair(int d);

// ---------------------------------------------------------------------------
// Auxiliary space exponent table, d >= 6.
// Each space is L_t^q with spatial Sobolev/Besov index (r, s).
enum class SpaceId { S, X, Xp, Y, W, Wp, S1a, S1b };

// The Y regularity index is wired in two forms.  Interpolating is the default:
// it is the unique value making the X/Y interpolation identity close and
// matching the regularity pattern of the S^1 components.  Degenerate keeps the
// literal combination (d^2 - 4d^2)/(2d^2 - 9d) = -3d^2/(2d^2-9d) for
// comparison; it breaks the identity.
enum class YIndexForm { Interpolating, Degenerate };

struct SpaceExponents {
  Rational q;  // time integrability
  Rational r;  // space integrability
  Rational s;  // regularity
};

SpaceExponents space_exponents(int d, SpaceId id,
                               YIndexForm y = YIndexForm::Interpolating);

// The three convexity identities behind the auxiliary-space scheme:
//   XViaS          X sits between S and a uniform-in-time Sobolev norm.
//   SViaX          S sits between X and the half-derivative wave norm,
//                  with the spatial factor closed by a Sobolev trade
//                  (1/r_target = 1/r_interp - s_interp/d, s_target = 0).
//   HalfWaveViaXY  the L_t^{2(d+1)/(d-2)} W^{1/2, 2d(d+1)/(d^2-d+1)} norm
//                  sits componentwise between X and Y.
// Returns true iff every component identity holds exactly.
enum class InterpolationId { XViaS, SViaX, HalfWaveViaXY };

bool check_interpolation_identity(int d, InterpolationId id,
                                  YIndexForm y = YIndexForm::Interpolating);

}  // namespace dwlab
