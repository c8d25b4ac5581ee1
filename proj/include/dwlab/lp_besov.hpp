// Dyadic frequency decomposition and the norms built on it.
//
// All projections come from one smooth radial profile chi (see cutoff.hpp)
// via Delta_{<=j} = chi(|xi|/2^j); differences of these give the annulus
// blocks, complements give high-pass pieces.  Besov norms are the low block
// plus an l^q-weighted ladder of annulus norms; mixed norms put a trapezoid
// time integral outside a spatial norm.
#pragma once

#include "dwlab/field_ops.hpp"
#include "dwlab/grid.hpp"
#include "dwlab/propagator.hpp"  // Trajectory
#include "dwlab/rational.hpp"

#include <vector>

namespace dwlab {

enum class LPKind {
  Eq,        // annulus block Delta_j
  Leq,       // Delta_{<=j}
  Lt,        // Delta_{<j}  = Delta_{<=j-1}
  Gt,        // Delta_{>j}  = Id - Delta_{<=j}
  Geq,       // Delta_{>=j} = Id - Delta_{<=j-1}
  Range,     // Delta_j + ... + Delta_l
  Tilde,     // Delta_{j-1} + Delta_j + Delta_{j+1}
  HighPass,  // 1 - chi(|xi|), kills |xi| <= 1
  LowPass,   // chi(|xi|), identity on |xi| <= 1
};

struct LPVariant {
  LPKind kind;
  int j = 0;
  int l = 0;  // Range only
};

inline LPVariant lp_eq(int j) { return {LPKind::Eq, j, 0}; }
inline LPVariant lp_leq(int j) { return {LPKind::Leq, j, 0}; }
inline LPVariant lp_lt(int j) { return {LPKind::Lt, j, 0}; }
inline LPVariant lp_gt(int j) { return {LPKind::Gt, j, 0}; }
inline LPVariant lp_geq(int j) { return {LPKind::Geq, j, 0}; }
inline LPVariant lp_range(int j, int l) { return {LPKind::Range, j, l}; }
inline LPVariant lp_tilde(int j) { return {LPKind::Tilde, j, 0}; }
inline LPVariant lp_high_pass() { return {LPKind::HighPass, 0, 0}; }
inline LPVariant lp_low_pass() { return {LPKind::LowPass, 0, 0}; }

// Scalar radial symbol of the projection.
double lp_profile(const LPVariant& v, double rho);

// The projection as a lattice multiplier / applied to a field (result in the
// input's representation).  Annulus-type variants whose support lies entirely
// beyond the resolvable lattice radii throw std::domain_error.
Multiplier lp_multiplier(const Grid& g, const LPVariant& v);
Field lp_project(const LPVariant& v, const Field& f);

struct BesovSpec {
  double s = 0;
  Rational p = Rational(2);  // in (1, inf)
  Rational q = Rational(2);  // in [1, inf]
};

// Largest dyadic index the lattice can see: the smallest j with
// Delta_{<=j} = Id on the grid, so sums through it are exact.
int full_coverage_j_max(const Grid& g);
// Conservative per-axis default (one octave below the axis Nyquist).
int default_besov_j_max(const Grid& g);

struct BesovNorm {
  double value = 0;
  // ||Delta_{j_max} f||_p / ||f||_p: energy sitting at the truncation edge.
  double tail_indicator = 0;
};

// || Delta_{<=0} f ||_p + l^q of { 2^{js} ||Delta_j f||_p, j = 1..j_max }.
// The l^q reduction sums in descending magnitude order (deterministic).
BesovNorm besov_norm(const Field& f, const BesovSpec& spec, int j_max);

// (int ||F(t)||_{L^r}^q dt)^{1/q} by composite trapezoid over the trajectory
// nodes; sup over nodes when q_t is infinite.
double mixed_norm(const Trajectory& traj, const Rational& q_t, const Rational& r_x);

// Same with the spatial norm replaced by the Besov norm; the reported tail
// indicator is the max over frames.
BesovNorm mixed_besov_norm(const Trajectory& traj, const Rational& q_t,
                           const BesovSpec& spec, int j_max);

// Which side of the dyadic ladder carries the weight in the tail-resummed
// equivalence below: PlusS pairs 2^{js} with Delta_{>=j}, MinusS pairs
// 2^{-js} with Delta_{<=j} (and measures the B^{-s} norm on the left).
enum class TailSign { PlusS, MinusS };

struct EquivalenceReport {
  double lhs = 0;    // the Besov norm itself
  double rhs = 0;    // the tail-resummed expression cut at J
  double ratio = 0;  // lhs / rhs, 0 when degenerate
  bool degenerate = false;
};

// Both sides of the equivalence
//   ||f||_{B^{+-s}_{p,q}}  ~_J  ||Delta_{<=J} f||_p + l^q-ladder from J,
// evaluated exactly on the grid (the MinusS ladder's infinite geometric tail
// is added in closed form).  Requires s > 0 and J >= 0.
EquivalenceReport besov_tail_equivalence(const Field& f, double s, const Rational& p,
                                         const Rational& q, int J, TailSign sign);

// || |u|^alpha ||_{B^s_{p,inf}} / ||u||^alpha_{B^{s/alpha}_{p alpha,inf}}.
// Requires alpha in (0,1], s in (0,1), p*alpha > 1.  Returns 0 on zero input.
double holder_besov_ratio(const Field& u, double alpha, double s, const Rational& p);

}  // namespace dwlab
