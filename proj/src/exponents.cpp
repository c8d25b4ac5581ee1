#include "dwlab/exponents.hpp"

#include <iostream>

namespace dwlab {

namespace {

const Rational kHalf(1, 2);

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

void warn_y_index_once() {
  static bool warned = false;
  if (!warned) {
    warned = true;
    std::cerr << "[dwlab] note: Y-norm regularity index defaults to the interpolating "
                 "form (d^2-4d-2)/(2d^2-9d); the degenerate variant -3d^2/(2d^2-9d) "
                 "is selectable via YIndexForm::Degenerate\n";
  }
}

// (q, r) of the Y norm, shared by SpaceId::Y and SpaceId::S1a.
void y_time_space(long long D, Rational& q, Rational& r) {
  q = Rational(2 * D * D * D - 7 * D * D - 9 * D, D * D * D - 6 * D * D + 7 * D - 2);
  r = Rational(4 * D * D * D - 14 * D * D - 18 * D,
               2 * D * D * D - 11 * D * D + 11 * D - 8);
}

}  // namespace

PairSpec::PairSpec(int d_, const Rational& q_, const Rational& r_)
    : d(d_), q(q_), r(r_) {
  require(d >= 1, "pair: dimension must be >= 1");
  require(q >= Rational(2), "pair: q must satisfy 2 <= q <= inf");
  require(!r.is_infinite() && r >= Rational(2), "pair: r must satisfy 2 <= r < inf");
}

bool operator==(const PairSpec& a, const PairSpec& b) {
  return a.d == b.d && a.q == b.q && a.r == b.r;
}

const char* to_string(AdmissibilityCase c) {
  switch (c) {
    case AdmissibilityCase::StrictHeat: return "strict-heat";
    case AdmissibilityCase::EqualHeatOrdered: return "equal-heat-ordered";
    case AdmissibilityCase::InfinityTwo: return "infinity-two";
    case AdmissibilityCase::Rejected: return "rejected";
  }
  return "?";
}

Rational gamma(const PairSpec& p) {
  const Rational gap = kHalf - p.r.inverse();
  const Rational heat = Rational(p.d) * gap - p.q.inverse();
  const Rational wave = Rational(p.d + 1) / 2 * gap;
  return heat > wave ? heat : wave;
}

AdmissibilityVerdict check_homogeneous(const PairSpec& p) {
  const Rational lhs = Rational(p.d) / 2 * (kHalf - p.r.inverse());
  const Rational rhs = p.q.inverse();
  if (lhs > rhs)
    return {true, AdmissibilityCase::StrictHeat, "d/2*(1/2-1/r) > 1/q"};
  if (lhs == rhs) {
    if (p.q.is_infinite() && p.r == Rational(2))
      return {true, AdmissibilityCase::InfinityTwo, "(q,r) = (inf,2)"};
    return {true, AdmissibilityCase::EqualHeatOrdered, "d/2*(1/2-1/r) = 1/q"};
  }
  return {false, AdmissibilityCase::Rejected, "d/2*(1/2-1/r) < 1/q"};
}

Rational delta(int d, const PairSpec& p, const PairSpec& pt) {
  require(d >= 2, "delta: needs d >= 2");
  require(p.d == d && pt.d == d, "delta: pair dimension mismatch");
  const Rational iq = p.q.inverse(), ir = p.r.inverse();
  const Rational iqt = pt.q.inverse(), irt = pt.r.inverse();
  const Rational gap = kHalf - ir;    // 1/2 - 1/r
  const Rational gapt = kHalf - irt;  // 1/2 - 1/r~

  // Diagonal: equal cross-products mean no extra loss.
  const Rational cross = iqt * gap, crosst = iq * gapt;
  if (cross == crosst) return Rational(0);
  const bool left = cross < crosst;

  const Rational wf = Rational(d - 1) / 2;
  const bool wave = wf * gap >= iq;     // (q, r) wave-admissible
  const bool wavet = wf * gapt >= iqt;  // (q~, r~) wave-admissible

  if (wave && wavet) return Rational(0);
  if (wave && !wavet) {
    // The failed wave relation forces 1/q~ > 0, so q~/q = (1/q)/(1/q~) is finite.
    if (left) throw ImpossibleCase("delta: wave/non-wave row cannot sit in the left column");
    return (iq / iqt) * (iqt - wf * gapt);
  }
  if (!wave && wavet) {
    if (!left) throw ImpossibleCase("delta: non-wave/wave row cannot sit in the right column");
    return (iqt / iq) * (iq - wf * gap);
  }
  // Neither pair wave-admissible: both 1/q and 1/q~ are positive.
  if (left) return iqt * wf * (gapt / iqt - gap / iq);
  return iq * wf * (gap / iq - gapt / iqt);
}

AdmissibilityVerdict check_inhomogeneous(int d, const PairSpec& p, const PairSpec& pt,
                                         bool allow_wave_endpoint) {
  require(d >= 2, "check_inhomogeneous: needs d >= 2");
  require(p.d == d && pt.d == d, "check_inhomogeneous: pair dimension mismatch");

  AdmissibilityVerdict v;
  const bool inf2 = p.q.is_infinite() && p.r == Rational(2) && pt.q.is_infinite() &&
                    pt.r == Rational(2);
  if (inf2) {
    v = {true, AdmissibilityCase::InfinityTwo, "both pairs are (inf, 2)"};
  } else {
    const Rational dh = Rational(d) / 2;
    const Rational lhs =
        dh * (kHalf - p.r.inverse()) + dh * (kHalf - pt.r.inverse());
    const Rational rhs = p.q.inverse() + pt.q.inverse();
    if (lhs > rhs) {
      v = {true, AdmissibilityCase::StrictHeat, "heat scaling sum holds strictly"};
    } else if (lhs == rhs) {
      const bool qt_finite = !pt.q.is_infinite();  // q~' > 1
      const bool ordered = p.q.inverse() + pt.q.inverse() < Rational(1);  // q~' < q
      const bool q_finite = !p.q.is_infinite();
      if (qt_finite && ordered && q_finite) {
        v = {true, AdmissibilityCase::EqualHeatOrdered,
             "heat scaling equality with 1 < q~' < q < inf"};
      } else {
        v = {false, AdmissibilityCase::Rejected,
             "heat scaling equality without the ordering 1 < q~' < q < inf"};
      }
    } else {
      v = {false, AdmissibilityCase::Rejected, "heat scaling sum fails"};
    }
  }

  if (v.admissible && !allow_wave_endpoint && d >= 4) {
    const PairSpec ep = wave_endpoint_pair(d);
    if ((p.q == ep.q && p.r == ep.r) || (pt.q == ep.q && pt.r == ep.r)) {
      v = {false, AdmissibilityCase::Rejected,
           "wave endpoint pair excluded in no-endpoint mode"};
    }
  }
  return v;
}

std::pair<Rational, Rational> inhomogeneous_loss(int d, const PairSpec& p,
                                                 const PairSpec& pt) {
  AdmissibilityVerdict v = check_inhomogeneous(d, p, pt, /*allow_wave_endpoint=*/true);
  if (!v.admissible) throw std::domain_error("inhomogeneous_loss: " + v.reason);
  const Rational total = gamma(p) + gamma(pt) + delta(d, p, pt);
  return {total - Rational(1), total};
}

PairSpec wave_endpoint_pair(int d) {
  require(d >= 4, "wave_endpoint_pair: needs d >= 4");
  return PairSpec(d, Rational(2), Rational(2 * (d - 1), d - 3));
}

SpaceExponents space_exponents(int d, SpaceId id, YIndexForm y) {
  require(d >= 6, "space_exponents: table starts at d = 6");
  const long long D = d;
  switch (id) {
    case SpaceId::S: {
      const Rational e(2 * (D + 1), D - 2);
      return {e, e, Rational(0)};
    }
    case SpaceId::X:
      return {Rational(D * D + D, D + 2), Rational(2 * (D + 1), D - 1), Rational(2, D)};
    case SpaceId::Xp:
      return {Rational(D * D + D, 3 * D + 2), Rational(2 * (D + 1), D + 3),
              Rational(2, D)};
    case SpaceId::Y: {
      Rational q, r;
      y_time_space(D, q, r);
      if (y == YIndexForm::Interpolating) {
        warn_y_index_once();
        return {q, r, Rational(D * D - 4 * D - 2, 2 * D * D - 9 * D)};
      }
      return {q, r, Rational(D * D - 4 * D * D, 2 * D * D - 9 * D)};
    }
    case SpaceId::W: {
      const Rational e(2 * (D + 1), D - 1);
      return {e, e, kHalf};
    }
    case SpaceId::Wp: {
      const Rational e(2 * (D + 1), D + 3);
      return {e, e, kHalf};
    }
    case SpaceId::S1a: {
      Rational q, r;
      y_time_space(D, q, r);
      return {q, r, Rational(D * D - 4 * D - 2, 2 * D * D - 9 * D)};
    }
    case SpaceId::S1b:
      return {Rational(D * D + D, D + 2), Rational(2 * D * D * D - 2 * D, D * D * D - 5 * D - 8),
              Rational(D * D - 2 * D - 2, D * D - D)};
  }
  throw std::logic_error("space_exponents: unreachable");
}

bool check_interpolation_identity(int d, InterpolationId id, YIndexForm y) {
  require(d >= 6, "check_interpolation_identity: needs d >= 6");
  const long long D = d;
  switch (id) {
    case InterpolationId::XViaS: {
      const Rational th(2 * D + 4, D * D - 2 * D);
      const Rational om = Rational(1) - th;
      const SpaceExponents xs = space_exponents(d, SpaceId::X);
      const SpaceExponents ss = space_exponents(d, SpaceId::S);
      // Second factor: uniform in time, W^{a,b} in space.
      const Rational a(2 * D - 4, D * D - 4 * D - 4);
      const Rational b(2 * D * D - 8 * D - 8, D * D - 6 * D + 8);
      const bool ok_q = xs.q.inverse() == th * ss.q.inverse();
      const bool ok_r = xs.r.inverse() == th * ss.r.inverse() + om * b.inverse();
      const bool ok_s = xs.s == th * ss.s + om * a;
      return ok_q && ok_r && ok_s;
    }
    case InterpolationId::SViaX: {
      const Rational th(D, D * D - 3 * D - 4);
      const Rational om = Rational(1) - th;
      const SpaceExponents xs = space_exponents(d, SpaceId::X);
      const SpaceExponents ss = space_exponents(d, SpaceId::S);
      // Second factor: the half-derivative wave norm L_t^{qw} W^{1/2, qw}.
      const Rational qw(2 * (D + 1), D - 1);
      const bool ok_q = ss.q.inverse() == th * xs.q.inverse() + om * qw.inverse();
      // Interpolate (1/r, s), then trade all smoothness for integrability.
      const Rational r_interp = th * xs.r.inverse() + om * qw.inverse();
      const Rational s_interp = th * xs.s + om * kHalf;
      const bool ok_r =
          ss.r.inverse() == r_interp - s_interp / Rational(D) && ss.s == Rational(0);
      return ok_q && ok_r;
    }
    case InterpolationId::HalfWaveViaXY: {
      const Rational th(1, 2 * (D - 4));
      const Rational om = Rational(1) - th;
      const SpaceExponents xs = space_exponents(d, SpaceId::X);
      const SpaceExponents ys = space_exponents(d, SpaceId::Y, y);
      const Rational qt(2 * (D + 1), D - 2);
      const Rational rt(2 * D * (D + 1), D * D - D + 1);
      const bool ok_q = qt.inverse() == th * xs.q.inverse() + om * ys.q.inverse();
      const bool ok_r = rt.inverse() == th * xs.r.inverse() + om * ys.r.inverse();
      const bool ok_s = kHalf == th * xs.s + om * ys.s;
      return ok_q && ok_r && ok_s;
    }
  }
  throw std::logic_error("check_interpolation_identity: unreachable");
}

}  // namespace dwlab
