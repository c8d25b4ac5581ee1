#include "doctest.h"
#include "dwlab/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace dwlab;

namespace {

// 1/q values in [0, 1/2] (0 encodes q = inf) with denominator <= max_den.
std::vector<Rational> inverse_time_values(int max_den) {
  std::vector<Rational> out{Rational(0)};
  for (int den = 2; den <= max_den; ++den)
    for (int num = 1; 2 * num <= den; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

// 1/r values in (0, 1/2] (r finite) with denominator <= max_den.
std::vector<Rational> inverse_space_values(int max_den) {
  std::vector<Rational> out;
  for (int den = 2; den <= max_den; ++den)
    for (int num = 1; 2 * num <= den; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

// Conjugate exponent: x' with 1/x + 1/x' = 1.
Rational conjugate(const Rational& x) { return (Rational(1) - x.inverse()).inverse(); }

}  // namespace

TEST_SUITE("exponents") {

TEST_CASE("pair validation") {
  CHECK_NOTHROW(PairSpec(4, Rational(2), Rational(6)));
  CHECK_NOTHROW(PairSpec(2, Rational::infinity(), Rational(2)));
  CHECK_THROWS_AS(PairSpec(4, rat(3, 2), Rational(6)), std::domain_error);   // q < 2
  CHECK_THROWS_AS(PairSpec(4, Rational(2), Rational::infinity()), std::domain_error);
  CHECK_THROWS_AS(PairSpec(4, Rational(2), rat(3, 2)), std::domain_error);   // r < 2
  CHECK_THROWS_AS(PairSpec(0, Rational(2), Rational(2)), std::domain_error);
}

TEST_CASE("gamma anchored values") {
  CHECK(gamma(PairSpec(4, Rational(2), Rational(6))) == rat(5, 6));
  CHECK(gamma(PairSpec(3, Rational::infinity(), Rational(2))) == rat(0));
  CHECK(gamma(PairSpec(7, Rational::infinity(), Rational(2))) == rat(0));
  // max(d(1/2-1/r) - 1/q, (d+1)/2*(1/2-1/r)) at (4,4,4): max(3/4, 5/8).
  CHECK(gamma(PairSpec(4, Rational(4), Rational(4))) == rat(3, 4));
  // Endpoint pairs: both branches coincide at (d+1)/(2(d-1)).
  for (int d = 4; d <= 8; ++d)
    CHECK(gamma(wave_endpoint_pair(d)) == rat(d + 1, 2 * (d - 1)));
}

TEST_CASE("gamma equals the max of its two branches (enumeration)") {
  const auto iqs = inverse_time_values(24);
  const auto irs = inverse_space_values(24);
  for (int d : {2, 4, 7}) {
    for (const auto& iq : iqs) {
      for (const auto& ir : irs) {
        const PairSpec p(d, iq.inverse(), ir.inverse());
        const Rational gap = rat(1, 2) - ir;
        const Rational heat = Rational(d) * gap - iq;
        const Rational wave = rat(d + 1, 2) * gap;
        const Rational g = gamma(p);
        const bool ok = g >= heat && g >= wave && (g == heat || g == wave);
        if (!ok) {
          CAPTURE(d);
          CAPTURE(iq.str());
          CAPTURE(ir.str());
          CHECK(ok);
          return;
        }
      }
    }
  }
  CHECK(true);
}

TEST_CASE("gamma monotone as r grows") {
  // Larger r (smaller 1/r) can only increase both branches.
  const auto iqs = inverse_time_values(12);
  auto irs = inverse_space_values(24);
  std::sort(irs.begin(), irs.end());  // ascending 1/r = descending r
  for (int d : {2, 3, 5}) {
    for (const auto& iq : iqs) {
      for (size_t i = 1; i < irs.size(); ++i) {
        const Rational lo = gamma(PairSpec(d, iq.inverse(), irs[i].inverse()));
        const Rational hi = gamma(PairSpec(d, iq.inverse(), irs[i - 1].inverse()));
        if (!(lo <= hi)) {
          CAPTURE(d);
          CAPTURE(iq.str());
          CHECK(lo <= hi);
          return;
        }
      }
    }
  }
  CHECK(true);
}

TEST_CASE("homogeneous admissibility") {
  CHECK(check_homogeneous(PairSpec(4, Rational(2), Rational(6))).admissible);
  const auto inf2 = check_homogeneous(PairSpec(2, Rational::infinity(), Rational(2)));
  CHECK(inf2.admissible);
  CHECK(inf2.kind == AdmissibilityCase::InfinityTwo);
  const auto bad = check_homogeneous(PairSpec(3, Rational(2), Rational(2)));
  CHECK_FALSE(bad.admissible);
  CHECK(bad.kind == AdmissibilityCase::Rejected);
}

TEST_CASE("delta anchored values") {
  CHECK(delta(4, PairSpec(4, Rational(2), Rational(6)), PairSpec(4, Rational(2), Rational(6))) ==
        rat(0));
  CHECK(delta(4, PairSpec(4, Rational(2), Rational(3)), PairSpec(4, Rational(4), Rational(4))) ==
        rat(1, 8));
  for (int d : {2, 5, 8}) {
    const PairSpec e(d, Rational::infinity(), Rational(2));
    CHECK(delta(d, e, e) == rat(0));
  }
}

TEST_CASE("delta symmetry, sign, and total classification (enumeration)") {
  const auto iqs = inverse_time_values(6);
  const auto irs = inverse_space_values(6);
  for (int d = 2; d <= 8; ++d) {
    for (const auto& iq : iqs)
      for (const auto& ir : irs)
        for (const auto& iqt : iqs)
          for (const auto& irt : irs) {
            const PairSpec p(d, iq.inverse(), ir.inverse());
            const PairSpec pt(d, iqt.inverse(), irt.inverse());
            Rational dv;
            // Every valid combination must classify (no empty cell reached).
            try {
              dv = delta(d, p, pt);
            } catch (const ImpossibleCase&) {
              CAPTURE(d);
              CAPTURE(iq.str());
              CAPTURE(ir.str());
              CAPTURE(iqt.str());
              CAPTURE(irt.str());
              CHECK_MESSAGE(false, "delta reached an impossible cell");
              return;
            }
            if (!(dv >= rat(0) && dv == delta(d, pt, p))) {
              CAPTURE(d);
              CAPTURE(iq.str());
              CAPTURE(ir.str());
              CAPTURE(iqt.str());
              CAPTURE(irt.str());
              CHECK(dv >= rat(0));
              CHECK(dv == delta(d, pt, p));
              return;
            }
          }
  }
  CHECK(true);
}

TEST_CASE("inhomogeneous admissibility") {
  const PairSpec ep4 = wave_endpoint_pair(4);
  auto with_ep = check_inhomogeneous(4, ep4, ep4, true);
  CHECK(with_ep.admissible);
  CHECK(with_ep.kind == AdmissibilityCase::StrictHeat);
  auto without_ep = check_inhomogeneous(4, ep4, ep4, false);
  CHECK_FALSE(without_ep.admissible);

  const PairSpec inf2(3, Rational::infinity(), Rational(2));
  auto v = check_inhomogeneous(3, inf2, inf2, false);
  CHECK(v.admissible);
  CHECK(v.kind == AdmissibilityCase::InfinityTwo);
}

TEST_CASE("loss anchored values") {
  const PairSpec ep4 = wave_endpoint_pair(4);
  auto loss = inhomogeneous_loss(4, ep4, ep4);
  CHECK(loss.first == rat(2, 3));
  CHECK(loss.second == rat(5, 3));

  for (int d = 4; d <= 8; ++d) {
    const PairSpec ep = wave_endpoint_pair(d);
    auto l = inhomogeneous_loss(d, ep, ep);
    CHECK(l.first == rat(2, d - 1));
    CHECK(l.second == rat(d + 1, d - 1));
  }

  const PairSpec e(5, Rational::infinity(), Rational(2));
  auto l0 = inhomogeneous_loss(5, e, e);
  CHECK(l0.first == rat(-1));
  CHECK(l0.second == rat(0));
}

TEST_CASE("zero-total-loss dual pair") {
  // Dual pair quoted for the d >= 5 fixed-point scheme: its conjugates,
  // combined with the wave endpoint pair, make gamma + gamma~ + delta = 1.
  for (int d = 5; d <= 8; ++d) {
    const Rational qp = rat(2 * (d + 1), d + 5);
    const Rational rp = rat(2 * (d * d - 1), d * d + 2 * d - 7);
    const PairSpec pt(d, conjugate(qp), conjugate(rp));
    auto l = inhomogeneous_loss(d, wave_endpoint_pair(d), pt);
    CHECK(l.first == rat(0));
    CHECK(l.second == rat(1));
  }
}

TEST_CASE("wave endpoint pair") {
  CHECK(wave_endpoint_pair(4) == PairSpec(4, Rational(2), Rational(6)));
  CHECK(wave_endpoint_pair(5) == PairSpec(5, Rational(2), Rational(4)));
  CHECK(wave_endpoint_pair(7) == PairSpec(7, Rational(2), Rational(3)));
  CHECK_THROWS_AS(wave_endpoint_pair(3), std::domain_error);
  // Exact equality in the wave-admissibility relation.
  for (int d = 4; d <= 10; ++d) {
    const PairSpec ep = wave_endpoint_pair(d);
    CHECK(rat(d - 1, 2) * (rat(1, 2) - ep.r.inverse()) == ep.q.inverse());
  }
}

TEST_CASE("auxiliary space exponent table at d = 6") {
  const auto X = space_exponents(6, SpaceId::X);
  CHECK(X.q == rat(21, 4));
  CHECK(X.r == rat(14, 5));
  CHECK(X.s == rat(1, 3));
  const auto S = space_exponents(6, SpaceId::S);
  CHECK(S.q == rat(7, 2));
  CHECK(S.r == rat(7, 2));
  CHECK(S.s == rat(0));
  const auto W = space_exponents(6, SpaceId::W);
  CHECK(W.q == rat(14, 5));
  CHECK(W.r == rat(14, 5));
  CHECK(W.s == rat(1, 2));
  const auto Wp = space_exponents(6, SpaceId::Wp);
  CHECK(Wp.q == rat(14, 9));
  CHECK(Wp.r == rat(14, 9));
  const auto Xp = space_exponents(6, SpaceId::Xp);
  CHECK(Xp.q == rat(42, 20));
  CHECK(Xp.s == rat(1, 3));
  const auto S1b = space_exponents(6, SpaceId::S1b);
  CHECK(S1b.q == rat(21, 4));
  CHECK(S1b.r == rat(210, 89));
  CHECK(S1b.s == rat(11, 15));
  const auto Y = space_exponents(6, SpaceId::Y);
  CHECK(Y.q == rat(63, 20));
  CHECK(Y.r == rat(126, 47));
  CHECK(Y.s == rat(5, 9));
  const auto Yd = space_exponents(6, SpaceId::Y, YIndexForm::Degenerate);
  CHECK(Yd.s == rat(-6));
  CHECK_THROWS_AS(space_exponents(5, SpaceId::X), std::domain_error);
}

TEST_CASE("S1 components sit on the wave-admissibility line") {
  // Each S^1 norm is L_t^q B_{r,2}^{1-gamma(r)} with 1/q = (d-1)/2*(1/2-1/r)
  // and gamma(r) = (d+1)/2*(1/2-1/r).
  for (int d = 6; d <= 10; ++d) {
    for (SpaceId id : {SpaceId::S1a, SpaceId::S1b, SpaceId::W}) {
      const auto e = space_exponents(d, id);
      const Rational gap = rat(1, 2) - e.r.inverse();
      CHECK(e.q.inverse() == rat(d - 1, 2) * gap);
      CHECK(e.s == rat(1) - rat(d + 1, 2) * gap);
    }
  }
}

TEST_CASE("interpolation identities") {
  for (int d = 6; d <= 10; ++d) {
    CAPTURE(d);
    CHECK(check_interpolation_identity(d, InterpolationId::XViaS));
    CHECK(check_interpolation_identity(d, InterpolationId::SViaX));
    CHECK(check_interpolation_identity(d, InterpolationId::HalfWaveViaXY));
    // The degenerate Y index breaks the X/Y identity in every dimension.
    CHECK_FALSE(
        check_interpolation_identity(d, InterpolationId::HalfWaveViaXY, YIndexForm::Degenerate));
  }
  CHECK_THROWS_AS(check_interpolation_identity(5, InterpolationId::XViaS), std::domain_error);
}

}  // TEST_SUITE
