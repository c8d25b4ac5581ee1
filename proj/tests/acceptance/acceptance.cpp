// Acceptance gate: one self-contained check per shipped capability, each
// printing a single [PASS]/[FAIL] line.  Exit code 0 iff every selected
// criterion passes.  `--only k` runs a single criterion (used by ctest so the
// slow experiments get their own timeout budget).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "dwlab/exponents.hpp"
#include "dwlab/field_ops.hpp"
#include "dwlab/lp_besov.hpp"
#include "dwlab/paraproduct.hpp"
#include "dwlab/propagator.hpp"
#include "dwlab/radial_oracle.hpp"
#include "dwlab/random_field.hpp"

namespace {

struct check_failure : std::exception {
  std::string msg;
  explicit check_failure(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
};

#define ACHECK(cond)                                                              \
  do {                                                                            \
    if (!(cond)) {                                                                \
      throw check_failure(std::string("  check failed at ") + __FILE__ + ":" +    \
                          std::to_string(__LINE__) + ": " #cond);                 \
    }                                                                             \
  } while (0)

#define ACHECK_MSG(cond, detail)                                                  \
  do {                                                                            \
    if (!(cond)) {                                                                \
      throw check_failure(std::string("  check failed at ") + __FILE__ + ":" +    \
                          std::to_string(__LINE__) + ": " #cond " [" + (detail) + \
                          "]");                                                   \
    }                                                                             \
  } while (0)

using namespace dwlab;

// --------------------------------------------------------------------------
// 1. Exponent calculus: anchored values, losses, endpoint pairs, and the
//    auxiliary-space interpolation identities — all exact rational equality.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();

  ACHECK(gamma(PairSpec(4, Rational(2), Rational(6))) == rat(5, 6));

  for (int d = 4; d <= 8; ++d) {
    const PairSpec ep = wave_endpoint_pair(d);
    const auto loss = inhomogeneous_loss(d, ep, ep);
    ACHECK_MSG(loss.first == rat(2, d - 1), "d=" + std::to_string(d));
    ACHECK_MSG(loss.second == rat(d + 1, d - 1), "d=" + std::to_string(d));
  }

  // The two quoted dual-pair choices for d >= 5: total loss minus one lands
  // on 0 and 2/(d-1) respectively.
  const auto conj = [](const Rational& x) {
    return (Rational(1) - x.inverse()).inverse();
  };
  for (int d = 5; d <= 8; ++d) {
    const PairSpec ep = wave_endpoint_pair(d);
    const PairSpec dual_a(d, conj(rat(2 * (d + 1), d + 5)),
                          conj(rat(2 * (d * d - 1), d * d + 2 * d - 7)));
    ACHECK_MSG(inhomogeneous_loss(d, ep, dual_a).first == rat(0),
               "d=" + std::to_string(d));
    const PairSpec dual_b(d, conj(rat(2)), conj(rat(2 * (d - 1), d + 1)));
    ACHECK_MSG(inhomogeneous_loss(d, ep, dual_b).first == rat(2, d - 1),
               "d=" + std::to_string(d));
  }

  ACHECK(wave_endpoint_pair(4) == PairSpec(4, Rational(2), Rational(6)));
  ACHECK(wave_endpoint_pair(5) == PairSpec(5, Rational(2), Rational(4)));
  ACHECK(wave_endpoint_pair(7) == PairSpec(7, Rational(2), Rational(3)));

  for (int d = 6; d <= 10; ++d) {
    ACHECK_MSG(check_interpolation_identity(d, InterpolationId::XViaS),
               "d=" + std::to_string(d));
    ACHECK_MSG(check_interpolation_identity(d, InterpolationId::SViaX),
               "d=" + std::to_string(d));
    ACHECK_MSG(check_interpolation_identity(d, InterpolationId::HalfWaveViaXY),
               "d=" + std::to_string(d));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 1.0, "took " + std::to_string(secs) + "s");
}

// --------------------------------------------------------------------------
// 2. Propagator exactness at n=64, d=3: identities at t=0 on the symbol
//    level, second-order PDE residual convergence, and the constant-data
//    closed forms to 1e-10.
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g = make_grid(3, 64, 2 * 3.141592653589793238462643383279502884);

  // Symbol-level identities at t = 0.
  {
    const Multiplier d0 = propagator_multiplier(g, PropagatorKind::D, 0.0);
    const Multiplier dt0 = propagator_multiplier(g, PropagatorKind::DtD, 0.0);
    double dev_d = 0, dev_dt = 0;
    for (long long i = 0; i < g.size(); ++i) {
      dev_d = std::max(dev_d, std::abs(d0.values[i]));
      dev_dt = std::max(dev_dt, std::abs(dt0.values[i] - 1.0));
    }
    ACHECK_MSG(dev_d <= 1e-14, "max |D(0) symbol| = " + std::to_string(dev_d));
    ACHECK_MSG(dev_dt <= 1e-14, "max |DtD(0) symbol - 1| = " + std::to_string(dev_dt));
  }

  // Second-order convergence of the discrete PDE residual.
  {
    const Field u0 = random_field(g, WhiteBand{0, 3}, kDefaultSeed);
    const Field u1 = random_field(g, WhiteBand{0, 3}, kDefaultSeed + 1);
    const double coarse = pde_residual(u0, u1, make_time_grid(2.0, 32));
    const double fine = pde_residual(u0, u1, make_time_grid(2.0, 64));
    const double ratio = coarse / fine;
    ACHECK_MSG(ratio >= 3.0 && ratio <= 5.0,
               "step-doubling ratio = " + std::to_string(ratio));
  }

  // Constant-data closed forms.
  {
    Field c = make_field(g, Rep::Physical);
    for (auto& v : c.values) v = 1.3;
    const Field zero = make_field(g, Rep::Physical);
    for (const double t : {0.5, 1.0, 2.0}) {
      const StatePair s = linear_solution(t, zero, c);
      const Field expect = scale(c, 1 - std::exp(-t));
      ACHECK_MSG(max_abs_diff(s.u, expect) <= 1e-10, "t = " + std::to_string(t));
    }
  }
  {
    // The Duhamel closed form lives on the zero mode, so a small grid with a
    // very fine step reaches 1e-10 through the trapezoid error.
    const Grid g1 = make_grid(1, 8, 1.0);
    const double c = 0.8;
    const TimeGrid tg = make_time_grid(1.0, 32768);
    Trajectory forcing{tg, {}};
    forcing.frames.reserve(tg.steps + 1);
    for (int i = 0; i <= tg.steps; ++i) {
      Field fr = make_field(g1, Rep::Physical);
      for (auto& v : fr.values) v = c;
      forcing.frames.push_back(std::move(fr));
    }
    const Trajectory out = duhamel(forcing, tg);
    double worst = 0;
    for (const int i : {tg.steps / 3, tg.steps}) {
      const double t = tg.node(i);
      const double exact = c * (t - 1 + std::exp(-t));
      for (const auto& v : out.frames[i].values)
        worst = std::max(worst, std::abs(v - exact));
    }
    ACHECK_MSG(worst <= 1e-10, "duhamel closed-form deviation = " + std::to_string(worst));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 60.0, "took " + std::to_string(secs) + "s");
}

// --------------------------------------------------------------------------
// 5. The d = 3 endpoint obstruction: for cone-layer data g_eta the squared
//    L^2_t trace of e^{-t/2} W(t) g_eta along the ray x = t e1 grows without
//    bound as eta -> 0 (strictly increasing over eta = 2^-k, k = 1..8, with a
//    positive log-linear fit), while the same functional at a fixed observer
//    stays bounded on the very same family — the growth is carried by the
//    moving concentration, not by the data size, which is L^2-normalized.
void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const double ln2 = std::log(2.0);

  std::vector<double> xs, jw, joff;
  std::printf("  %-4s %-10s %-14s %-14s\n", "k", "eta", "J_ray", "J_fixed");
  for (int k = 1; k <= 8; ++k) {
    const double eta = std::ldexp(1.0, -k);
    const ConeFamily fam = make_cone_family(eta);
    const double ray = w_trace_l2(fam.data, {0, 0, 0}, {1, 0, 0});
    const double fixed = w_trace_l2(fam.data, {1.5, 0, 0}, {0, 0, 0});
    std::printf("  %-4d %-10.6f %-14.8g %-14.8g\n", k, eta, ray, fixed);
    xs.push_back(k * ln2);  // log(1/eta)
    jw.push_back(ray);
    joff.push_back(fixed);
  }

  for (size_t i = 1; i < jw.size(); ++i)
    ACHECK_MSG(jw[i] > jw[i - 1], "k = " + std::to_string(i + 1));

  // Least-squares line J_ray vs log(1/eta).
  const size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += jw[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * jw[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  for (size_t i = 0; i < n; ++i) {
    ss_res += (jw[i] - slope * xs[i] - icpt) * (jw[i] - slope * xs[i] - icpt);
    ss_tot += (jw[i] - sy / n) * (jw[i] - sy / n);
  }
  const double r2 = 1.0 - ss_res / ss_tot;
  const double growth = jw.back() / jw.front();
  const double contrast = joff.back() / joff.front();
  std::printf("  ray trace: fit slope = %.6g, R^2 = %.6f, growth x%.2f\n", slope,
              r2, growth);
  std::printf("  fixed observer: ratio %.3f (bounded on the same family)\n",
              contrast);
  ACHECK_MSG(slope > 0, "slope = " + std::to_string(slope));
  ACHECK_MSG(r2 > 0.9, "R^2 = " + std::to_string(r2));
  ACHECK_MSG(growth >= 2.0, "growth = " + std::to_string(growth));
  ACHECK_MSG(contrast <= 1.05, "fixed-observer ratio = " + std::to_string(contrast));

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 60.0, "took " + std::to_string(secs) + "s");
}

// --------------------------------------------------------------------------
// 6. Spectral vs quadrature agreement in d = 3: the Fourier solution operator
//    applied to a radial gaussian matches the two-term quadrature form
//    (damped volume integral plus spherical mean) to 1e-3 relative at
//    t in {1, 2, 4}, and the run resolves which modified-Bessel kernel
//    normalization the volume term uses.
void criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const double sigma = 2.0;
  const RadialProfile prof = make_radial_profile(
      [sigma](double r) { return std::exp(-r * r / (2 * sigma * sigma)); },
      16.0);
  const Grid g = make_grid(3, 64, 64.0);
  const CrossCheckReport rep = cross_check_d3(
      prof, {1.0, 2.0, 4.0}, {{0, 0, 0}, {2, 1, 0}, {0.5, -0.25, 0.75}}, g);

  for (const auto& row : rep.rows)
    std::printf("  t=%-3.0f x=(%5.2f,%5.2f,%5.2f): spectral=%.10g quad=%.10g\n",
                row.t, row.x[0], row.x[1], row.x[2], row.spectral,
                row.quad_conventional);
  std::printf("  kernel normalization resolved: %s (rel dev %.3e; bare series %.3e)\n",
              rep.resolved == BesselForm::Conventional
                  ? "conventional, leading z/2 factor"
                  : "bare even series",
              rep.max_rel_dev_conventional, rep.max_rel_dev_series);
  ACHECK(rep.resolved == BesselForm::Conventional);
  ACHECK_MSG(rep.max_rel_dev <= 1e-3,
             "max rel dev = " + std::to_string(rep.max_rel_dev));

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 60.0, "took " + std::to_string(secs) + "s");
}

// --------------------------------------------------------------------------
// 7. Paraproduct splitting: the two pieces reassemble fg to 1e-10 across a
//    50-sample ensemble, and all four bilinear estimates stay bounded with
//    flat ratio trends under frequency rescaling at their d = 4 exponent
//    values.
void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const double pi = 3.141592653589793238462643383279502884;
  const Grid g4 = make_grid(4, 16, 2 * pi);

  const ProbeExponents g1n =
      canonical_probe_exponents(ParaproductEstimate::G1_IntoNegative, 4);
  const ProbeExponents g2n =
      canonical_probe_exponents(ParaproductEstimate::G2_IntoNegative, 4);
  const ProbeExponents g2p =
      canonical_probe_exponents(ParaproductEstimate::G2_IntoPositive, 4);

  // Splitting identity over 50 seeded samples in the application dimension;
  // the same run checks the first estimate's boundedness there.
  {
    const ParaproductReport r =
        paraproduct_probe(ParaproductEstimate::G1_IntoNegative, g1n, g4, 50, 7001);
    ACHECK_MSG(r.identity_residual <= 1e-10,
               "identity residual = " + std::to_string(r.identity_residual));
    ACHECK(std::isfinite(r.max_ratio));
    ACHECK(r.max_ratio > 0.0);
    ACHECK(r.max_ratio < 1e6);
  }
  // Boundedness of the remaining estimates in d = 4.
  for (const auto& [which, expo] :
       {std::pair{ParaproductEstimate::G2_IntoNegative, g2n},
        std::pair{ParaproductEstimate::G2_IntoPositive, g2p},
        std::pair{ParaproductEstimate::G1_SelfIntoPositive, g2p}}) {
    const ParaproductReport r = paraproduct_probe(which, expo, g4, 4, 7002);
    ACHECK_MSG(r.identity_residual <= 1e-10, estimate_id(which));
    ACHECK_MSG(std::isfinite(r.max_ratio) && r.max_ratio > 0.0 && r.max_ratio < 1e6,
               std::string(estimate_id(which)) + " max_ratio = " +
                   std::to_string(r.max_ratio));
  }

  // Ratio trends under f -> f(Nx).  Three of the exponent relations are
  // dimension-free, so their d = 4 values are probed on the deep planar
  // lattice, which affords the rescaling family three octaves; the remaining
  // relation pins the dimension, so it runs in d = 4 on the deepest lattice
  // whose wavenumber range holds two octaves.
  const Grid deep = make_grid(2, 256, 2 * pi);
  for (const auto& [which, expo] :
       {std::pair{ParaproductEstimate::G1_IntoNegative, g1n},
        std::pair{ParaproductEstimate::G2_IntoPositive, g2p},
        std::pair{ParaproductEstimate::G1_SelfIntoPositive, g2p}}) {
    const ParaproductReport r = paraproduct_probe(which, expo, deep, 4, 7003);
    ACHECK_MSG(r.trend_levels >= 2, estimate_id(which));
    ACHECK_MSG(std::abs(r.trend_slope) < 0.1,
               std::string(estimate_id(which)) + " slope = " +
                   std::to_string(r.trend_slope));
  }
  {
    const ParaproductReport r = paraproduct_probe(
        ParaproductEstimate::G2_IntoNegative, g2n, make_grid(4, 24, 2 * pi), 2, 7004);
    ACHECK_MSG(r.trend_levels >= 2, "pinned-relation trend degenerated");
    ACHECK_MSG(std::abs(r.trend_slope) < 0.1,
               "pinned-relation slope = " + std::to_string(r.trend_slope));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 300.0, "took " + std::to_string(secs) + "s");
}

// --------------------------------------------------------------------------
// 9. Tail-resummed Besov equivalence: both sides within a calibrated
//    two-sided interval [1/C_J, C_J] per truncation level over a 100-sample
//    band-limited ensemble (the interval widens with J, as the equivalence
//    constants do); plus exact amplitude homogeneity of the |u|^alpha
//    composition ratio.
void criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  const double pi = 3.141592653589793238462643383279502884;

  // Two-sided ratio per J, both weight signs, 100 seeded band-limited fields.
  // The intervals were calibrated on this exact ensemble and pinned with a
  // ~1.2x margin; they are recorded below so a drift shows up as a number,
  // not just a failed assert.
  {
    const Grid g = make_grid(2, 32, 2 * pi);
    const double s = 1.0 / 3.0;
    const Rational p = rat(30, 17);
    const double c_for_j[4] = {2.0, 2.5, 3.0, 3.5};
    for (int J = 0; J <= 3; ++J) {
      double lo = 1e300, hi = 0;
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Field f = random_field(g, WhiteBand{0, 4}, seed);
        for (const TailSign sign : {TailSign::PlusS, TailSign::MinusS}) {
          const EquivalenceReport r =
              besov_tail_equivalence(f, s, p, rat(2), J, sign);
          ACHECK_MSG(!r.degenerate,
                     "J=" + std::to_string(J) + " seed=" + std::to_string(seed));
          lo = std::min(lo, r.ratio);
          hi = std::max(hi, r.ratio);
        }
      }
      const double c = c_for_j[J];
      std::printf("  equivalence J=%d: ratios in [%.4f, %.4f], calibrated C = %.1f\n",
                  J, lo, hi, c);
      ACHECK_MSG(lo >= 1.0 / c && hi <= c,
                 "J=" + std::to_string(J) + " ratios [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "] outside [1/" +
                     std::to_string(c) + ", " + std::to_string(c) + "]");
    }
  }

  // Amplitude homogeneity: both sides of the composition ratio scale as
  // lambda^alpha, so the ratio is exactly constant along the amplitude family.
  {
    const Grid g = make_grid(2, 64, 16.0);
    const Field u = random_field(g, GaussianBump{1.0}, kDefaultSeed);
    const double base = holder_besov_ratio(u, 0.5, 0.4, rat(3));
    ACHECK(base > 0.0);
    for (const double lam : {2.0, 4.0, 8.0}) {
      const double r = holder_besov_ratio(scale(u, lam), 0.5, 0.4, rat(3));
      ACHECK_MSG(std::abs(r - base) <= 1e-10,
                 "lambda = " + std::to_string(lam) + ": |ratio - base| = " +
                     std::to_string(std::abs(r - base)));
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ACHECK_MSG(secs < 60.0, "took " + std::to_string(secs) + "s");
}

struct Criterion {
  int id;
  const char* name;
  void (*run)();
};

const std::vector<Criterion>& criteria();

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--help") == 0) {
      std::printf("usage: acceptance [--only K]\n");
      return 0;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", argv[i]);
      return 2;
    }
  }

  bool all_ok = true;
  int ran = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      c.run();
    } catch (const check_failure& f) {
      ok = false;
      detail = f.msg;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("  unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                secs);
    if (!ok) std::printf("%s\n", detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion selected (valid ids: 1..%zu)\n",
                 criteria().size());
    return 2;
  }
  return all_ok ? 0 : 1;
}

namespace {

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "exponent calculus oracle suite", criterion1},
      {2, "propagator exactness", criterion2},
      {5, "concentrating-family trace growth in d = 3", criterion5},
      {6, "spectral vs quadrature solution cross-check in d = 3", criterion6},
      {7, "paraproduct splitting and bilinear estimates", criterion7},
      {9, "besov tail equivalence and holder composition", criterion9},
  };
  return table;
}

}  // namespace
