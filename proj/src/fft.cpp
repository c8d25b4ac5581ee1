#include "dwlab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dwlab {

namespace {

// Plans are cached per (d, n, direction).  They are created with
// FFTW_ESTIMATE (deterministic output across runs, no timing-dependent
// algorithm choice) and FFTW_UNALIGNED (so one plan serves any buffer via the
// new-array execute interface).
class PlanCache {
 public:
  fftw_plan get(int d, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto key = std::make_tuple(d, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    long long total = 1;
    for (int i = 0; i < d; ++i) total *= n;
    fftw_complex* scratch =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    if (!scratch) throw std::bad_alloc();
    int dims[4] = {n, n, n, n};
    fftw_plan plan = fftw_plan_dft(d, dims, scratch, scratch, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!plan) throw std::runtime_error("fft: planner failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

// Parity of the sum of per-axis storage indices; equals the parity of the sum
// of signed wavenumbers because n is even.
inline int index_parity(const Grid& g, long long idx) {
  int parity = 0;
  for (int ax = 0; ax < g.d; ++ax) {
    parity ^= static_cast<int>(idx % g.n) & 1;
    idx /= g.n;
  }
  return parity;
}

void apply_phase_and_scale(Field& f, double scale) {
  const Grid& g = f.grid;
  const long long total = g.size();
  for (long long idx = 0; idx < total; ++idx) {
    const double s = index_parity(g, idx) ? -scale : scale;
    f.values[static_cast<size_t>(idx)] *= s;
  }
}

void execute(Field& f, int sign) {
  fftw_plan plan = cache().get(f.grid.d, f.grid.n, sign);
  fftw_complex* data = reinterpret_cast<fftw_complex*>(f.values.data());
  fftw_execute_dft(plan, data, data);
}

}  // namespace

Field transform(const Field& f) {
  if (f.rep != Rep::Physical)
    throw std::invalid_argument("transform: field is not physical-side");
  Field out = f;
  execute(out, FFTW_FORWARD);
  out.rep = Rep::Frequency;
  apply_phase_and_scale(out, 1.0 / std::sqrt(static_cast<double>(f.grid.size())));
  return out;
}

Field inverse_transform(const Field& f) {
  if (f.rep != Rep::Frequency)
    throw std::invalid_argument("inverse_transform: field is not frequency-side");
  Field out = f;
  apply_phase_and_scale(out, 1.0);
  execute(out, FFTW_BACKWARD);
  out.rep = Rep::Physical;
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.grid.size()));
  for (auto& v : out.values) v *= scale;
  return out;
}

Field to_rep(const Field& f, Rep target) {
  if (f.rep == target) return f;
  return target == Rep::Frequency ? transform(f) : inverse_transform(f);
}

std::complex<double> evaluate_at(const Field& f, const std::vector<double>& x) {
  if (f.rep != Rep::Frequency)
    throw std::invalid_argument("evaluate_at: field is not frequency-side");
  const Grid& g = f.grid;
  if (static_cast<int>(x.size()) != g.d)
    throw std::invalid_argument("evaluate_at: point dimension mismatch");

  // Per-axis phase tables keep the sum at one complex multiply per mode.
  std::vector<std::complex<double>> phase(static_cast<size_t>(g.d) * g.n);
  for (int ax = 0; ax < g.d; ++ax)
    for (int a = 0; a < g.n; ++a)
      phase[static_cast<size_t>(ax) * g.n + a] =
          std::exp(std::complex<double>(0.0, g.freq(a) * x[ax]));

  std::complex<double> sum = 0;
  for_each_index(g, [&](long long idx, const int* a) {
    std::complex<double> ph = phase[a[0]];
    for (int ax = 1; ax < g.d; ++ax)
      ph *= phase[static_cast<size_t>(ax) * g.n + a[ax]];
    sum += f.values[static_cast<size_t>(idx)] * ph;
  });
  return sum / std::sqrt(static_cast<double>(g.size()));
}

}  // namespace dwlab
