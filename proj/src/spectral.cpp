#include "vmlk/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace vmlk {
namespace {

// FFTW planning is not thread-safe; execution with fftw_execute_dft is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan cached_plan(int m, std::size_t batch, int sign) {
  static std::map<std::tuple<int, std::size_t, int>, fftw_plan> cache;
  std::lock_guard lock(plan_mutex());
  auto key = std::make_tuple(m, batch, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const std::size_t total = static_cast<std::size_t>(m) * m * m * batch;
  fftw_complex* in = fftw_alloc_complex(total);
  fftw_complex* out = fftw_alloc_complex(total);
  const int dims[3] = {m, m, m};
  const int stride = static_cast<int>(batch);
  fftw_plan plan = fftw_plan_many_dft(3, dims, static_cast<int>(batch), in, nullptr, stride, 1, out, nullptr,
                                      stride, 1, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  if (plan == nullptr) throw Error("FFTW failed to create a torus transform plan");
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

TorusTransform::TorusTransform(const TorusGrid& grid, std::size_t batch)
    : grid_(grid),
      batch_(batch),
      forward_plan_(cached_plan(grid.points_per_axis(), batch, FFTW_FORWARD)),
      inverse_plan_(cached_plan(grid.points_per_axis(), batch, FFTW_BACKWARD)) {}

void TorusTransform::forward(std::span<const double> in, std::span<Complex> out) const {
  const std::size_t total = grid_.size() * batch_;
  if (in.size() != total || out.size() != total) throw GridMismatchError("torus transform: size mismatch");
  std::vector<Complex> buf(in.begin(), in.end());
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), reinterpret_cast<fftw_complex*>(buf.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void TorusTransform::inverse(std::span<const Complex> in, std::span<double> out) const {
  const std::size_t total = grid_.size() * batch_;
  if (in.size() != total || out.size() != total) throw GridMismatchError("torus transform: size mismatch");
  std::vector<Complex> src(in.begin(), in.end());
  std::vector<Complex> dst(total);
  fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(dst.data()));
  const double norm = 1.0 / static_cast<double>(grid_.size());
  for (std::size_t i = 0; i < total; ++i) out[i] = dst[i].real() * norm;
}

std::vector<Complex> spectrum(const ScalarField& s) {
  TorusTransform t(s.grid, 1);
  std::vector<Complex> out(s.grid.size());
  t.forward(s.values, out);
  return out;
}

}  // namespace vmlk
