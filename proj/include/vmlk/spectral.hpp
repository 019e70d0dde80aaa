#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "vmlk/grid.hpp"

namespace vmlk {

using Complex = std::complex<double>;

/// Batched 3D discrete Fourier transform over the torus axes.
///
/// Data are laid out as [torus node][batch member], so a DistField (torus
/// node outermost, velocity node innermost) is transformed for every velocity
/// node in a single call. Plans are FFTW_ESTIMATE plans shared across
/// instances; execution is deterministic.
class TorusTransform {
 public:
  TorusTransform(const TorusGrid& grid, std::size_t batch);

  std::size_t batch() const { return batch_; }
  const TorusGrid& grid() const { return grid_; }

  /// Unnormalised forward transform of real data.
  void forward(std::span<const double> in, std::span<Complex> out) const;
  /// Inverse transform with the 1/M^3 normalisation; returns the real part.
  void inverse(std::span<const Complex> in, std::span<double> out) const;

 private:
  TorusGrid grid_;
  std::size_t batch_;
  void* forward_plan_;
  void* inverse_plan_;
};

/// Mode-by-mode spectrum of a scalar field (unnormalised DFT).
std::vector<Complex> spectrum(const ScalarField& s);

}  // namespace vmlk
