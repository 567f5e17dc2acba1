#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace gpoct {

/// Uniform periodic 1D grid with the discrete-Fourier wavenumbers attached.
///
/// Points are x_i = x_min + i*dx for i = 0..n-1 with dx = (x_max - x_min)/n;
/// x_max itself is the periodic image of x_min and is not sampled.
/// Wavenumbers follow standard FFT ordering: k_j = 2*pi*j/(n*dx) for
/// j <= n/2 and k_j = 2*pi*(j-n)/(n*dx) above, so k[0] = 0 and values come
/// in +/- pairs except the Nyquist component.
class Grid1D {
 public:
  Grid1D(std::size_t n_points, double x_min, double x_max);

  std::size_t size() const { return n_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return dx_; }
  double x(std::size_t i) const { return x_min_ + dx_ * static_cast<double>(i); }
  const std::vector<double>& wavenumbers() const { return k_; }

  bool operator==(const Grid1D& other) const {
    return n_ == other.n_ && x_min_ == other.x_min_ && x_max_ == other.x_max_;
  }
  bool operator!=(const Grid1D& other) const { return !(*this == other); }

 private:
  std::size_t n_;
  double x_min_;
  double x_max_;
  double dx_;
  std::vector<double> k_;
};

using GridPtr = std::shared_ptr<const Grid1D>;

inline GridPtr make_grid(std::size_t n_points, double x_min, double x_max) {
  return std::make_shared<const Grid1D>(n_points, x_min, x_max);
}

/// Dimensionless unit system, hbar = 1 throughout.  The ms/um scales are
/// reporting conversions only; no physics computation reads them.
struct UnitSystem {
  double mass = 1.0;
  double time_scale_ms_per_unit = 1.0;
  double length_scale_um_per_unit = 1.0;

  void validate() const;
  double to_ms(double t) const { return t * time_scale_ms_per_unit; }
  double from_ms(double t_ms) const { return t_ms / time_scale_ms_per_unit; }
  double to_um(double x) const { return x * length_scale_um_per_unit; }
  double from_um(double x_um) const { return x_um / length_scale_um_per_unit; }
};

}  // namespace gpoct
