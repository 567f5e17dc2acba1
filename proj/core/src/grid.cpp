#include "gpoct/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gpoct {

Grid1D::Grid1D(std::size_t n_points, double x_min, double x_max)
    : n_(n_points), x_min_(x_min), x_max_(x_max) {
  if (n_points < 8) throw std::invalid_argument("Grid1D: n_points must be >= 8");
  if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
  dx_ = (x_max - x_min) / static_cast<double>(n_);
  if (!(dx_ > 0.0) || !std::isfinite(dx_))
    throw std::invalid_argument("Grid1D: non-positive or non-finite dx");

  k_.resize(n_);
  const double dk = 2.0 * M_PI / (static_cast<double>(n_) * dx_);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto js = static_cast<std::ptrdiff_t>(j);
    const auto half = static_cast<std::ptrdiff_t>(n_ / 2);
    const std::ptrdiff_t f = (js <= half) ? js : js - static_cast<std::ptrdiff_t>(n_);
    k_[j] = dk * static_cast<double>(f);
  }
}

void UnitSystem::validate() const {
  if (!(mass > 0.0)) throw std::invalid_argument("UnitSystem: mass must be positive");
  if (!(time_scale_ms_per_unit > 0.0))
    throw std::invalid_argument("UnitSystem: time scale must be positive");
  if (!(length_scale_um_per_unit > 0.0))
    throw std::invalid_argument("UnitSystem: length scale must be positive");
}

}  // namespace gpoct
