#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gpoct/grid.hpp"

namespace gpoct {

using Complex = std::complex<double>;

/// Complex field sampled on a shared Grid1D.  Used both for the condensate
/// wavefunction psi and for the adjoint/costate field p; only the former is
/// kept at unit L2 norm.
class Wavefunction {
 public:
  explicit Wavefunction(GridPtr grid);
  Wavefunction(GridPtr grid, std::vector<Complex> values);

  const Grid1D& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<Complex> values() { return values_; }
  std::span<const Complex> values() const { return values_; }
  std::vector<Complex>& raw() { return values_; }
  const std::vector<Complex>& raw() const { return values_; }

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
};

/// <a|b> = sum conj(a_i) b_i dx.  Antilinear in a, linear in b.
Complex inner_product(const Wavefunction& a, const Wavefunction& b);

/// sqrt(<a|a>).
double norm(const Wavefunction& a);

/// Returns a scaled to unit L2 norm; throws NumericalError on a zero field.
Wavefunction normalize(const Wavefunction& a);

/// |<a|b>|^2, in [0,1] for normalized inputs; global-phase invariant.
double fidelity(const Wavefunction& a, const Wavefunction& b);

/// |psi_i|^2 per grid point.
std::vector<double> density(const Wavefunction& a);

/// Throws std::invalid_argument unless a and b live on the same grid.
void require_same_grid(const Wavefunction& a, const Wavefunction& b);

}  // namespace gpoct
