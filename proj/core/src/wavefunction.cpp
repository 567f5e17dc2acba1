#include "gpoct/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "gpoct/errors.hpp"

namespace gpoct {

Wavefunction::Wavefunction(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw std::invalid_argument("Wavefunction: null grid");
  values_.assign(grid_->size(), Complex{0.0, 0.0});
}

Wavefunction::Wavefunction(GridPtr grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("Wavefunction: null grid");
  if (values_.size() != grid_->size())
    throw std::invalid_argument("Wavefunction: value count does not match grid");
}

void require_same_grid(const Wavefunction& a, const Wavefunction& b) {
  if (a.grid() != b.grid())
    throw std::invalid_argument("wavefunctions live on different grids");
}

Complex inner_product(const Wavefunction& a, const Wavefunction& b) {
  require_same_grid(a, b);
  Complex acc{0.0, 0.0};
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
  return acc * a.grid().dx();
}

double norm(const Wavefunction& a) {
  double acc = 0.0;
  for (const auto& v : a.values()) acc += std::norm(v);
  return std::sqrt(acc * a.grid().dx());
}

Wavefunction normalize(const Wavefunction& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n))
    throw NumericalError("normalize: zero or non-finite field");
  Wavefunction out = a;
  const double inv = 1.0 / n;
  for (auto& v : out.values()) v *= inv;
  return out;
}

double fidelity(const Wavefunction& a, const Wavefunction& b) {
  return std::norm(inner_product(a, b));
}

std::vector<double> density(const Wavefunction& a) {
  std::vector<double> rho(a.size());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(a[i]);
  return rho;
}

}  // namespace gpoct
