#pragma once

#include <complex>
#include <cstddef>

namespace gpoct {

/// Thin RAII wrapper around a pair of FFTW complex 1D plans of fixed size.
///
/// Convention: forward() applies the unnormalized DFT with kernel
/// exp(-i k x); inverse() applies the conjugate transform scaled by 1/n, so
/// inverse(forward(psi)) == psi up to roundoff.  With this convention
/// Parseval reads  sum |psi_i|^2 dx == sum |psihat_k|^2 dx / n.
///
/// Plans are created with FFTW_ESTIMATE|FFTW_UNALIGNED: deterministic
/// algorithm choice independent of buffer alignment, which keeps results
/// bit-reproducible across runs.  Plan creation is serialized internally
/// (FFTW planning is not thread safe); execution on distinct instances is.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);
  ~FourierTransform();

  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  std::size_t size() const { return n_; }
  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

 private:
  std::size_t n_;
  void* plan_fwd_;
  void* plan_bwd_;
};

}  // namespace gpoct
