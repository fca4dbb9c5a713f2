// Scalar reference implementations. These define the semantics the SIMD
// variants are tested against.

#include "shiftlab/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace shiftlab::kernels::detail {

void caxpy_scalar(cd* y, const cd* x, cd a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void chadamard_scalar(cd* out, const cd* a, const cd* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

double cnorm2sq_scalar(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

double cabsmax_scalar(const cd* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

cd cdotu_scalar(const cd* x, const cd* y, std::size_t n) {
  cd s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

cd cdotc_scalar(const cd* x, const cd* y, std::size_t n) {
  cd s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * std::conj(y[i]);
  return s;
}

void crot2_scalar(cd* u, cd* v, std::size_t n, std::ptrdiff_t stride,
                  double c, cd s) {
  const cd sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const std::ptrdiff_t o = static_cast<std::ptrdiff_t>(i) * stride;
    const cd ui = u[o], vi = v[o];
    u[o] = c * ui - sc * vi;
    v[o] = s * ui + c * vi;
  }
}

void rotated_series_accum_scalar(cd* out, std::size_t n, cd a, cd r) {
  cd w = a;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] += w;
    w *= r;
  }
}

} // namespace shiftlab::kernels::detail
