#pragma once

// Array kernels for the dense complex inner loops (matrix products, Schur
// products, reductions, plane rotations, geometric-series grid evaluation).
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant; the active variant is chosen once at
// runtime. SHIFTLAB_SIMD={auto,scalar,avx2} overrides the choice.

#include <complex>
#include <cstddef>

namespace shiftlab::kernels {

using cd = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// Variant selected for this process (after env override).
Isa active_isa();
// True when the CPU can run the Avx2 variant.
bool avx2_supported();
// Force a variant (tests use this). Throws std::runtime_error if unsupported.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// y[i] += a*x[i]
void caxpy(cd* y, const cd* x, cd a, std::size_t n);
// out[i] = a[i]*b[i]
void chadamard(cd* out, const cd* a, const cd* b, std::size_t n);
// sum |x[i]|^2
double cnorm2sq(const cd* x, std::size_t n);
// max |x[i]|, 0 for n = 0
double cabsmax(const cd* x, std::size_t n);
// sum x[i]*y[i]  (no conjugation)
cd cdotu(const cd* x, const cd* y, std::size_t n);
// sum x[i]*conj(y[i])
cd cdotc(const cd* x, const cd* y, std::size_t n);
// simultaneous plane rotation, elements `stride` apart:
//   u[i] <- c*u[i] - conj(s)*v[i],  v[i] <- s*u[i] + c*v[i]
void crot2(cd* u, cd* v, std::size_t n, std::ptrdiff_t stride, double c, cd s);
// out[j] += a*r^j, j = 0..n-1 (incremental powers; intended for |r| = 1,
// multiplicative drift ~ n*eps)
void rotated_series_accum(cd* out, std::size_t n, cd a, cd r);

// Row-major C(n x m) = A(n x k) * B(k x m). C must not alias A or B.
void matmul(cd* c, const cd* a, const cd* b,
            std::size_t n, std::size_t k, std::size_t m);

} // namespace shiftlab::kernels
