// AVX2+FMA variants. Two complex doubles per __m256d, interleaved re/im.
// This translation unit is compiled with -mavx2 -mfma and must only be
// entered through the dispatch table after the CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include "shiftlab/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace shiftlab::kernels::detail {

void caxpy_scalar(cd*, const cd*, cd, std::size_t);
void chadamard_scalar(cd*, const cd*, const cd*, std::size_t);
double cnorm2sq_scalar(const cd*, std::size_t);
double cabsmax_scalar(const cd*, std::size_t);
cd cdotu_scalar(const cd*, const cd*, std::size_t);
cd cdotc_scalar(const cd*, const cd*, std::size_t);
void crot2_scalar(cd*, cd*, std::size_t, std::ptrdiff_t, double, cd);
void rotated_series_accum_scalar(cd*, std::size_t, cd, cd);

namespace {

// (a0,a1)*(b0,b1) componentwise complex product
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_permute_pd(a, 0xF);
  const __m256d bs = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

inline __m256d broadcast_c(cd a) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&a));
}

} // namespace

void caxpy_avx2(cd* y, const cd* x, cd a, std::size_t n) {
  const __m256d av = broadcast_c(a);
  std::size_t i = 0;
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul2(av, xv)));
  }
  if (i < n) caxpy_scalar(y + i, x + i, a, n - i);
}

void chadamard_avx2(cd* out, const cd* a, const cd* b, std::size_t n) {
  std::size_t i = 0;
  double* od = reinterpret_cast<double*>(out);
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ad + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    _mm256_storeu_pd(od + 2 * i, cmul2(av, bv));
  }
  if (i < n) chadamard_scalar(out + i, a + i, b + i, n - i);
}

double cnorm2sq_avx2(const cd* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (i < n) s += cnorm2sq_scalar(x + i, n - i);
  return s;
}

double cabsmax_avx2(const cd* x, std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sq = _mm256_mul_pd(xv, xv);
    // per-complex |z|^2 duplicated into both lanes of the pair
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m2 = std::max(std::max(lanes[0], lanes[1]),
                       std::max(lanes[2], lanes[3]));
  double m = std::sqrt(m2);
  if (i < n) m = std::max(m, cabsmax_scalar(x + i, n - i));
  return m;
}

cd cdotu_avx2(const cd* x, const cd* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc = _mm256_add_pd(acc, cmul2(xv, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cd s(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  if (i < n) s += cdotu_scalar(x + i, y + i, n - i);
  return s;
}

cd cdotc_avx2(const cd* x, const cd* y, std::size_t n) {
  const __m256d conj_mask =
      _mm256_castsi256_pd(_mm256_set_epi64x(0x8000000000000000LL, 0,
                                            0x8000000000000000LL, 0));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv =
        _mm256_xor_pd(_mm256_loadu_pd(yd + 2 * i), conj_mask);
    acc = _mm256_add_pd(acc, cmul2(xv, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cd s(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  if (i < n) s += cdotc_scalar(x + i, y + i, n - i);
  return s;
}

void crot2_avx2(cd* u, cd* v, std::size_t n, std::ptrdiff_t stride,
                double c, cd s) {
  if (stride != 1) {
    crot2_scalar(u, v, n, stride, c, s);
    return;
  }
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = broadcast_c(s);
  const __m256d scv = broadcast_c(std::conj(s));
  std::size_t i = 0;
  double* ud = reinterpret_cast<double*>(u);
  double* vd = reinterpret_cast<double*>(v);
  for (; i + 2 <= n; i += 2) {
    const __m256d uv = _mm256_loadu_pd(ud + 2 * i);
    const __m256d vv = _mm256_loadu_pd(vd + 2 * i);
    _mm256_storeu_pd(ud + 2 * i,
                     _mm256_sub_pd(_mm256_mul_pd(cv, uv), cmul2(scv, vv)));
    _mm256_storeu_pd(vd + 2 * i,
                     _mm256_add_pd(cmul2(sv, uv), _mm256_mul_pd(cv, vv)));
  }
  if (i < n) crot2_scalar(u + i, v + i, n - i, 1, c, s);
}

void rotated_series_accum_avx2(cd* out, std::size_t n, cd a, cd r) {
  if (n < 4) {
    rotated_series_accum_scalar(out, n, a, r);
    return;
  }
  const cd r2 = r * r;
  alignas(32) cd w0[2] = {a, a * r};
  __m256d w = _mm256_load_pd(reinterpret_cast<const double*>(w0));
  const __m256d step = broadcast_c(r2);
  std::size_t i = 0;
  double* od = reinterpret_cast<double*>(out);
  for (; i + 2 <= n; i += 2) {
    const __m256d ov = _mm256_loadu_pd(od + 2 * i);
    _mm256_storeu_pd(od + 2 * i, _mm256_add_pd(ov, w));
    w = cmul2(w, step);
  }
  if (i < n) {
    alignas(32) cd wtail[2];
    _mm256_store_pd(reinterpret_cast<double*>(wtail), w);
    rotated_series_accum_scalar(out + i, n - i, wtail[0], r);
  }
}

} // namespace shiftlab::kernels::detail

#endif // x86-64
