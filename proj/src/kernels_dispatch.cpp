#include "shiftlab/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab::kernels {

namespace detail {

void caxpy_scalar(cd*, const cd*, cd, std::size_t);
void chadamard_scalar(cd*, const cd*, const cd*, std::size_t);
double cnorm2sq_scalar(const cd*, std::size_t);
double cabsmax_scalar(const cd*, std::size_t);
cd cdotu_scalar(const cd*, const cd*, std::size_t);
cd cdotc_scalar(const cd*, const cd*, std::size_t);
void crot2_scalar(cd*, cd*, std::size_t, std::ptrdiff_t, double, cd);
void rotated_series_accum_scalar(cd*, std::size_t, cd, cd);

#if defined(__x86_64__) || defined(_M_X64)
void caxpy_avx2(cd*, const cd*, cd, std::size_t);
void chadamard_avx2(cd*, const cd*, const cd*, std::size_t);
double cnorm2sq_avx2(const cd*, std::size_t);
double cabsmax_avx2(const cd*, std::size_t);
cd cdotu_avx2(const cd*, const cd*, std::size_t);
cd cdotc_avx2(const cd*, const cd*, std::size_t);
void crot2_avx2(cd*, cd*, std::size_t, std::ptrdiff_t, double, cd);
void rotated_series_accum_avx2(cd*, std::size_t, cd, cd);
#endif

struct Table {
  void (*caxpy)(cd*, const cd*, cd, std::size_t);
  void (*chadamard)(cd*, const cd*, const cd*, std::size_t);
  double (*cnorm2sq)(const cd*, std::size_t);
  double (*cabsmax)(const cd*, std::size_t);
  cd (*cdotu)(const cd*, const cd*, std::size_t);
  cd (*cdotc)(const cd*, const cd*, std::size_t);
  void (*crot2)(cd*, cd*, std::size_t, std::ptrdiff_t, double, cd);
  void (*rotated_series_accum)(cd*, std::size_t, cd, cd);
};

constexpr Table scalar_table = {
    caxpy_scalar,     chadamard_scalar, cnorm2sq_scalar,
    cabsmax_scalar,   cdotu_scalar,     cdotc_scalar,
    crot2_scalar,     rotated_series_accum_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table avx2_table = {
    caxpy_avx2,     chadamard_avx2, cnorm2sq_avx2,
    cabsmax_avx2,   cdotu_avx2,     cdotc_avx2,
    crot2_avx2,     rotated_series_accum_avx2};
#endif

namespace {

Isa g_isa = Isa::Scalar;
const Table* g_table = &scalar_table;
std::once_flag g_init;

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void select(Isa isa) {
  if (isa == Isa::Avx2) {
#if defined(__x86_64__) || defined(_M_X64)
    if (!cpu_has_avx2())
      throw std::runtime_error("kernels: AVX2 requested but not supported");
    g_table = &avx2_table;
    g_isa = Isa::Avx2;
    return;
#else
    throw std::runtime_error("kernels: AVX2 requested on non-x86 build");
#endif
  }
  g_table = &scalar_table;
  g_isa = Isa::Scalar;
}

void init_from_env() {
  const char* env = std::getenv("SHIFTLAB_SIMD");
  std::string mode = env ? env : "auto";
  if (mode == "scalar") {
    select(Isa::Scalar);
  } else if (mode == "avx2") {
    select(Isa::Avx2);
  } else {
    select(cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar);
  }
}

const Table& table() {
  std::call_once(g_init, init_from_env);
  return *g_table;
}

} // namespace
} // namespace detail

Isa active_isa() {
  detail::table();
  return detail::g_isa;
}

bool avx2_supported() { return detail::cpu_has_avx2(); }

void force_isa(Isa isa) {
  detail::table();
  detail::select(isa);
}

const char* isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void caxpy(cd* y, const cd* x, cd a, std::size_t n) {
  detail::table().caxpy(y, x, a, n);
}
void chadamard(cd* out, const cd* a, const cd* b, std::size_t n) {
  detail::table().chadamard(out, a, b, n);
}
double cnorm2sq(const cd* x, std::size_t n) {
  return detail::table().cnorm2sq(x, n);
}
double cabsmax(const cd* x, std::size_t n) {
  return detail::table().cabsmax(x, n);
}
cd cdotu(const cd* x, const cd* y, std::size_t n) {
  return detail::table().cdotu(x, y, n);
}
cd cdotc(const cd* x, const cd* y, std::size_t n) {
  return detail::table().cdotc(x, y, n);
}
void crot2(cd* u, cd* v, std::size_t n, std::ptrdiff_t stride, double c,
           cd s) {
  if (stride == 1) {
    detail::table().crot2(u, v, n, 1, c, s);
  } else {
    detail::crot2_scalar(u, v, n, stride, c, s);
  }
}
void rotated_series_accum(cd* out, std::size_t n, cd a, cd r) {
  detail::table().rotated_series_accum(out, n, a, r);
}

void matmul(cd* c, const cd* a, const cd* b, std::size_t n, std::size_t k,
            std::size_t m) {
  std::memset(c, 0, sizeof(cd) * n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const cd* arow = a + i * k;
    cd* crow = c + i * m;
    for (std::size_t l = 0; l < k; ++l) {
      if (arow[l] != cd(0.0, 0.0)) caxpy(crow, b + l * m, arow[l], m);
    }
  }
}

} // namespace shiftlab::kernels
