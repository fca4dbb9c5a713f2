#pragma once

#include "shiftlab/kernels.hpp"

#include <complex>
#include <vector>

namespace shiftlab {

using cd = std::complex<double>;

// Dense square complex matrix, row-major.
struct ComplexMatrix {
  int dim = 0;
  std::vector<cd> a; // dim*dim entries

  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : dim(n), a(static_cast<std::size_t>(n) * n) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<cd>& d);

  cd& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const cd& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * dim + j];
  }
  cd* row(int i) { return a.data() + static_cast<std::size_t>(i) * dim; }
  const cd* row(int i) const {
    return a.data() + static_cast<std::size_t>(i) * dim;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cd s);
};

ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y);
ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y);
ComplexMatrix operator*(cd s, ComplexMatrix x);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix adjoint(const ComplexMatrix& m);
cd trace(const ComplexMatrix& m);
double frobenius(const ComplexMatrix& m);
// ||M - M*||_F
double hermiticity_defect(const ComplexMatrix& m);
// ||M*M - I||_F
double unitarity_defect(const ComplexMatrix& m);
// (M + M*)/2, exactly Hermitian in floating point
ComplexMatrix hermitize(const ComplexMatrix& m);
// A*B with A conjugate-transposed: (A^H)B
ComplexMatrix mul_ah_b(const ComplexMatrix& a, const ComplexMatrix& b);
// A*(B^H)
ComplexMatrix mul_a_bh(const ComplexMatrix& a, const ComplexMatrix& b);

void require_square_same_dim(const ComplexMatrix& x, const ComplexMatrix& y,
                             const char* where);

} // namespace shiftlab
