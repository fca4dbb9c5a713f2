#include "shiftlab/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftlab {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cd>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim; ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_square_same_dim(*this, o, "operator+=");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_square_same_dim(*this, o, "operator-=");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cd s) {
  for (auto& v : a) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y) {
  x += y;
  return x;
}

ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y) {
  x -= y;
  return x;
}

ComplexMatrix operator*(cd s, ComplexMatrix x) {
  x *= s;
  return x;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_square_same_dim(x, y, "operator*");
  ComplexMatrix c(x.dim);
  kernels::matmul(c.a.data(), x.a.data(), y.a.data(), x.dim, x.dim, x.dim);
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) t.at(j, i) = std::conj(m.at(i, j));
  return t;
}

cd trace(const ComplexMatrix& m) {
  cd s = 0.0;
  for (int i = 0; i < m.dim; ++i) s += m.at(i, i);
  return s;
}

double frobenius(const ComplexMatrix& m) {
  return std::sqrt(kernels::cnorm2sq(m.a.data(), m.a.size()));
}

double hermiticity_defect(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      s += std::norm(m.at(i, j) - std::conj(m.at(j, i)));
  return std::sqrt(s);
}

double unitarity_defect(const ComplexMatrix& m) {
  ComplexMatrix g = mul_ah_b(m, m);
  for (int i = 0; i < m.dim; ++i) g.at(i, i) -= 1.0;
  return frobenius(g);
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  return h;
}

ComplexMatrix mul_ah_b(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_same_dim(a, b, "mul_ah_b");
  const int n = a.dim;
  ComplexMatrix c(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      kernels::caxpy(c.row(i), b.row(l), std::conj(a.at(l, i)), n);
  return c;
}

ComplexMatrix mul_a_bh(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_same_dim(a, b, "mul_a_bh");
  const int n = a.dim;
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.at(i, j) = kernels::cdotc(a.row(i), b.row(j), n);
  return c;
}

void require_square_same_dim(const ComplexMatrix& x, const ComplexMatrix& y,
                             const char* where) {
  if (x.dim != y.dim)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

} // namespace shiftlab
