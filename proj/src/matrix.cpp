#include "ellimod/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ellimod {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<std::int64_t> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  // M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
  IntMatrix mk = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix am = m * mk;
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) trace += am(i, i);
    if (trace % k != 0)
      throw std::logic_error("characteristic_polynomial: inexact division");
    c[n - k] = -trace / k;
    mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c[n - k];
  }
  return c;
}

}  // namespace ellimod
