#include "basics.hpp"

#include <sstream>

namespace camb {

std::optional<MatR> ratInverse(const MatR& m) {
  size_t n = m.size();
  MatR a = m;
  MatR inv(n, VecR(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

size_t ratRank(MatR m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<VecI> kernelPrimitive(const MatI& mi) {
  size_t n = mi.size();
  MatR m = toRat(mi);
  /* Row-reduce, tracking pivot columns. */
  std::vector<int> pivotOfCol(n, -1);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    Rat p = m[rank][col];
    for (size_t j = 0; j < n; ++j) m[rank][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    pivotOfCol[col] = static_cast<int>(rank);
    ++rank;
  }
  if (rank != n - 1) return std::nullopt;
  size_t freeCol = 0;
  while (freeCol < n && pivotOfCol[freeCol] >= 0) ++freeCol;
  VecR x(n, 0);
  x[freeCol] = 1;
  for (size_t col = 0; col < n; ++col)
    if (pivotOfCol[col] >= 0) x[col] = -m[pivotOfCol[col]][freeCol];
  /* Clear denominators, then the gcd. */
  BigInt lcm = 1;
  for (auto& v : x) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
  VecI out(n);
  for (size_t i = 0; i < n; ++i) {
    BigInt num = boost::multiprecision::numerator(x[i]) *
                 (lcm / boost::multiprecision::denominator(x[i]));
    out[i] = static_cast<Int>(num);
  }
  return primitive(out);
}

Rat ratDet(MatR m) {
  size_t n = m.size();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

bool positiveDefinite(const MatR& m) {
  size_t n = m.size();
  for (size_t k = 1; k <= n; ++k) {
    MatR lead(k, VecR(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    if (ratDet(lead) <= 0) return false;
  }
  return true;
}

std::string ratStr(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace camb
