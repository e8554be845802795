#pragma once
/* Shared scalar/vector/matrix primitives: exact rationals, small dense
 * integer and rational linear algebra, and the library error type. */

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace camb {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecI = std::vector<Int>;
using MatI = std::vector<VecI>;
using VecR = std::vector<Rat>;
using MatR = std::vector<VecR>;

enum class Errc {
  Ok = 0,
  InvalidArgument,
  ParseError,
  NotSkewSymmetrizable,
  NotSymmetrizable,
  NotAcyclic,
  NotAffine,
  NotSortable,
  NonLaurentResult,
  NotEquivalent,
  DependentRoots,
  SingularLabels,
  InfiniteParabolic,
  NoBoundedJoin,
  SearchExhausted,
  ResourceLimit,
  ChartPole,
  NotFound,
  Internal,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

inline void require(bool ok, Errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

/* ---- integer vector helpers ---- */

inline Int igcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline VecI operator+(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecI operator-(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecI operator-(const VecI& a) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline VecI operator*(Int k, const VecI& a) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline Int height1(const VecI& a) {
  Int h = 0;
  for (Int x : a) h += x < 0 ? -x : x;
  return h;
}

inline bool allGeq0(const VecI& a) {
  for (Int x : a)
    if (x < 0) return false;
  return true;
}

inline bool allLeq0(const VecI& a) {
  for (Int x : a)
    if (x > 0) return false;
  return true;
}

inline bool isZero(const VecI& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline VecI unitVec(size_t n, size_t i) {
  VecI e(n, 0);
  e[i] = 1;
  return e;
}

/* Divide out the gcd; zero vectors stay zero.  Sign is left untouched. */
inline VecI primitive(VecI a) {
  Int g = 0;
  for (Int x : a) g = igcd(g, x);
  if (g > 1)
    for (Int& x : a) x /= g;
  return a;
}

inline MatI identityMat(size_t n) {
  MatI m(n, VecI(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/* Matrices act on column vectors: (m*v)_i = sum_j m[i][j] v[j]. */
inline VecI matVec(const MatI& m, const VecI& v) {
  size_t n = m.size();
  VecI r(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline MatI matMul(const MatI& a, const MatI& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatI r(n, VecI(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      Int ait = a[i][t];
      if (ait == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += ait * b[t][j];
    }
  return r;
}

inline MatI transposeI(const MatI& m) {
  if (m.empty()) return {};
  MatI r(m[0].size(), VecI(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

inline VecI column(const MatI& m, size_t j) {
  VecI c(m.size());
  for (size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

/* ---- rational linear algebra (dense, tiny dimensions) ---- */

inline VecR toRat(const VecI& v) {
  VecR r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

inline MatR toRat(const MatI& m) {
  MatR r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = toRat(m[i]);
  return r;
}

inline Rat dotR(const VecR& a, const VecR& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/* Gaussian elimination; returns the inverse or nullopt if singular. */
std::optional<MatR> ratInverse(const MatR& m);

/* Rank via row reduction. */
size_t ratRank(MatR m);

/* One-dimensional kernel vector of an integer matrix, cleared to a primitive
 * integer vector; nullopt if the kernel is not one-dimensional. */
std::optional<VecI> kernelPrimitive(const MatI& m);

Rat ratDet(MatR m);

/* Positive definiteness of a symmetric rational matrix via leading minors. */
bool positiveDefinite(const MatR& m);

/* Deterministic textual form "p/q" (or "p") used by every serializer. */
std::string ratStr(const Rat& r);

}  // namespace camb
