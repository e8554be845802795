#include "lp.hpp"

namespace camb {

std::optional<VecR> lpFeasible(const std::vector<LinearConstraint>& cons,
                               size_t nvars) {
  size_t m = cons.size();
  size_t nslack = 0;
  for (const auto& c : cons)
    if (c.rel != Rel::Eq) ++nslack;
  size_t structural = 2 * nvars + nslack; /* x = xplus - xminus, slacks */
  size_t total = structural + m;          /* plus one artificial per row */

  /* Tableau rows: coefficients then rhs; phase-one basis = artificials. */
  std::vector<VecR> t(m, VecR(total + 1, 0));
  size_t slackAt = 2 * nvars;
  for (size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    for (size_t j = 0; j < nvars; ++j) {
      t[i][j] = c.a[j];
      t[i][nvars + j] = -c.a[j];
    }
    if (c.rel == Rel::Le) t[i][slackAt++] = 1;
    if (c.rel == Rel::Ge) t[i][slackAt++] = -1;
    t[i][total] = c.b;
    if (t[i][total] < 0)
      for (auto& x : t[i]) x = -x;
    t[i][structural + i] = 1;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = structural + i;

  /* Reduced costs for minimizing the sum of artificials. */
  VecR red(total + 1, 0);
  for (size_t j = structural; j < total; ++j) red[j] = 1;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= total; ++j) red[j] -= t[i][j];

  size_t guard = 0;
  for (;;) {
    require(++guard < 100000, Errc::Internal, "simplex iteration cap");
    size_t enter = total;
    for (size_t j = 0; j < total; ++j)
      if (red[j] < 0) { /* Bland: smallest eligible index */
        enter = j;
        break;
      }
    if (enter == total) break;
    size_t leave = m;
    Rat bestRatio = 0;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][total] / t[i][enter];
      if (leave == m || ratio < bestRatio ||
          (ratio == bestRatio && basis[i] < basis[leave])) {
        leave = i;
        bestRatio = ratio;
      }
    }
    require(leave < m, Errc::Internal, "phase-one simplex unbounded");
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    if (red[enter] != 0) {
      Rat f = red[enter];
      for (size_t j = 0; j <= total; ++j) red[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat obj = 0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= structural) obj += t[i][total];
  if (obj != 0) return std::nullopt;

  VecR x(nvars, 0);
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < nvars)
      x[basis[i]] += t[i][total];
    else if (basis[i] < 2 * nvars)
      x[basis[i] - nvars] -= t[i][total];
  }
  return x;
}

}  // namespace camb
