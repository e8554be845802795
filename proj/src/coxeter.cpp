#include "coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace camb {

namespace {
constexpr size_t kIterCap = 1000000;
}

bool GroupElement::isId() const {
  size_t n = mat.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (mat[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

MatI simpleReflectionMat(const RootSpace& space, size_t s) {
  MatI m = identityMat(space.n);
  for (size_t j = 0; j < space.n; ++j) m[s][j] -= space.a[s][j];
  return m;
}

GroupElement applyGen(const RootSpace& space, const GroupElement& w, size_t s,
                      Side side) {
  MatI ms = simpleReflectionMat(space, s);
  if (side == Side::Right) return {matMul(w.mat, ms), matMul(ms, w.inv)};
  return {matMul(ms, w.mat), matMul(w.inv, ms)};
}

GroupElement fromWord(const RootSpace& space, const std::vector<size_t>& word) {
  GroupElement w = GroupElement::id(space.n);
  for (size_t s : word) w = applyGen(space, w, s, Side::Right);
  return w;
}

bool isRightDescent(const GroupElement& w, size_t s) {
  for (size_t i = 0; i < w.mat.size(); ++i)
    if (w.mat[i][s] > 0) return false;
  return true;
}

bool geqS(const GroupElement& w, size_t s) {
  for (size_t i = 0; i < w.inv.size(); ++i)
    if (w.inv[i][s] > 0) return false;
  return true;
}

std::vector<size_t> reducedWord(const RootSpace& space, const GroupElement& w) {
  std::vector<size_t> word;
  GroupElement cur = w;
  size_t guard = 0;
  while (!cur.isId()) {
    require(++guard < kIterCap, Errc::Internal, "length computation did not terminate");
    size_t s = space.n;
    for (size_t i = 0; i < space.n; ++i)
      if (isRightDescent(cur, i)) {
        s = i;
        break;
      }
    require(s < space.n, Errc::Internal, "non-identity element without descent");
    word.push_back(s);
    cur = applyGen(space, cur, s, Side::Right);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

size_t length(const RootSpace& space, const GroupElement& w) {
  return reducedWord(space, w).size();
}

std::vector<VecI> inversions(const RootSpace& space, const GroupElement& w) {
  std::vector<size_t> word = reducedWord(space, w);
  std::vector<VecI> inv;
  GroupElement prefix = GroupElement::id(space.n);
  for (size_t s : word) {
    inv.push_back(prefix(unitVec(space.n, s)));
    prefix = applyGen(space, prefix, s, Side::Right);
  }
  return inv;
}

bool weakLeq(const RootSpace& space, const GroupElement& u, const GroupElement& w) {
  auto wi = inversions(space, w);
  std::set<VecI> wset(wi.begin(), wi.end());
  for (const auto& beta : inversions(space, u))
    if (!wset.count(beta)) return false;
  return true;
}

std::vector<VecI> coverReflections(const RootSpace& space, const GroupElement& w) {
  std::vector<VecI> out;
  for (size_t s = 0; s < space.n; ++s)
    if (isRightDescent(w, s)) out.push_back(-w(unitVec(space.n, s)));
  return out;
}

GroupElement parabolicProject(const RootSpace& space, const GroupElement& w,
                              const std::vector<size_t>& J) {
  GroupElement u = GroupElement::id(space.n);
  size_t guard = 0;
  bool progress = true;
  while (progress) {
    require(++guard < kIterCap, Errc::Internal, "parabolic projection loop");
    progress = false;
    for (size_t s : J) {
      VecI gamma = u(unitVec(space.n, s));
      if (!allGeq0(gamma)) continue;            /* l(us) = l(u)+1 required */
      if (!allLeq0(w.applyInv(gamma))) continue; /* gamma must invert w */
      u = applyGen(space, u, s, Side::Right);
      progress = true;
      break;
    }
  }
  return u;
}

bool inParabolic(const RootSpace& space, const GroupElement& w,
                 const std::vector<size_t>& J) {
  return parabolicProject(space, w, J) == w;
}

GroupElement longestElement(const RootSpace& space, const std::vector<size_t>& J) {
  MatI sub(J.size(), VecI(J.size()));
  for (size_t i = 0; i < J.size(); ++i)
    for (size_t j = 0; j < J.size(); ++j) sub[i][j] = space.a[J[i]][J[j]];
  if (!J.empty())
    require(classify(sub).kind == MatKind::Finite, Errc::InfiniteParabolic,
            "parabolic subgroup is not finite");
  GroupElement u = GroupElement::id(space.n);
  size_t guard = 0;
  bool progress = true;
  while (progress) {
    require(++guard < kIterCap, Errc::InfiniteParabolic, "ascent did not terminate");
    progress = false;
    for (size_t s : J) {
      if (allGeq0(u(unitVec(space.n, s)))) {
        u = applyGen(space, u, s, Side::Right);
        progress = true;
        break;
      }
    }
  }
  return u;
}

GroupElement reflectionElement(const RootSpace& space, const VecI& beta) {
  VecI coroot = space.corootOf(beta);
  size_t n = space.n;
  MatI m = identityMat(n);
  for (size_t j = 0; j < n; ++j) {
    Int k = space.pairK(coroot, unitVec(n, j));
    for (size_t i = 0; i < n; ++i) m[i][j] -= k * beta[i];
  }
  return {m, m}; /* reflections are involutions */
}

std::optional<GroupElement> joinBounded(const RootSpace& space,
                                        const GroupElement& u,
                                        const GroupElement& v, Int bound) {
  /* Everything weakly above u up to the length bound, by upward covers. */
  std::set<MatI> seen{u.mat};
  std::deque<std::pair<GroupElement, Int>> queue{{u, (Int)length(space, u)}};
  std::vector<GroupElement> upper;
  while (!queue.empty()) {
    auto [w, len] = queue.front();
    queue.pop_front();
    if (weakLeq(space, v, w)) {
      upper.push_back(w);
      continue; /* anything above w is not minimal */
    }
    if (len >= bound) continue;
    for (size_t s = 0; s < space.n; ++s) {
      if (isRightDescent(w, s)) continue;
      GroupElement w2 = applyGen(space, w, s, Side::Right);
      if (seen.insert(w2.mat).second) queue.push_back({w2, len + 1});
    }
  }
  if (upper.empty()) return std::nullopt;
  /* The join is the unique weak-order minimum of the common upper bounds. */
  GroupElement best = upper[0];
  size_t bestLen = length(space, best);
  for (const auto& w : upper) {
    size_t len = length(space, w);
    if (len < bestLen) {
      best = w;
      bestLen = len;
    }
  }
  for (const auto& w : upper)
    require(weakLeq(space, best, w), Errc::Internal,
            "bounded join candidates have no unique minimum");
  return best;
}

}  // namespace camb
