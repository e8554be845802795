#include "sortable.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace camb {

Word rotated(const Word& w) {
  Word r(w.begin() + 1, w.end());
  r.push_back(w[0]);
  return r;
}

Word without(const Word& w, size_t s) {
  Word r;
  for (size_t x : w)
    if (x != s) r.push_back(x);
  return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool isInitial(const ExchangeMatrix& B, size_t s) {
  for (size_t j = 0; j < B.n; ++j)
    if (B.b[j][s] > 0) return false;
  return true;
}

bool SortableCtx::isSortable(const GroupElement& w, const Word& cword) {
  if (cword.empty()) return w.isId();
  auto key = std::make_pair(w.mat, cword);
  auto it = sortableMemo_.find(key);
  if (it != sortableMemo_.end()) return it->second;
  size_t s = cword[0];
  bool result;
  if (geqS(w, s)) {
    result = isSortable(applyGen(space_, w, s, Side::Left), rotated(cword));
  } else {
    Word rest = without(cword, s);
    result = inParabolic(space_, w, rest) && isSortable(w, rest);
  }
  sortableMemo_.emplace(key, result);
  return result;
}

std::vector<VecI> SortableCtx::labels(const GroupElement& v, const Word& cword) {
  if (cword.empty()) return {};
  auto key = std::make_pair(v.mat, cword);
  auto it = labelMemo_.find(key);
  if (it != labelMemo_.end()) return it->second;
  size_t s = cword[0];
  std::vector<VecI> result;
  if (!geqS(v, s)) {
    result = labels(v, without(cword, s));
    result.push_back(unitVec(space_.n, s));
  } else {
    result = labels(applyGen(space_, v, s, Side::Left), rotated(cword));
    for (auto& beta : result) beta = space_.reflectSimple(beta, s);
  }
  labelMemo_.emplace(key, result);
  return result;
}

Word SortableCtx::sortingWord(const GroupElement& w) {
  require(isSortable(w), Errc::NotSortable, "element is not sortable");
  Word word;
  GroupElement remaining = w;
  size_t guard = 0;
  while (!remaining.isId()) {
    require(++guard < 100000, Errc::Internal, "sorting word loop");
    for (size_t s : cword()) {
      if (!geqS(remaining, s)) continue; /* s must be a left descent */
      word.push_back(s);
      remaining = applyGen(space_, remaining, s, Side::Left);
      if (remaining.isId()) break;
    }
  }
  return word;
}

SortableVertex SortableCtx::makeVertex(const GroupElement& v) {
  SortableVertex out;
  out.element = v;
  out.sortingWord = sortingWord(v);
  out.len = out.sortingWord.size();
  out.covers = coverReflections(space_, v);
  std::vector<VecI> lab = labels(v, cword());
  /* Edge order: negative labels (down-covers) first, then positive; each
   * block sorted lexicographically for determinism. */
  std::vector<VecI> neg, pos;
  for (const auto& b : lab) (allLeq0(b) ? neg : pos).push_back(b);
  std::sort(neg.begin(), neg.end());
  std::sort(pos.begin(), pos.end());
  out.labels = neg;
  out.labels.insert(out.labels.end(), pos.begin(), pos.end());
  return out;
}

std::vector<GroupElement> SortableCtx::enumerateElements(Int maxLen) {
  std::set<MatI> seen{identityMat(space_.n)};
  std::vector<GroupElement> out{GroupElement::id(space_.n)};
  std::deque<std::pair<GroupElement, Int>> queue{{out[0], 0}};
  while (!queue.empty()) {
    auto [w, len] = queue.front();
    queue.pop_front();
    if (len >= maxLen) continue;
    for (size_t s = 0; s < space_.n; ++s) {
      if (isRightDescent(w, s)) continue;
      GroupElement w2 = applyGen(space_, w, s, Side::Right);
      if (seen.insert(w2.mat).second) {
        out.push_back(w2);
        queue.push_back({w2, len + 1});
      }
    }
  }
  return out;
}

std::vector<SortableVertex> SortableCtx::enumerate(Int maxLen) {
  std::vector<SortableVertex> out;
  for (const auto& w : enumerateElements(maxLen))
    if (isSortable(w)) out.push_back(makeVertex(w));
  std::sort(out.begin(), out.end(), [](const SortableVertex& a, const SortableVertex& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.element.mat < b.element.mat;
  });
  return out;
}

const SortableVertex& SortableCtx::piDown(const GroupElement& w,
                                          const std::vector<SortableVertex>& sortables) {
  size_t lw = length(space_, w);
  /* Longest candidates first: the projection is the unique sortable whose
   * labels are all sent to positive roots by w^-1. */
  for (auto it = sortables.rbegin(); it != sortables.rend(); ++it) {
    if (it->len > lw) continue;
    bool inside = true;
    for (const auto& beta : it->labels)
      if (!allGeq0(w.applyInv(beta))) {
        inside = false;
        break;
      }
    if (inside) return *it;
  }
  fail(Errc::SearchExhausted, "no sortable cone contains wD (bound too small?)");
}

const SortableVertex& SortableCtx::piDownBrute(const GroupElement& w,
                                               const std::vector<SortableVertex>& sortables) {
  const SortableVertex* best = nullptr;
  for (const auto& v : sortables)
    if (weakLeq(space_, v.element, w))
      if (!best || v.len > best->len) best = &v;
  require(best != nullptr, Errc::SearchExhausted, "no sortable below w found");
  for (const auto& v : sortables)
    if (weakLeq(space_, v.element, w))
      require(weakLeq(space_, v.element, best->element), Errc::Internal,
              "sortables below w have no unique maximum");
  return *best;
}

const std::vector<VecI>& SortableCtx::rootsUpTo(Int heightBound) {
  auto it = rootsMemo_.find(heightBound);
  if (it == rootsMemo_.end())
    it = rootsMemo_.emplace(heightBound, generateRoots(space_, heightBound)).first;
  return it->second;
}

namespace {

/* Canonical key for the 2D subspace spanned by two independent integer
 * vectors: reduced row echelon form, rows cleared to primitive integers. */
std::pair<VecI, VecI> spanKey(const VecI& u, const VecI& v) {
  size_t n = u.size();
  MatR m = {toRat(u), toRat(v)};
  size_t j1 = 0;
  while (j1 < n && m[0][j1] == 0 && m[1][j1] == 0) ++j1;
  if (m[0][j1] == 0) std::swap(m[0], m[1]);
  Rat p = m[0][j1];
  for (size_t j = 0; j < n; ++j) m[0][j] /= p;
  Rat f = m[1][j1];
  for (size_t j = 0; j < n; ++j) m[1][j] -= f * m[0][j];
  size_t j2 = j1 + 1;
  while (j2 < n && m[1][j2] == 0) ++j2;
  p = m[1][j2];
  for (size_t j = 0; j < n; ++j) m[1][j] /= p;
  f = m[0][j2];
  for (size_t j = 0; j < n; ++j) m[0][j] -= f * m[1][j];
  auto clear = [n](const VecR& row) {
    BigInt lcm = 1;
    for (const auto& x : row)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    VecI out(n);
    for (size_t j = 0; j < n; ++j)
      out[j] = static_cast<Int>(boost::multiprecision::numerator(row[j]) *
                                (lcm / boost::multiprecision::denominator(row[j])));
    return primitive(out);
  };
  return {clear(m[0]), clear(m[1])};
}

}  // namespace

bool SortableCtx::isAligned(const GroupElement& w, Int rootHeightBound) {
  const std::vector<VecI>& roots = rootsUpTo(rootHeightBound);
  std::vector<VecI> positives;
  for (const auto& r : roots)
    if (allGeq0(r)) positives.push_back(r);
  std::vector<VecI> inv = inversions(space_, w);
  std::set<VecI> invSet(inv.begin(), inv.end());
  std::set<std::pair<VecI, VecI>> seenSpans;
  for (const auto& rho : inv) {
    require(height1(rho) <= rootHeightBound, Errc::InvalidArgument,
            "alignment bound smaller than an inversion height");
    for (const auto& sigma : positives) {
      if (sigma == rho) continue;
      /* Skip dependent pairs. */
      bool dep = true;
      for (size_t i = 0; i < space_.n && dep; ++i)
        for (size_t j = i + 1; j < space_.n && dep; ++j)
          if (rho[i] * sigma[j] != rho[j] * sigma[i]) dep = false;
      if (dep) continue;
      if (!seenSpans.insert(spanKey(rho, sigma)).second) continue;
      RankTwoSubsystem sub = rankTwoSubsystem(space_, rho, sigma, roots);
      std::set<VecI> invP;
      for (const auto& r : sub.roots)
        if (invSet.count(r)) invP.insert(r);
      Rat w12 = space_.formOmega(sub.canon1, sub.canon2);
      if (w12 == 0) {
        /* Case (i): only canonical roots may be inverted. */
        bool ok = true;
        for (const auto& r : invP)
          if (r != sub.canon1 && r != sub.canon2) ok = false;
        if (!ok) return false;
      } else {
        const VecI& gamma = w12 > 0 ? sub.canon2 : sub.canon1;
        if (!invSet.count(gamma)) continue;
        if (invP.size() == 1 && *invP.begin() == gamma) continue;
        /* Last resort: inv(w) contains all of Phi'+, possible only in
         * finite type. */
        if (sub.type == MatKind::Finite) {
          bool all = true;
          for (const auto& r : closeRankTwoFinite(space_, sub.canon1, sub.canon2))
            if (allGeq0(r) && !invSet.count(r)) all = false;
          if (all) continue;
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace camb
