#pragma once
/* c-sortable elements: the sortability recursion, c-sorting words, the label
 * recursion C_c(v), the downward projection onto sortables, bounded
 * enumeration and the rank-two alignment oracle. */

#include <map>

#include "coxeter.hpp"

namespace camb {

/* A Coxeter word is an ordering of a subset of the simple generators; the
 * recursions rotate it (scs), drop letters (restriction to a parabolic) and
 * reverse it (c^-1). */
using Word = std::vector<size_t>;

Word rotated(const Word& w);              /* s c s for s = first letter */
Word without(const Word& w, size_t s);    /* restriction dropping s */
Word reversed(const Word& w);
bool isInitial(const ExchangeMatrix& B, size_t s); /* source of the digraph */

struct SortableVertex {
  GroupElement element;
  Word sortingWord;
  std::vector<VecI> labels;  /* n roots, negatives first, each block sorted */
  std::vector<VecI> covers;  /* cover-reflection roots */
  size_t len = 0;
};

/* Memoized recursion context bound to one root space. */
class SortableCtx {
 public:
  explicit SortableCtx(const RootSpace& space) : space_(space), word_(space.order) {}
  SortableCtx(const RootSpace& space, Word word)
      : space_(space), word_(std::move(word)) {}

  const RootSpace& space() const { return space_; }
  const Word& cword() const { return word_; }

  bool isSortable(const GroupElement& w, const Word& cword);
  bool isSortable(const GroupElement& w) { return isSortable(w, cword()); }

  /* C_c recursion; requires v sortable w.r.t. cword. */
  std::vector<VecI> labels(const GroupElement& v, const Word& cword);

  Word sortingWord(const GroupElement& w); /* throws NotSortable */

  SortableVertex makeVertex(const GroupElement& v);

  /* All sortables of length <= maxLen, sorted by (length, element). */
  std::vector<SortableVertex> enumerate(Int maxLen);

  /* All group elements of length <= maxLen (BFS over upward covers). */
  std::vector<GroupElement> enumerateElements(Int maxLen);

  /* Cone-membership characterization of the projection; searches the given
   * sortable list (must cover lengths <= l(w)). */
  const SortableVertex& piDown(const GroupElement& w,
                               const std::vector<SortableVertex>& sortables);

  /* Brute-force oracle: maximal sortable weakly below w. */
  const SortableVertex& piDownBrute(const GroupElement& w,
                                    const std::vector<SortableVertex>& sortables);

  /* Rank-two alignment test; ambient roots generated to rootHeightBound. */
  bool isAligned(const GroupElement& w, Int rootHeightBound);

 private:
  const RootSpace& space_;
  Word word_;
  std::map<std::pair<MatI, Word>, bool> sortableMemo_;
  std::map<std::pair<MatI, Word>, std::vector<VecI>> labelMemo_;
  std::map<Int, std::vector<VecI>> rootsMemo_;

  const std::vector<VecI>& rootsUpTo(Int heightBound);
};

}  // namespace camb
