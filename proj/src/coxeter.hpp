#pragma once
/* Coxeter-group element arithmetic on the root lattice: lengths, reduced
 * words, inversion sets, weak order, parabolic projections, longest elements
 * of finite parabolics and bounded joins. */

#include <optional>

#include "rootsys.hpp"

namespace camb {

struct GroupElement {
  MatI mat;  /* column j = w(alpha_j) in simple-root coordinates */
  MatI inv;  /* matrix of w^-1, kept in sync */

  static GroupElement id(size_t n) { return {identityMat(n), identityMat(n)}; }
  bool operator==(const GroupElement& o) const { return mat == o.mat; }
  bool operator<(const GroupElement& o) const { return mat < o.mat; }
  bool isId() const;
  VecI operator()(const VecI& x) const { return matVec(mat, x); }
  VecI applyInv(const VecI& x) const { return matVec(inv, x); }
};

/* Group product a*b (first apply b, then a). */
inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
  return {matMul(a.mat, b.mat), matMul(b.inv, a.inv)};
}

/* Reflection matrix of s_i in the simple-root basis. */
MatI simpleReflectionMat(const RootSpace& space, size_t s);

enum class Side { Left, Right };

GroupElement applyGen(const RootSpace& space, const GroupElement& w, size_t s,
                      Side side);

GroupElement fromWord(const RootSpace& space, const std::vector<size_t>& word);

/* w(alpha_s) is a negative root, i.e. l(ws) < l(w). */
bool isRightDescent(const GroupElement& w, size_t s);

/* w >= s in weak order: w^-1(alpha_s) is negative, i.e. l(sw) < l(w). */
bool geqS(const GroupElement& w, size_t s);

size_t length(const RootSpace& space, const GroupElement& w);

/* Deterministic reduced word via smallest-index right descents. */
std::vector<size_t> reducedWord(const RootSpace& space, const GroupElement& w);

/* Left inversion set {positive beta : w^-1(beta) < 0} as roots. */
std::vector<VecI> inversions(const RootSpace& space, const GroupElement& w);

bool weakLeq(const RootSpace& space, const GroupElement& u, const GroupElement& w);

/* Roots of the cover reflections {w s w^-1 : s a right descent of w}. */
std::vector<VecI> coverReflections(const RootSpace& space, const GroupElement& w);

/* The parabolic factor w_J with inv(w_J) = inv(w) cap Phi_J. */
GroupElement parabolicProject(const RootSpace& space, const GroupElement& w,
                              const std::vector<size_t>& J);

bool inParabolic(const RootSpace& space, const GroupElement& w,
                 const std::vector<size_t>& J);

/* Longest element of a finite standard parabolic; throws InfiniteParabolic. */
GroupElement longestElement(const RootSpace& space, const std::vector<size_t>& J);

/* Reflection t_beta as a group element. */
GroupElement reflectionElement(const RootSpace& space, const VecI& beta);

/* Join of u and v in right weak order among elements of length <= bound. */
std::optional<GroupElement> joinBounded(const RootSpace& space,
                                        const GroupElement& u,
                                        const GroupElement& v, Int bound);

}  // namespace camb
