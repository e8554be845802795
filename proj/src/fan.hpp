#pragma once
/* Exact polyhedral layer: cones of sortable vertices, the Cambrian
 * quasi-graph, the doubled graph/fan with antipodal identification,
 * nice-meet certification by exact LP, rank-two stars, boundary-support
 * geometry in the affine slice and chart projections. */

#include "lp.hpp"
#include "sortable.hpp"

namespace camb {

enum class Provenance { FromC, FromAntiCinv, Both };

/* One maximal cone of the (doubled) fan together with its framework data.
 * Slot i pairs labels[i] (facet inward normal) with rays[i] (the dual-basis
 * ray, exact weight coordinates) and neighbor[i] (-1 = half-edge). */
struct FrameworkVertex {
  std::vector<VecI> labels;   /* lex-sorted; the slot order */
  std::vector<VecR> rays;     /* exact dual basis to the co-labels */
  std::vector<VecI> raysPrim; /* primitive integer multiples of rays */
  std::vector<int> neighbor;
  Provenance prov = Provenance::FromC;
  int lenC = -1, lenAnti = -1; /* weak-order lengths on each side */
  std::optional<GroupElement> elemC, elemAnti;
  bool interior = false; /* every slot has a discovered neighbor */
};

struct FrameworkGraph {
  size_t n = 0;
  Int maxLen = 0;
  std::vector<FrameworkVertex> vertices;
  int base = -1;    /* labels == simple roots (the identity cone) */
  int negBase = -1; /* labels == negated simple roots */

  size_t slotOf(size_t v, const VecI& label) const; /* throws Internal */
  size_t interiorCount() const;
  size_t halfEdgeCount(bool interiorOnly) const;
};

/* Dual-basis rays of a label set: exact plus primitive-integer forms.
 * Throws SingularLabels when the labels are dependent. */
void dualRays(const RootSpace& space, const std::vector<VecI>& labels,
              std::vector<VecR>& rays, std::vector<VecI>& raysPrim);

/* Single-sided graph on the sortables of ctx up to maxLen; when negate is
 * set every label and ray is negated (the antipodal copy). */
FrameworkGraph cambGraph(SortableCtx& ctx, Int maxLen, bool negate = false);

/* Union of cambGraph(c) and the negated cambGraph(c^-1), vertices identified
 * when their label sets coincide; a full edge beats a half-edge. */
FrameworkGraph doubledGraph(const RootSpace& space, Int maxLen);

/* Pairing of a weight-coordinate point with a root-coordinate vector. */
Rat pairWeightRoot(const RootSpace& space, const VecR& x, const VecI& beta);

/* meets-nicely certificate: either the shared face (common rays, with the
 * separating functional) or a witness point in the intersection that lies
 * outside the span of the common rays. */
struct MeetResult {
  bool nice = false;
  std::vector<VecI> face; /* common primitive rays */
  VecR functional;        /* separating lambda when nice */
  VecR witness;           /* violation point otherwise */
};

MeetResult meetsNicely(const std::vector<VecI>& rays1,
                       const std::vector<VecI>& rays2);

struct FanReport {
  size_t cones = 0;
  size_t pairsChecked = 0;
  std::vector<std::pair<size_t, size_t>> violations;
};

FanReport fanCheck(const std::vector<std::vector<VecI>>& coneRays);

/* Walk around the codimension-2 face shared by the walls at slots e and f
 * of vertex v, following the reflection maps across each crossed wall. */
struct StarResult {
  bool closed = false;           /* the walk is a finite cycle */
  bool truncated = false;        /* hit a half-edge: inconclusive */
  std::vector<size_t> path;      /* vertices in walk order */
  MatKind spanType = MatKind::Finite; /* type of Phi cap span(walls) */
  bool faceInDeltaPerp = false;  /* only meaningful with affine delta */
};

StarResult rankTwoStar(const RootSpace& space, const FrameworkGraph& g,
                       size_t v, size_t e, size_t f, const VecI* delta);

/* Type of Phi cap span(beta, gamma) via the signature of K on the span. */
MatKind spanKind(const RootSpace& space, const VecI& beta, const VecI& gamma);

/* Image of the label gamma across the wall with positive root beta_t. */
VecI muImage(const RootSpace& space, const VecI& betaT, const VecI& gamma);

/* The two longest parabolic elements whose cones coincide antipodally:
 * J = letters of c after position splitIndex, K = the first splitIndex
 * letters.  Requires both parabolic blocks finite. */
struct OverlapWitness {
  std::vector<size_t> J, K;
  GroupElement wJ; /* c-sortable */
  GroupElement wK; /* c^-1-sortable */
  std::vector<VecI> labels; /* C_c(wJ), lex-sorted */
};

OverlapWitness overlapWitness(const RootSpace& space, size_t splitIndex);

/* Boundary-slice geometry of an affine input: the halfspace union over the
 * omega-positive part of Phi_0 and its complement, tested chamber by
 * chamber against the finite Coxeter fan of W_0.  Points on the slice are
 * written as pairing values <x, alpha_j> for j in S0. */
struct BoundarySupport {
  Phi0Split split;
  std::vector<MatR> chamberRays; /* per chamber: one ray per row */
  std::vector<bool> covered;     /* chamber lies in the halfspace union */
  std::vector<bool> containsXc;  /* chamber closure contains x_c */
  bool secondDescriptionOk = false; /* covered == !containsXc throughout */
  bool xcAnnihilatesZeroPart = false;
  VecR complementPoint; /* strict interior point of the complement */
};

BoundarySupport boundarySupport(const RootSpace& space);

/* Chart coordinates for figure reproduction, emitted as CSV text.
 * Charts: "V1", "V-1" (affine slices <x,delta> = +-1), "V0" (boundary
 * slice, plus chamber rows from boundarySupport), "sphere" (stereographic,
 * rank 3 only, floating point). */
std::string projectChart(const RootSpace& space, const FrameworkGraph& g,
                         const std::string& chart);

}  // namespace camb
