#pragma once
/* Theorem-checking harness over the doubled graph: the reflection-framework
 * axioms, the dictionary against independent cluster mutation, maximal green
 * sequences, rank-two star classification, boundary-face consistency and the
 * two-bound completeness scan. */

#include "exchange.hpp"
#include "fan.hpp"

namespace camb {

struct AxiomReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string witness; /* empty on pass */
  };
  std::vector<Item> items;
  size_t interiorChecked = 0;

  bool allPass() const;
  std::string str() const;
};

/* Base, Root, E1, E2, E3 on interior vertices; Reflection (restated form)
 * on full edges; Full edge everywhere. */
AxiomReport checkAxioms(const RootSpace& space, const FrameworkGraph& g);

struct CrossCheckReport {
  size_t matched = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/* Lockstep breadth-first walk of the doubled graph and the principal-
 * coefficient seed mutation, asserting at every matched vertex that the
 * exchange matrix equals the omega pairings of the labels, the c-vectors
 * equal the labels, every c-vector is sign-coherent, and the g-vectors
 * equal the dual-basis rays. */
CrossCheckReport crossCheck(const ExchangeMatrix& B, const RootSpace& space,
                            const FrameworkGraph& g, int depth);

struct GreenSequence {
  std::vector<size_t> vertices;      /* path in the doubled graph */
  std::vector<VecI> crossingLabels;  /* label at the source of each step */
};

/* Maximal green sequence: identity vertex to negated-identity vertex with
 * every crossing label positive.  Throws NotFound if no overlap witness
 * fits inside the truncation. */
GreenSequence findGreenSequence(const RootSpace& space,
                                const FrameworkGraph& g);

struct StarSummary {
  size_t stars = 0;
  size_t cycles = 0;
  size_t truncated = 0;
  size_t deltaPerpStars = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/* Classify the rank-two star around every codimension-2 face of the
 * enumerated graph: closed walks must have finite span type; faces inside
 * the delta-perpendicular boundary must be non-closed with affine span. */
StarSummary rankTwoSummary(const RootSpace& space, const FrameworkGraph& g,
                           const VecI* delta);

/* Adjacent cones share exactly n-1 rays and the two remaining rays lie
 * strictly on opposite sides of the shared wall. */
bool dualAdjacentOk(const RootSpace& space, const FrameworkGraph& g,
                    std::string* why);

struct BoundaryFaceReport {
  size_t facesChecked = 0;
  size_t outsideUnion = 0;   /* 2-face generators escaping the support */
  size_t fullFacetInPerp = 0; /* (n-1)-faces entirely inside delta-perp */
  bool ok() const { return outsideUnion == 0 && fullFacetInPerp == 0; }
};

/* Every 2-dimensional face of the enumerated fan lying in delta-perp stays
 * inside the halfspace union over the omega-positive part of Phi_0, and no
 * facet lies entirely in delta-perp. */
BoundaryFaceReport boundaryFaceConsistency(const RootSpace& space,
                                           const FrameworkGraph& g,
                                           const BoundarySupport& bs);

struct CompletenessScan {
  Int bound1 = 0, bound2 = 0;
  size_t interiorHalfEdges1 = 0, interiorHalfEdges2 = 0;
  size_t interior1 = 0, interior2 = 0;
  size_t deficit1 = 0;    /* vertices of the first graph missing neighbors */
  size_t persistent = 0;  /* of those, still deficient at the larger bound */
};

/* Builds the doubled graph at two bounds and tracks which deficient
 * vertices (keyed by label set) stay deficient as the bound grows. */
CompletenessScan completenessScan(const RootSpace& space, Int bound1,
                                  Int bound2);

}  // namespace camb
