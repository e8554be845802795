#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "verify.hpp"

using namespace camb;

namespace {
RootSpace space(const MatI& b) { return buildRootSpace(validateExchange(b)); }
const MatI kA2 = {{0, 1}, {-1, 0}};
const MatI kA1t = {{0, 2}, {-2, 0}};
const MatI kG2t = {{0, 1, 1}, {-3, 0, 0}, {-1, 0, 0}};
const MatI k344 = {{0, -1, -2}, {1, 0, -2}, {1, 1, 0}};

bool passOf(const AxiomReport& rep, const std::string& name) {
  for (const auto& it : rep.items)
    if (it.name == name) return it.pass;
  FAIL("axiom not reported: " << name);
  return false;
}
}  // namespace

TEST_CASE("axioms pass on enumerated doubled graphs") {
  for (const MatI& bm : {kA2, kA1t, kG2t}) {
    RootSpace sp = space(bm);
    FrameworkGraph g = doubledGraph(sp, 8);
    AxiomReport rep = checkAxioms(sp, g);
    CHECK(rep.allPass());
    CHECK(rep.interiorChecked > 0);
    for (const char* name :
         {"Base", "Root", "E1", "E2", "E3", "Reflection", "FullEdge",
          "Completeness"})
      CHECK(passOf(rep, name));
  }
}

TEST_CASE("a corrupted label is caught with a replayable witness") {
  RootSpace sp = space(kG2t);
  FrameworkGraph g = doubledGraph(sp, 8);
  /* Corrupt one interior label to a non-root. */
  for (auto& v : g.vertices)
    if (v.interior) {
      v.labels[0] = VecI{5, 0, 0}; /* not a real root of this system */
      break;
    }
  AxiomReport rep = checkAxioms(sp, g);
  CHECK_FALSE(rep.allPass());
  CHECK_FALSE(passOf(rep, "Root"));
  bool witnessed = false;
  for (const auto& it : rep.items)
    if (!it.pass && !it.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("a corrupted edge breaks the reflection condition") {
  RootSpace sp = space(kA1t);
  FrameworkGraph g = doubledGraph(sp, 8);
  /* Rewire one full interior edge to the wrong vertex. */
  bool done = false;
  for (size_t v = 0; v < g.vertices.size() && !done; ++v) {
    if (!g.vertices[v].interior) continue;
    for (size_t e = 0; e < g.n && !done; ++e) {
      int nb = g.vertices[v].neighbor[e];
      if (nb < 0 || (size_t)nb == v) continue;
      size_t other = (v + 1) % g.vertices.size();
      if ((int)other == nb || other == v) other = (v + 2) % g.vertices.size();
      g.vertices[v].neighbor[e] = (int)other;
      done = true;
    }
  }
  REQUIRE(done);
  AxiomReport rep = checkAxioms(sp, g);
  CHECK_FALSE(rep.allPass());
}

TEST_CASE("dictionary cross-check against independent mutation") {
  for (const MatI& bm : {kA2, kA1t, kG2t}) {
    RootSpace sp = space(bm);
    ExchangeMatrix B = validateExchange(bm);
    FrameworkGraph g = doubledGraph(sp, 8);
    CrossCheckReport rep = crossCheck(B, sp, g, 7);
    CHECK(rep.ok());
    CHECK(rep.matched > 0);
    if (bm == kA2) CHECK(rep.matched == 5);
  }
}

TEST_CASE("cross-check catches a tampered ray") {
  RootSpace sp = space(kA1t);
  ExchangeMatrix B = validateExchange(kA1t);
  FrameworkGraph g = doubledGraph(sp, 8);
  g.vertices[(size_t)g.base].rays[0][0] += 1;
  CrossCheckReport rep = crossCheck(B, sp, g, 3);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("green sequences cross only positive walls") {
  for (const MatI& bm : {kA1t, kG2t}) {
    RootSpace sp = space(bm);
    FrameworkGraph g = doubledGraph(sp, 8);
    GreenSequence seq = findGreenSequence(sp, g);
    REQUIRE(seq.vertices.size() >= 2);
    CHECK(seq.vertices.size() == seq.crossingLabels.size() + 1);
    CHECK(seq.vertices.front() == (size_t)g.base);
    CHECK(seq.vertices.back() == (size_t)g.negBase);
    for (size_t i = 0; i < seq.crossingLabels.size(); ++i) {
      CHECK(allGeq0(seq.crossingLabels[i]));
      CHECK_FALSE(isZero(seq.crossingLabels[i]));
      size_t slot = g.slotOf(seq.vertices[i], seq.crossingLabels[i]);
      CHECK(g.vertices[seq.vertices[i]].neighbor[slot] ==
            (int)seq.vertices[i + 1]);
    }
  }
}

TEST_CASE("rank-two star census") {
  RootSpace sp = space(kG2t);
  Classification cls = classify(sp.a);
  FrameworkGraph g = doubledGraph(sp, 8);
  StarSummary sum = rankTwoSummary(sp, g, &cls.affine->delta);
  CHECK(sum.ok());
  CHECK(sum.stars > 0);
  CHECK(sum.cycles > 0);
  CHECK(sum.truncated > 0);
  CHECK(sum.deltaPerpStars > 0);

  RootSpace fin = space(kA2);
  FrameworkGraph gf = doubledGraph(fin, 8);
  StarSummary sf = rankTwoSummary(fin, gf, nullptr);
  CHECK(sf.ok());
  CHECK(sf.cycles == sf.stars); /* a finite fan has no truncations */
}

TEST_CASE("adjacent cones share a facet and separate strictly") {
  for (const MatI& bm : {kA2, kA1t, kG2t}) {
    RootSpace sp = space(bm);
    FrameworkGraph g = doubledGraph(sp, 8);
    std::string why;
    CHECK_MESSAGE(dualAdjacentOk(sp, g, &why), why);
  }
}

TEST_CASE("boundary faces stay inside the halfspace union") {
  RootSpace sp = space(kG2t);
  FrameworkGraph g = doubledGraph(sp, 8);
  BoundarySupport bs = boundarySupport(sp);
  BoundaryFaceReport rep = boundaryFaceConsistency(sp, g, bs);
  CHECK(rep.ok());
  CHECK(rep.facesChecked > 0);
  CHECK(rep.fullFacetInPerp == 0);
}

TEST_CASE("completeness scan: affine closes, indefinite stays deficient") {
  RootSpace g2 = space(kG2t);
  CompletenessScan aff = completenessScan(g2, 7, 8);
  CHECK(aff.interiorHalfEdges1 == 0);
  CHECK(aff.interiorHalfEdges2 == 0);
  CHECK(aff.interior2 >= aff.interior1);
  CHECK(aff.interior1 > 0);

  RootSpace wild = space(k344);
  CompletenessScan bad = completenessScan(wild, 7, 8);
  CHECK(bad.persistent > 0);

  CHECK_THROWS_AS(completenessScan(g2, 8, 8), Error);
}
