#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "jsonio.hpp"

using namespace camb;

namespace {
RootSpace space(const MatI& b) { return buildRootSpace(validateExchange(b)); }
const MatI kA2 = {{0, 1}, {-1, 0}};
const MatI kA1t = {{0, 2}, {-2, 0}};
const MatI kG2t = {{0, 1, 1}, {-3, 0, 0}, {-1, 0, 0}};
}  // namespace

TEST_CASE("dual rays: identity cone and exact duality") {
  RootSpace sp = space(kG2t);
  std::vector<VecI> simples = {unitVec(3, 0), unitVec(3, 1), unitVec(3, 2)};
  std::vector<VecR> rays;
  std::vector<VecI> prim;
  dualRays(sp, simples, rays, prim);
  /* Duality: <ray_e, coroot of label_f> = delta_ef. */
  for (size_t e = 0; e < 3; ++e)
    for (size_t f = 0; f < 3; ++f) {
      VecI co = sp.corootOf(simples[f]);
      Rat pairing = 0;
      for (size_t i = 0; i < 3; ++i) pairing += rays[e][i] * co[i];
      CHECK(pairing == (e == f ? 1 : 0));
    }
  /* Dependent labels are rejected. */
  std::vector<VecI> dep = {unitVec(3, 0), unitVec(3, 1), VecI{1, 1, 0}};
  CHECK_THROWS_AS(dualRays(sp, dep, rays, prim), Error);
}

TEST_CASE("single-sided graph: vertices are the sortables") {
  RootSpace sp = space(kG2t);
  SortableCtx ctx(sp);
  FrameworkGraph g = cambGraph(ctx, 6);
  CHECK(g.vertices.size() == ctx.enumerate(6).size());
  CHECK(g.base >= 0);
  /* Edge symmetry and label consistency. */
  for (size_t v = 0; v < g.vertices.size(); ++v)
    for (size_t e = 0; e < g.n; ++e) {
      int nb = g.vertices[v].neighbor[e];
      if (nb < 0) continue;
      size_t back = g.slotOf((size_t)nb, -g.vertices[v].labels[e]);
      CHECK(g.vertices[(size_t)nb].neighbor[back] == (int)v);
    }
}

TEST_CASE("doubled graph of the finite control is the whole fan") {
  RootSpace sp = space(kA2);
  FrameworkGraph g = doubledGraph(sp, 8);
  CHECK(g.vertices.size() == 5);
  CHECK(g.interiorCount() == 5);
  CHECK(g.halfEdgeCount(false) == 0);
  CHECK(g.base == 0);
  CHECK(g.negBase >= 0);
  /* Provenance: every cone of a finite doubled fan is found from both
   * sides or stitched across; at least base and antipode merge. */
  CHECK(g.vertices[(size_t)g.base].labels ==
        std::vector<VecI>{{0, 1}, {1, 0}});
  CHECK(g.vertices[(size_t)g.negBase].labels ==
        std::vector<VecI>{{-1, 0}, {0, -1}});
}

TEST_CASE("doubled graph merges by label sets with negated rays") {
  RootSpace sp = space(kG2t);
  FrameworkGraph g = doubledGraph(sp, 7);
  std::set<std::vector<VecI>> labelSets;
  size_t both = 0, anti = 0;
  for (const auto& v : g.vertices) {
    CHECK(labelSets.insert(v.labels).second); /* no duplicates */
    CHECK(std::is_sorted(v.labels.begin(), v.labels.end()));
    if (v.prov == Provenance::Both) ++both;
    if (v.prov == Provenance::FromAntiCinv) ++anti;
    /* rays recompute from labels */
    std::vector<VecR> rays;
    std::vector<VecI> prim;
    dualRays(sp, v.labels, rays, prim);
    CHECK(rays == v.rays);
    CHECK(prim == v.raysPrim);
  }
  CHECK(both > 0);
  CHECK(anti > 0);
}

TEST_CASE("weak-order position against simple walls") {
  /* Cone(v) lies weakly below the wall of alpha_s exactly when v >= s. */
  RootSpace sp = space(kG2t);
  SortableCtx ctx(sp);
  FrameworkGraph g = cambGraph(ctx, 6);
  for (const auto& fv : g.vertices) {
    REQUIRE(fv.elemC.has_value());
    for (size_t s = 0; s < sp.n; ++s) {
      bool below = true;
      for (const auto& r : fv.rays)
        if (pairWeightRoot(sp, r, unitVec(sp.n, s)) > 0) below = false;
      CHECK(below == geqS(*fv.elemC, s));
    }
  }
}

TEST_CASE("meets nicely: positive and negative certificates") {
  /* Two quadrant cones sharing a facet. */
  MeetResult m = meetsNicely({{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}});
  CHECK(m.nice);
  CHECK(m.face == std::vector<VecI>{{0, 1}});
  /* Identical cones meet in themselves. */
  CHECK(meetsNicely({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}).nice);
  /* Properly overlapping cones: a witness interior point exists. */
  MeetResult bad = meetsNicely({{1, 0}, {0, 1}}, {{1, 1}, {1, -1}});
  CHECK_FALSE(bad.nice);
  bool nonzero = false;
  for (const auto& x : bad.witness)
    if (x != 0) nonzero = true;
  CHECK(nonzero);
  /* Nested cones overlap too. */
  CHECK_FALSE(meetsNicely({{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}).nice);
  /* Touching only at the origin is a nice meet. */
  CHECK(meetsNicely({{1, 0}, {0, 1}}, {{-1, 0}, {0, -1}}).nice);
}

TEST_CASE("fanCheck flags a planted violation") {
  std::vector<std::vector<VecI>> good = {{{1, 0}, {0, 1}},
                                         {{0, 1}, {-1, 0}},
                                         {{-1, 0}, {0, -1}},
                                         {{0, -1}, {1, 0}}};
  FanReport ok = fanCheck(good);
  CHECK(ok.violations.empty());
  CHECK(ok.pairsChecked == 6);
  std::vector<std::vector<VecI>> bad = good;
  bad.push_back({{1, 1}, {1, -1}});
  FanReport rep = fanCheck(bad);
  CHECK(rep.violations.size() == 2); /* overlaps two quadrants */
}

TEST_CASE("enumerated fans pass the pairwise check") {
  for (const MatI& bm : {kA2, kA1t}) {
    RootSpace sp = space(bm);
    FrameworkGraph g = doubledGraph(sp, 8);
    std::vector<std::vector<VecI>> cones;
    for (const auto& v : g.vertices) cones.push_back(v.raysPrim);
    CHECK(fanCheck(cones).violations.empty());
  }
}

TEST_CASE("rank-two stars: finite cycles and affine boundary paths") {
  RootSpace sp = space(kA2);
  FrameworkGraph g = doubledGraph(sp, 8);
  /* Any codim-2 face of the finite doubled fan: here n=2, the face is the
   * origin and the star is the whole fan: a 5-cycle. */
  StarResult res = rankTwoStar(sp, g, (size_t)g.base, 0, 1, nullptr);
  CHECK(res.closed);
  CHECK(res.spanType == MatKind::Finite);
  CHECK(res.path.size() == 5);

  RootSpace aff = space(kA1t);
  Classification cls = classify(aff.a);
  FrameworkGraph ga = doubledGraph(aff, 8);
  StarResult ra = rankTwoStar(aff, ga, (size_t)ga.base, 0, 1,
                              &cls.affine->delta);
  CHECK_FALSE(ra.closed);
  CHECK(ra.spanType == MatKind::Affine);
}

TEST_CASE("span kinds via the restricted form") {
  RootSpace g2 = space(kG2t);
  CHECK(spanKind(g2, {1, 0, 0}, {0, 1, 0}) == MatKind::Finite);
  CHECK(spanKind(g2, {2, 3, 0}, {0, 0, 1}) == MatKind::Affine); /* theta, a3 */
  RootSpace wild = space({{0, 3}, {-3, 0}});
  CHECK(spanKind(wild, {1, 0}, {0, 1}) == MatKind::Indefinite);
}

TEST_CASE("overlap witness: antipodal cone coincidence") {
  RootSpace sp = space(kG2t);
  SortableCtx c1(sp);
  SortableCtx c2(sp, reversed(sp.order));
  for (size_t split = 1; split < sp.n; ++split) {
    OverlapWitness w = overlapWitness(sp, split);
    CHECK(c1.isSortable(w.wJ, sp.order));
    CHECK(c2.isSortable(w.wK, reversed(sp.order)));
    std::vector<VecI> l1 = c1.labels(w.wJ, c1.cword());
    std::vector<VecI> l2 = c2.labels(w.wK, c2.cword());
    for (auto& x : l2) x = -x;
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    CHECK(l1 == l2);
    CHECK(l1 == w.labels);
  }
  /* An infinite parabolic block is refused. */
  RootSpace aff = space(kA1t);
  CHECK_NOTHROW(overlapWitness(aff, 1)); /* both blocks rank one: finite */
}

TEST_CASE("boundary support: second description and the complement") {
  RootSpace sp = space(kG2t);
  BoundarySupport bs = boundarySupport(sp);
  CHECK(bs.secondDescriptionOk);
  CHECK(bs.xcAnnihilatesZeroPart);
  size_t uncovered = 0;
  for (size_t c = 0; c < bs.covered.size(); ++c) {
    CHECK(bs.covered[c] == !bs.containsXc[c]);
    if (!bs.covered[c]) ++uncovered;
  }
  CHECK(uncovered > 0);
  CHECK(bs.covered.size() == 12); /* |W0| chambers of the rank-two system */
  /* The complement point is strictly inside every complement halfspace;
   * its coordinates are already pairing values over S0. */
  for (const auto& beta : bs.split.plus) {
    Rat p = 0;
    for (size_t j = 0; j < bs.split.aff.s0.size(); ++j)
      p += bs.complementPoint[j] * beta[bs.split.aff.s0[j]];
    CHECK(p < 0);
  }
}

TEST_CASE("fan JSON round trip") {
  RootSpace sp = space(kA1t);
  FrameworkGraph g = doubledGraph(sp, 6);
  Json j = fanJson(g);
  auto cones = fanFromJson(j);
  REQUIRE(cones.size() == g.vertices.size());
  for (size_t v = 0; v < cones.size(); ++v) {
    CHECK(cones[v].first == g.vertices[v].raysPrim);
    CHECK(cones[v].second == g.vertices[v].labels);
  }
}

TEST_CASE("chart projections") {
  RootSpace sp = space(kG2t);
  FrameworkGraph g = doubledGraph(sp, 6);
  std::string v1 = projectChart(sp, g, "V1");
  CHECK(v1.rfind("chart,kind,cone,slot,prov,x,y,z", 0) == 0);
  CHECK(v1.find("V1,ray") != std::string::npos);
  CHECK(projectChart(sp, g, "V-1").find("V-1,ray") != std::string::npos);
  std::string v0 = projectChart(sp, g, "V0");
  CHECK(v0.find("chamber") != std::string::npos);
  /* The fan owns rays on the projection axis: the sphere chart refuses. */
  CHECK_THROWS_AS(projectChart(sp, g, "sphere"), Error);
  CHECK_THROWS_AS(projectChart(sp, g, "nonsense"), Error);

  /* A rank-2 input has no 3D sphere chart either. */
  RootSpace aff = space(kA1t);
  FrameworkGraph ga = doubledGraph(aff, 6);
  CHECK_THROWS_AS(projectChart(aff, ga, "sphere"), Error);
  CHECK(projectChart(aff, ga, "V1").find("V1,ray") != std::string::npos);

  /* Deterministic output bytes. */
  CHECK(projectChart(sp, g, "V1") == v1);
}
