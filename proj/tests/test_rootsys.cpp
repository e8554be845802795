#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootsys.hpp"

using namespace camb;

namespace {
RootSpace space(const MatI& b) { return buildRootSpace(validateExchange(b)); }
const MatI kA2 = {{0, 1}, {-1, 0}};
const MatI kA1t = {{0, 2}, {-2, 0}};
const MatI kG2t = {{0, 1, 1}, {-3, 0, 0}, {-1, 0, 0}};
const MatI k344 = {{0, -1, -2}, {1, 0, -2}, {1, 1, 0}};

std::set<VecI> asSet(std::vector<VecI> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("classification of the three regimes") {
  CHECK(classify(space(kA2).a).kind == MatKind::Finite);
  CHECK(classify(space(kA1t).a).kind == MatKind::Affine);
  CHECK(classify(space(kG2t).a).kind == MatKind::Affine);
  CHECK(classify(space(k344).a).kind == MatKind::Indefinite);
}

TEST_CASE("affine data of the rank-3 example") {
  RootSpace sp = space(kG2t);
  Classification cls = classify(sp.a);
  REQUIRE(cls.affine.has_value());
  CHECK(cls.d == VecI{3, 1, 3});
  CHECK(cls.affine->delta == VecI{2, 3, 1});
  CHECK(cls.affine->sAff == 2);
  CHECK(cls.affine->s0 == std::vector<size_t>{0, 1});
  CHECK(cls.affine->theta == VecI{2, 3, 0});
  /* Phi_0 is a G2 system: 12 roots, closed under negation. */
  CHECK(cls.affine->phi0.size() == 12);
  std::set<VecI> p0 = asSet(cls.affine->phi0);
  for (const auto& r : p0) {
    CHECK(r[2] == 0);
    CHECK(p0.count(-r));
  }
}

TEST_CASE("Phi_0 sign split and the boundary point") {
  RootSpace sp = space(kG2t);
  Phi0Split split = phi0Split(sp);
  CHECK(asSet(split.zero) ==
        asSet({{1, 2, 0}, {-1, -2, 0}}));
  CHECK(asSet(split.plus) ==
        asSet({{2, 3, 0}, {1, 1, 0}, {1, 0, 0}, {0, -1, 0}, {-1, -3, 0}}));
  CHECK(split.minus.size() == 5);
  for (const auto& r : split.plus) CHECK(asSet(split.minus).count(-r));
  CHECK(split.xcWeight == VecI{-4, 6});
}

TEST_CASE("nonstandard affine rank 2: symmetrizer scales the coroot") {
  RootSpace sp = space({{0, 1}, {-4, 0}});
  CHECK(sp.a == MatI{{2, -1}, {-4, 2}});
  Classification cls = classify(sp.a);
  REQUIRE(cls.affine.has_value());
  CHECK(cls.affine->delta == VecI{1, 2});
  CHECK(cls.affine->theta == VecI{1, 0});
  /* alpha_2 has squared length 1/2 of the normalization: coroot = 4 alpha_2 */
  CHECK(sp.corootToRootCoords({0, 1}) == VecR{0, 4});
  CHECK(sp.corootToRootCoords({1, 0}) == VecR{1, 0});
}

TEST_CASE("standard affine rank 2") {
  RootSpace sp = space(kA1t);
  Classification cls = classify(sp.a);
  REQUIRE(cls.affine.has_value());
  CHECK(cls.affine->delta == VecI{1, 1});
  CHECK(cls.affine->phi0.size() == 2);
}

TEST_CASE("root generation: closure, sign coherence, known counts") {
  RootSpace a2 = space(kA2);
  std::vector<VecI> roots = generateRoots(a2, 10);
  CHECK(asSet(roots) ==
        asSet({{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}));

  RootSpace a1t = space(kA1t);
  std::set<VecI> rs = asSet(generateRoots(a1t, 9));
  /* Real roots of the affine rank-2 system: (k+1,k) and (k,k+1). */
  for (Int k = 0; k <= 4; ++k) {
    CHECK(rs.count({k + 1, k}));
    CHECK(rs.count({k, k + 1}));
  }
  CHECK(rs.size() == 20);
  for (const auto& r : rs) {
    CHECK(rs.count(-r));
    CHECK((allGeq0(r) || allLeq0(r)));
  }
}

TEST_CASE("bilinear forms: symmetry, antisymmetry, exchange-matrix pairing") {
  for (const MatI& bm : {kA2, kA1t, kG2t, k344}) {
    RootSpace sp = space(bm);
    size_t n = sp.n;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        CHECK(sp.pairK(unitVec(n, i), unitVec(n, j)) == sp.a[i][j]);
        CHECK(sp.pairOmega(unitVec(n, i), unitVec(n, j)) == bm[i][j]);
        CHECK(sp.formK(unitVec(n, i), unitVec(n, j)) ==
              sp.formK(unitVec(n, j), unitVec(n, i)));
        CHECK(sp.formOmega(unitVec(n, i), unitVec(n, j)) ==
              -sp.formOmega(unitVec(n, j), unitVec(n, i)));
        /* E + E-transposed recovers K (both in coroot-root pairing form). */
        Rat e1 = sp.pairEuler(unitVec(n, i), unitVec(n, j)) * sp.dNorm[i];
        Rat e2 = sp.pairEuler(unitVec(n, j), unitVec(n, i)) * sp.dNorm[j];
        CHECK(e1 + e2 == sp.formK(unitVec(n, i), unitVec(n, j)));
      }
  }
}

TEST_CASE("published alignment-form values") {
  RootSpace sp = space(kG2t);
  CHECK(sp.pairOmega({3, 1, 3}, {1, 2, 0}) == 0);
  CHECK(sp.pairK({3, 1, 3}, {1, 2, 0}) == -2);
}

TEST_CASE("delta is W-invariant and pairs to zero with everything") {
  for (const MatI& bm : {kA1t, kG2t}) {
    RootSpace sp = space(bm);
    Classification cls = classify(sp.a);
    const VecI& delta = cls.affine->delta;
    for (size_t s = 0; s < sp.n; ++s) {
      CHECK(sp.reflectSimple(delta, s) == delta);
      CHECK(sp.pairK(unitVec(sp.n, s), delta) == 0);
    }
  }
}

TEST_CASE("reflections are involutions fixing the form") {
  RootSpace sp = space(kG2t);
  std::vector<VecI> roots = generateRoots(sp, 8);
  for (const auto& beta : roots) {
    CHECK(sp.reflectRoot(beta, beta) == -beta);
    for (const auto& x : roots) {
      VecI y = sp.reflectRoot(x, beta);
      CHECK(sp.reflectRoot(y, beta) == x);
      CHECK(sp.formK(y, y) == sp.formK(x, x));
    }
  }
}

TEST_CASE("coroot normalization") {
  RootSpace sp = space(kG2t);
  for (const auto& beta : generateRoots(sp, 8)) {
    VecI co = sp.corootOf(beta);
    /* K(beta^v, beta) = 2 by definition of the coroot. */
    CHECK(sp.pairK(co, beta) == 2);
  }
}

TEST_CASE("rank-two subsystems and their types") {
  RootSpace g2 = space(kG2t);
  std::vector<VecI> ambient = generateRoots(g2, 20);
  RankTwoSubsystem sub =
      rankTwoSubsystem(g2, unitVec(3, 0), unitVec(3, 1), ambient);
  CHECK(sub.type == MatKind::Finite);
  std::vector<VecI> closed = closeRankTwoFinite(g2, sub.canon1, sub.canon2);
  CHECK(closed.size() == 12); /* full rank-two system with 6 positive roots */

  RootSpace a1t = space(kA1t);
  RankTwoSubsystem aff = rankTwoSubsystem(a1t, unitVec(2, 0), unitVec(2, 1),
                                          generateRoots(a1t, 9));
  CHECK(aff.type == MatKind::Affine);

  RootSpace wild = space({{0, 3}, {-3, 0}});
  RankTwoSubsystem ind = rankTwoSubsystem(wild, unitVec(2, 0), unitVec(2, 1),
                                          generateRoots(wild, 9));
  CHECK(ind.type == MatKind::Indefinite);
}

TEST_CASE("simplified affine reflection identity") {
  for (const MatI& bm : {kA1t, kG2t}) {
    RootSpace sp = space(bm);
    Classification cls = classify(sp.a);
    for (const auto& x : generateRoots(sp, 10))
      CHECK(simplifiedSaffAction(sp, *cls.affine, x) ==
            sp.reflectSimple(x, cls.affine->sAff));
  }
}
