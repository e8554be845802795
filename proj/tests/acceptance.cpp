/* Acceptance gate: one pass/fail line per criterion, exit nonzero when any
 * criterion fails.  Every check is exact; timing limits are asserted where
 * the criterion states one. */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "verify.hpp"

using namespace camb;

namespace {

const MatI kA2 = {{0, 1}, {-1, 0}};
const MatI kA1t = {{0, 2}, {-2, 0}};
const MatI kG2t = {{0, 1, 1}, {-3, 0, 0}, {-1, 0, 0}};
const MatI k344 = {{0, -1, -2}, {1, 0, -2}, {1, 1, 0}};

RootSpace space(const MatI& b) { return buildRootSpace(validateExchange(b)); }
std::set<VecI> asSet(const std::vector<VecI>& v) { return {v.begin(), v.end()}; }

int g_failures = 0;

void criterion(int num, const std::string& what, double limitSec,
               const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream detail;
  auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    body(detail);
  } catch (const std::exception& e) {
    error = e.what();
  }
  double sec = std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  if (error.empty() && limitSec > 0 && sec > limitSec)
    error = "time limit exceeded";
  bool pass = error.empty();
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %2d (%.2fs): %s%s%s%s%s\n",
              pass ? "PASS" : "FAIL", num, sec, what.c_str(),
              detail.str().empty() ? "" : " -- ", detail.str().c_str(),
              error.empty() ? "" : " !! ", error.c_str());
  std::fflush(stdout);
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("expectation failed: " + what);
}

}  // namespace

int main() {
  /* 1. Affine constants of the rank-3 example. */
  criterion(1, "rank-3 affine constants (delta, Phi0 split, boundary point)",
            1.0, [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    Classification cls = classify(sp.a);
    expect(cls.kind == MatKind::Affine, "kind Affine");
    expect(cls.affine->delta == VecI{2, 3, 1}, "delta = 2a1+3a2+a3");
    Phi0Split split = phi0Split(sp, *cls.affine);
    expect(asSet(split.zero) == asSet({{1, 2, 0}, {-1, -2, 0}}),
           "omega-zero part = {+-(a1+2a2)}");
    expect(asSet(split.plus) == asSet({{2, 3, 0},
                                       {1, 1, 0},
                                       {1, 0, 0},
                                       {0, -1, 0},
                                       {-1, -3, 0}}),
           "omega-positive part");
    expect(split.xcWeight == VecI{-4, 6}, "x_c = -4 rho1 + 6 rho2");
    d << "delta=(2,3,1), xc=(-4,6)";
  });

  /* 2. Published values of the two forms on a coroot/root pair. */
  criterion(2, "alignment-form values omega=0 and K=-2", 1.0,
            [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    Int om = sp.pairOmega({3, 1, 3}, {1, 2, 0});
    Int kk = sp.pairK({3, 1, 3}, {1, 2, 0});
    expect(om == 0, "omega(3a1v+a2v+3a3v, a1+2a2) = 0");
    expect(kk == -2, "K(3a1v+a2v+3a3v, a1+2a2) = -2");
    d << "omega=" << om << ", K=" << kk;
  });

  /* 3. Nonstandard rank-2 affine normalization. */
  criterion(3, "nonstandard affine rank 2: delta, theta, scaled coroot", 1.0,
            [](std::ostringstream& d) {
    RootSpace sp = space({{0, 1}, {-4, 0}});
    expect(sp.a == MatI{{2, -1}, {-4, 2}}, "Cartan companion");
    Classification cls = classify(sp.a);
    expect(cls.kind == MatKind::Affine, "kind Affine");
    expect(cls.affine->delta == VecI{1, 2}, "delta = a1 + 2a2");
    expect(cls.affine->theta == VecI{1, 0}, "theta = a1");
    expect(sp.corootToRootCoords({0, 1}) == VecR{0, 4}, "a2v = 4 a2");
    d << "delta=(1,2), theta=(1,0), a2v=4a2";
  });

  /* 4. Pairwise fan property of the doubled fan. */
  criterion(4, "every cone pair of the doubled rank-3 fan meets nicely",
            60.0, [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    FrameworkGraph g = doubledGraph(sp, 8);
    std::vector<std::vector<VecI>> cones;
    for (const auto& v : g.vertices) cones.push_back(v.raysPrim);
    FanReport rep = fanCheck(cones);
    expect(rep.violations.empty(), "zero violations");
    d << rep.cones << " cones, " << rep.pairsChecked << " pairs, 0 violations";
  });

  /* 5. Framework axioms on the doubled graph. */
  criterion(5, "framework axioms and zero interior half-edges", 60.0,
            [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    FrameworkGraph g = doubledGraph(sp, 8);
    AxiomReport rep = checkAxioms(sp, g);
    for (const auto& it : rep.items)
      expect(it.pass, it.name + " [" + it.witness + "]");
    expect(rep.interiorChecked > 0, "interior vertices exist");
    CompletenessScan scan = completenessScan(sp, 7, 8);
    expect(scan.interiorHalfEdges1 == 0 && scan.interiorHalfEdges2 == 0,
           "zero interior half-edges");
    d << rep.items.size() << " axioms PASS on " << rep.interiorChecked
      << " interior vertices";
  });

  /* 6. Dictionary cross-check against independent cluster mutation. */
  criterion(6, "cross-check vs principal-coefficient mutation (3 inputs)",
            60.0, [](std::ostringstream& d) {
    size_t total = 0;
    for (const MatI& bm : {kA2, kA1t, kG2t}) {
      RootSpace sp = space(bm);
      ExchangeMatrix B = validateExchange(bm);
      FrameworkGraph g = doubledGraph(sp, 8);
      CrossCheckReport rep = crossCheck(B, sp, g, 7);
      expect(rep.mismatches.empty(), "zero mismatches");
      expect(rep.matched > 0, "vertices matched");
      if (bm == kA2) {
        expect(rep.matched == 5, "exactly 5 seeds in the finite control");
        ExchangeGraphSlice eg = exchangeGraph(B, 7, 100000);
        expect(eg.nodes.size() == 5, "exchange graph closes at 5 classes");
      }
      total += rep.matched;
    }
    d << total << " vertices matched, 0 mismatches";
  });

  /* 7. Boundary support: the complement of the fan in the slice. */
  criterion(7, "boundary-support complement and the point x_c", 60.0,
            [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    BoundarySupport bs = boundarySupport(sp);
    expect(bs.secondDescriptionOk,
           "covered chambers == chambers missing x_c");
    expect(bs.xcAnnihilatesZeroPart, "x_c nonzero and kills the zero part");
    size_t uncovered = 0;
    for (bool c : bs.covered)
      if (!c) ++uncovered;
    expect(uncovered > 0, "complement nonempty");
    /* The witness point is strictly inside every complement halfspace:
     * the complement is open and equals the halfspace intersection. */
    for (const auto& beta : bs.split.plus) {
      Rat p = 0;
      for (size_t j = 0; j < bs.split.aff.s0.size(); ++j)
        p += bs.complementPoint[j] * beta[bs.split.aff.s0[j]];
      expect(p < 0, "strict interior point of the complement");
    }
    d << bs.covered.size() << " chambers, " << uncovered
      << " in the complement";
  });

  /* 8. Rank-two dichotomy on codimension-2 stars. */
  criterion(8, "rank-two stars: finite cycles vs affine boundary paths",
            60.0, [](std::ostringstream& d) {
    RootSpace sp = space(kG2t);
    Classification cls = classify(sp.a);
    FrameworkGraph g = doubledGraph(sp, 8);
    StarSummary sum = rankTwoSummary(sp, g, &cls.affine->delta);
    for (const auto& f : sum.failures) expect(false, f);
    expect(sum.cycles > 0, "closed finite-type stars exist");
    expect(sum.deltaPerpStars > 0, "boundary stars exist");
    d << sum.stars << " stars: " << sum.cycles << " cycles, "
      << sum.truncated << " truncated, " << sum.deltaPerpStars
      << " on the boundary";
  });

  /* 9. Maximal green sequences through the doubled graph. */
  criterion(9, "green sequences on both affine inputs", 60.0,
            [](std::ostringstream& d) {
    for (const MatI& bm : {kA1t, kG2t}) {
      RootSpace sp = space(bm);
      FrameworkGraph g = doubledGraph(sp, 8);
      GreenSequence seq = findGreenSequence(sp, g);
      expect(seq.vertices.front() == (size_t)g.base, "starts at the base");
      expect(seq.vertices.back() == (size_t)g.negBase,
             "ends at the antipodal base");
      for (size_t i = 0; i < seq.crossingLabels.size(); ++i) {
        expect(allGeq0(seq.crossingLabels[i]) &&
                   !isZero(seq.crossingLabels[i]),
               "crossing label positive");
        size_t slot = g.slotOf(seq.vertices[i], seq.crossingLabels[i]);
        expect(g.vertices[seq.vertices[i]].neighbor[slot] ==
                   (int)seq.vertices[i + 1],
               "path follows graph edges");
      }
      d << (bm == kA1t ? "rank2:" : " rank3:") << seq.crossingLabels.size()
        << " crossings";
    }
  });

  /* 10. Negative controls. */
  criterion(10, "indefinite control stays deficient; corruption is caught",
            120.0, [](std::ostringstream& d) {
    RootSpace wild = space(k344);
    expect(classify(wild.a).kind == MatKind::Indefinite, "kind Indefinite");
    CompletenessScan scan = completenessScan(wild, 7, 8);
    expect(scan.persistent > 0, "persistent deficit across bounds");

    RootSpace sp = space(kG2t);
    FrameworkGraph g = doubledGraph(sp, 8);
    size_t badVertex = 0;
    for (size_t v = 0; v < g.vertices.size(); ++v)
      if (g.vertices[v].interior) {
        badVertex = v;
        g.vertices[v].labels[0] = VecI{5, 0, 0};
        break;
      }
    AxiomReport rep = checkAxioms(sp, g);
    expect(!rep.allPass(), "corrupted label fails an axiom");
    std::string witness;
    for (const auto& it : rep.items)
      if (!it.pass && !it.witness.empty() &&
          it.witness.find("vertex " + std::to_string(badVertex)) !=
              std::string::npos)
        witness = it.name + ": " + it.witness;
    expect(!witness.empty(), "a witness replays the corrupted vertex");
    d << "persistent deficit " << scan.persistent << "; witness: " << witness;
  });

  /* 11. Sortable equals aligned, exhaustively on bounded balls. */
  criterion(11, "sortable == aligned (length <= 7 rank 3, <= 10 rank 2)",
            120.0, [](std::ostringstream& d) {
    size_t checked = 0;
    {
      RootSpace sp = space(kG2t);
      SortableCtx ctx(sp);
      for (const auto& w : ctx.enumerateElements(7)) {
        expect(ctx.isSortable(w) == ctx.isAligned(w, 45),
               "discrepancy in the rank-3 ball");
        ++checked;
      }
    }
    {
      RootSpace sp = space(kA1t);
      SortableCtx ctx(sp);
      for (const auto& w : ctx.enumerateElements(10)) {
        expect(ctx.isSortable(w) == ctx.isAligned(w, 45),
               "discrepancy in the rank-2 ball");
        ++checked;
      }
    }
    d << checked << " elements, zero discrepancies";
  });

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria PASSED\n");
  return 0;
}
