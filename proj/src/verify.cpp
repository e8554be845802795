#include "verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace camb {

namespace {

std::string vecStr(const VecI& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/* Sign data of the Euler form on a root pair (first argument scaled to the
 * coroot; only the sign and vanishing matter to the axioms). */
Int eulerRR(const RootSpace& space, const VecI& beta, const VecI& gamma) {
  return space.pairEuler(space.corootOf(beta), gamma);
}

}  // namespace

bool AxiomReport::allPass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string AxiomReport::str() const {
  std::ostringstream out;
  for (const auto& it : items) {
    out << it.name << ": " << (it.pass ? "PASS" : "FAIL");
    if (!it.witness.empty()) out << "  [" << it.witness << "]";
    out << '\n';
  }
  out << "interior vertices checked: " << interiorChecked << '\n';
  return out.str();
}

AxiomReport checkAxioms(const RootSpace& space, const FrameworkGraph& g) {
  AxiomReport rep;
  rep.interiorChecked = g.interiorCount();
  auto add = [&](const std::string& name, bool pass, const std::string& why) {
    rep.items.push_back({name, pass, pass ? "" : why});
  };

  /* Base: some vertex carries exactly the simple roots. */
  {
    bool ok = g.base >= 0;
    if (ok) {
      std::vector<VecI> want;
      for (size_t i = 0; i < g.n; ++i) want.push_back(unitVec(g.n, i));
      std::sort(want.begin(), want.end());
      ok = g.vertices[(size_t)g.base].labels == want;
    }
    add("Base", ok, "no vertex labeled by the simple roots");
  }

  /* Root: every interior label is a real root. */
  {
    Int maxH = 1;
    for (const auto& v : g.vertices) {
      if (!v.interior) continue;
      for (const auto& lab : v.labels) maxH = std::max(maxH, height1(lab));
    }
    std::vector<VecI> roots = generateRoots(space, maxH);
    std::set<VecI> rootSet(roots.begin(), roots.end());
    bool ok = true;
    std::string why;
    for (size_t v = 0; v < g.vertices.size() && ok; ++v) {
      if (!g.vertices[v].interior) continue;
      for (const auto& lab : g.vertices[v].labels)
        if (!rootSet.count(lab)) {
          ok = false;
          why = "vertex " + std::to_string(v) + " label " + vecStr(lab);
          break;
        }
    }
    add("Root", ok, why);
  }

  /* Euler conditions on interior vertices. */
  {
    bool ok1 = true, ok2 = true, ok3 = true;
    std::string w1, w2, w3;
    try {
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& labs = g.vertices[v].labels;
      if (!g.vertices[v].interior) continue;
      for (size_t e = 0; e < labs.size(); ++e)
        for (size_t f = 0; f < labs.size(); ++f) {
          if (e == f) continue;
          bool ep = allGeq0(labs[e]), fp = allGeq0(labs[f]);
          Int E = eulerRR(space, labs[e], labs[f]);
          if (ep && !fp && E != 0 && ok1) {
            ok1 = false;
            w1 = "vertex " + std::to_string(v) + " pair " + vecStr(labs[e]) +
                 "," + vecStr(labs[f]);
          }
          if (ep == fp && E > 0 && ok2) {
            ok2 = false;
            w2 = "vertex " + std::to_string(v) + " pair " + vecStr(labs[e]) +
                 "," + vecStr(labs[f]);
          }
        }
      /* E3: the directed graph with an edge when E(beta,gamma) != 0 must be
       * acyclic (Kahn peeling). */
      size_t n = labs.size();
      std::vector<std::vector<size_t>> adj(n);
      std::vector<size_t> indeg(n, 0);
      for (size_t e = 0; e < n; ++e)
        for (size_t f = 0; f < n; ++f)
          if (e != f && eulerRR(space, labs[e], labs[f]) != 0) {
            adj[e].push_back(f);
            ++indeg[f];
          }
      std::deque<size_t> q;
      for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push_back(i);
      size_t removed = 0;
      while (!q.empty()) {
        size_t x = q.front();
        q.pop_front();
        ++removed;
        for (size_t y : adj[x])
          if (--indeg[y] == 0) q.push_back(y);
      }
      if (removed != n && ok3) {
        ok3 = false;
        w3 = "vertex " + std::to_string(v);
      }
    }
    } catch (const Error& e) {
      /* A label the form arithmetic rejects (e.g. not a real root) is an
       * axiom failure, not a crash. */
      ok1 = ok2 = ok3 = false;
      w1 = w2 = w3 = std::string("label arithmetic failed: ") + e.what();
    }
    add("E1", ok1, w1);
    add("E2", ok2, w2);
    add("E3", ok3, w3);
  }

  /* Reflection (restated form) across every full edge. */
  {
    bool ok = true;
    std::string why;
    try {
    for (size_t v = 0; v < g.vertices.size() && ok; ++v) {
      const auto& fv = g.vertices[v];
      for (size_t e = 0; e < g.n && ok; ++e) {
        if (fv.neighbor[e] < 0) continue;
        const auto& other = g.vertices[(size_t)fv.neighbor[e]].labels;
        std::set<VecI> otherSet(other.begin(), other.end());
        VecI wall = allGeq0(fv.labels[e]) ? fv.labels[e] : -fv.labels[e];
        for (size_t f = 0; f < g.n; ++f) {
          VecI img = muImage(space, wall, fv.labels[f]);
          if (f == e) img = -fv.labels[e];
          if (!otherSet.count(img)) {
            ok = false;
            why = "edge " + std::to_string(v) + "-" +
                  std::to_string(fv.neighbor[e]) + " label " +
                  vecStr(fv.labels[f]);
            break;
          }
        }
      }
    }
    } catch (const Error& e) {
      ok = false;
      why = std::string("label arithmetic failed: ") + e.what();
    }
    add("Reflection", ok, why);
  }

  /* Full edge: negative labels never sit on half-edges.  Only decidable
   * within the truncation at vertices present on the primary side, where a
   * negative label points to a vertex of smaller length (hence enumerated);
   * on pure antipodal vertices negative labels may point past the bound. */
  {
    bool ok = true;
    std::string why;
    for (size_t v = 0; v < g.vertices.size() && ok; ++v) {
      if (g.vertices[v].lenC < 0) continue;
      for (size_t e = 0; e < g.n; ++e)
        if (allLeq0(g.vertices[v].labels[e]) && g.vertices[v].neighbor[e] < 0) {
          ok = false;
          why = "vertex " + std::to_string(v) + " label " +
                vecStr(g.vertices[v].labels[e]);
          break;
        }
    }
    add("FullEdge", ok, why);
  }

  /* Completeness on the truncation: interior vertices exist and are
   * n-regular in full edges. */
  {
    bool ok = rep.interiorChecked > 0 && g.halfEdgeCount(true) == 0;
    add("Completeness", ok, "no interior vertex or an interior half-edge");
  }
  return rep;
}

CrossCheckReport crossCheck(const ExchangeMatrix& B, const RootSpace& space,
                            const FrameworkGraph& g, int depth) {
  CrossCheckReport rep;
  require(g.base >= 0, Errc::Internal, "doubled graph has no base vertex");

  auto note = [&](size_t v, const std::string& what) {
    if (rep.mismatches.size() < 32)
      rep.mismatches.push_back("vertex " + std::to_string(v) + ": " + what);
    else if (rep.mismatches.size() == 32)
      rep.mismatches.push_back("...");
  };

  auto assertVertex = [&](size_t v, const Seed& seed,
                          const std::vector<size_t>& col) {
    const auto& fv = g.vertices[v];
    for (size_t e = 0; e < g.n; ++e) {
      VecI co = space.corootOf(fv.labels[e]);
      for (size_t f = 0; f < g.n; ++f) {
        if (e == f) continue;
        if (seed.matrix.top[col[e]][col[f]] !=
            space.pairOmega(co, fv.labels[f]))
          note(v, "exchange entry != omega pairing");
      }
      if (column(seed.matrix.bottom, col[e]) != fv.labels[e])
        note(v, "c-vector != label " + vecStr(fv.labels[e]));
      VecI cv = column(seed.matrix.bottom, col[e]);
      if (!allGeq0(cv) && !allLeq0(cv)) note(v, "c-vector not sign-coherent");
      if (toRat(seed.gvectors[col[e]]) != fv.rays[e])
        note(v, "g-vector != dual ray at slot " + std::to_string(e));
    }
  };

  struct State {
    size_t v;
    Seed seed;
    std::vector<size_t> col; /* slot -> seed column */
    int depth;
  };
  std::map<size_t, std::string> seen;
  std::deque<State> queue;
  {
    std::vector<size_t> col(g.n);
    const auto& labs = g.vertices[(size_t)g.base].labels;
    for (size_t s = 0; s < g.n; ++s) {
      size_t i = 0;
      while (labs[s][i] == 0) ++i;
      col[s] = i;
    }
    Seed seed = initialSeed(B);
    seen.emplace((size_t)g.base, seedClassKey(seed));
    queue.push_back({(size_t)g.base, std::move(seed), std::move(col), 0});
  }
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    assertVertex(st.v, st.seed, st.col);
    ++rep.matched;
    if (st.depth >= depth) continue;
    const auto& fv = g.vertices[st.v];
    for (size_t e = 0; e < g.n; ++e) {
      if (fv.neighbor[e] < 0) continue;
      size_t w = (size_t)fv.neighbor[e];
      Seed next = mutateSeed(B, st.seed, st.col[e]);
      std::vector<size_t> col(g.n);
      VecI wall = allGeq0(fv.labels[e]) ? fv.labels[e] : -fv.labels[e];
      for (size_t f = 0; f < g.n; ++f) {
        VecI img = f == e ? -fv.labels[e] : muImage(space, wall, fv.labels[f]);
        col[g.slotOf(w, img)] = st.col[f];
      }
      auto it = seen.find(w);
      if (it != seen.end()) {
        if (it->second != seedClassKey(next))
          note(w, "revisited with an inequivalent seed");
        continue;
      }
      seen.emplace(w, seedClassKey(next));
      queue.push_back({w, std::move(next), std::move(col), st.depth + 1});
    }
  }
  return rep;
}

namespace {

/* Unrefinable sortable chain from the identity up to target; returns the
 * elements after the identity and the crossing root of each step. */
bool ascendChain(SortableCtx& ctx, const GroupElement& target,
                 std::vector<GroupElement>& chain, std::vector<VecI>& roots) {
  const RootSpace& space = ctx.space();
  GroupElement u = GroupElement::id(space.n);
  size_t guard = 0;
  while (!(u == target)) {
    if (++guard > 10000) return false;
    bool moved = false;
    for (size_t s = 0; s < space.n && !moved; ++s) {
      VecI beta = u(unitVec(space.n, s));
      if (!allGeq0(beta)) continue;               /* need l(us) = l(u)+1 */
      if (!allLeq0(target.applyInv(beta))) continue; /* need us <= target */
      GroupElement us = applyGen(space, u, s, Side::Right);
      if (!ctx.isSortable(us)) continue;
      roots.push_back(beta);
      chain.push_back(us);
      u = us;
      moved = true;
    }
    if (!moved) return false;
  }
  return true;
}

size_t vertexByLabels(const FrameworkGraph& g, std::vector<VecI> labels) {
  std::sort(labels.begin(), labels.end());
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].labels == labels) return v;
  fail(Errc::NotFound, "vertex with the requested labels is not enumerated");
}

}  // namespace

GreenSequence findGreenSequence(const RootSpace& space,
                                const FrameworkGraph& g) {
  require(g.base >= 0 && g.negBase >= 0, Errc::NotFound,
          "graph does not contain both identity vertices");
  SortableCtx ctxC(space);
  SortableCtx ctxA(space, reversed(space.order));

  for (size_t split = 1; split < space.n; ++split) {
    OverlapWitness w;
    try {
      w = overlapWitness(space, split);
    } catch (const Error& err) {
      if (err.code == Errc::InfiniteParabolic) continue;
      throw;
    }
    std::vector<GroupElement> chainC, chainA;
    std::vector<VecI> rootsC, rootsA;
    if (!ascendChain(ctxC, w.wJ, chainC, rootsC)) continue;
    if (!ascendChain(ctxA, w.wK, chainA, rootsA)) continue;
    try {
      GreenSequence seq;
      seq.vertices.push_back((size_t)g.base);
      for (size_t i = 0; i < chainC.size(); ++i) {
        seq.vertices.push_back(
            vertexByLabels(g, ctxC.labels(chainC[i], ctxC.cword())));
        seq.crossingLabels.push_back(rootsC[i]);
      }
      /* Down the antipodal side: the chain reversed, labels negated. */
      for (size_t i = chainA.size(); i-- > 0;) {
        seq.crossingLabels.push_back(rootsA[i]);
        std::vector<VecI> labs =
            i == 0 ? std::vector<VecI>()
                   : ctxA.labels(chainA[i - 1], ctxA.cword());
        if (i == 0) {
          seq.vertices.push_back((size_t)g.negBase);
          continue;
        }
        for (auto& b : labs) b = -b;
        seq.vertices.push_back(vertexByLabels(g, labs));
      }
      /* Sanity: each step crosses a full edge with a positive source label. */
      for (size_t i = 0; i + 1 < seq.vertices.size(); ++i) {
        size_t v = seq.vertices[i];
        require(allGeq0(seq.crossingLabels[i]), Errc::Internal,
                "green crossing label is not positive");
        size_t slot = g.slotOf(v, seq.crossingLabels[i]);
        require(g.vertices[v].neighbor[slot] == (int)seq.vertices[i + 1],
                Errc::Internal, "green chain does not follow graph edges");
      }
      return seq;
    } catch (const Error& err) {
      if (err.code == Errc::NotFound) continue; /* witness beyond truncation */
      throw;
    }
  }
  fail(Errc::NotFound, "no overlap witness fits inside the truncation");
}

StarSummary rankTwoSummary(const RootSpace& space, const FrameworkGraph& g,
                           const VecI* delta) {
  StarSummary sum;
  std::set<std::vector<VecI>> seenFaces;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& fv = g.vertices[v];
    for (size_t e = 0; e < g.n; ++e)
      for (size_t f = e + 1; f < g.n; ++f) {
        if (fv.neighbor[e] < 0 || fv.neighbor[f] < 0) continue;
        std::vector<VecI> key;
        for (size_t s = 0; s < g.n; ++s)
          if (s != e && s != f) key.push_back(fv.raysPrim[s]);
        std::sort(key.begin(), key.end());
        if (!seenFaces.insert(key).second) continue;
        StarResult res = rankTwoStar(space, g, v, e, f, delta);
        ++sum.stars;
        if (res.closed) {
          ++sum.cycles;
          if (res.spanType != MatKind::Finite)
            sum.failures.push_back("closed star with non-finite span at vertex " +
                                   std::to_string(v));
        } else if (res.truncated) {
          ++sum.truncated;
        } else {
          sum.failures.push_back("open star that did not truncate at vertex " +
                                 std::to_string(v));
        }
        if (delta && res.faceInDeltaPerp) {
          ++sum.deltaPerpStars;
          if (res.closed)
            sum.failures.push_back("boundary star closed at vertex " +
                                   std::to_string(v));
          if (res.spanType != MatKind::Affine)
            sum.failures.push_back("boundary star with non-affine span at vertex " +
                                   std::to_string(v));
        }
      }
  }
  return sum;
}

bool dualAdjacentOk(const RootSpace& space, const FrameworkGraph& g,
                    std::string* why) {
  (void)space;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& fv = g.vertices[v];
    for (size_t e = 0; e < g.n; ++e) {
      if (fv.neighbor[e] < 0 || (size_t)fv.neighbor[e] < v) continue;
      size_t w = (size_t)fv.neighbor[e];
      const auto& fw = g.vertices[w];
      std::set<VecI> wRays(fw.raysPrim.begin(), fw.raysPrim.end());
      std::vector<VecI> shared;
      for (const auto& r : fv.raysPrim)
        if (wRays.count(r)) shared.push_back(r);
      if (shared.size() != g.n - 1) {
        if (why)
          *why = "edge " + std::to_string(v) + "-" + std::to_string(w) +
                 " shares " + std::to_string(shared.size()) + " rays";
        return false;
      }
      MatI sq = shared;
      sq.resize(g.n, VecI(g.n, 0)); /* pad to square for the kernel solver */
      auto lambda = kernelPrimitive(sq);
      if (!lambda) {
        if (why) *why = "shared rays do not span a hyperplane";
        return false;
      }
      size_t ew = g.slotOf(w, -fv.labels[e]);
      Int sv = 0, sw = 0;
      for (size_t j = 0; j < g.n; ++j) {
        sv += (*lambda)[j] * fv.raysPrim[e][j];
        sw += (*lambda)[j] * fw.raysPrim[ew][j];
      }
      if (sv == 0 || sw == 0 || (sv > 0) == (sw > 0)) {
        if (why)
          *why = "edge " + std::to_string(v) + "-" + std::to_string(w) +
                 " rays not strictly separated";
        return false;
      }
    }
  }
  return true;
}

BoundaryFaceReport boundaryFaceConsistency(const RootSpace& space,
                                           const FrameworkGraph& g,
                                           const BoundarySupport& bs) {
  BoundaryFaceReport rep;
  const VecI& delta = bs.split.aff.delta;
  auto inUnion = [&](const VecR& x) {
    for (const auto& beta : bs.split.plus)
      if (pairWeightRoot(space, x, beta) >= 0) return true;
    return false;
  };
  for (const auto& fv : g.vertices) {
    /* Generators of Cone cap delta-perp: rays with zero pairing plus the
     * boundary points of edges crossing the hyperplane. */
    std::vector<VecR> gens;
    std::vector<Rat> t(g.n);
    size_t zeros = 0;
    for (size_t s = 0; s < g.n; ++s) {
      t[s] = pairWeightRoot(space, fv.rays[s], delta);
      if (t[s] == 0) {
        gens.push_back(fv.rays[s]);
        ++zeros;
      }
    }
    if (zeros >= g.n - 1) ++rep.fullFacetInPerp;
    for (size_t i = 0; i < g.n; ++i)
      for (size_t j = 0; j < g.n; ++j) {
        if (t[i] <= 0 || t[j] >= 0) continue;
        VecR x(g.n);
        for (size_t k = 0; k < g.n; ++k)
          x[k] = t[i] * fv.rays[j][k] - t[j] * fv.rays[i][k];
        gens.push_back(std::move(x));
      }
    if (gens.size() < 2) continue; /* section is at most a ray */
    ++rep.facesChecked;
    VecR mid(g.n, 0);
    for (const auto& x : gens)
      for (size_t k = 0; k < g.n; ++k) mid[k] += x[k];
    gens.push_back(std::move(mid));
    for (const auto& x : gens)
      if (!inUnion(x)) {
        ++rep.outsideUnion;
        break;
      }
  }
  return rep;
}

CompletenessScan completenessScan(const RootSpace& space, Int bound1,
                                  Int bound2) {
  require(bound1 < bound2, Errc::InvalidArgument, "bounds must increase");
  CompletenessScan scan;
  scan.bound1 = bound1;
  scan.bound2 = bound2;
  FrameworkGraph g1 = doubledGraph(space, bound1);
  FrameworkGraph g2 = doubledGraph(space, bound2);
  scan.interior1 = g1.interiorCount();
  scan.interior2 = g2.interiorCount();
  scan.interiorHalfEdges1 = g1.halfEdgeCount(true);
  scan.interiorHalfEdges2 = g2.halfEdgeCount(true);
  std::map<std::vector<VecI>, size_t> deficit2;
  for (const auto& v : g2.vertices) {
    size_t d = 0;
    for (int nb : v.neighbor)
      if (nb < 0) ++d;
    if (d) deficit2.emplace(v.labels, d);
  }
  for (const auto& v : g1.vertices) {
    size_t d = 0;
    for (int nb : v.neighbor)
      if (nb < 0) ++d;
    if (!d) continue;
    ++scan.deficit1;
    if (deficit2.count(v.labels)) ++scan.persistent;
  }
  return scan;
}

}  // namespace camb
