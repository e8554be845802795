#include "fan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace camb {

size_t FrameworkGraph::slotOf(size_t v, const VecI& label) const {
  const auto& labs = vertices[v].labels;
  for (size_t i = 0; i < labs.size(); ++i)
    if (labs[i] == label) return i;
  fail(Errc::Internal, "label not present at vertex");
}

size_t FrameworkGraph::interiorCount() const {
  size_t c = 0;
  for (const auto& v : vertices)
    if (v.interior) ++c;
  return c;
}

size_t FrameworkGraph::halfEdgeCount(bool interiorOnly) const {
  size_t c = 0;
  for (const auto& v : vertices) {
    if (interiorOnly && !v.interior) continue;
    for (int nb : v.neighbor)
      if (nb < 0) ++c;
  }
  return c;
}

void dualRays(const RootSpace& space, const std::vector<VecI>& labels,
              std::vector<VecR>& rays, std::vector<VecI>& raysPrim) {
  size_t n = space.n;
  MatR colabels(n, VecR(n));
  for (size_t j = 0; j < n; ++j) {
    VecI co = space.corootOf(labels[j]);
    for (size_t i = 0; i < n; ++i) colabels[i][j] = co[i];
  }
  auto inv = ratInverse(colabels);
  require(inv.has_value(), Errc::SingularLabels, "labels are linearly dependent");
  rays.assign(n, VecR());
  raysPrim.assign(n, VecI());
  for (size_t i = 0; i < n; ++i) {
    rays[i] = (*inv)[i]; /* row i pairs to delta_ij with co-label j */
    BigInt lcm = 1;
    for (const auto& x : rays[i])
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    VecI prim(n);
    for (size_t j = 0; j < n; ++j)
      prim[j] = static_cast<Int>(
          boost::multiprecision::numerator(rays[i][j]) *
          (lcm / boost::multiprecision::denominator(rays[i][j])));
    raysPrim[i] = primitive(prim);
  }
}

FrameworkGraph cambGraph(SortableCtx& ctx, Int maxLen, bool negate) {
  const RootSpace& space = ctx.space();
  FrameworkGraph g;
  g.n = space.n;
  g.maxLen = maxLen;
  std::vector<SortableVertex> sorts = ctx.enumerate(maxLen);
  std::map<MatI, size_t> index;
  for (size_t i = 0; i < sorts.size(); ++i) index.emplace(sorts[i].element.mat, i);

  auto eff = [&](const VecI& x) { return negate ? -x : x; };

  for (const auto& sv : sorts) {
    FrameworkVertex fv;
    for (const auto& lab : sv.labels) fv.labels.push_back(eff(lab));
    std::sort(fv.labels.begin(), fv.labels.end());
    dualRays(space, fv.labels, fv.rays, fv.raysPrim);
    fv.neighbor.assign(space.n, -1);
    fv.prov = negate ? Provenance::FromAntiCinv : Provenance::FromC;
    if (negate) {
      fv.lenAnti = (int)sv.len;
      fv.elemAnti = sv.element;
    } else {
      fv.lenC = (int)sv.len;
      fv.elemC = sv.element;
    }
    g.vertices.push_back(std::move(fv));
  }

  auto connect = [&](size_t upper, size_t lower, const VecI& beta) {
    size_t su = g.slotOf(upper, eff(-beta));
    size_t sl = g.slotOf(lower, eff(beta));
    require(g.vertices[upper].neighbor[su] == -1 ||
                g.vertices[upper].neighbor[su] == (int)lower,
            Errc::Internal, "conflicting edge at upper vertex");
    require(g.vertices[lower].neighbor[sl] == -1 ||
                g.vertices[lower].neighbor[sl] == (int)upper,
            Errc::Internal, "conflicting edge at lower vertex");
    g.vertices[upper].neighbor[su] = (int)lower;
    g.vertices[lower].neighbor[sl] = (int)upper;
  };

  for (size_t i = 0; i < sorts.size(); ++i) {
    for (const auto& beta : sorts[i].covers) {
      GroupElement tv =
          compose(reflectionElement(space, beta), sorts[i].element);
      const SortableVertex& down = ctx.piDown(tv, sorts);
      connect(i, index.at(down.element.mat), beta);
    }
  }

  for (auto& v : g.vertices) {
    v.interior = true;
    for (int nb : v.neighbor)
      if (nb < 0) v.interior = false;
  }

  VecI posBase, negBase;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    bool allSimple = true, allNegSimple = true;
    for (const auto& lab : g.vertices[v].labels) {
      if (height1(lab) != 1) allSimple = allNegSimple = false;
      else if (allGeq0(lab)) allNegSimple = false;
      else allSimple = false;
    }
    if (allSimple) g.base = (int)v;
    if (allNegSimple) g.negBase = (int)v;
  }
  return g;
}

FrameworkGraph doubledGraph(const RootSpace& space, Int maxLen) {
  SortableCtx ctxC(space);
  SortableCtx ctxA(space, reversed(space.order));
  FrameworkGraph gc = cambGraph(ctxC, maxLen, false);
  FrameworkGraph ga = cambGraph(ctxA, maxLen, true);

  FrameworkGraph g;
  g.n = space.n;
  g.maxLen = maxLen;
  g.vertices = gc.vertices;
  std::map<std::vector<VecI>, size_t> byLabels;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    byLabels.emplace(g.vertices[i].labels, i);

  std::vector<size_t> map2(ga.vertices.size());
  for (size_t i = 0; i < ga.vertices.size(); ++i) {
    auto it = byLabels.find(ga.vertices[i].labels);
    if (it == byLabels.end()) {
      map2[i] = g.vertices.size();
      byLabels.emplace(ga.vertices[i].labels, map2[i]);
      FrameworkVertex fv = ga.vertices[i];
      fv.neighbor.assign(g.n, -1); /* re-linked below */
      g.vertices.push_back(std::move(fv));
    } else {
      map2[i] = it->second;
      FrameworkVertex& mv = g.vertices[it->second];
      require(mv.rays == ga.vertices[i].rays, Errc::Internal,
              "identified vertices with different rays");
      mv.prov = Provenance::Both;
      mv.lenAnti = ga.vertices[i].lenAnti;
      mv.elemAnti = ga.vertices[i].elemAnti;
    }
  }
  for (size_t i = 0; i < ga.vertices.size(); ++i) {
    for (size_t s = 0; s < g.n; ++s) {
      int nb = ga.vertices[i].neighbor[s];
      if (nb < 0) continue;
      int& slot = g.vertices[map2[i]].neighbor[s];
      int target = (int)map2[(size_t)nb];
      require(slot == -1 || slot == target, Errc::Internal,
              "edge mismatch between the two provenances");
      slot = target; /* a full edge beats a half-edge */
    }
  }

  for (auto& v : g.vertices) {
    v.interior = true;
    for (int nb : v.neighbor)
      if (nb < 0) v.interior = false;
  }
  g.base = gc.base;
  g.negBase = -1;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    bool allNegSimple = true;
    for (const auto& lab : g.vertices[v].labels)
      if (height1(lab) != 1 || !allLeq0(lab)) allNegSimple = false;
    if (allNegSimple) g.negBase = (int)v;
  }
  return g;
}

Rat pairWeightRoot(const RootSpace& space, const VecR& x, const VecI& beta) {
  Rat s = 0;
  for (size_t i = 0; i < space.n; ++i) s += x[i] * space.dNorm[i] * beta[i];
  return s;
}

MeetResult meetsNicely(const std::vector<VecI>& rays1,
                       const std::vector<VecI>& rays2) {
  size_t n = rays1.empty() ? rays2[0].size() : rays1[0].size();
  std::set<VecI> set2(rays2.begin(), rays2.end());
  std::vector<VecI> common, only1, only2;
  for (const auto& r : rays1) (set2.count(r) ? common : only1).push_back(r);
  {
    std::set<VecI> set1(rays1.begin(), rays1.end());
    for (const auto& r : rays2)
      if (!set1.count(r)) only2.push_back(r);
  }

  /* Separating functional: >= 1 on rays only in the first cone, <= -1 on
   * rays only in the second, zero on common rays.  Feasibility is exactly
   * the separation lemma for cones meeting in a common face. */
  std::vector<LinearConstraint> cons;
  for (const auto& r : only1) cons.push_back({toRat(r), Rel::Ge, 1});
  for (const auto& r : only2) cons.push_back({toRat(r), Rel::Le, -1});
  for (const auto& r : common) cons.push_back({toRat(r), Rel::Eq, 0});
  if (auto lambda = lpFeasible(cons, n)) {
    MeetResult res;
    res.nice = true;
    res.face = common;
    std::sort(res.face.begin(), res.face.end());
    res.functional = *lambda;
    return res;
  }

  /* Witness: a point of the intersection outside the common-ray span.
   * Variables: cone-1 coefficients on its own rays, cone-2 likewise; the
   * normalization forces weight off the common rays (coordinates in a
   * simplicial cone are unique). */
  size_t n1 = only1.size(), n2 = only2.size(), nc = common.size();
  size_t nv = n1 + n2 + 2 * nc;
  std::vector<LinearConstraint> wc;
  for (size_t row = 0; row < n; ++row) {
    VecR a(nv, 0);
    for (size_t i = 0; i < n1; ++i) a[i] = only1[i][row];
    for (size_t j = 0; j < n2; ++j) a[n1 + j] = -only2[j][row];
    for (size_t k = 0; k < nc; ++k) {
      a[n1 + n2 + k] = common[k][row];
      a[n1 + n2 + nc + k] = -common[k][row];
    }
    wc.push_back({a, Rel::Eq, 0});
  }
  for (size_t i = 0; i < nv; ++i) {
    VecR a(nv, 0);
    a[i] = 1;
    wc.push_back({a, Rel::Ge, 0});
  }
  {
    VecR a(nv, 0);
    for (size_t i = 0; i < n1 + n2; ++i) a[i] = 1;
    wc.push_back({a, Rel::Eq, 1});
  }
  auto sol = lpFeasible(wc, nv);
  require(sol.has_value(), Errc::Internal,
          "neither the separation nor the violation system is feasible");
  MeetResult res;
  res.nice = false;
  res.witness.assign(n, 0);
  for (size_t row = 0; row < n; ++row) {
    for (size_t i = 0; i < n1; ++i) res.witness[row] += (*sol)[i] * only1[i][row];
    for (size_t k = 0; k < nc; ++k)
      res.witness[row] += (*sol)[n1 + n2 + k] * common[k][row];
  }
  return res;
}

FanReport fanCheck(const std::vector<std::vector<VecI>>& coneRays) {
  FanReport rep;
  rep.cones = coneRays.size();
  for (size_t i = 0; i < coneRays.size(); ++i)
    for (size_t j = i + 1; j < coneRays.size(); ++j) {
      ++rep.pairsChecked;
      if (!meetsNicely(coneRays[i], coneRays[j]).nice)
        rep.violations.push_back({i, j});
    }
  return rep;
}

VecI muImage(const RootSpace& space, const VecI& betaT, const VecI& gamma) {
  if (space.pairOmega(space.corootOf(betaT), gamma) >= 0)
    return space.reflectRoot(gamma, betaT);
  return gamma;
}

namespace {

struct StarState {
  size_t v, a, b;
  bool operator==(const StarState&) const = default;
};

/* Walk crossing the wall at slot b each step; the codim-2 face is the
 * intersection of the walls at slots a and b. */
bool starWalk(const RootSpace& space, const FrameworkGraph& g, StarState start,
              std::vector<size_t>& path, bool& truncated) {
  StarState st = start;
  size_t guard = 0;
  for (;;) {
    require(++guard < 100000, Errc::Internal, "rank-two walk did not close");
    int nb = g.vertices[st.v].neighbor[st.b];
    if (nb < 0) {
      truncated = true;
      return false;
    }
    VecI labB = g.vertices[st.v].labels[st.b];
    VecI wall = allGeq0(labB) ? labB : -labB;
    VecI image = muImage(space, wall, g.vertices[st.v].labels[st.a]);
    StarState nxt{(size_t)nb, g.slotOf((size_t)nb, -labB),
                  g.slotOf((size_t)nb, image)};
    if (nxt == start) return true;
    path.push_back(nxt.v);
    st = nxt;
  }
}

}  // namespace

MatKind spanKind(const RootSpace& space, const VecI& beta, const VecI& gamma) {
  /* K is positive on real roots, so the sign of the 2x2 Gram determinant
   * decides the signature of K restricted to the span. */
  Rat det = space.formK(beta, beta) * space.formK(gamma, gamma) -
            space.formK(beta, gamma) * space.formK(gamma, beta);
  if (det > 0) return MatKind::Finite;
  if (det == 0) return MatKind::Affine;
  return MatKind::Indefinite;
}

StarResult rankTwoStar(const RootSpace& space, const FrameworkGraph& g,
                       size_t v, size_t e, size_t f, const VecI* delta) {
  StarResult res;
  const FrameworkVertex& fv = g.vertices[v];
  res.spanType = spanKind(space, fv.labels[e], fv.labels[f]);
  if (delta) {
    res.faceInDeltaPerp = true;
    for (size_t s = 0; s < g.n; ++s) {
      if (s == e || s == f) continue;
      if (pairWeightRoot(space, fv.rays[s], *delta) != 0)
        res.faceInDeltaPerp = false;
    }
  }
  std::vector<size_t> forward;
  bool truncF = false;
  bool closed = starWalk(space, g, {v, e, f}, forward, truncF);
  res.path.push_back(v);
  res.path.insert(res.path.end(), forward.begin(), forward.end());
  if (closed) {
    res.closed = true;
    return res;
  }
  if (truncF) {
    /* Walk the other way around to find the full path. */
    std::vector<size_t> backward;
    bool truncB = false;
    starWalk(space, g, {v, f, e}, backward, truncB);
    res.truncated = true;
    std::reverse(backward.begin(), backward.end());
    backward.insert(backward.end(), res.path.begin(), res.path.end());
    res.path = std::move(backward);
  }
  return res;
}

OverlapWitness overlapWitness(const RootSpace& space, size_t splitIndex) {
  require(splitIndex >= 1 && splitIndex < space.n, Errc::InvalidArgument,
          "split index out of range");
  OverlapWitness w;
  w.K.assign(space.order.begin(), space.order.begin() + splitIndex);
  w.J.assign(space.order.begin() + splitIndex, space.order.end());
  w.wJ = longestElement(space, w.J); /* throws InfiniteParabolic */
  w.wK = longestElement(space, w.K);

  SortableCtx ctxC(space);
  SortableCtx ctxA(space, reversed(space.order));
  require(ctxC.isSortable(w.wJ), Errc::Internal, "overlap witness not sortable");
  require(ctxA.isSortable(w.wK), Errc::Internal,
          "reverse overlap witness not sortable");
  std::vector<VecI> labC = ctxC.labels(w.wJ, ctxC.cword());
  std::vector<VecI> labA = ctxA.labels(w.wK, ctxA.cword());
  for (auto& b : labA) b = -b;
  std::sort(labC.begin(), labC.end());
  std::sort(labA.begin(), labA.end());
  require(labC == labA, Errc::Internal,
          "overlap witness labels do not match antipodally");
  w.labels = labC;
  return w;
}

namespace {

std::vector<GroupElement> enumerateFiniteGroup(const RootSpace& space,
                                               const std::vector<size_t>& gens) {
  std::set<MatI> seen{identityMat(space.n)};
  std::vector<GroupElement> out{GroupElement::id(space.n)};
  std::deque<GroupElement> queue{out[0]};
  while (!queue.empty()) {
    GroupElement w = queue.front();
    queue.pop_front();
    require(seen.size() < 100000, Errc::ResourceLimit, "group is too large");
    for (size_t s : gens) {
      GroupElement w2 = applyGen(space, w, s, Side::Right);
      if (seen.insert(w2.mat).second) {
        out.push_back(w2);
        queue.push_back(w2);
      }
    }
  }
  return out;
}

}  // namespace

BoundarySupport boundarySupport(const RootSpace& space) {
  Classification cls = classify(space.a);
  require(cls.kind == MatKind::Affine, Errc::NotAffine,
          "boundary support needs an affine input");
  BoundarySupport bs;
  bs.split = phi0Split(space, *cls.affine);
  const AffineData& aff = bs.split.aff;
  size_t m = aff.s0.size();

  /* <x, beta> for x in pairing coordinates over S0 and beta in Phi_0. */
  auto pairPoint = [&](const VecR& p, const VecI& beta) {
    Rat s = 0;
    for (size_t j = 0; j < m; ++j) s += p[j] * beta[aff.s0[j]];
    return s;
  };
  /* Pairing coordinates of x_c itself: <x_c, alpha_j> = d_j <x_c, alpha_j^v>. */
  VecR xc(m);
  for (size_t j = 0; j < m; ++j)
    xc[j] = space.dNorm[aff.s0[j]] * bs.split.xcWeight[j];

  bs.xcAnnihilatesZeroPart = true;
  for (const auto& beta : bs.split.zero)
    if (pairPoint(xc, beta) != 0) bs.xcAnnihilatesZeroPart = false;
  bool xcNonzero = false;
  for (const auto& v : xc)
    if (v != 0) xcNonzero = true;
  bs.xcAnnihilatesZeroPart = bs.xcAnnihilatesZeroPart && xcNonzero;

  bs.secondDescriptionOk = true;
  for (const GroupElement& u0 : enumerateFiniteGroup(space, aff.s0)) {
    /* Chamber u0*D0: ray i is u0 applied to the i-th fundamental weight of
     * Phi_0; its j-th pairing coordinate is d_i (u0^-1 alpha_j)_i. */
    MatR rays(m, VecR(m));
    for (size_t j = 0; j < m; ++j) {
      VecI pre = u0.applyInv(unitVec(space.n, aff.s0[j]));
      for (size_t i = 0; i < m; ++i)
        rays[i][j] = space.dNorm[aff.s0[i]] * pre[aff.s0[i]];
    }
    VecR interiorPt(m, 0);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) interiorPt[j] += rays[i][j];
    bool cov = false;
    for (const auto& beta : bs.split.plus)
      if (pairPoint(interiorPt, beta) >= 0) cov = true;
    bool hasXc = true;
    for (size_t j = 0; j < m; ++j) {
      /* <x_c, u0 alpha_j> >= 0 for every wall of the chamber. */
      VecI img = u0(unitVec(space.n, aff.s0[j]));
      if (pairPoint(xc, img) < 0) hasXc = false;
    }
    bs.chamberRays.push_back(std::move(rays));
    bs.covered.push_back(cov);
    bs.containsXc.push_back(hasXc);
    if (cov == hasXc) bs.secondDescriptionOk = false;
  }

  /* A strictly interior point of the complement. */
  std::vector<LinearConstraint> cons;
  for (const auto& beta : bs.split.plus) {
    VecR a(m);
    for (size_t j = 0; j < m; ++j) a[j] = beta[aff.s0[j]];
    cons.push_back({a, Rel::Le, -1});
  }
  auto pt = lpFeasible(cons, m);
  require(pt.has_value(), Errc::Internal, "complement of the support is empty");
  bs.complementPoint = *pt;
  return bs;
}

namespace {

const char* provStr(Provenance p) {
  switch (p) {
    case Provenance::FromC: return "c";
    case Provenance::FromAntiCinv: return "anti";
    default: return "both";
  }
}

std::string numStr(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string projectChart(const RootSpace& space, const FrameworkGraph& g,
                         const std::string& chart) {
  require(chart == "V1" || chart == "V-1" || chart == "V0" ||
              chart == "sphere",
          Errc::InvalidArgument, "unknown chart: " + chart);
  std::ostringstream out;
  out << "chart,kind,cone,slot,prov,x,y,z\n";
  auto emit = [&](const std::string& kind, size_t cone, size_t slot,
                  const std::string& prov, const std::vector<std::string>& cs) {
    out << chart << ',' << kind << ',' << cone << ',' << slot << ',' << prov;
    for (size_t i = 0; i < 3; ++i) out << ',' << (i < cs.size() ? cs[i] : "");
    out << '\n';
  };

  if (chart == "sphere") {
    require(space.n == 3, Errc::InvalidArgument, "sphere chart needs rank 3");
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& fv = g.vertices[v];
      for (size_t s = 0; s < g.n; ++s) {
        require(!(fv.raysPrim[s][0] == 0 && fv.raysPrim[s][1] == 0),
                Errc::ChartPole, "ray at the projection pole");
        double x = 0, y = 0, z = 0, norm = 0;
        x = (double)fv.raysPrim[s][0];
        y = (double)fv.raysPrim[s][1];
        z = (double)fv.raysPrim[s][2];
        norm = std::sqrt(x * x + y * y + z * z);
        x /= norm, y /= norm, z /= norm;
        emit("ray", v, s, provStr(fv.prov),
             {numStr(x / (1 - z)), numStr(y / (1 - z))});
      }
    }
    return out.str();
  }

  Classification cls = classify(space.a);
  require(cls.kind == MatKind::Affine, Errc::NotAffine,
          "slice charts need an affine input");
  const AffineData& aff = *cls.affine;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& fv = g.vertices[v];
    for (size_t s = 0; s < g.n; ++s) {
      Rat t = pairWeightRoot(space, fv.rays[s], aff.delta);
      std::vector<std::string> cs;
      if (chart == "V1" && t > 0) {
        for (size_t j = 0; j < g.n; ++j) cs.push_back(ratStr(fv.rays[s][j] / t));
      } else if (chart == "V-1" && t < 0) {
        for (size_t j = 0; j < g.n; ++j) cs.push_back(ratStr(-fv.rays[s][j] / t));
      } else if (chart == "V0" && t == 0) {
        for (size_t j : aff.s0)
          cs.push_back(ratStr(fv.rays[s][j] * space.dNorm[j]));
      } else {
        continue;
      }
      emit("ray", v, s, provStr(fv.prov), cs);
    }
  }
  if (chart == "V0") {
    BoundarySupport bs = boundarySupport(space);
    for (size_t c = 0; c < bs.chamberRays.size(); ++c)
      for (size_t i = 0; i < bs.chamberRays[c].size(); ++i) {
        std::vector<std::string> cs;
        for (const auto& x : bs.chamberRays[c][i]) cs.push_back(ratStr(x));
        emit("chamber", c, i, bs.covered[c] ? "covered" : "complement", cs);
      }
  }
  return out.str();
}

}  // namespace camb
