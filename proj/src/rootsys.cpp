#include "rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace camb {

Int RootSpace::pairK(const VecI& coroot, const VecI& root) const {
  Int s = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += coroot[i] * a[i][j] * root[j];
  return s;
}

Int RootSpace::pairOmega(const VecI& coroot, const VecI& root) const {
  Int s = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += coroot[i] * b[i][j] * root[j];
  return s;
}

Int RootSpace::pairEuler(const VecI& coroot, const VecI& root) const {
  Int s = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int e = i == j ? 1 : std::min(b[i][j], Int(0));
      s += coroot[i] * e * root[j];
    }
  return s;
}

Rat RootSpace::formK(const VecI& x, const VecI& y) const {
  Rat s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (size_t j = 0; j < n; ++j) row += a[i][j] * y[j];
    s += Rat(x[i]) * dNorm[i] * row;
  }
  return s;
}

Rat RootSpace::formOmega(const VecI& x, const VecI& y) const {
  Rat s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (size_t j = 0; j < n; ++j) row += b[i][j] * y[j];
    s += Rat(x[i]) * dNorm[i] * row;
  }
  return s;
}

VecI RootSpace::corootOf(const VecI& beta) const {
  Rat norm = formK(beta, beta);
  require(norm > 0, Errc::Internal, "coroot of an isotropic vector");
  VecI out(n);
  for (size_t i = 0; i < n; ++i) {
    Rat c = Rat(2) * Rat(beta[i]) * dNorm[i] / norm;
    require(boost::multiprecision::denominator(c) == 1, Errc::Internal,
            "non-integral coroot");
    out[i] = static_cast<Int>(boost::multiprecision::numerator(c));
  }
  return out;
}

VecR RootSpace::corootToRootCoords(const VecI& coroot) const {
  VecR out(n);
  for (size_t i = 0; i < n; ++i) out[i] = Rat(coroot[i]) / dNorm[i];
  return out;
}

VecI RootSpace::reflectSimple(const VecI& x, size_t s) const {
  Int k = 0;
  for (size_t j = 0; j < n; ++j) k += a[s][j] * x[j];
  VecI r = x;
  r[s] -= k;
  return r;
}

VecI RootSpace::reflectRoot(const VecI& x, const VecI& beta) const {
  Int k = pairK(corootOf(beta), x);
  return x - k * beta;
}

RootSpace buildRootSpace(const ExchangeMatrix& B) {
  RootSpace sp;
  sp.n = B.n;
  sp.a = cartanCompanion(B);
  sp.b = B.b;
  sp.dInt = B.d;
  sp.order = acyclicOrder(B);  /* throws NotAcyclic for cyclic B */
  Int dmax = *std::max_element(sp.dInt.begin(), sp.dInt.end());
  sp.dNorm.resize(sp.n);
  for (size_t i = 0; i < sp.n; ++i) sp.dNorm[i] = Rat(sp.dInt[i]) / Rat(dmax);
  return sp;
}

std::vector<VecI> generateRoots(const RootSpace& space, Int heightBound) {
  std::set<VecI> seen;
  std::deque<VecI> queue;
  for (size_t i = 0; i < space.n; ++i) {
    VecI e = unitVec(space.n, i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    VecI r = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < space.n; ++s) {
      VecI img = space.reflectSimple(r, s);
      if (height1(img) > heightBound) continue;
      require(allGeq0(img) || allLeq0(img), Errc::Internal,
              "generated root not sign-coherent");
      if (allLeq0(img)) continue; /* negatives added below */
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<VecI> out;
  out.reserve(2 * seen.size());
  for (const auto& r : seen) out.push_back(r);
  for (const auto& r : seen) out.push_back(-r);
  return out;
}

namespace {

/* Symmetrizer of a generalized Cartan matrix, positive integers, gcd 1. */
VecI cartanSymmetrizer(const MatI& a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    require(a[i][i] == 2, Errc::NotSymmetrizable, "diagonal entry not 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      require(a[i][j] <= 0, Errc::NotSymmetrizable, "positive off-diagonal entry");
      require((a[i][j] == 0) == (a[j][i] == 0), Errc::NotSymmetrizable,
              "zero pattern not symmetric");
    }
  }
  VecR d(n, 0);
  for (size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rat dj = d[i] * (Rat(a[i][j]) / Rat(a[j][i]));
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          fail(Errc::NotSymmetrizable, "inconsistent cycle product");
        }
      }
    }
  }
  BigInt lcm = 1, gcd = 0;
  for (const auto& v : d)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
  VecI di(n);
  for (size_t i = 0; i < n; ++i) {
    BigInt x = boost::multiprecision::numerator(d[i]) *
               (lcm / boost::multiprecision::denominator(d[i]));
    di[i] = static_cast<Int>(x);
    gcd = boost::multiprecision::gcd(gcd, x);
  }
  if (gcd > 1)
    for (auto& x : di) x /= static_cast<Int>(gcd);
  return di;
}

MatR symmetrized(const MatI& a, const VecI& d) {
  size_t n = a.size();
  MatR m(n, VecR(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(d[i]) * a[i][j];
  return m;
}

MatR principalDelete(const MatR& m, size_t drop) {
  size_t n = m.size();
  MatR r;
  for (size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    VecR row;
    for (size_t j = 0; j < n; ++j)
      if (j != drop) row.push_back(m[i][j]);
    r.push_back(row);
  }
  return r;
}

/* Closure of {alpha_j : j in S0} under the reflections of S0, in full
 * ambient coordinates; finite by positive definiteness of the block. */
std::vector<VecI> parabolicRootClosure(const MatI& a,
                                       const std::vector<size_t>& s0) {
  std::set<VecI> pos;
  std::deque<VecI> queue;
  size_t n = a.size();
  for (size_t j : s0) {
    pos.insert(unitVec(n, j));
    queue.push_back(unitVec(n, j));
  }
  size_t guard = 0;
  while (!queue.empty()) {
    require(++guard < 200000, Errc::ResourceLimit, "parabolic closure too large");
    VecI r = queue.front();
    queue.pop_front();
    for (size_t s : s0) {
      Int k = 0;
      for (size_t j = 0; j < n; ++j) k += a[s][j] * r[j];
      VecI img = r;
      img[s] -= k;
      if (allLeq0(img)) continue;
      if (pos.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<VecI> out;
  for (const auto& r : pos) out.push_back(r);
  for (const auto& r : pos) out.push_back(-r);
  return out;
}

}  // namespace

Classification classify(const MatI& cartan) {
  size_t n = cartan.size();
  Classification c;
  c.d = cartanSymmetrizer(cartan);
  MatR m = symmetrized(cartan, c.d);
  if (positiveDefinite(m)) {
    c.kind = MatKind::Finite;
    return c;
  }
  /* Affine: positive semidefinite with 1-dim kernel and all proper principal
   * submatrices positive definite.  With the deletion submatrices positive
   * definite and det = 0 the form is automatically semidefinite of corank 1. */
  bool allProperPD = true;
  for (size_t i = 0; i < n && allProperPD; ++i)
    if (n > 1 && !positiveDefinite(principalDelete(m, i))) allProperPD = false;
  auto delta = kernelPrimitive(cartan);
  if (!allProperPD || !delta || n < 2) {
    c.kind = MatKind::Indefinite;
    return c;
  }
  VecI del = *delta;
  if (allLeq0(del)) del = -del;
  if (!allGeq0(del)) {
    c.kind = MatKind::Indefinite;
    return c;
  }
  for (Int x : del)
    require(x > 0, Errc::Internal, "affine kernel vector not strictly positive");
  /* Choose s_aff: smallest index whose removal leaves theta a root of Phi_0. */
  AffineData aff;
  aff.delta = del;
  bool found = false;
  for (size_t i = 0; i < n && !found; ++i) {
    std::vector<size_t> s0;
    for (size_t j = 0; j < n; ++j)
      if (j != i) s0.push_back(j);
    VecI theta = del;
    theta[i] = 0;
    auto phi0 = parabolicRootClosure(cartan, s0);
    if (std::find(phi0.begin(), phi0.end(), theta) != phi0.end()) {
      aff.sAff = i;
      aff.s0 = s0;
      aff.theta = theta;
      aff.phi0 = phi0;
      found = true;
    }
  }
  require(found, Errc::Internal, "no admissible affine node");
  c.kind = MatKind::Affine;
  c.affine = aff;
  return c;
}

Phi0Split phi0Split(const RootSpace& space, const AffineData& aff) {
  Phi0Split out;
  out.aff = aff;
  for (const auto& beta : aff.phi0) {
    Rat w = space.formOmega(beta, aff.delta);
    if (w > 0)
      out.plus.push_back(beta);
    else if (w < 0)
      out.minus.push_back(beta);
    else
      out.zero.push_back(beta);
  }
  for (size_t j : aff.s0) {
    VecI ej = unitVec(space.n, j);
    out.xcWeight.push_back(-space.pairOmega(ej, aff.delta));
  }
  return out;
}

Phi0Split phi0Split(const RootSpace& space) {
  Classification c = classify(space.a);
  require(c.kind == MatKind::Affine, Errc::NotAffine,
          "Phi_0 split requires an affine Cartan companion");
  return phi0Split(space, *c.affine);
}

RankTwoSubsystem rankTwoSubsystem(const RootSpace& space, const VecI& beta,
                                  const VecI& gamma,
                                  const std::vector<VecI>& ambientRoots) {
  size_t n = space.n;
  /* Pick two coordinates where [beta gamma] has a nonzero 2x2 minor. */
  size_t r1 = n, r2 = n;
  for (size_t i = 0; i < n && r1 == n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (beta[i] * gamma[j] - beta[j] * gamma[i] != 0) {
        r1 = i;
        r2 = j;
        break;
      }
    }
  require(r1 != n, Errc::DependentRoots, "roots are linearly dependent");
  Rat det = Rat(beta[r1]) * gamma[r2] - Rat(beta[r2]) * gamma[r1];
  struct Spanned {
    VecI root;
    Rat a, b; /* coordinates in the (beta, gamma) basis */
  };
  std::vector<Spanned> pos;
  RankTwoSubsystem out;
  for (const auto& rho : ambientRoots) {
    Rat sa = (Rat(rho[r1]) * gamma[r2] - Rat(rho[r2]) * gamma[r1]) / det;
    Rat sb = (Rat(beta[r1]) * rho[r2] - Rat(beta[r2]) * rho[r1]) / det;
    bool inSpan = true;
    for (size_t i = 0; i < n && inSpan; ++i)
      if (sa * beta[i] + sb * gamma[i] != rho[i]) inSpan = false;
    if (!inSpan) continue;
    out.roots.push_back(rho);
    if (allGeq0(rho) && !isZero(rho)) pos.push_back({rho, sa, sb});
  }
  require(pos.size() >= 2, Errc::DependentRoots,
          "rank-two span contains fewer than two positive roots");
  /* Extreme directions via cross-product comparison (positive roots of the
   * span lie in a salient cone, so this is a total order). */
  auto cmp = [](const Spanned& p, const Spanned& q) {
    return p.a * q.b - p.b * q.a > 0;
  };
  auto [mn, mx] = std::minmax_element(pos.begin(), pos.end(), cmp);
  out.canon1 = mn->root;
  out.canon2 = mx->root;
  Int p = space.pairK(space.corootOf(out.canon1), out.canon2);
  Int q = space.pairK(space.corootOf(out.canon2), out.canon1);
  Int prod = p * q;
  if (prod < 0) prod = -prod;
  out.type = prod < 4 ? MatKind::Finite
                      : prod == 4 ? MatKind::Affine : MatKind::Indefinite;
  return out;
}

std::vector<VecI> closeRankTwoFinite(const RootSpace& space, const VecI& c1,
                                     const VecI& c2) {
  std::set<VecI> all{c1, c2, -c1, -c2};
  std::deque<VecI> queue(all.begin(), all.end());
  size_t guard = 0;
  while (!queue.empty()) {
    require(++guard < 10000, Errc::ResourceLimit,
            "rank-two closure did not terminate (system not finite?)");
    VecI r = queue.front();
    queue.pop_front();
    for (const VecI& gen : {c1, c2}) {
      VecI img = space.reflectRoot(r, gen);
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  return {all.begin(), all.end()};
}

VecI simplifiedSaffAction(const RootSpace& space, const AffineData& aff,
                          const VecI& x) {
  VecI t = space.reflectRoot(x, aff.theta);
  Int k = space.pairK(space.corootOf(aff.theta), x);
  return t + k * aff.delta;
}

}  // namespace camb
