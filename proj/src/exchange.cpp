#include "exchange.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace camb {

namespace {
Int posPart(Int x) { return x > 0 ? x : 0; }
Int sgn(Int x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }
}  // namespace

ExchangeMatrix validateExchange(const MatI& b) {
  size_t n = b.size();
  require(n > 0, Errc::InvalidArgument, "empty matrix");
  for (const auto& row : b)
    require(row.size() == n, Errc::InvalidArgument, "matrix not square");
  for (size_t i = 0; i < n; ++i) {
    require(b[i][i] == 0, Errc::NotSkewSymmetrizable, "nonzero diagonal entry");
    for (size_t j = 0; j < n; ++j) {
      if (b[i][j] * b[j][i] > 0)
        fail(Errc::NotSkewSymmetrizable, "entries b_ij, b_ji of equal sign");
      if ((b[i][j] == 0) != (b[j][i] == 0))
        fail(Errc::NotSkewSymmetrizable, "zero pattern not symmetric");
    }
  }
  /* Propagate d over the nonzero pattern: d_i |b_ij| = d_j |b_ji|. */
  VecR d(n, 0);
  for (size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < n; ++j) {
        if (b[i][j] == 0 || i == j) continue;
        Rat dj = d[i] * Rat(b[i][j] < 0 ? -b[i][j] : b[i][j],
                            b[j][i] < 0 ? -b[j][i] : b[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          fail(Errc::NotSkewSymmetrizable, "inconsistent cycle product");
        }
      }
    }
  }
  /* Clear denominators and the common gcd. */
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
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      require(di[i] * b[i][j] == -di[j] * b[j][i], Errc::NotSkewSymmetrizable,
              "no positive symmetrizer");
  return ExchangeMatrix{n, b, di};
}

MatI cartanCompanion(const ExchangeMatrix& B) {
  size_t n = B.n;
  MatI a(n, VecI(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? 2 : -(B.b[i][j] < 0 ? -B.b[i][j] : B.b[i][j]);
  return a;
}

std::vector<size_t> acyclicOrder(const ExchangeMatrix& B) {
  size_t n = B.n;
  /* Edge i -> j when b_ij > 0; Kahn's algorithm, smallest index first. */
  std::vector<size_t> indeg(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (B.b[i][j] > 0) ++indeg[j];
  std::vector<size_t> order;
  std::vector<bool> used(n, false);
  for (size_t step = 0; step < n; ++step) {
    size_t pick = n;
    for (size_t i = 0; i < n; ++i)
      if (!used[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick == n) fail(Errc::NotAcyclic, "exchange matrix digraph has a cycle");
    used[pick] = true;
    order.push_back(pick);
    for (size_t j = 0; j < n; ++j)
      if (B.b[pick][j] > 0) --indeg[j];
  }
  return order;
}

ExtendedExchangeMatrix mutateMatrix(const ExtendedExchangeMatrix& m, size_t e) {
  size_t n = m.top.size();
  ExtendedExchangeMatrix r = m;
  auto mutateBlock = [&](const MatI& src, MatI& dst, bool topBlock) {
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        if ((topBlock && p == e) || q == e)
          dst[p][q] = -src[p][q];
        else
          dst[p][q] = src[p][q] + sgn(src[p][e]) * posPart(src[p][e] * m.top[e][q]);
      }
  };
  mutateBlock(m.top, r.top, true);
  mutateBlock(m.bottom, r.bottom, false);
  return r;
}

std::vector<VecI> Seed::cVectors() const {
  size_t n = matrix.bottom.size();
  std::vector<VecI> c(n);
  for (size_t j = 0; j < n; ++j) c[j] = column(matrix.bottom, j);
  return c;
}

Seed initialSeed(const ExchangeMatrix& B) {
  size_t n = B.n;
  Seed s;
  s.matrix = {B.b, identityMat(n)};
  for (size_t i = 0; i < n; ++i) {
    s.cluster.push_back(ClusterVar::variableX(n, i));
    s.gvectors.push_back(unitVec(n, i));
  }
  return s;
}

std::vector<VecI> gVectorMutate(const std::vector<VecI>& g,
                                const ExtendedExchangeMatrix& m, size_t q,
                                const ExchangeMatrix& initB) {
  size_t n = initB.n;
  std::vector<VecI> out = g;
  VecI gq = -g[q];
  for (size_t p = 0; p < n; ++p) {
    Int c = posPart(-m.top[p][q]);
    if (c != 0) gq = gq + c * g[p];
  }
  for (size_t i = 0; i < n; ++i) {
    Int c = posPart(-m.bottom[i][q]);
    if (c != 0) gq = gq - c * column(initB.b, i); /* column i as weight vector */
  }
  out[q] = gq;
  return out;
}

Seed mutateSeed(const ExchangeMatrix& initB, const Seed& s, size_t e) {
  size_t n = initB.n;
  Seed r;
  r.matrix = mutateMatrix(s.matrix, e);
  r.gvectors = gVectorMutate(s.gvectors, s.matrix, e, initB);
  r.depth = s.depth + 1;
  r.cluster = s.cluster;
  ClusterVar mPlus = ClusterVar::one(n), mMinus = ClusterVar::one(n);
  for (size_t p = 0; p < n; ++p) {
    Int bpe = s.matrix.top[p][e];
    if (bpe > 0) mPlus = mPlus * s.cluster[p].pow(static_cast<int>(bpe));
    if (bpe < 0) mMinus = mMinus * s.cluster[p].pow(static_cast<int>(-bpe));
  }
  for (size_t i = 0; i < n; ++i) {
    Int hie = s.matrix.bottom[i][e];
    if (hie > 0) mPlus = mPlus * ClusterVar::variableY(n, i).pow(static_cast<int>(hie));
    if (hie < 0) mMinus = mMinus * ClusterVar::variableY(n, i).pow(static_cast<int>(-hie));
  }
  r.cluster[e] = (mPlus + mMinus).divBy(s.cluster[e]);
  return r;
}

namespace {

std::string columnKey(const Seed& s, size_t j) {
  std::ostringstream os;
  os << s.cluster[j].str() << "|H";
  for (size_t i = 0; i < s.matrix.bottom.size(); ++i)
    os << "," << s.matrix.bottom[i][j];
  return os.str();
}

std::vector<size_t> sortedColumnOrder(const Seed& s) {
  size_t n = s.cluster.size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::string> keys(n);
  for (size_t i = 0; i < n; ++i) keys[i] = columnKey(s, i);
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  return perm;
}

}  // namespace

std::optional<std::vector<size_t>> seedsEquivalent(const Seed& a, const Seed& b) {
  size_t n = a.cluster.size();
  if (b.cluster.size() != n) return std::nullopt;
  auto pa = sortedColumnOrder(a), pb = sortedColumnOrder(b);
  std::vector<size_t> lambda(n);  /* column i of a -> lambda[i] of b */
  for (size_t k = 0; k < n; ++k) lambda[pa[k]] = pb[k];
  for (size_t i = 0; i < n; ++i) {
    if (!(a.cluster[i] == b.cluster[lambda[i]])) return std::nullopt;
    if (column(a.matrix.bottom, i) != column(b.matrix.bottom, lambda[i]))
      return std::nullopt;
    for (size_t j = 0; j < n; ++j)
      if (a.matrix.top[i][j] != b.matrix.top[lambda[i]][lambda[j]])
        return std::nullopt;
  }
  return lambda;
}

std::string seedClassKey(const Seed& s) {
  auto perm = sortedColumnOrder(s);
  size_t n = s.cluster.size();
  std::ostringstream os;
  for (size_t k = 0; k < n; ++k) os << columnKey(s, perm[k]) << ";";
  os << "B";
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) os << "," << s.matrix.top[perm[i]][perm[j]];
  return os.str();
}

ExchangeGraphSlice exchangeGraph(const ExchangeMatrix& B, int depth,
                                 long long nodeCap) {
  ExchangeGraphSlice g;
  std::map<std::string, size_t> classOf;
  std::set<std::pair<size_t, size_t>> edges;
  Seed init = initialSeed(B);
  classOf[seedClassKey(init)] = 0;
  g.nodes.push_back(init);
  std::vector<size_t> layer{0};
  for (int d = 0; d < depth && !layer.empty(); ++d) {
    std::vector<size_t> next;
    for (size_t id : layer) {
      for (size_t e = 0; e < B.n; ++e) {
        Seed s2 = mutateSeed(B, g.nodes[id], e);
        std::string key = seedClassKey(s2);
        auto [it, inserted] = classOf.emplace(key, g.nodes.size());
        if (inserted) {
          require(static_cast<long long>(g.nodes.size()) < nodeCap,
                  Errc::ResourceLimit, "exchange graph node cap exceeded");
          g.nodes.push_back(s2);
          next.push_back(it->second);
        }
        size_t a = std::min(id, it->second), b2 = std::max(id, it->second);
        if (a != b2) edges.insert({a, b2});
      }
    }
    layer = next;
  }
  g.edges.assign(edges.begin(), edges.end());
  g.frontier.assign(g.nodes.size(), false);
  for (size_t id : layer) g.frontier[id] = true;
  return g;
}

}  // namespace camb
