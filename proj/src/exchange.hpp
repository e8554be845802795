#pragma once
/* Principal-coefficient cluster mutation: exchange matrices, seeds,
 * g-vectors, seed equivalence and the truncated exchange graph.  This side
 * is computed independently of the Coxeter/fan machinery so it can serve as
 * the oracle in the dictionary cross-checks. */

#include <optional>

#include "laurent.hpp"

namespace camb {

struct ExchangeMatrix {
  size_t n = 0;
  MatI b;  /* entries b[i][j] */
  VecI d;  /* positive integer symmetrizer, gcd 1: d[i]*b[i][j] == -d[j]*b[j][i] */
};

/* Checks skew-symmetrizability and computes the symmetrizer. */
ExchangeMatrix validateExchange(const MatI& b);

/* Cartan companion: 2 on the diagonal, -|b_ij| off it. */
MatI cartanCompanion(const ExchangeMatrix& B);

/* Total order with b_ij > 0 whenever i precedes j; throws NotAcyclic. */
std::vector<size_t> acyclicOrder(const ExchangeMatrix& B);

/* Extended matrix: top = mutable n x n block B^v, bottom = coefficient
 * block H^v (rows indexed by the initial I, columns by I(v)). */
struct ExtendedExchangeMatrix {
  MatI top;
  MatI bottom;
  bool operator==(const ExtendedExchangeMatrix&) const = default;
};

ExtendedExchangeMatrix mutateMatrix(const ExtendedExchangeMatrix& m, size_t e);

struct Seed {
  ExtendedExchangeMatrix matrix;
  std::vector<ClusterVar> cluster;  /* one variable per column */
  std::vector<VecI> gvectors;       /* fundamental-weight coordinates */
  int depth = 0;

  /* c-vectors: simple-root coordinates, the columns of the bottom block. */
  std::vector<VecI> cVectors() const;
};

Seed initialSeed(const ExchangeMatrix& B);

/* Mutates matrix, cluster and g-vectors at column e.  initB is the initial
 * exchange matrix (its columns are the weight vectors entering the g-vector
 * recurrence). */
Seed mutateSeed(const ExchangeMatrix& initB, const Seed& s, size_t e);

/* g-vector recurrence alone (the seed path uses it too). */
std::vector<VecI> gVectorMutate(const std::vector<VecI>& g,
                                const ExtendedExchangeMatrix& m, size_t q,
                                const ExchangeMatrix& initB);

/* Column bijection lambda with equal cluster variables, H-columns and
 * relabeled top-block entries; nullopt when not equivalent. */
std::optional<std::vector<size_t>> seedsEquivalent(const Seed& a, const Seed& b);

/* Canonical encoding of the seed-equivalence class (columns sorted by the
 * canonical cluster-variable form). */
std::string seedClassKey(const Seed& s);

struct ExchangeGraphSlice {
  std::vector<Seed> nodes;                      /* class representatives */
  std::vector<bool> frontier;                   /* at maximal explored depth */
  std::vector<std::pair<size_t, size_t>> edges; /* node index pairs, i < j */
};

ExchangeGraphSlice exchangeGraph(const ExchangeMatrix& B, int depth,
                                 long long nodeCap);

}  // namespace camb
