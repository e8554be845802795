#pragma once
/* Exact multivariate polynomial arithmetic in x_1..x_n, y_1..y_n and the
 * cluster-variable type: a polynomial numerator over a monomial denominator
 * in the x's only (the Laurent phenomenon, asserted at every division). */

#include <map>
#include <string>

#include "basics.hpp"

namespace camb {

/* Exponent vector of length 2n: x-exponents first, then y-exponents. */
using Expo = std::vector<int>;

struct Poly {
  size_t nvars = 0;
  std::map<Expo, BigInt> terms;  /* canonical: no zero coefficients */

  static Poly zero(size_t nvars) { return Poly{nvars, {}}; }
  static Poly constant(size_t nvars, BigInt c);
  static Poly monomial(size_t nvars, const Expo& e, BigInt c = 1);

  bool isZero() const { return terms.empty(); }
  void addTerm(const Expo& e, const BigInt& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator<(const Poly& o) const;

  /* Exact division; throws NonLaurentResult if the remainder is nonzero. */
  Poly divExact(const Poly& d) const;

  /* Smallest exponent of variable v over all terms (0 for the zero poly). */
  int minExp(size_t v) const;
  /* Multiply by the monomial with exponent vector e (entries may be < 0 if
   * every term stays polynomial; asserted). */
  Poly shifted(const Expo& e) const;

  std::string str(size_t n) const; /* n = rank, for x/y variable names */
};

/* A cluster variable: num / prod_i x_i^{den[i]}, den >= 0, gcd-reduced. */
struct ClusterVar {
  Poly num;
  std::vector<int> den;  /* length n */

  static ClusterVar variableX(size_t n, size_t i);
  static ClusterVar variableY(size_t n, size_t i);
  static ClusterVar one(size_t n);

  void canonicalize();
  ClusterVar operator*(const ClusterVar& o) const;
  ClusterVar operator+(const ClusterVar& o) const;
  ClusterVar pow(int k) const; /* k >= 0 */
  /* Division by another cluster variable; exact (Laurent phenomenon). */
  ClusterVar divBy(const ClusterVar& o) const;
  bool operator==(const ClusterVar& o) const { return num == o.num && den == o.den; }
  bool operator<(const ClusterVar& o) const;

  std::string str() const;
};

}  // namespace camb
