#include "laurent.hpp"

#include <sstream>

namespace camb {

Poly Poly::constant(size_t nvars, BigInt c) {
  Poly p{nvars, {}};
  if (c != 0) p.terms.emplace(Expo(nvars, 0), std::move(c));
  return p;
}

Poly Poly::monomial(size_t nvars, const Expo& e, BigInt c) {
  Poly p{nvars, {}};
  if (c != 0) p.terms.emplace(e, std::move(c));
  return p;
}

void Poly::addTerm(const Expo& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms) r.addTerm(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms) r.addTerm(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r{nvars, {}};
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      Expo e(nvars);
      for (size_t i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
      r.addTerm(e, c1 * c2);
    }
  return r;
}

bool Poly::operator<(const Poly& o) const {
  return std::lexicographical_compare(
      terms.begin(), terms.end(), o.terms.begin(), o.terms.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

Poly Poly::divExact(const Poly& d) const {
  require(!d.isZero(), Errc::Internal, "division by zero polynomial");
  Poly r = *this;
  Poly q{nvars, {}};
  const auto& [de, dc] = *d.terms.rbegin(); /* leading term in lex order */
  while (!r.isZero()) {
    const auto& [re, rc] = *r.terms.rbegin();
    Expo qe(nvars);
    for (size_t i = 0; i < nvars; ++i) {
      qe[i] = re[i] - de[i];
      require(qe[i] >= 0, Errc::NonLaurentResult, "polynomial division not exact");
    }
    require(rc % dc == 0, Errc::NonLaurentResult, "polynomial division not exact");
    BigInt qc = rc / dc;
    q.addTerm(qe, qc);
    r = r - d * Poly::monomial(nvars, qe, qc);
  }
  return q;
}

int Poly::minExp(size_t v) const {
  if (terms.empty()) return 0;
  int m = terms.begin()->first[v];
  for (const auto& [e, c] : terms) m = std::min(m, e[v]);
  return m;
}

Poly Poly::shifted(const Expo& e) const {
  Poly r{nvars, {}};
  for (const auto& [te, c] : terms) {
    Expo ne(nvars);
    for (size_t i = 0; i < nvars; ++i) {
      ne[i] = te[i] + e[i];
      require(ne[i] >= 0, Errc::NonLaurentResult, "negative exponent after shift");
    }
    r.terms.emplace(ne, c);
  }
  return r;
}

std::string Poly::str(size_t n) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  /* Highest term first, for readability. */
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = boost::multiprecision::abs(c);
    bool hasVar = false;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) hasVar = true;
    if (a != 1 || !hasVar) os << a;
    bool star = (a != 1);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      star = true;
      os << (i < n ? "x" : "y") << (i < n ? i + 1 : i + 1 - n);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

ClusterVar ClusterVar::variableX(size_t n, size_t i) {
  Expo e(2 * n, 0);
  e[i] = 1;
  return ClusterVar{Poly::monomial(2 * n, e), std::vector<int>(n, 0)};
}

ClusterVar ClusterVar::variableY(size_t n, size_t i) {
  Expo e(2 * n, 0);
  e[n + i] = 1;
  return ClusterVar{Poly::monomial(2 * n, e), std::vector<int>(n, 0)};
}

ClusterVar ClusterVar::one(size_t n) {
  return ClusterVar{Poly::constant(2 * n, 1), std::vector<int>(n, 0)};
}

void ClusterVar::canonicalize() {
  size_t n = den.size();
  Expo shift(num.nvars, 0);
  bool any = false;
  for (size_t i = 0; i < n; ++i) {
    int common = std::min(num.minExp(i), den[i]);
    if (common != 0) {
      shift[i] = -common;
      den[i] -= common;
      any = true;
    }
  }
  if (any) num = num.shifted(shift);
}

ClusterVar ClusterVar::operator*(const ClusterVar& o) const {
  ClusterVar r{num * o.num, den};
  for (size_t i = 0; i < den.size(); ++i) r.den[i] += o.den[i];
  r.canonicalize();
  return r;
}

ClusterVar ClusterVar::operator+(const ClusterVar& o) const {
  size_t n = den.size();
  std::vector<int> lcm(n);
  Expo s1(num.nvars, 0), s2(num.nvars, 0);
  for (size_t i = 0; i < n; ++i) {
    lcm[i] = std::max(den[i], o.den[i]);
    s1[i] = lcm[i] - den[i];
    s2[i] = lcm[i] - o.den[i];
  }
  ClusterVar r{num.shifted(s1) + o.num.shifted(s2), lcm};
  r.canonicalize();
  return r;
}

ClusterVar ClusterVar::pow(int k) const {
  require(k >= 0, Errc::Internal, "negative power of cluster variable");
  ClusterVar r = ClusterVar::one(den.size());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

ClusterVar ClusterVar::divBy(const ClusterVar& o) const {
  size_t n = den.size();
  size_t nv = num.nvars;
  /* The quotient num / o.num is a Laurent polynomial; pre-shift num so the
   * quotient becomes an honest polynomial (minExp of a product adds), and
   * book the shift into the denominator vector afterwards. */
  Expo k(nv, 0);
  for (size_t i = 0; i < nv; ++i)
    k[i] = std::max(0, o.num.minExp(i) - num.minExp(i));
  for (size_t i = n; i < nv; ++i)
    require(k[i] == 0, Errc::NonLaurentResult,
            "quotient has a negative coefficient-variable exponent");
  Poly q = num.shifted(k).divExact(o.num);
  /* this / o = q / x^(k + den - o.den). */
  ClusterVar r{std::move(q), den};
  for (size_t i = 0; i < n; ++i) r.den[i] += k[i] - o.den[i];
  r.canonicalize();
  return r;
}

bool ClusterVar::operator<(const ClusterVar& o) const {
  if (den != o.den) return den < o.den;
  return num < o.num;
}

std::string ClusterVar::str() const {
  size_t n = den.size();
  std::string s = num.str(n);
  bool anyDen = false;
  for (int d : den)
    if (d != 0) anyDen = true;
  if (!anyDen) return s;
  std::ostringstream os;
  os << "(" << s << ")/(";
  bool star = false;
  for (size_t i = 0; i < n; ++i) {
    if (den[i] == 0) continue;
    if (star) os << "*";
    star = true;
    os << "x" << i + 1;
    if (den[i] != 1) os << "^" << den[i];
  }
  os << ")";
  return os.str();
}

}  // namespace camb
