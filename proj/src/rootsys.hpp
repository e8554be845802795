#pragma once
/* Root-system substrate: the bilinear forms K, omega_c, E_c attached to an
 * acyclic exchange matrix, real-root generation, affine classification with
 * delta/S0/theta, the Phi_0 sign split and the boundary point x_c. */

#include <optional>

#include "exchange.hpp"

namespace camb {

struct RootSpace {
  size_t n = 0;
  MatI a;                     /* Cartan companion */
  MatI b;                     /* exchange matrix, orientation of omega/E */
  VecI dInt;                  /* integer symmetrizer of a, gcd 1 */
  VecR dNorm;                 /* dInt scaled so max = 1; coroot alpha_i^v = dNorm_i^-1 alpha_i */
  std::vector<size_t> order;  /* acyclic order: the word of c */

  /* Forms with the first argument in simple-coroot coordinates and the
   * second in simple-root coordinates (integer-valued by construction). */
  Int pairK(const VecI& coroot, const VecI& root) const;
  Int pairOmega(const VecI& coroot, const VecI& root) const;
  Int pairEuler(const VecI& coroot, const VecI& root) const;

  /* Root-root versions (rational: the first argument is rescaled by dNorm). */
  Rat formK(const VecI& x, const VecI& y) const;
  Rat formOmega(const VecI& x, const VecI& y) const;

  /* Coordinates of 2*beta/K(beta,beta) in the simple-coroot basis
   * (integrality asserted). */
  VecI corootOf(const VecI& beta) const;
  /* Simple-root coordinates of a coroot-coordinate vector (rational). */
  VecR corootToRootCoords(const VecI& coroot) const;

  /* Simple reflection on root coordinates. */
  VecI reflectSimple(const VecI& x, size_t s) const;
  /* Reflection in an arbitrary real root. */
  VecI reflectRoot(const VecI& x, const VecI& beta) const;
};

RootSpace buildRootSpace(const ExchangeMatrix& B);

/* All real roots with 1-norm <= heightBound (closure of Pi, sign-coherence
 * asserted, closed under negation). */
std::vector<VecI> generateRoots(const RootSpace& space, Int heightBound);

struct AffineData {
  VecI delta;                /* primitive positive kernel vector */
  size_t sAff = 0;           /* distinguished affine node */
  std::vector<size_t> s0;    /* the remaining indices */
  VecI theta;                /* sum over S0 of delta_i alpha_i, a root of Phi_0 */
  std::vector<VecI> phi0;    /* finite root system Phi cap V_0, full coordinates */
};

enum class MatKind { Finite, Affine, Indefinite };

struct Classification {
  MatKind kind;
  std::optional<AffineData> affine;
  VecI d;  /* integer symmetrizer of the Cartan matrix */
};

/* Works on a symmetrizable generalized Cartan matrix. */
Classification classify(const MatI& cartan);

struct Phi0Split {
  std::vector<VecI> plus, zero, minus;  /* partition of Phi_0 by sgn omega_c(., delta) */
  VecI xcWeight;  /* <x_c, alpha_j^v> for j in S0, i.e. fundamental-weight
                     coordinates of x_c on V_0^* */
  AffineData aff;
};

Phi0Split phi0Split(const RootSpace& space, const AffineData& aff);
Phi0Split phi0Split(const RootSpace& space);  /* classifies internally */

struct RankTwoSubsystem {
  std::vector<VecI> roots;     /* Phi' members found within the ambient set */
  VecI canon1, canon2;         /* extreme positive roots of the 2D cone */
  MatKind type;                /* via the 2x2 Cartan-type product */
};

/* Phi cap span(beta, gamma) inside a pre-generated ambient root set. */
RankTwoSubsystem rankTwoSubsystem(const RootSpace& space, const VecI& beta,
                                  const VecI& gamma,
                                  const std::vector<VecI>& ambientRoots);

/* The full (finite) rank-two system generated by the canonical pair;
 * only valid when the type is finite. */
std::vector<VecI> closeRankTwoFinite(const RootSpace& space, const VecI& c1,
                                     const VecI& c2);

/* t_theta(x) + K(theta^v, x) * delta  (simplified affine-reflection identity;
 * must equal reflectSimple(x, sAff)). */
VecI simplifiedSaffAction(const RootSpace& space, const AffineData& aff,
                          const VecI& x);

}  // namespace camb
