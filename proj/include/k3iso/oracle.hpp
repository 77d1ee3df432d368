#pragma once

#include "k3iso/lattice.hpp"
#include "k3iso/numeric.hpp"
#include "k3iso/picard2.hpp"

#include <utility>
#include <vector>

namespace k3iso {

// A certified YES-witness. (p, q) solves p^2 - d q^2 = 4 a alpha with
// p = mu q (mod 2a) and q > 0; (x, y) is the associated degree-2 class with
// x > 0, which satisfies x^2 - d y^2 = 4 a^2, x = mu y (mod 2 a^2) and
// x = +-2a (mod d); h1 = (a p, a q) has square 2 alpha a and pairs with H
// divisibly by a. All of this is revalidated at construction.
struct OracleWitness {
  int alpha;
  Int p, q;
  Int x, y;
  Int h1x, h1y;
};

struct Decision {
  bool verdict;
  std::vector<OracleWitness> witnesses;
  bool route_agreement;  // the two independent solvers returned equal verdicts
  bool lattice_only;     // a degree-2 vector exists (no mod-d condition)
  bool gamma_assumption; // a odd: necessity of the criterion assumes divisibility 1
};

// Decides whether the moduli space attached to (a, d, +-mu) is isomorphic to
// the surface itself. Primary route: a solution of p^2 - d q^2 = 4a / alpha,
// p = mu q (mod 2a), for some alpha in {+1, -1}. Cross-checked against the
// independent route through x^2 - d y^2 = 4 a^2 with x = mu y (mod 2 a^2) and
// x = +-2a (mod d). Witnesses cover every solution class; q_bound > 0 appends
// all further solutions with |q| <= q_bound. Requires a >= 2.
Decision decide(const PolarizedRank2& p, const Int& q_bound = 0);

// The weaker criterion: a degree-2 vector exists in the Picard model, i.e.
// x^2 - d y^2 = 4 a^2 with x = mu y (mod 2 a^2) is solvable.
bool decide_lattice_only(const PolarizedRank2& p);

// (x, y) = +-(2a + alpha d q^2, alpha p q), normalized to x > 0. Requires
// p^2 - d q^2 = 4 a alpha.
std::pair<Int, Int> associated(int alpha, const Int& p, const Int& q,
                               const PolarizedRank2& P);

// h1 = (a p, a q). Requires the witness equation and congruence.
std::pair<Int, Int> h1_of(int alpha, const Int& p, const Int& q,
                          const PolarizedRank2& P);

// gcd(a, p) = gcd(a, q) = 1 and gcd(p, q) | 2, with gcd(p, q) = 1 when a is
// even.
bool almost_primitive_check(int alpha, const Int& p, const Int& q, const Int& a);

// Rank-agnostic sufficient condition: true iff h1^2 = 2 alpha a,
// h1 . H = 0 (mod a), and H has divisibility 1 inside the saturation of
// span{H, h1} in L. A true verdict certifies the isomorphism for any Picard
// rank. Requires H primitive with H^2 = 2 a^2.
bool verify_sufficient(const GramLattice& L, const Vec& H, const Vec& h1,
                       int alpha);

}  // namespace k3iso
