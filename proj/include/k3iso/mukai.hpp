#pragma once

#include "k3iso/lattice.hpp"
#include "k3iso/numeric.hpp"
#include "k3iso/picard2.hpp"

namespace k3iso {

// Element of the extended lattice Z + N(X) + Z used by the moduli-space
// constructions: r and s are the outer integer components, c1 = (x, y) lives
// in the rank-2 model.
struct MukaiVector {
  Int r;
  Int c1x, c1y;
  Int s;
};

// The isotropic vector v = (a, H, a).
MukaiVector isotropic_v(const PolarizedRank2& p);

// The square-2 class (-1, 0, 1).
MukaiVector h_class();

// Pairing -(u.r w.s + u.s w.r) + <u.c1, w.c1>. Both c1 components must be
// lattice points; the result is then an exact integer.
Int mukai_product(const MukaiVector& u, const MukaiVector& w,
                  const PolarizedRank2& p);

// Rank-2 presentation of the second lattice N(Y) attached to (a, d, mu):
// basis (h, w) with Gram [[2, 1], [1, (1 - d) / 2]] and h = (1, 0). Any odd
// choice of the glue unit yields this same reduced form, so the presentation
// depends on d alone. Invariants h^2 = 2, gamma(h) = 1, det = -d are checked
// at construction.
struct NYPresentation {
  GramLattice gram;
  Vec h;
};

NYPresentation ny_presentation(const PolarizedRank2& p);

// det N(X) = det N(Y), both equal to -d.
bool det_equality_check(const PolarizedRank2& p);

// Index of the transcendental-lattice inclusion: gcd(a, gammaH), the positive
// generator of a Z + gammaH Z. Requires gammaH | 2 a^2.
Int transcendental_index(const Int& a, const Int& gammaH);

// Compatibility of the degree-2 vector (x, y) with the identification of
// discriminant forms: x = 2a or -2a mod d. Requires a lattice point of
// norm 2.
bool char_compat_check(const PolarizedRank2& p, const Int& x, const Int& y);

}  // namespace k3iso
