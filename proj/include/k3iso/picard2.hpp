#pragma once

#include "k3iso/lattice.hpp"
#include "k3iso/numeric.hpp"

namespace k3iso {

// Invariants (a, d, mu) of an even rank-2 lattice of signature (1, 1) carrying
// a primitive vector H with H^2 = 2 a^2 > 0 and divisibility 1. The lattice is
// realized concretely as the set of pairs (x, y) with x = mu y (mod 2 a^2) and
// Q(x, y) = (x^2 - d y^2) / (2 a^2), where H corresponds to (2 a^2, 0) and d
// equals minus the determinant. Only the pair {mu, -mu} mod 2 a^2 is an
// invariant, so make() stores the smaller of the two representatives.
struct PolarizedRank2 {
  Int a;   // >= 1
  Int d;   // >= 1, congruent to 1 mod 4
  Int mu;  // unit mod 2 a^2 with mu^2 = d mod 4 a^2, class-minimal

  static PolarizedRank2 make(const Int& a, const Int& d, const Int& mu);

  friend bool operator==(const PolarizedRank2& p, const PolarizedRank2& q) {
    return p.a == q.a && p.d == q.d && p.mu == q.mu;
  }
  friend bool operator<(const PolarizedRank2& p, const PolarizedRank2& q) {
    if (p.a != q.a) return p.a < q.a;
    if (p.d != q.d) return p.d < q.d;
    return p.mu < q.mu;
  }
};

// The smaller of mu, -mu taken mod 2 a^2.
Int mu_class_min(const Int& mu, const Int& a);

// Gram matrix [[2 a^2, mu], [mu, (mu^2 - d) / (2 a^2)]], determinant -d.
Mat gram_of(const PolarizedRank2& p);

// Membership x = mu y (mod 2 a^2) of the concrete model.
bool model_contains(const PolarizedRank2& p, const Int& x, const Int& y);

// Q(x, y) = (x^2 - d y^2) / (2 a^2), as an exact rational. Defined for any
// (x, y); the value is an even integer whenever (x, y) is a lattice point.
Rat model_norm(const PolarizedRank2& p, const Int& x, const Int& y);

// Pairing ((x1 x2 - d y1 y2) / (2 a^2)) extending model_norm.
Rat model_inner(const PolarizedRank2& p, const Int& x1, const Int& y1,
                const Int& x2, const Int& y2);

struct ModelFrame {
  PolarizedRank2 invariants;
  Int mu_raw;  // representative found by the frame scan, in [1, 2 a^2)
  Vec delta;   // orthogonal companion of H in the source basis
};

// Reads (a, d, +-mu) off an abstract presentation: a Gram matrix plus the
// coordinates of H. Validates rank 2, evenness, signature (1, 1), primitivity
// of H, H^2 = 2 a^2 > 0, and divisibility 1.
ModelFrame invariants_from(const GramLattice& L, const Vec& H);

}  // namespace k3iso
