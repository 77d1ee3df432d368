#pragma once

#include "k3iso/numeric.hpp"

#include <vector>

namespace k3iso {

struct FamilyEntry {
  Int t, d, p;
};

// The one-parameter family with q = 1: over t in [t_min, t_max] with
// t mu = alpha (mod a), put p = mu + 2 t a and d = p^2 - 4 a alpha; entries
// with d > 0 are emitted in ascending t order. Every emitted d satisfies
// d = mu^2 (mod 4 a^2) and carries the witness (p, 1).
std::vector<FamilyEntry> family(const Int& a, const Int& mu, int alpha,
                                const Int& t_min, const Int& t_max);

struct WitnessPQ {
  int alpha;
  Int p, q;  // q > 0
};

struct DivisorLabel {
  Int d;
  Int mu;  // class-minimal representative of {mu, -mu} mod 2 a^2
  std::vector<WitnessPQ> witnesses;
  bool square_discriminant;
};

// All d <= d_max with d = mu^2 (mod 4 a^2) admitting a witness for the given
// alpha, ascending in d. Complete relative to the Pell engine's class solver.
std::vector<DivisorLabel> enum_D(const Int& a, const Int& mu, int alpha,
                                 const Int& d_max);

// Union of enum_D over every +-mu unit class and both alphas, deduplicated by
// (d, mu class) with witnesses merged; ascending (d, mu). threads > 1 splits
// the class grid across worker threads; the merge is deterministic, so
// parallel and serial runs emit identical tables.
std::vector<DivisorLabel> enum_div(const Int& a, const Int& d_max,
                                   unsigned threads = 1);

// The unique mu mod 2 a^2 with mu = nu (mod 2a) and mu^2 = d (mod 4 a^2),
// via k = nu^{-1} (d - nu^2) / (4a) mod a and mu = nu + 2 a k.
Int mu_lift(const Int& a, const Int& d, const Int& nu);

}  // namespace k3iso
