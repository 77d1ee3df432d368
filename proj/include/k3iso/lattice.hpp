#pragma once

// Integral symmetric bilinear forms given by Gram matrices: determinants,
// divisibility of vectors, discriminant groups with their torsion quadratic
// form, primitive closures of sublattices, and signatures. Everything is
// exact; no floating point anywhere.

#include "k3iso/matrix.hpp"

#include <utility>

namespace k3iso {

using RatVec = std::vector<Rat>;

class GramLattice {
 public:
  // Validates: square, symmetric, det != 0. Throws std::invalid_argument.
  static GramLattice from(Mat gram);

  const Mat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.size(); }
  const Int& det() const { return det_; }
  bool even() const;

  // Inner product of integer vectors in this basis.
  Int inner(const Vec& x, const Vec& y) const;
  Rat inner(const RatVec& x, const RatVec& y) const;

 private:
  GramLattice(Mat gram, Int det) : gram_(std::move(gram)), det_(std::move(det)) {}
  Mat gram_;
  Int det_;
};

Int determinant(const GramLattice& l);

// gcd of the pairings of x against the lattice, i.e. gcd of the entries of
// gram * x. Throws on the zero vector.
Int gamma(const GramLattice& l, const Vec& x);

struct DiscriminantGroup {
  // Orders of the cyclic factors, each > 1, ordered divisibly (d1 | d2 | ...).
  std::vector<Int> orders;
  // Generator lifts as rational coordinate vectors in the lattice basis;
  // generators[i] has order orders[i] in the quotient dual/lattice.
  std::vector<RatVec> generators;
  Int total_order() const;
};

DiscriminantGroup discriminant_group(const GramLattice& l);

// Is the rational vector g (coordinates in the lattice basis) in the dual?
bool in_dual(const GramLattice& l, const RatVec& g);

// Value of the torsion quadratic form at g, reduced into [0, 2).
// Requires an even lattice and g in the dual; throws otherwise.
Rat discriminant_quadratic(const GramLattice& l, const RatVec& g);

// Value of the torsion bilinear form at (g, h), reduced into [0, 1).
Rat discriminant_bilinear(const GramLattice& l, const RatVec& g, const RatVec& h);

struct Sublattice {
  Mat basis;  // rows: basis vectors in the ambient lattice's coordinates (HNF)
  GramLattice gram;
};

// Primitive closure (saturation) of the span of the given vectors, returned
// with a canonical Hermite-normal-form basis. Throws if the vectors are
// linearly dependent or the set is empty.
Sublattice saturate(const GramLattice& l, const std::vector<Vec>& vectors);

// (positive, negative) inertia indices; exact rational diagonalization.
std::pair<int, int> signature(const GramLattice& l);

}  // namespace k3iso
