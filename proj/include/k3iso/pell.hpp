#pragma once

// Complete solver for x^2 - d y^2 = N over the integers, plus congruence-
// constrained existence queries.
//
// Non-square d: the solution set is a finite union of classes, each an orbit
// {+-T^k r} of the automorph T = [[t, d u], [u, t]] built from the fundamental
// unit t^2 - d u^2 = 1. Class representatives are found by the classical
// continued-fraction method (divisor split f^2 | N, square roots z of d mod
// |N/f^2|, expansion of (z + sqrt(d))/|N/f^2|), then reduced to the canonical
// minimal element of their orbit. Square d: the form factors, so the full
// finite solution set is enumerated from divisor pairs.
//
// Constrained queries walk each class orbit modulo m; the residue map is a
// bijection, hence purely periodic, so scanning one period decides
// satisfiability exactly.

#include "k3iso/numeric.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace k3iso {

struct CFExpansion {
  Int a0;
  std::vector<Int> period;
};

// Canonical continued fraction of sqrt(d); throws on d <= 0 or square d.
CFExpansion continued_fraction_sqrt(const Int& d);

struct FundamentalUnit {
  Int t, u;  // least t, u > 0 with t^2 - d u^2 = 1
};

FundamentalUnit fundamental_unit(const Int& d);

struct PellWitness {
  Int x, y;
  friend bool operator==(const PellWitness& a, const PellWitness& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const PellWitness& a, const PellWitness& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// Least positive solution of x^2 - d y^2 = -1, when it exists.
std::optional<PellWitness> negative_unit(const Int& d);

// Non-square d >= 2, N != 0: one canonical representative per solution class,
// sorted lexicographically. Every integer solution is +-T^k * rep for exactly
// the listed reps. Empty list <=> no solutions.
std::vector<PellWitness> solve_norm_classes(const Int& d, const Int& n);

// The canonical (minimal y >= 0, then minimal |x|, then x > 0) element of the
// class of w under {+-T^k}. w must solve x^2 - d y^2 = something nonzero.
PellWitness canonical_class_rep(const Int& d, const PellWitness& w);

// Square d = s^2 (s >= 1), N != 0: the complete, finite solution set of
// x^2 - s^2 y^2 = N, sorted lexicographically.
std::vector<PellWitness> solve_square_d(const Int& s, const Int& n);

// All solutions of x^2 - d y^2 = N with |y| <= y_bound, both signs, sorted.
// Works for square and non-square d.
std::vector<PellWitness> solutions_up_to(const Int& d, const Int& n, const Int& y_bound);

// Residue-pair constraint modulo a (64-bit) modulus; `allows` receives
// residues reduced into [0, modulus).
struct PellConstraint {
  std::int64_t modulus = 1;
  std::function<bool(std::int64_t, std::int64_t)> allows;

  bool trivial() const { return modulus == 1 || !allows; }
  bool test(const Int& x, const Int& y) const;

  static PellConstraint none();
  static PellConstraint residue_pairs(std::int64_t m,
                                      const std::vector<std::pair<Int, Int>>& pairs);
  static PellConstraint predicate(std::int64_t m,
                                  std::function<bool(std::int64_t, std::int64_t)> fn);
};

// x = mu y (mod m). Throws when m does not fit the constraint's 64-bit range.
PellConstraint congruence_constraint(const Int& m, const Int& mu);

struct PellInstance {
  Int d;  // >= 1
  Int n;  // != 0
  PellConstraint constraint;
};

// One witness per solution class whose orbit meets the constraint (for square
// d: every satisfying solution). Witnesses are exact solutions satisfying the
// constraint, materialized at the smallest orbit distance from the class
// representative.
std::vector<PellWitness> find_constrained(const PellInstance& inst);

// First entry of find_constrained, or nullopt. Some(w) iff a solution
// satisfying the constraint exists.
std::optional<PellWitness> exists_constrained(const PellInstance& inst);

}  // namespace k3iso
