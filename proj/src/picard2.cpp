#include "k3iso/picard2.hpp"

#include <stdexcept>

namespace k3iso {

Int mu_class_min(const Int& mu, const Int& a) {
  Int mod = 2 * a * a;
  Int m = mod_floor(mu, mod);
  Int other = mod - m;
  return m <= other ? m : other;
}

PolarizedRank2 PolarizedRank2::make(const Int& a, const Int& d, const Int& mu) {
  if (a < 1) throw std::invalid_argument("PolarizedRank2: a must be >= 1");
  if (d < 1) throw std::invalid_argument("PolarizedRank2: d must be positive");
  Int mod = 2 * a * a;
  if (gcd_int(mu, mod) != 1)
    throw std::invalid_argument("PolarizedRank2: mu not a unit mod 2 a^2");
  if (mod_floor(mu * mu - d, 4 * a * a) != 0)
    throw std::invalid_argument("PolarizedRank2: incompatible d, mu");
  return {a, d, mu_class_min(mu, a)};
}

Mat gram_of(const PolarizedRank2& p) {
  Int top = 2 * p.a * p.a;
  return {{top, p.mu}, {p.mu, (p.mu * p.mu - p.d) / top}};
}

bool model_contains(const PolarizedRank2& p, const Int& x, const Int& y) {
  return mod_floor(x - p.mu * y, 2 * p.a * p.a) == 0;
}

Rat model_norm(const PolarizedRank2& p, const Int& x, const Int& y) {
  return Rat(x * x - p.d * y * y, 2 * p.a * p.a);
}

Rat model_inner(const PolarizedRank2& p, const Int& x1, const Int& y1,
                const Int& x2, const Int& y2) {
  return Rat(x1 * x2 - p.d * y1 * y2, 2 * p.a * p.a);
}

ModelFrame invariants_from(const GramLattice& L, const Vec& H) {
  if (L.rank() != 2)
    throw std::invalid_argument("invariants_from: lattice must have rank 2");
  if (!L.even())
    throw std::invalid_argument("invariants_from: lattice must be even");
  auto sig = signature(L);
  if (sig.first != 1 || sig.second != 1)
    throw std::invalid_argument("invariants_from: signature must be (1, 1)");
  if (H.size() != 2 || (H[0] == 0 && H[1] == 0))
    throw std::invalid_argument("invariants_from: H must be a nonzero pair");
  if (gcd_int(H[0], H[1]) != 1)
    throw std::invalid_argument("invariants_from: H must be primitive");
  Int hh = L.inner(H, H);
  if (hh <= 0)
    throw std::invalid_argument("invariants_from: H^2 must be positive");
  Int a;
  if (hh % 2 != 0 || !is_perfect_square(hh / 2, &a))
    throw std::invalid_argument("invariants_from: H^2 must be twice a square");
  if (gamma(L, H) != 1)
    throw std::invalid_argument("invariants_from: gamma(H) != 1; the rank-2 model requires divisibility 1");
  Int d = -L.det();
  if (d < 1 || d % 4 != 1)
    throw std::invalid_argument("invariants_from: determinant must be -d with d = 1 mod 4");

  const Mat& g = L.gram();
  Int g1 = g[0][0] * H[0] + g[0][1] * H[1];
  Int g2 = g[1][0] * H[0] + g[1][1] * H[1];
  Vec delta{-g2, g1};
  if (delta[0] < 0 || (delta[0] == 0 && delta[1] < 0)) {
    delta[0] = -delta[0];
    delta[1] = -delta[1];
  }

  Int mod = 2 * a * a;
  for (Int mu = 1; mu < mod; ++mu) {
    if (gcd_int(mu, mod) != 1) continue;
    if (mod_floor(mu * mu - d, 4 * a * a) != 0) continue;
    if (mod_floor(mu * H[0] + delta[0], mod) != 0) continue;
    if (mod_floor(mu * H[1] + delta[1], mod) != 0) continue;
    return {PolarizedRank2::make(a, d, mu), mu, delta};
  }
  throw std::invalid_argument("invariants_from: no admissible mu; H does not present the lattice");
}

}  // namespace k3iso
