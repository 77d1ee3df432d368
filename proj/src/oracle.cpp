#include "k3iso/oracle.hpp"

#include "k3iso/pell.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace k3iso {

namespace {

std::int64_t to_i64(const Int& v) {
  if (v > (std::numeric_limits<std::int64_t>::max)() / 4)
    throw std::invalid_argument("oracle: modulus exceeds the 64-bit constraint range");
  return v.convert_to<std::int64_t>();
}

std::int64_t residue(const Int& v, std::int64_t m) {
  return mod_floor(v, Int(m)).convert_to<std::int64_t>();
}

// x = mu y (mod 2 a^2) and x = +-2a (mod d)
PellConstraint route_a_constraint(const PolarizedRank2& P) {
  Int m1_int = 2 * P.a * P.a;
  std::int64_t m = to_i64(lcm_int(m1_int, P.d));
  std::int64_t m1 = to_i64(m1_int);
  std::int64_t dv = to_i64(P.d);
  std::int64_t mu = residue(P.mu, m1);
  std::int64_t two_a = residue(2 * P.a, dv);
  return PellConstraint::predicate(
      m, [m1, dv, mu, two_a](std::int64_t x, std::int64_t y) {
        if ((static_cast<__int128>(x) - static_cast<__int128>(mu) * y) % m1 != 0)
          return false;
        std::int64_t r = x % dv;
        return (r - two_a) % dv == 0 || (r + two_a) % dv == 0;
      });
}

OracleWitness build_witness(const PolarizedRank2& P, int alpha, Int p, Int q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) throw std::logic_error("oracle: witness with q = 0");
  Int a = P.a, d = P.d;
  if (p * p - d * q * q != 4 * a * alpha)
    throw std::logic_error("oracle: witness fails its equation");
  if (mod_floor(p - P.mu * q, 2 * a) != 0)
    throw std::logic_error("oracle: witness fails the mod-2a congruence");
  Int x = 2 * a + alpha * d * q * q;
  Int y = alpha * p * q;
  if (x < 0) {
    x = -x;
    y = -y;
  }
  if (x * x - d * y * y != 4 * a * a)
    throw std::logic_error("oracle: associated pair fails its equation");
  if (mod_floor(x - P.mu * y, 2 * a * a) != 0)
    throw std::logic_error("oracle: associated pair fails the mod-2a^2 congruence");
  if (mod_floor(x - 2 * a, d) != 0 && mod_floor(x + 2 * a, d) != 0)
    throw std::logic_error("oracle: associated pair fails the mod-d congruence");
  Int h1x = a * p, h1y = a * q;
  if (!model_contains(P, h1x, h1y) ||
      model_norm(P, h1x, h1y) != Rat(2 * a * alpha))
    throw std::logic_error("oracle: h1 fails its norm check");
  if (!almost_primitive_check(alpha, p, q, a))
    throw std::logic_error("oracle: witness is not almost primitive");
  return {alpha, p, q, x, y, h1x, h1y};
}

}  // namespace

Decision decide(const PolarizedRank2& P, const Int& q_bound) {
  if (P.a < 2) throw std::invalid_argument("decide: oracle requires a >= 2");
  if (q_bound < 0) throw std::invalid_argument("decide: q_bound must be >= 0");
  PellConstraint cons = congruence_constraint(2 * P.a, P.mu);
  std::set<std::tuple<int, Int, Int>> seen;
  std::vector<OracleWitness> wits;
  bool route_b = false;
  for (int alpha : {+1, -1}) {
    PellInstance inst{P.d, 4 * P.a * alpha, cons};
    std::vector<PellWitness> found = find_constrained(inst);
    if (!found.empty()) route_b = true;
    if (q_bound > 0) {
      for (const PellWitness& s : solutions_up_to(P.d, inst.n, q_bound))
        if (cons.test(s.x, s.y)) found.push_back(s);
    }
    for (const PellWitness& s : found) {
      OracleWitness w = build_witness(P, alpha, s.x, s.y);
      if (seen.insert({w.alpha, w.p, w.q}).second) wits.push_back(std::move(w));
    }
  }
  std::sort(wits.begin(), wits.end(),
            [](const OracleWitness& l, const OracleWitness& r) {
              return std::make_tuple(-l.alpha, l.q, l.p) <
                     std::make_tuple(-r.alpha, r.q, r.p);
            });
  bool route_a =
      exists_constrained({P.d, 4 * P.a * P.a, route_a_constraint(P)}).has_value();
  return {route_b, std::move(wits), route_a == route_b, decide_lattice_only(P),
          P.a % 2 != 0};
}

bool decide_lattice_only(const PolarizedRank2& P) {
  return exists_constrained(
             {P.d, 4 * P.a * P.a, congruence_constraint(2 * P.a * P.a, P.mu)})
      .has_value();
}

std::pair<Int, Int> associated(int alpha, const Int& p, const Int& q,
                               const PolarizedRank2& P) {
  if (alpha != 1 && alpha != -1)
    throw std::invalid_argument("associated: alpha must be +-1");
  if (p * p - P.d * q * q != 4 * P.a * alpha)
    throw std::invalid_argument("associated: equation not satisfied");
  Int x = 2 * P.a + alpha * P.d * q * q;
  Int y = alpha * p * q;
  if (x < 0) return {-x, -y};
  return {x, y};
}

std::pair<Int, Int> h1_of(int alpha, const Int& p, const Int& q,
                          const PolarizedRank2& P) {
  if (alpha != 1 && alpha != -1)
    throw std::invalid_argument("h1_of: alpha must be +-1");
  if (p * p - P.d * q * q != 4 * P.a * alpha ||
      mod_floor(p - P.mu * q, 2 * P.a) != 0)
    throw std::invalid_argument("h1_of: witness invalid");
  return {P.a * p, P.a * q};
}

bool almost_primitive_check(int, const Int& p, const Int& q, const Int& a) {
  if (gcd_int(a, p) != 1 || gcd_int(a, q) != 1) return false;
  Int g = gcd_int(p, q);
  if (a % 2 == 0) return g == 1;
  return g == 1 || g == 2;
}

bool verify_sufficient(const GramLattice& L, const Vec& H, const Vec& h1,
                       int alpha) {
  if (alpha != 1 && alpha != -1)
    throw std::invalid_argument("verify_sufficient: alpha must be +-1");
  if (H.size() != L.rank() || h1.size() != L.rank())
    throw std::invalid_argument("verify_sufficient: dimension mismatch");
  Int g = 0;
  for (const Int& c : H) g = gcd_int(g, c);
  if (g != 1) throw std::invalid_argument("verify_sufficient: H not primitive");
  Int hh = L.inner(H, H);
  Int a;
  if (hh <= 0 || hh % 2 != 0 || !is_perfect_square(hh / 2, &a))
    throw std::invalid_argument("verify_sufficient: H^2 not of the form 2 a^2");
  if (L.inner(h1, h1) != 2 * alpha * a) return false;
  if (mod_floor(L.inner(h1, H), a) != 0) return false;
  bool dependent = true;
  for (std::size_t i = 0; dependent && i < H.size(); ++i)
    for (std::size_t j = i + 1; dependent && j < H.size(); ++j)
      if (H[i] * h1[j] != H[j] * h1[i]) dependent = false;
  Mat rows{H};
  if (!dependent) rows.push_back(h1);
  Sublattice sat = saturate(L, rows);
  Vec coords = row_coordinates(sat.basis, H);
  return gamma(sat.gram, coords) == 1;
}

}  // namespace k3iso
