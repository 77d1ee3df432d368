#include "k3iso/pell.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k3iso {

namespace {

constexpr std::size_t kExpansionCap = 2000000;

struct UnitsInfo {
  Int t, u;  // t^2 - d u^2 = 1
  bool has_negative = false;
  Int nt, nu;  // nt^2 - d nu^2 = -1 when has_negative
};

UnitsInfo units_info(const Int& d) {
  CFExpansion cf = continued_fraction_sqrt(d);
  // Convergents p_i / q_i of [a0; period] through the end of the first period.
  Int p = 1, p2 = 0, q = 0, q2 = 1;
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    const Int& term = i == 0 ? cf.a0 : cf.period[i - 1];
    Int np = term * p + p2;
    Int nq = term * q + q2;
    p2 = p;
    q2 = q;
    p = np;
    q = nq;
  }
  UnitsInfo out;
  if (cf.period.size() % 2 == 0) {
    out.t = p;
    out.u = q;
  } else {
    out.has_negative = true;
    out.nt = p;
    out.nu = q;
    out.t = p * p + d * q * q;
    out.u = 2 * p * q;
  }
  if (out.t * out.t - d * out.u * out.u != 1)
    throw std::logic_error("units_info: fundamental unit check failed");
  return out;
}

PellWitness normalize_sign(const PellWitness& w) {
  if (w.y < 0 || (w.y == 0 && w.x < 0)) return {-w.x, -w.y};
  return w;
}

PellWitness apply_unit(const UnitsInfo& un, const Int& d, const PellWitness& w,
                       bool inverse) {
  if (inverse)
    return {un.t * w.x - d * un.u * w.y, -un.u * w.x + un.t * w.y};
  return {un.t * w.x + d * un.u * w.y, un.u * w.x + un.t * w.y};
}

// Minimal element of the orbit {+-T^k w}: smallest y >= 0, then smallest |x|,
// then x > 0. Descends strictly, then resolves the flat valley floor.
PellWitness canonical_rep_with_units(const Int& d, const UnitsInfo& un,
                                     PellWitness w) {
  w = normalize_sign(w);
  for (;;) {
    PellWitness fwd = normalize_sign(apply_unit(un, d, w, false));
    PellWitness bwd = normalize_sign(apply_unit(un, d, w, true));
    PellWitness best = w;
    if (fwd.y < best.y) best = fwd;
    if (bwd.y < best.y) best = bwd;
    if (best == w) break;
    w = best;
  }
  std::vector<PellWitness> valley{w};
  PellWitness fwd = normalize_sign(apply_unit(un, d, w, false));
  PellWitness bwd = normalize_sign(apply_unit(un, d, w, true));
  if (fwd.y == w.y && !(fwd == w)) valley.push_back(fwd);
  if (bwd.y == w.y && !(bwd == w)) valley.push_back(bwd);
  PellWitness pick = valley.front();
  for (const PellWitness& c : valley) {
    Int ca = abs_int(c.x), pa = abs_int(pick.x);
    if (ca < pa || (ca == pa && c.x > pick.x)) pick = c;
  }
  return pick;
}

// Expansion of (z + sqrt(d)) / q0 with q0 > 0 and z^2 = d mod q0. Returns the
// (G, B) pairs recorded whenever the next partial denominator Q hits +-1; each
// satisfies G^2 - d B^2 = +-q0. Stops once a (P, Q) state repeats.
std::vector<PellWitness> pqa_hits(const Int& z, const Int& q0, const Int& d) {
  const Int sq = isqrt_floor(d);
  Int P = z, Q = q0;
  Int g = q0, g2 = -z;  // G_{-1}, G_{-2}
  Int b = 0, b2 = 1;    // B_{-1}, B_{-2}
  std::set<std::pair<Int, Int>> seen;
  std::vector<PellWitness> hits;
  for (;;) {
    if (!seen.insert({P, Q}).second) break;
    if (seen.size() > kExpansionCap)
      throw std::runtime_error("pqa_hits: expansion exceeds iteration budget");
    Int a = floor_div(P + sq + (Q < 0 ? 1 : 0), Q);
    Int ng = a * g + g2;
    Int nb = a * b + b2;
    g2 = g;
    b2 = b;
    g = ng;
    b = nb;
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (Q == 1 || Q == -1) hits.push_back({g, b});
  }
  return hits;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::array<Int, 4> mat2_mul(const std::array<Int, 4>& a,
                            const std::array<Int, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<Int, 4> mat2_pow(std::array<Int, 4> base, std::int64_t e) {
  std::array<Int, 4> acc{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1) acc = mat2_mul(acc, base);
    e >>= 1;
    if (e > 0) base = mat2_mul(base, base);
  }
  return acc;
}

PellWitness materialize(const Int& d, const UnitsInfo& un,
                        const PellWitness& rep, std::int64_t kp, int sign) {
  std::array<Int, 4> step = kp >= 0
                                ? std::array<Int, 4>{un.t, d * un.u, un.u, un.t}
                                : std::array<Int, 4>{un.t, -d * un.u, -un.u, un.t};
  auto M = mat2_pow(step, kp >= 0 ? kp : -kp);
  Int x = M[0] * rep.x + M[1] * rep.y;
  Int y = M[2] * rep.x + M[3] * rep.y;
  if (sign < 0) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

// Walks the orbit of rep modulo the constraint's modulus, stepping outward in
// both directions at once. The reduced step map is invertible, so the walk is
// purely periodic; the forward pointer returning to the start certifies that
// every orbit position was inspected. Returns the satisfying orbit element
// closest to rep, materialized exactly.
std::optional<PellWitness> search_class(const Int& d, const Int& n,
                                        const UnitsInfo& un,
                                        const PellWitness& rep,
                                        const PellConstraint& cons) {
  if (cons.trivial()) return rep;
  const std::int64_t m = cons.modulus;
  const Int mm(m);
  auto red = [&](const Int& v) {
    return mod_floor(v, mm).convert_to<std::int64_t>();
  };
  const std::int64_t tm = red(un.t);
  const std::int64_t dum = red(d * un.u);
  const std::int64_t um = red(un.u);
  const std::int64_t x0 = red(rep.x), y0 = red(rep.y);
  std::int64_t fx = x0, fy = y0;  // position +s
  std::int64_t bx = x0, by = y0;  // position -s
  const __int128 period_bound = static_cast<__int128>(m) * m;
  constexpr std::int64_t kStepBudget = 2000000000;

  std::int64_t kp = 0;
  int sign = 0;
  for (std::int64_t s = 0; sign == 0; ++s) {
    if (s > 0 && fx == x0 && fy == y0) return std::nullopt;  // full period seen
    if (static_cast<__int128>(s) > period_bound)
      throw std::logic_error("search_class: period bound exceeded");
    if (s > kStepBudget)
      throw std::runtime_error("search_class: step budget exceeded");
    if (cons.allows(fx, fy)) {
      kp = s;
      sign = +1;
    } else if (cons.allows((m - fx) % m, (m - fy) % m)) {
      kp = s;
      sign = -1;
    } else if (s > 0 && cons.allows(bx, by)) {
      kp = -s;
      sign = +1;
    } else if (s > 0 && cons.allows((m - bx) % m, (m - by) % m)) {
      kp = -s;
      sign = -1;
    } else {
      std::int64_t nx = (mulmod(tm, fx, m) + mulmod(dum, fy, m)) % m;
      std::int64_t ny = (mulmod(um, fx, m) + mulmod(tm, fy, m)) % m;
      fx = nx;
      fy = ny;
      nx = ((mulmod(tm, bx, m) - mulmod(dum, by, m)) % m + m) % m;
      ny = ((mulmod(tm, by, m) - mulmod(um, bx, m)) % m + m) % m;
      bx = nx;
      by = ny;
    }
  }
  if ((kp < 0 ? -kp : kp) > 1000000)
    throw std::runtime_error("search_class: witness exceeds materialization budget");
  PellWitness w = materialize(d, un, rep, kp, sign);
  if (w.x * w.x - d * w.y * w.y != n || !cons.test(w.x, w.y))
    throw std::logic_error("search_class: materialized witness failed verification");
  return w;
}

void validate_instance(const PellInstance& inst) {
  if (inst.d < 1) throw std::invalid_argument("pell: d must be >= 1");
  if (inst.n == 0) throw std::invalid_argument("pell: N must be nonzero");
  if (inst.constraint.modulus < 1)
    throw std::invalid_argument("pell: constraint modulus must be positive");
  if (inst.constraint.modulus > (std::numeric_limits<std::int64_t>::max)() / 4)
    throw std::invalid_argument("pell: constraint modulus too large");
}

}  // namespace

CFExpansion continued_fraction_sqrt(const Int& d) {
  Int root;
  if (d <= 0 || is_perfect_square(d, &root))
    throw std::invalid_argument("continued_fraction_sqrt: d must be a positive non-square");
  const Int a0 = isqrt_floor(d);
  CFExpansion out;
  out.a0 = a0;
  Int m = 0, den = 1, a = a0;
  while (a != 2 * a0) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    out.period.push_back(a);
    if (out.period.size() > kExpansionCap)
      throw std::runtime_error("continued_fraction_sqrt: period exceeds iteration budget");
  }
  return out;
}

FundamentalUnit fundamental_unit(const Int& d) {
  UnitsInfo un = units_info(d);
  return {un.t, un.u};
}

std::optional<PellWitness> negative_unit(const Int& d) {
  UnitsInfo un = units_info(d);
  if (!un.has_negative) return std::nullopt;
  return PellWitness{un.nt, un.nu};
}

std::vector<PellWitness> solve_norm_classes(const Int& d, const Int& n) {
  Int root;
  if (d < 2 || is_perfect_square(d, &root))
    throw std::invalid_argument("solve_norm_classes: d must be a non-square >= 2");
  if (n == 0) throw std::invalid_argument("solve_norm_classes: N must be nonzero");
  UnitsInfo un = units_info(d);
  std::vector<PellWitness> raw;
  const Int an = abs_int(n);
  for (Int f = 1; f * f <= an; ++f) {
    if (an % (f * f) != 0) continue;
    Int m = n / (f * f);
    Int am = abs_int(m);
    for (Int z0 = 0; z0 < am; ++z0) {
      if ((z0 * z0 - d) % am != 0) continue;
      Int z = 2 * z0 > am ? z0 - am : z0;
      for (const PellWitness& h : pqa_hits(z, am, d)) {
        Int v = h.x * h.x - d * h.y * h.y;
        if (v == m) {
          raw.push_back({f * h.x, f * h.y});
        } else if (v == -m && un.has_negative) {
          raw.push_back({f * (un.nt * h.x + d * un.nu * h.y),
                         f * (un.nu * h.x + un.nt * h.y)});
        }
      }
    }
  }
  std::set<PellWitness> reps;
  for (const PellWitness& w : raw) {
    if (w.x * w.x - d * w.y * w.y != n)
      throw std::logic_error("solve_norm_classes: candidate failed the norm check");
    reps.insert(canonical_rep_with_units(d, un, w));
  }
  return {reps.begin(), reps.end()};
}

PellWitness canonical_class_rep(const Int& d, const PellWitness& w) {
  Int root;
  if (d < 2 || is_perfect_square(d, &root))
    throw std::invalid_argument("canonical_class_rep: d must be a non-square >= 2");
  if (w.x * w.x - d * w.y * w.y == 0)
    throw std::invalid_argument("canonical_class_rep: norm must be nonzero");
  return canonical_rep_with_units(d, units_info(d), w);
}

std::vector<PellWitness> solve_square_d(const Int& s, const Int& n) {
  if (s < 1) throw std::invalid_argument("solve_square_d: s must be >= 1");
  if (n == 0) throw std::invalid_argument("solve_square_d: N must be nonzero");
  std::set<PellWitness> out;
  const Int an = abs_int(n);
  for (Int e = 1; e * e <= an; ++e) {
    if (an % e != 0) continue;
    for (const Int& mag : {e, Int(an / e)}) {
      for (int se = -1; se <= 1; se += 2) {
        Int lo = se > 0 ? mag : -mag;  // x - s y
        Int hi = n / lo;               // x + s y
        if ((lo + hi) % 2 != 0) continue;
        Int x = (lo + hi) / 2;
        Int sy = (hi - lo) / 2;
        if (sy % s != 0) continue;
        out.insert({x, sy / s});
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PellWitness> solutions_up_to(const Int& d, const Int& n,
                                         const Int& y_bound) {
  if (d < 1) throw std::invalid_argument("solutions_up_to: d must be >= 1");
  if (n == 0) throw std::invalid_argument("solutions_up_to: N must be nonzero");
  if (y_bound < 0) throw std::invalid_argument("solutions_up_to: bound must be >= 0");
  std::set<PellWitness> out;
  Int root;
  if (is_perfect_square(d, &root)) {
    for (const PellWitness& w : solve_square_d(root, n))
      if (abs_int(w.y) <= y_bound) out.insert(w);
    return {out.begin(), out.end()};
  }
  UnitsInfo un = units_info(d);
  for (const PellWitness& rep : solve_norm_classes(d, n)) {
    for (int dir = 0; dir < 2; ++dir) {
      PellWitness w = dir == 0 ? rep : apply_unit(un, d, rep, true);
      while (abs_int(w.y) <= y_bound) {
        out.insert(w);
        out.insert({-w.x, -w.y});
        w = apply_unit(un, d, w, dir == 1);
      }
    }
  }
  return {out.begin(), out.end()};
}

bool PellConstraint::test(const Int& x, const Int& y) const {
  if (trivial()) return true;
  const Int mm(modulus);
  return allows(mod_floor(x, mm).convert_to<std::int64_t>(),
                mod_floor(y, mm).convert_to<std::int64_t>());
}

PellConstraint PellConstraint::none() { return {}; }

PellConstraint PellConstraint::residue_pairs(
    std::int64_t m, const std::vector<std::pair<Int, Int>>& pairs) {
  if (m < 1) throw std::invalid_argument("PellConstraint: modulus must be positive");
  auto table = std::make_shared<std::set<std::pair<std::int64_t, std::int64_t>>>();
  const Int mm(m);
  for (const auto& [px, py] : pairs)
    table->insert({mod_floor(px, mm).convert_to<std::int64_t>(),
                   mod_floor(py, mm).convert_to<std::int64_t>()});
  PellConstraint c;
  c.modulus = m;
  c.allows = [table](std::int64_t x, std::int64_t y) {
    return table->count({x, y}) > 0;
  };
  return c;
}

PellConstraint PellConstraint::predicate(
    std::int64_t m, std::function<bool(std::int64_t, std::int64_t)> fn) {
  if (m < 1) throw std::invalid_argument("PellConstraint: modulus must be positive");
  PellConstraint c;
  c.modulus = m;
  c.allows = std::move(fn);
  return c;
}

PellConstraint congruence_constraint(const Int& m, const Int& mu) {
  if (m < 1) throw std::invalid_argument("congruence_constraint: modulus must be positive");
  if (m > (std::numeric_limits<std::int64_t>::max)() / 4)
    throw std::invalid_argument("congruence_constraint: modulus exceeds the 64-bit range");
  std::int64_t mv = m.convert_to<std::int64_t>();
  std::int64_t mur = mod_floor(mu, m).convert_to<std::int64_t>();
  return PellConstraint::predicate(mv, [mv, mur](std::int64_t x, std::int64_t y) {
    return (static_cast<__int128>(x) - static_cast<__int128>(mur) * y) % mv == 0;
  });
}

std::vector<PellWitness> find_constrained(const PellInstance& inst) {
  validate_instance(inst);
  std::vector<PellWitness> out;
  Int root;
  if (is_perfect_square(inst.d, &root)) {
    for (const PellWitness& w : solve_square_d(root, inst.n))
      if (inst.constraint.test(w.x, w.y)) out.push_back(w);
    return out;
  }
  UnitsInfo un = units_info(inst.d);
  for (const PellWitness& rep : solve_norm_classes(inst.d, inst.n)) {
    auto w = search_class(inst.d, inst.n, un, rep, inst.constraint);
    if (w) out.push_back(*w);
  }
  return out;
}

std::optional<PellWitness> exists_constrained(const PellInstance& inst) {
  validate_instance(inst);
  Int root;
  if (is_perfect_square(inst.d, &root)) {
    for (const PellWitness& w : solve_square_d(root, inst.n))
      if (inst.constraint.test(w.x, w.y)) return w;
    return std::nullopt;
  }
  UnitsInfo un = units_info(inst.d);
  for (const PellWitness& rep : solve_norm_classes(inst.d, inst.n)) {
    auto w = search_class(inst.d, inst.n, un, rep, inst.constraint);
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace k3iso
