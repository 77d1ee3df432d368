#include "k3iso/enumerate.hpp"

#include "k3iso/pell.hpp"
#include "k3iso/picard2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace k3iso {

namespace {

void check_alpha(int alpha) {
  if (alpha != 1 && alpha != -1)
    throw std::invalid_argument("enumerate: alpha must be +-1");
}

bool witness_order(const WitnessPQ& l, const WitnessPQ& r) {
  return std::make_tuple(-l.alpha, l.q, l.p) <
         std::make_tuple(-r.alpha, r.q, r.p);
}

}  // namespace

std::vector<FamilyEntry> family(const Int& a, const Int& mu, int alpha,
                                const Int& t_min, const Int& t_max) {
  if (a < 1) throw std::invalid_argument("family: a must be >= 1");
  check_alpha(alpha);
  if (gcd_int(mu, 2 * a * a) != 1)
    throw std::invalid_argument("family: mu not a unit mod 2 a^2");
  std::vector<FamilyEntry> out;
  for (Int t = t_min; t <= t_max; ++t) {
    if (mod_floor(t * mu - alpha, a) != 0) continue;
    Int p = mu + 2 * t * a;
    Int d = p * p - 4 * a * alpha;
    if (d <= 0) continue;
    if (mod_floor(d - mu * mu, 4 * a * a) != 0)
      throw std::logic_error("family: emitted d breaks the mod 4 a^2 congruence");
    out.push_back({t, d, p});
  }
  return out;
}

std::vector<DivisorLabel> enum_D(const Int& a, const Int& mu, int alpha,
                                 const Int& d_max) {
  if (a < 2) throw std::invalid_argument("enum_D: a must be >= 2");
  check_alpha(alpha);
  if (gcd_int(mu, 2 * a * a) != 1)
    throw std::invalid_argument("enum_D: mu not a unit mod 2 a^2");
  if (d_max < 1) throw std::invalid_argument("enum_D: d_max must be >= 1");
  PellConstraint cons = congruence_constraint(2 * a, mu);
  Int step = 4 * a * a;
  std::vector<DivisorLabel> out;
  for (Int d = mod_floor(mu * mu, step); d <= d_max; d += step) {
    std::set<std::pair<Int, Int>> seen;
    for (const PellWitness& s : find_constrained({d, 4 * a * alpha, cons})) {
      Int p = s.x, q = s.y;
      if (q < 0) {
        p = -p;
        q = -q;
      }
      if (q == 0 || p * p - d * q * q != 4 * a * alpha ||
          mod_floor(p - mu * q, 2 * a) != 0)
        throw std::logic_error("enum_D: solver returned an invalid witness");
      seen.insert({p, q});
    }
    if (seen.empty()) continue;
    std::vector<WitnessPQ> wits;
    for (const auto& [p, q] : seen) wits.push_back({alpha, p, q});
    std::sort(wits.begin(), wits.end(), witness_order);
    Int root;
    out.push_back({d, mu_class_min(mu, a), std::move(wits),
                   is_perfect_square(d, &root)});
  }
  return out;
}

std::vector<DivisorLabel> enum_div(const Int& a, const Int& d_max,
                                   unsigned threads) {
  if (a < 2) throw std::invalid_argument("enum_div: a must be >= 2");
  if (d_max < 1) throw std::invalid_argument("enum_div: d_max must be >= 1");
  Int mod = 2 * a * a;
  std::vector<std::pair<Int, int>> tasks;
  for (Int mu = 1; mu < mod; ++mu) {
    if (gcd_int(mu, mod) != 1) continue;
    if (mu != mu_class_min(mu, a)) continue;
    tasks.push_back({mu, +1});
    tasks.push_back({mu, -1});
  }
  std::vector<std::vector<DivisorLabel>> partial(tasks.size());
  auto run_task = [&](std::size_t i) {
    partial[i] = enum_D(a, tasks[i].first, tasks[i].second, d_max);
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    unsigned n = std::min<unsigned>(threads, tasks.size() ? tasks.size() : 1);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < tasks.size(); i += n) run_task(i);
      });
    for (auto& th : pool) th.join();
  }
  std::map<std::pair<Int, Int>, DivisorLabel> merged;
  for (const auto& labels : partial) {
    for (const DivisorLabel& l : labels) {
      auto key = std::make_pair(l.d, l.mu);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, l);
      } else {
        it->second.witnesses.insert(it->second.witnesses.end(),
                                    l.witnesses.begin(), l.witnesses.end());
      }
    }
  }
  std::vector<DivisorLabel> out;
  out.reserve(merged.size());
  for (auto& [key, label] : merged) {
    std::sort(label.witnesses.begin(), label.witnesses.end(), witness_order);
    out.push_back(std::move(label));
  }
  return out;
}

Int mu_lift(const Int& a, const Int& d, const Int& nu) {
  if (a < 1) throw std::invalid_argument("mu_lift: a must be >= 1");
  if (d < 1) throw std::invalid_argument("mu_lift: d must be >= 1");
  if (gcd_int(nu, 2 * a) != 1)
    throw std::invalid_argument("mu_lift: nu not a unit mod 2a");
  if (mod_floor(nu * nu - d, 4 * a) != 0)
    throw std::invalid_argument("mu_lift: nu not a square root of d mod 4a");
  Int inv = mod_inverse(nu, a);
  Int k = mod_floor(inv * ((d - nu * nu) / (4 * a)), a);
  Int mu = mod_floor(nu + 2 * a * k, 2 * a * a);
  if (mod_floor(mu * mu - d, 4 * a * a) != 0)
    throw std::logic_error("mu_lift: lifted mu fails its congruence");
  return mu;
}

}  // namespace k3iso
