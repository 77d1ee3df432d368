#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3iso/enumerate.hpp"
#include "k3iso/oracle.hpp"
#include "k3iso/pell.hpp"
#include "k3iso/picard2.hpp"

#include "support/brute.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

using namespace k3iso;

namespace {

using Entry = std::tuple<long long, long long, long long>;  // (t, d, p)

std::vector<Entry> entries_of(const std::vector<FamilyEntry>& fam) {
  std::vector<Entry> out;
  for (const FamilyEntry& e : fam)
    out.push_back({static_cast<long long>(e.t), static_cast<long long>(e.d),
                   static_cast<long long>(e.p)});
  return out;
}

using Wit = std::tuple<int, long long, long long>;  // (alpha, p, q)

std::vector<Wit> wits_of(const DivisorLabel& label) {
  std::vector<Wit> out;
  for (const WitnessPQ& w : label.witnesses)
    out.push_back({w.alpha, static_cast<long long>(w.p),
                   static_cast<long long>(w.q)});
  return out;
}

const DivisorLabel* find_label(const std::vector<DivisorLabel>& labels,
                               const Int& d) {
  for (const DivisorLabel& l : labels)
    if (l.d == d) return &l;
  return nullptr;
}

bool labels_equal(const std::vector<DivisorLabel>& lhs,
                  const std::vector<DivisorLabel>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const DivisorLabel &l = lhs[i], &r = rhs[i];
    if (l.d != r.d || l.mu != r.mu ||
        l.square_discriminant != r.square_discriminant)
      return false;
    if (l.witnesses.size() != r.witnesses.size()) return false;
    for (std::size_t j = 0; j < l.witnesses.size(); ++j) {
      const WitnessPQ &lw = l.witnesses[j], &rw = r.witnesses[j];
      if (lw.alpha != rw.alpha || lw.p != rw.p || lw.q != rw.q) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("family reproduces the frozen degree-8 blocks") {
  CHECK(entries_of(family(2, 1, 1, -3, 3)) ==
        std::vector<Entry>{{-3, 113, -11}, {-1, 1, -3}, {1, 17, 5}, {3, 161, 13}});
  CHECK(entries_of(family(2, 1, -1, -3, 3)) ==
        std::vector<Entry>{{-3, 129, -11}, {-1, 17, -3}, {1, 33, 5}, {3, 177, 13}});
  CHECK(entries_of(family(3, 1, 1, -2, 4)) ==
        std::vector<Entry>{{-2, 109, -11}, {1, 37, 7}, {4, 613, 25}});
  // t = -1 hits d = -7 and is dropped
  CHECK(entries_of(family(2, 3, 1, -3, 3)) ==
        std::vector<Entry>{{-3, 73, -9}, {1, 41, 7}, {3, 217, 15}});
  CHECK(entries_of(family(1, 1, 1, -3, 3)) ==
        std::vector<Entry>{{-3, 21, -5}, {-2, 5, -3}, {1, 5, 3}, {2, 21, 5}, {3, 45, 7}});
}

TEST_CASE("family entries satisfy their defining relations") {
  for (int a = 2; a <= 4; ++a) {
    for (Int mu = 1; mu < 2 * a * a; ++mu) {
      if (gcd_int(mu, Int(2 * a * a)) != 1) continue;
      for (int alpha : {1, -1}) {
        Int prev_t = -11;
        for (const FamilyEntry& e : family(a, mu, alpha, -10, 10)) {
          CAPTURE(a);
          CAPTURE(to_string(mu));
          CAPTURE(alpha);
          CAPTURE(to_string(e.t));
          CHECK(e.t > prev_t);
          prev_t = e.t;
          CHECK(e.d > 0);
          CHECK(e.p == mu + 2 * e.t * a);
          CHECK(e.p * e.p - e.d == 4 * a * alpha);
          CHECK(mod_floor(e.t * mu - alpha, a) == 0);
          CHECK(mod_floor(e.d - mu * mu, 4 * a * a) == 0);
        }
      }
    }
  }
}

TEST_CASE("family degrees are decided YES and carry the q = 1 witness") {
  for (auto [a, mu] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 5}}) {
    for (int alpha : {1, -1}) {
      std::vector<FamilyEntry> fam = family(a, mu, alpha, -6, 6);
      Int cap = 0;
      for (const FamilyEntry& e : fam) cap = std::max(cap, e.d);
      std::vector<DivisorLabel> labels = enum_D(a, mu, alpha, cap);
      for (const FamilyEntry& e : fam) {
        CAPTURE(a);
        CAPTURE(mu);
        CAPTURE(alpha);
        CAPTURE(to_string(e.d));
        CHECK(decide(PolarizedRank2::make(a, e.d, mu)).verdict);
        const DivisorLabel* label = find_label(labels, e.d);
        REQUIRE(label != nullptr);
        // (p, 1) sits at the valley of its orbit, so it is stored verbatim
        auto ws = wits_of(*label);
        CHECK(std::count(ws.begin(), ws.end(),
                         Wit{alpha, static_cast<long long>(e.p), 1}) == 1);
      }
    }
  }
}

TEST_CASE("enum_D covers and excludes the frozen degree-8 lists") {
  auto dset = [](const std::vector<DivisorLabel>& labels) {
    std::set<long long> out;
    for (const DivisorLabel& l : labels) out.insert(static_cast<long long>(l.d));
    return out;
  };
  std::set<long long> plus = dset(enum_D(2, 1, 1, 200));
  for (long long d : {1, 17, 113, 161}) CHECK(plus.count(d));
  for (long long d : {33, 49, 65, 81, 145}) CHECK_FALSE(plus.count(d));
  std::set<long long> minus = dset(enum_D(2, 1, -1, 200));
  for (long long d : {1, 17, 33, 129, 177}) CHECK(minus.count(d));
  for (long long d : {49, 65, 81, 145, 161}) CHECK_FALSE(minus.count(d));
  // labeled d admit verified witnesses; unlabeled d have no small solution
  for (int alpha : {1, -1}) {
    const auto& labels = alpha == 1 ? plus : minus;
    for (Int d = 1; d <= 200; d += 16) {
      bool brute_hit = false;
      for (const auto& [balpha, p, q] : brute::route_b_box(2, d, 1, 500))
        brute_hit = brute_hit || balpha == alpha;
      CAPTURE(alpha);
      CAPTURE(to_string(d));
      if (!labels.count(static_cast<long long>(d))) CHECK_FALSE(brute_hit);
    }
  }
}

TEST_CASE("enum_div tables at a = 2 match hand-solved witness lists") {
  std::vector<DivisorLabel> t20 = enum_div(2, 20);
  REQUIRE(t20.size() == 3);
  CHECK(t20[0].d == 1);
  CHECK(t20[0].mu == 1);
  CHECK(t20[0].square_discriminant);
  CHECK(wits_of(t20[0]) == std::vector<Wit>{{1, -3, 1}, {-1, -1, 3}});
  CHECK(t20[1].d == 9);
  CHECK(t20[1].mu == 3);
  CHECK(t20[1].square_discriminant);
  CHECK(wits_of(t20[1]) == std::vector<Wit>{{-1, -1, 1}});
  CHECK(t20[2].d == 17);
  CHECK(t20[2].mu == 1);
  CHECK_FALSE(t20[2].square_discriminant);
  CHECK(wits_of(t20[2]) == std::vector<Wit>{{1, 5, 1}, {-1, -3, 1}});

  std::vector<DivisorLabel> t50 = enum_div(2, 50);
  std::vector<std::pair<long long, long long>> keys;
  for (const DivisorLabel& l : t50)
    keys.push_back({static_cast<long long>(l.d), static_cast<long long>(l.mu)});
  CHECK(keys == std::vector<std::pair<long long, long long>>{
                    {1, 1}, {9, 3}, {17, 1}, {33, 1}, {41, 3}});
  CHECK(wits_of(*find_label(t50, 33)) == std::vector<Wit>{{-1, 5, 1}});
  CHECK(wits_of(*find_label(t50, 41)) == std::vector<Wit>{{1, 7, 1}, {-1, -19, 3}});
}

TEST_CASE("enum_div table at a = 3 matches hand-solved witness lists") {
  std::vector<DivisorLabel> t40 = enum_div(3, 40);
  std::vector<long long> ds;
  for (const DivisorLabel& l : t40) ds.push_back(static_cast<long long>(l.d));
  CHECK(ds == std::vector<long long>{1, 13, 37});
  CHECK(wits_of(t40[0]) == std::vector<Wit>{{1, -4, 2}, {-1, -2, 4}});
  CHECK(t40[0].square_discriminant);
  CHECK(t40[1].mu == 7);
  auto w13 = wits_of(t40[1]);
  for (Wit w : {Wit{1, -5, 1}, Wit{1, 8, 2}, Wit{-1, 1, 1}, Wit{-1, -14, 4}})
    CHECK(std::count(w13.begin(), w13.end(), w) == 1);
  CHECK(wits_of(t40[2]) == std::vector<Wit>{{1, 7, 1}, {-1, -5, 1}});
}

TEST_CASE("stored witnesses cover every small solution up to the unit orbit") {
  for (const DivisorLabel& label : enum_div(2, 120)) {
    if (label.square_discriminant) continue;
    std::set<std::pair<Int, Int>> reps;
    for (const WitnessPQ& w : label.witnesses)
      if (w.alpha == 1) {
        PellWitness r = canonical_class_rep(label.d, {w.p, w.q});
        reps.insert({r.x, r.y});
      }
    for (const auto& [alpha, p, q] : brute::route_b_box(2, label.d, label.mu, 60)) {
      if (alpha != 1) continue;
      PellWitness r = canonical_class_rep(label.d, {p, q});
      CAPTURE(to_string(label.d));
      CAPTURE(to_string(p));
      CAPTURE(to_string(q));
      CHECK(reps.count({r.x, r.y}));
    }
  }
}

TEST_CASE("label invariants hold across degrees and parallel runs agree") {
  for (auto [a, cap] : std::vector<std::pair<int, int>>{{2, 300}, {3, 200}, {5, 120}}) {
    std::vector<DivisorLabel> labels = enum_div(a, cap);
    std::pair<Int, Int> prev{-1, -1};
    for (const DivisorLabel& label : labels) {
      CAPTURE(a);
      CAPTURE(to_string(label.d));
      std::pair<Int, Int> key{label.d, label.mu};
      CHECK(prev < key);
      prev = key;
      CHECK(label.d <= cap);
      CHECK(label.mu == mu_class_min(label.mu, a));
      CHECK(gcd_int(label.mu, Int(2 * a * a)) == 1);
      CHECK(mod_floor(label.d - label.mu * label.mu, Int(4 * a * a)) == 0);
      Int root;
      CHECK(label.square_discriminant == is_perfect_square(label.d, &root));
      REQUIRE(!label.witnesses.empty());
      auto ws = wits_of(label);
      CHECK(std::is_sorted(ws.begin(), ws.end(), [](const Wit& l, const Wit& r) {
        return std::make_tuple(-std::get<0>(l), std::get<2>(l), std::get<1>(l)) <
               std::make_tuple(-std::get<0>(r), std::get<2>(r), std::get<1>(r));
      }));
      CHECK(std::set<Wit>(ws.begin(), ws.end()).size() == ws.size());
      for (const WitnessPQ& w : label.witnesses) {
        CHECK(w.q > 0);
        CHECK(w.p * w.p - label.d * w.q * w.q == 4 * a * w.alpha);
        CHECK(mod_floor(w.p - label.mu * w.q, Int(2 * a)) == 0);
      }
      CHECK(decide(PolarizedRank2::make(a, label.d, label.mu)).verdict);
    }
  }
  CHECK(labels_equal(enum_div(2, 300, 1), enum_div(2, 300, 4)));
  CHECK(labels_equal(enum_div(3, 150, 1), enum_div(3, 150, 3)));
}

TEST_CASE("mu_lift reproduces frozen lifts") {
  CHECK(mu_lift(2, 17, 1) == 1);
  CHECK(mu_lift(2, 17, 3) == 7);
  CHECK(mu_lift(2, 9, 3) == 3);
  CHECK(mu_lift(3, 37, 5) == 17);
  CHECK(mu_lift(5, 101, 9) == 49);
  CHECK(mu_lift(1, 5, 1) == 1);
}

TEST_CASE("mu_lift is the unique lift of its residue") {
  for (int a = 1; a <= 4; ++a) {
    for (Int d = 1; d <= 200; d += 4) {
      for (Int nu = 1; nu < 2 * a; ++nu) {
        if (gcd_int(nu, Int(2 * a)) != 1) continue;
        if (mod_floor(nu * nu - d, Int(4 * a)) != 0) continue;
        std::vector<Int> hits;
        for (Int mu = 0; mu < 2 * a * a; ++mu) {
          if (mod_floor(mu - nu, Int(2 * a)) != 0) continue;
          if (mod_floor(mu * mu - d, Int(4 * a * a)) != 0) continue;
          hits.push_back(mu);
        }
        CAPTURE(a);
        CAPTURE(to_string(d));
        CAPTURE(to_string(nu));
        REQUIRE(hits.size() == 1);
        CHECK(mu_lift(a, d, nu) == hits[0]);
      }
    }
  }
}

TEST_CASE("enumeration entry points validate their arguments") {
  CHECK_THROWS_AS(family(0, 1, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(family(2, 2, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(family(2, 1, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enum_D(1, 1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(enum_D(2, 4, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(enum_D(2, 1, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(enum_D(2, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enum_div(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(enum_div(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(mu_lift(0, 17, 1), std::invalid_argument);
  CHECK_THROWS_AS(mu_lift(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(mu_lift(2, 17, 2), std::invalid_argument);
  CHECK_THROWS_AS(mu_lift(2, 21, 1), std::invalid_argument);
}
