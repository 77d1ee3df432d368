#include "k3iso/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "k3iso/lattice.hpp"

namespace k3iso {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (abs_int(v) <= kSafeMax) return nlohmann::json(v.convert_to<long long>());
  return nlohmann::json(to_string(v));
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("int_from_json: expected integer or string");
}

nlohmann::json rat_to_json(const Rat& v) {
  nlohmann::json j;
  j["num"] = int_to_json(numerator(v));
  j["den"] = int_to_json(denominator(v));
  return j;
}

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int& e : v) j.push_back(int_to_json(e));
  return j;
}

nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const Vec& row : m) j.push_back(vec_to_json(row));
  return j;
}

nlohmann::json witness_to_json(const OracleWitness& w, const Int& a) {
  nlohmann::json j;
  j["alpha"] = w.alpha;
  j["p"] = int_to_json(w.p);
  j["q"] = int_to_json(w.q);
  j["x"] = int_to_json(w.x);
  j["y"] = int_to_json(w.y);
  j["h1"] = nlohmann::json::array({int_to_json(w.h1x), int_to_json(w.h1y)});
  j["h1_sq"] = int_to_json(Int(2) * w.alpha * a);
  return j;
}

nlohmann::json decision_to_json(const Decision& dec, const Int& a) {
  nlohmann::json j;
  j["verdict"] = dec.verdict ? "YES" : "NO";
  nlohmann::json wits = nlohmann::json::array();
  for (const OracleWitness& w : dec.witnesses)
    wits.push_back(witness_to_json(w, a));
  j["witnesses"] = wits;
  j["route_agreement"] = dec.route_agreement;
  j["lattice_only"] = dec.lattice_only;
  j["gamma_assumption"] = dec.gamma_assumption;
  return j;
}

nlohmann::json invariants_to_json(const ModelFrame& frame) {
  nlohmann::json j;
  j["a"] = int_to_json(frame.invariants.a);
  j["d"] = int_to_json(frame.invariants.d);
  j["mu"] = int_to_json(frame.invariants.mu);
  j["mu_raw"] = int_to_json(frame.mu_raw);
  j["delta"] = vec_to_json(frame.delta);
  return j;
}

nlohmann::json pell_solutions_to_json(const std::vector<PellWitness>& sols) {
  nlohmann::json j = nlohmann::json::array();
  for (const PellWitness& w : sols) {
    nlohmann::json e;
    e["x"] = int_to_json(w.x);
    e["y"] = int_to_json(w.y);
    j.push_back(e);
  }
  return j;
}

nlohmann::json family_to_json(const std::vector<FamilyEntry>& entries) {
  nlohmann::json j = nlohmann::json::array();
  for (const FamilyEntry& e : entries) {
    nlohmann::json f;
    f["t"] = int_to_json(e.t);
    f["d"] = int_to_json(e.d);
    f["p"] = int_to_json(e.p);
    j.push_back(f);
  }
  return j;
}

nlohmann::json divisor_label_to_json(const DivisorLabel& label) {
  nlohmann::json j;
  j["d"] = int_to_json(label.d);
  j["mu"] = int_to_json(label.mu);
  nlohmann::json wits = nlohmann::json::array();
  for (const WitnessPQ& w : label.witnesses) {
    nlohmann::json e;
    e["alpha"] = w.alpha;
    e["p"] = int_to_json(w.p);
    e["q"] = int_to_json(w.q);
    wits.push_back(e);
  }
  j["witnesses"] = wits;
  j["square_discriminant"] = label.square_discriminant;
  return j;
}

nlohmann::json enumeration_to_json(const std::vector<DivisorLabel>& labels) {
  nlohmann::json j = nlohmann::json::array();
  for (const DivisorLabel& label : labels) j.push_back(divisor_label_to_json(label));
  return j;
}

nlohmann::json mukai_report_to_json(const PolarizedRank2& P) {
  NYPresentation ny = ny_presentation(P);
  GramLattice nx = GramLattice::from(gram_of(P));
  nlohmann::json j;
  j["ny_gram"] = mat_to_json(ny.gram.gram());
  j["h"] = vec_to_json(ny.h);
  j["det_nx"] = int_to_json(nx.det());
  j["det_ny"] = int_to_json(ny.gram.det());
  j["q"] = int_to_json(transcendental_index(P.a, Int(1)));
  return j;
}

nlohmann::json mu_lift_to_json(const Int& a, const Int& d, const Int& nu,
                               const Int& mu) {
  nlohmann::json j;
  j["a"] = int_to_json(a);
  j["d"] = int_to_json(d);
  j["nu"] = int_to_json(nu);
  j["mu"] = int_to_json(mu);
  return j;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string enumeration_to_tsv(const Int& a,
                               const std::vector<DivisorLabel>& labels) {
  std::ostringstream out;
  out << "d\tmu\talpha\tp\tq\tx\ty\tsquare_discriminant\n";
  for (const DivisorLabel& label : labels) {
    PolarizedRank2 P = PolarizedRank2::make(a, label.d, label.mu);
    for (const WitnessPQ& w : label.witnesses) {
      auto [x, y] = associated(w.alpha, w.p, w.q, P);
      out << to_string(label.d) << '\t' << to_string(label.mu) << '\t'
          << w.alpha << '\t' << to_string(w.p) << '\t' << to_string(w.q)
          << '\t' << to_string(x) << '\t' << to_string(y) << '\t'
          << (label.square_discriminant ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace k3iso
