#pragma once

#include <string>

#include "json.hpp"

#include "k3iso/enumerate.hpp"
#include "k3iso/mukai.hpp"
#include "k3iso/numeric.hpp"
#include "k3iso/oracle.hpp"
#include "k3iso/pell.hpp"
#include "k3iso/picard2.hpp"

namespace k3iso {

// Integers with |v| <= 2^53 - 1 serialize as JSON numbers; anything larger
// becomes a decimal string so round-trips through double-based parsers stay
// exact.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& v);
nlohmann::json vec_to_json(const Vec& v);
nlohmann::json mat_to_json(const Mat& m);

nlohmann::json witness_to_json(const OracleWitness& w, const Int& a);
nlohmann::json decision_to_json(const Decision& dec, const Int& a);
nlohmann::json invariants_to_json(const ModelFrame& frame);
nlohmann::json pell_solutions_to_json(const std::vector<PellWitness>& sols);
nlohmann::json family_to_json(const std::vector<FamilyEntry>& entries);
nlohmann::json divisor_label_to_json(const DivisorLabel& label);
nlohmann::json enumeration_to_json(const std::vector<DivisorLabel>& labels);
nlohmann::json mukai_report_to_json(const PolarizedRank2& P);
nlohmann::json mu_lift_to_json(const Int& a, const Int& d, const Int& nu,
                               const Int& mu);

// Serialize with sorted keys and a trailing newline; byte-identical output
// for identical inputs.
std::string dump_json(const nlohmann::json& j);

std::string enumeration_to_tsv(const Int& a,
                               const std::vector<DivisorLabel>& labels);

}  // namespace k3iso
