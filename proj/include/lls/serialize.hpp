#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lls/admissible.hpp"
#include "lls/classifier.hpp"
#include "lls/construction.hpp"
#include "lls/core_sequences.hpp"
#include "lls/enumeration.hpp"

namespace lls {

using nlohmann::json;

// Pair: {"r": int, "d": int, "aY": [...], "aZ": [...]}
json to_json(const VanishingPair& pair);
/// Throws std::invalid_argument on a malformed document and lls::Error when
/// the sequences fail validation.
VanishingPair pair_from_json(const json& j);

// Triple: {"betaY": [...], "betaZ": [...], "eps": [...]}
json to_json(const AdmissibleTriple& triple);
AdmissibleTriple triple_from_json(const json& j);

// [{"cond": "C4", "j": 3}, ...]
json to_json(const std::vector<Violation>& violations);

json to_json(const BSequences& b);
json to_json(const ConnectivityWitness& w);
json to_json(const SyncData& s);

// {"frakJ": [...], "J": [...], "Isizes": [...]}
json to_json(const ConstructionTrace& trace);

json to_json(const SweepReport& report);
json to_json(const StratumReport& report);

/// Summary header and row, then one row per counterexample with the pair and
/// triple embedded as JSON.
std::string to_csv(const SweepReport& report);
std::string stratum_csv_header();
std::string to_csv_row(const StratumReport& report);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& raw);

}  // namespace lls
