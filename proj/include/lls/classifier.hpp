#pragma once

#include <optional>
#include <string_view>

#include "lls/core_sequences.hpp"

namespace lls {

/// How to decide whether the EH stratum of a pair is nonempty,
/// which the open-subset verdict needs but the combinatorics cannot supply.
enum class NonemptyPolicy {
  AssumeNonempty,  // trust the caller
  AssumeEmpty,     // verdict is always false
  GenusZero,       // every pair is realized when g = 0; g > 0 is an error
  RhoHeuristic,    // nonempty iff rho - sigma >= 0; a guess, not a theorem
};

inline constexpr NonemptyPolicy kDefaultPolicy = NonemptyPolicy::RhoHeuristic;

std::string_view to_string(NonemptyPolicy policy);
std::optional<NonemptyPolicy> parse_policy(std::string_view name);
bool is_heuristic(NonemptyPolicy policy);

struct StratumReport {
  int rho = 0;
  int sigma = 0;
  int ehDim = 0;      // rho - sigma, not clamped
  int fiberMax = 0;   // max dimension over admissible triples
  int total = 0;      // ehDim + fiberMax
  bool connected = false;
  bool refined = false;
  NonemptyPolicy nonemptyPolicy = kDefaultPolicy;
  bool nonempty = false;
  bool openSubset = false;

  friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

/// (r+1)(d-r) - r g. May be negative.
int brill_noether(int r, int d, int g);

/// rho - sigma: dimension of the stratum on a general curve.
int eh_stratum_dimension(const VanishingPair& pair, int g);

/// Throws InvalidRange for g < 0, InvalidPolicy for GenusZero with g > 0.
StratumReport classify(const VanishingPair& pair, int g, NonemptyPolicy policy = kDefaultPolicy);

}  // namespace lls
