#include "lls/classifier.hpp"

#include <string>

#include "lls/enumeration.hpp"

namespace lls {

std::string_view to_string(NonemptyPolicy policy) {
  switch (policy) {
    case NonemptyPolicy::AssumeNonempty: return "assume-nonempty";
    case NonemptyPolicy::AssumeEmpty: return "assume-empty";
    case NonemptyPolicy::GenusZero: return "genus-zero";
    case NonemptyPolicy::RhoHeuristic: return "rho-heuristic";
  }
  return "unknown";
}

std::optional<NonemptyPolicy> parse_policy(std::string_view name) {
  for (auto p : {NonemptyPolicy::AssumeNonempty, NonemptyPolicy::AssumeEmpty,
                 NonemptyPolicy::GenusZero, NonemptyPolicy::RhoHeuristic}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

bool is_heuristic(NonemptyPolicy policy) { return policy == NonemptyPolicy::RhoHeuristic; }

int brill_noether(int r, int d, int g) { return (r + 1) * (d - r) - r * g; }

int eh_stratum_dimension(const VanishingPair& pair, int g) {
  return brill_noether(pair.r(), pair.d(), g) - ramification_sum(pair);
}

StratumReport classify(const VanishingPair& pair, int g, NonemptyPolicy policy) {
  if (g < 0) {
    throw Error(ErrorKind::InvalidRange, std::nullopt, std::nullopt, "genus must be nonnegative");
  }
  if (policy == NonemptyPolicy::GenusZero && g != 0) {
    throw Error(ErrorKind::InvalidPolicy, std::nullopt, std::nullopt,
                "genus-zero policy needs g = 0, got g=" + std::to_string(g));
  }
  StratumReport s;
  s.rho = brill_noether(pair.r(), pair.d(), g);
  s.sigma = ramification_sum(pair);
  s.ehDim = s.rho - s.sigma;
  s.fiberMax = max_dimension(pair).value;
  s.total = s.ehDim + s.fiberMax;
  s.connected = is_connected(pair);
  s.refined = is_refined(pair);
  s.nonemptyPolicy = policy;
  switch (policy) {
    case NonemptyPolicy::AssumeNonempty: s.nonempty = true; break;
    case NonemptyPolicy::AssumeEmpty: s.nonempty = false; break;
    case NonemptyPolicy::GenusZero: s.nonempty = true; break;
    case NonemptyPolicy::RhoHeuristic: s.nonempty = s.ehDim >= 0; break;
  }
  s.openSubset = s.nonempty && s.connected;
  return s;
}

}  // namespace lls
