#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lls/admissible.hpp"
#include "lls/core_sequences.hpp"

namespace lls {

/// Default cap on d for sweeps; overridable per call.
inline constexpr int kDefaultBudget = 8;

/// Visits every pair for (r, d) that passes validate_pair exactly once, in
/// lexicographic order of (aY, aZ). Throws InvalidRange unless 0 <= r <= d.
void for_each_pair(int r, int d, const std::function<void(const VanishingPair&)>& visit);
std::vector<VanishingPair> enumerate_pairs(int r, int d);

/// Visits every admissible triple of the pair exactly once, in the order of
/// AdmissibleTriple::operator<. Backtracks over beta^Y, then beta^Z, then
/// eps, pruning with the monotonicity and b-bounds every admissible triple
/// obeys.
void for_each_triple(const VanishingPair& pair,
                     const std::function<void(const AdmissibleTriple&)>& visit);
std::vector<AdmissibleTriple> enumerate_triples(const VanishingPair& pair);

struct MaxDimension {
  int value = 0;
  AdmissibleTriple argmax;      // first maximizer in enumeration order
  std::size_t maximizers = 0;   // number of triples attaining value
  std::size_t triples = 0;      // number of admissible triples seen
};

/// Throws std::logic_error if the pair has no admissible triple.
MaxDimension max_dimension(const VanishingPair& pair);

/// A triple whose dimension exceeds the ramification sum.
struct Counterexample {
  VanishingPair pair;
  AdmissibleTriple triple;
  int lhs;  // dimension
  int rhs;  // ramification sum
};

/// A pair where "max dimension equals the ramification sum" and
/// "connected" disagree, or where the constructed triple is not optimal.
struct EquivalenceFailure {
  VanishingPair pair;
  int maxDimension;
  int sigma;
  bool connected;
  std::string reason;
};

struct SweepReport {
  int r = 0;
  int d = 0;
  std::size_t pairsChecked = 0;
  std::size_t triplesChecked = 0;
  std::vector<Counterexample> violations;
  std::vector<EquivalenceFailure> equivalenceFailures;

  bool verified() const noexcept { return violations.empty() && equivalenceFailures.empty(); }
  /// Appends `later`, which must cover pairs after this report's in
  /// enumeration order.
  void merge(SweepReport later);
};

struct SweepOptions {
  int budget = kDefaultBudget;
  unsigned workers = 1;
  /// Called with (pairs done, pairs total); may be invoked from worker threads
  /// but never concurrently.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Checks dimension <= ramification sum for every (pair, admissible triple).
/// Throws InvalidRange, or BudgetExceeded when d > options.budget.
SweepReport verify_upper_bound(int r, int d, const SweepOptions& options = {});

/// Checks, per pair, that max dimension == ramification sum exactly when the
/// pair is connected, and that build_optimal_triple reaches that maximum.
SweepReport verify_equivalence(int r, int d, const SweepOptions& options = {});

/// Both sweeps in one pass over the pairs.
SweepReport verify_theorems(int r, int d, const SweepOptions& options = {});

}  // namespace lls
