#pragma once

#include <vector>

#include "lls/admissible.hpp"
#include "lls/core_sequences.hpp"

namespace lls {

/// Intermediate data of the optimal-triple construction for a connected pair.
struct ConstructionTrace {
  std::vector<int> frakJ;            // greatest witness j(i), for i = 0..r
  std::vector<int> Jhat;             // image of frakJ, ascending
  std::vector<int> J;                // Jhat without 0 and d: j_1 < ... < j_s
  std::vector<std::vector<int>> I;   // I_k = {i : j(i) >= j_k}, k = 0..s+1

  int s() const noexcept { return static_cast<int>(J.size()); }
  /// j_k with the conventions j_0 = 0 and j_{s+1} = d.
  int jk(int k, int d) const;
  std::vector<int> Isizes() const;
};

/// Largest j with the pair connected at i via j. Throws NotConnectedAt(i),
/// or IndexOutOfRange for i outside [0, r].
int greatest_witness(const VanishingPair& pair, int i);

/// Throws NotConnected.
ConstructionTrace build_trace(const VanishingPair& pair);

/// Admissible triple with dimension equal to ramification_sum(pair):
/// eps_j = 1 exactly on J, and for j_{k-1} < j <= j_k,
/// betaY_j = |I_k| and betaZ_{j-1} = r+1 - |I_k|. Throws NotConnected.
AdmissibleTriple build_optimal_triple(const VanishingPair& pair);
AdmissibleTriple build_optimal_triple(const VanishingPair& pair, const ConstructionTrace& trace);

}  // namespace lls
