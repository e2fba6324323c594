#pragma once

#include <string_view>
#include <vector>

#include "lls/core_sequences.hpp"

namespace lls {

/// Candidate stratum data (beta^Y, beta^Z, eps) for a fiber over a pair.
/// betaY and betaZ have d+1 entries (indices 0..d); eps has d-1 entries,
/// eps[0] holding eps_1. Nothing is enforced on construction: use
/// check_admissible to test it against a pair.
struct AdmissibleTriple {
  std::vector<int> betaY;
  std::vector<int> betaZ;
  std::vector<int> eps;

  /// eps_j for 1 <= j <= d-1.
  int epsAt(int j) const { return eps.at(static_cast<std::size_t>(j) - 1); }

  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
  /// Lexicographic in (beta_1^Y..beta_d^Y, beta_0^Z..beta_{d-1}^Z, eps), the
  /// enumeration order. beta_0^Y and beta_d^Z are pinned to r+1 and skipped.
  friend bool operator<(const AdmissibleTriple& a, const AdmissibleTriple& b);
};

enum class Condition { C1, C2, C3, C4, C5, C6 };

std::string_view to_string(Condition c);

/// One failed condition at index j. C6 uses j = 0 or j = d for the
/// endpoint it concerns.
struct Violation {
  Condition cond;
  int j;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violated (condition, j), sorted by j then condition. Empty iff the
/// triple is admissible. Throws LengthMismatch when the sequence lengths do
/// not fit d.
std::vector<Violation> check_admissible(const VanishingPair& pair, const AdmissibleTriple& triple);

bool is_admissible(const VanishingPair& pair, const AdmissibleTriple& triple);

/// Stratum dimension, summed over j = 1..d-1:
///   (betaY_j - betaY_{j+1}) (bY_{j+1} - betaY_j + eps_j)
/// + (betaZ_j - betaZ_{j-1}) (bZ_{j-1} - betaZ_j + eps_j)
/// + (r+1 - betaY_{j+1} - betaZ_{j-1}) (betaY_j + betaZ_j - eps_j - r - 1).
/// Throws NotAdmissible.
int dimension(const VanishingPair& pair, const AdmissibleTriple& triple);

/// Image of one index i under the synchronization map: the unique j1 in
/// [0, d-1] with r+1-betaY_{j1} <= i <= r-betaY_{j1+1}, and the unique j2 in
/// [1, d] with betaZ_{j2-1} <= i <= betaZ_{j2}-1.
struct SyncPoint {
  int j1;
  int j2;

  bool diagonal() const noexcept { return j1 == j2; }
  friend bool operator==(const SyncPoint&, const SyncPoint&) = default;
};

struct SyncData {
  int iLow = 0;   // beta_0^Z
  int iHigh = -1; // r - beta_d^Y
  std::vector<SyncPoint> psi;  // psi[k] is the image of i = iLow + k
  std::vector<int> Jdiag;      // j in [1, d-1] hit as (j, j)
  std::vector<int> Joff;       // j in [1, d] hit as (j-1, j)

  bool contains(int i) const noexcept { return i >= iLow && i <= iHigh; }
  const SyncPoint& at(int i) const { return psi.at(static_cast<std::size_t>(i - iLow)); }

  std::vector<int> diag_preimage(int j) const;
  std::vector<int> off_preimage(int j) const;
};

/// Throws NotAdmissible.
SyncData sync_map(const VanishingPair& pair, const AdmissibleTriple& triple);

/// The same dimension re-indexed over the synchronization map: diagonal
/// preimages contribute bY_{j+1} + bZ_{j-1} + eps_j - r - 1 each, off-diagonal
/// ones (bY_j + betaZ_{j-1} - r - 1) + (bZ_{j-1} + betaY_j - r - 1) each.
/// Always agrees with dimension(). Throws NotAdmissible.
int dimension_via_sync(const VanishingPair& pair, const AdmissibleTriple& triple);

namespace detail {

/// The dimension formula without the admissibility check, for callers that
/// already know the triple is admissible and hold the b-sequences.
int dimension_formula(int r, const BSequences& b, const AdmissibleTriple& triple);

}  // namespace detail

}  // namespace lls
