#pragma once

#include <span>
#include <vector>

#include "lls/error.hpp"

namespace lls {

/// Largest degree accepted by validate_pair. Enumerations downstream are
/// quadratic in d, so anything beyond this is rejected up front.
inline constexpr int kMaxDegree = 1'000'000;

/// Vanishing sequences (a^Y, a^Z) of an EH limit g^r_d at the
/// node. Both sequences are strictly increasing in [0, d] and satisfy
/// a_i^Y + a_{r-i}^Z >= d. Only constructible through validate_pair, so every
/// instance is valid.
class VanishingPair {
 public:
  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  std::span<const int> aY() const noexcept { return aY_; }
  std::span<const int> aZ() const noexcept { return aZ_; }
  int aY(int i) const { return aY_.at(static_cast<std::size_t>(i)); }
  int aZ(int i) const { return aZ_.at(static_cast<std::size_t>(i)); }

  /// Membership j in a^Y (resp. a^Z); false for j outside [0, d].
  bool inY(int j) const noexcept { return run(runY_, j) > 0; }
  bool inZ(int j) const noexcept { return run(runZ_, j) > 0; }

  /// Length of the run of consecutive members v, v-1, v-2, ... of a^Y
  /// (resp. a^Z); zero when v is not a member.
  int runDownY(int v) const noexcept { return run(runY_, v); }
  int runDownZ(int v) const noexcept { return run(runZ_, v); }

  friend bool operator==(const VanishingPair& a, const VanishingPair& b) {
    return a.r_ == b.r_ && a.d_ == b.d_ && a.aY_ == b.aY_ && a.aZ_ == b.aZ_;
  }
  friend auto operator<=>(const VanishingPair& a, const VanishingPair& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (auto c = a.aY_ <=> b.aY_; c != 0) return c;
    return a.aZ_ <=> b.aZ_;
  }

 private:
  friend VanishingPair validate_pair(int, int, std::vector<int>, std::vector<int>);
  VanishingPair(int r, int d, std::vector<int> aY, std::vector<int> aZ);

  static int run(const std::vector<int>& table, int j) noexcept {
    if (j < 0 || j >= static_cast<int>(table.size())) return 0;
    return table[static_cast<std::size_t>(j)];
  }

  int r_;
  int d_;
  std::vector<int> aY_;
  std::vector<int> aZ_;
  std::vector<int> runY_;
  std::vector<int> runZ_;
};

/// b_j^Y = #{i : a_i^Y >= j} and b_j^Z = #{i : a_i^Z >= d - j}, for j = 0..d.
struct BSequences {
  std::vector<int> bY;
  std::vector<int> bZ;
};

/// All j at which a pair is connected at index i, ascending.
struct ConnectivityWitness {
  int i = 0;
  std::vector<int> witnesses;

  bool empty() const noexcept { return witnesses.empty(); }
};

/// Checks monotonicity, range and the pairing bound in that order and throws lls::Error on the first failure:
/// LengthMismatch, OutOfRange(side, index), NotStrictlyIncreasing(side, index)
/// or A3Violation(i). Negative r or d, or d above kMaxDegree, is InvalidRange.
VanishingPair validate_pair(int r, int d, std::vector<int> aY, std::vector<int> aZ);

BSequences b_sequences(const VanishingPair& pair);

/// Sum over i of (a_i^Y + a_{r-i}^Z - d). Zero exactly for refined pairs.
int ramification_sum(const VanishingPair& pair);

bool is_refined(const VanishingPair& pair);

/// True when every integer in [j, a_i^Y] lies in a^Y, every integer in
/// [d - j, a_{r-i}^Z] lies in a^Z, and d - a_{r-i}^Z <= j <= a_i^Y.
bool connected_via(const VanishingPair& pair, int i, int j);

/// Throws IndexOutOfRange unless 0 <= i <= r.
ConnectivityWitness connected_at(const VanishingPair& pair, int i);

bool is_connected(const VanishingPair& pair);

}  // namespace lls
