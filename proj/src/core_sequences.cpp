#include "lls/core_sequences.hpp"

#include <string>
#include <utility>

namespace lls {

namespace {

std::vector<int> run_table(int d, const std::vector<int>& seq) {
  std::vector<int> runs(static_cast<std::size_t>(d) + 1, 0);
  for (int v : seq) {
    runs[static_cast<std::size_t>(v)] = (v > 0 ? runs[static_cast<std::size_t>(v - 1)] : 0) + 1;
  }
  return runs;
}

void check_side(Side side, int d, const std::vector<int>& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const int index = static_cast<int>(k);
    if (seq[k] < 0 || seq[k] > d) throw Error(ErrorKind::OutOfRange, side, index);
    if (k > 0 && seq[k] <= seq[k - 1]) throw Error(ErrorKind::NotStrictlyIncreasing, side, index);
  }
}

}  // namespace

VanishingPair::VanishingPair(int r, int d, std::vector<int> aY, std::vector<int> aZ)
    : r_(r), d_(d), aY_(std::move(aY)), aZ_(std::move(aZ)) {
  runY_ = run_table(d_, aY_);
  runZ_ = run_table(d_, aZ_);
}

VanishingPair validate_pair(int r, int d, std::vector<int> aY, std::vector<int> aZ) {
  if (r < 0 || d < 0) {
    throw Error(ErrorKind::InvalidRange, std::nullopt, std::nullopt, "r and d must be nonnegative");
  }
  if (d > kMaxDegree) {
    throw Error(ErrorKind::InvalidRange, std::nullopt, std::nullopt,
                "d exceeds " + std::to_string(kMaxDegree));
  }
  const auto len = static_cast<std::size_t>(r) + 1;
  if (aY.size() != len || aZ.size() != len) {
    throw Error(ErrorKind::LengthMismatch, std::nullopt, std::nullopt,
                "expected r+1 = " + std::to_string(len) + " entries, got " +
                    std::to_string(aY.size()) + " and " + std::to_string(aZ.size()));
  }
  check_side(Side::Y, d, aY);
  check_side(Side::Z, d, aZ);
  for (int i = 0; i <= r; ++i) {
    if (aY[static_cast<std::size_t>(i)] + aZ[static_cast<std::size_t>(r - i)] < d) {
      throw Error(ErrorKind::A3Violation, std::nullopt, i);
    }
  }
  return VanishingPair(r, d, std::move(aY), std::move(aZ));
}

BSequences b_sequences(const VanishingPair& pair) {
  const int d = pair.d();
  BSequences b;
  b.bY.assign(static_cast<std::size_t>(d) + 1, 0);
  b.bZ.assign(static_cast<std::size_t>(d) + 1, 0);
  // Count each a_i into every j it dominates via a difference array.
  for (int a : pair.aY()) b.bY[static_cast<std::size_t>(a)] += 1;
  for (int a : pair.aZ()) b.bZ[static_cast<std::size_t>(d - a)] += 1;
  for (int j = d - 1; j >= 0; --j) b.bY[static_cast<std::size_t>(j)] += b.bY[static_cast<std::size_t>(j) + 1];
  for (int j = 1; j <= d; ++j) b.bZ[static_cast<std::size_t>(j)] += b.bZ[static_cast<std::size_t>(j) - 1];
  return b;
}

int ramification_sum(const VanishingPair& pair) {
  const int r = pair.r();
  int sum = 0;
  for (int i = 0; i <= r; ++i) sum += pair.aY(i) + pair.aZ(r - i) - pair.d();
  return sum;
}

bool is_refined(const VanishingPair& pair) {
  const int r = pair.r();
  for (int i = 0; i <= r; ++i) {
    if (pair.aY(i) + pair.aZ(r - i) != pair.d()) return false;
  }
  return true;
}

bool connected_via(const VanishingPair& pair, int i, int j) {
  if (i < 0 || i > pair.r()) return false;
  const int topY = pair.aY(i);
  const int topZ = pair.aZ(pair.r() - i);
  const int lowZ = pair.d() - j;
  if (lowZ > topZ || j > topY) return false;
  // [j, topY] inside a^Y and [d - j, topZ] inside a^Z, both inclusive.
  return pair.runDownY(topY) >= topY - j + 1 && pair.runDownZ(topZ) >= topZ - lowZ + 1;
}

ConnectivityWitness connected_at(const VanishingPair& pair, int i) {
  if (i < 0 || i > pair.r()) throw Error(ErrorKind::IndexOutOfRange, std::nullopt, i);
  ConnectivityWitness w;
  w.i = i;
  const int lo = pair.d() - pair.aZ(pair.r() - i);
  const int hi = pair.aY(i);
  for (int j = lo; j <= hi; ++j) {
    if (connected_via(pair, i, j)) w.witnesses.push_back(j);
  }
  return w;
}

bool is_connected(const VanishingPair& pair) {
  for (int i = 0; i <= pair.r(); ++i) {
    if (connected_at(pair, i).empty()) return false;
  }
  return true;
}

}  // namespace lls
