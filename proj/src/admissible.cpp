#include "lls/admissible.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lls {

namespace {

std::size_t at(int j) { return static_cast<std::size_t>(j); }

void check_lengths(const VanishingPair& pair, const AdmissibleTriple& t) {
  const auto beta_len = at(pair.d()) + 1;
  const auto eps_len = pair.d() >= 1 ? at(pair.d() - 1) : 0;
  if (t.betaY.size() != beta_len || t.betaZ.size() != beta_len || t.eps.size() != eps_len) {
    throw Error(ErrorKind::LengthMismatch, std::nullopt, std::nullopt,
                "triple needs betaY/betaZ of length d+1 = " + std::to_string(beta_len) +
                    " and eps of length " + std::to_string(eps_len));
  }
}

void require_admissible(const VanishingPair& pair, const AdmissibleTriple& t) {
  const auto v = check_admissible(pair, t);
  if (!v.empty()) {
    throw Error(ErrorKind::NotAdmissible, std::nullopt, std::nullopt,
                std::string(to_string(v.front().cond)) + " fails at j=" + std::to_string(v.front().j));
  }
}

}  // namespace

bool operator<(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  auto key_less = [](const std::vector<int>& x, std::size_t xb, std::size_t xe,
                     const std::vector<int>& y, std::size_t yb, std::size_t ye) {
    return std::lexicographical_compare(x.begin() + static_cast<std::ptrdiff_t>(xb),
                                        x.begin() + static_cast<std::ptrdiff_t>(xe),
                                        y.begin() + static_cast<std::ptrdiff_t>(yb),
                                        y.begin() + static_cast<std::ptrdiff_t>(ye));
  };
  const auto aY = a.betaY.size(), bY = b.betaY.size();
  const auto aZ = a.betaZ.size(), bZ = b.betaZ.size();
  // betaY[1..], betaZ[..d-1], eps.
  if (aY == 0 || bY == 0 || aZ == 0 || bZ == 0) return aY < bY;
  if (key_less(a.betaY, 1, aY, b.betaY, 1, bY)) return true;
  if (key_less(b.betaY, 1, bY, a.betaY, 1, aY)) return false;
  if (key_less(a.betaZ, 0, aZ - 1, b.betaZ, 0, bZ - 1)) return true;
  if (key_less(b.betaZ, 0, bZ - 1, a.betaZ, 0, aZ - 1)) return false;
  return a.eps < b.eps;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
    case Condition::C5: return "C5";
    case Condition::C6: return "C6";
  }
  return "C?";
}

std::vector<Violation> check_admissible(const VanishingPair& pair, const AdmissibleTriple& t) {
  check_lengths(pair, t);
  const int r1 = pair.r() + 1;
  const int d = pair.d();
  const auto b = b_sequences(pair);
  const auto& bY = b.bY;
  const auto& bZ = b.bZ;
  const auto& Y = t.betaY;
  const auto& Z = t.betaZ;

  std::vector<Violation> out;
  auto fail = [&](Condition c, int j) { out.push_back({c, j}); };

  // C6 at the left endpoint.
  if (Y[0] != r1 || Z[0] != (pair.aY(0) == 0 ? 1 : 0)) fail(Condition::C6, 0);

  for (int j = 1; j <= d - 1; ++j) {
    const int e = t.epsAt(j);
    if ((e != 0 && e != 1) || (e == 1 && !(pair.inY(j) && pair.inZ(d - j)))) fail(Condition::C1, j);
    const int y = Y[at(j)] - e;
    if (!(bY[at(j + 1)] >= y && y >= Y[at(j + 1)])) fail(Condition::C2, j);
    const int z = Z[at(j)] - e;
    if (!(bZ[at(j - 1)] >= z && z >= Z[at(j - 1)])) fail(Condition::C3, j);
    if (Y[at(j)] + Z[at(j)] - e < r1) fail(Condition::C4, j);
    if (r1 < Y[at(j + 1)] + Z[at(j)] || r1 < Y[at(j)] + Z[at(j - 1)]) fail(Condition::C5, j);
  }

  // C6 at the right endpoint. With d = 0 both endpoints are index 0.
  const bool right_ok = Z[at(d)] == r1 && Y[at(d)] == (pair.aZ(0) == 0 ? 1 : 0);
  if (!right_ok && !(d == 0 && !out.empty())) fail(Condition::C6, d);
  return out;
}

bool is_admissible(const VanishingPair& pair, const AdmissibleTriple& triple) {
  return check_admissible(pair, triple).empty();
}

int detail::dimension_formula(int r, const BSequences& b, const AdmissibleTriple& t) {
  const int r1 = r + 1;
  const int d = static_cast<int>(t.betaY.size()) - 1;
  const auto& Y = t.betaY;
  const auto& Z = t.betaZ;
  int sum = 0;
  for (int j = 1; j <= d - 1; ++j) {
    const int e = t.epsAt(j);
    sum += (Y[at(j)] - Y[at(j + 1)]) * (b.bY[at(j + 1)] - Y[at(j)] + e);
    sum += (Z[at(j)] - Z[at(j - 1)]) * (b.bZ[at(j - 1)] - Z[at(j)] + e);
    sum += (r1 - Y[at(j + 1)] - Z[at(j - 1)]) * (Y[at(j)] + Z[at(j)] - e - r1);
  }
  return sum;
}

int dimension(const VanishingPair& pair, const AdmissibleTriple& t) {
  require_admissible(pair, t);
  return detail::dimension_formula(pair.r(), b_sequences(pair), t);
}

std::vector<int> SyncData::diag_preimage(int j) const {
  std::vector<int> out;
  for (int i = iLow; i <= iHigh; ++i) {
    if (at(i) == SyncPoint{j, j}) out.push_back(i);
  }
  return out;
}

std::vector<int> SyncData::off_preimage(int j) const {
  std::vector<int> out;
  for (int i = iLow; i <= iHigh; ++i) {
    if (at(i) == SyncPoint{j - 1, j}) out.push_back(i);
  }
  return out;
}

SyncData sync_map(const VanishingPair& pair, const AdmissibleTriple& t) {
  require_admissible(pair, t);
  const int r = pair.r();
  const int d = pair.d();
  const auto& Y = t.betaY;
  const auto& Z = t.betaZ;

  SyncData s;
  s.iLow = Z[0];
  s.iHigh = r - Y[at(d)];
  for (int i = s.iLow; i <= s.iHigh; ++i) {
    int j1 = -1;
    int j2 = -1;
    for (int j = 0; j <= d - 1; ++j) {
      if (r + 1 - Y[at(j)] <= i && i <= r - Y[at(j + 1)]) {
        if (j1 != -1) throw std::logic_error("sync_map: j1 not unique");
        j1 = j;
      }
    }
    for (int j = 1; j <= d; ++j) {
      if (Z[at(j - 1)] <= i && i <= Z[at(j)] - 1) {
        if (j2 != -1) throw std::logic_error("sync_map: j2 not unique");
        j2 = j;
      }
    }
    if (j1 == -1 || j2 == -1) throw std::logic_error("sync_map: index without image");
    s.psi.push_back({j1, j2});
    if (j1 == j2) {
      if (s.Jdiag.empty() || s.Jdiag.back() != j1) s.Jdiag.push_back(j1);
    } else {
      if (s.Joff.empty() || s.Joff.back() != j2) s.Joff.push_back(j2);
    }
  }
  // psi is monotone in i, but diagonal and off-diagonal images interleave.
  std::sort(s.Jdiag.begin(), s.Jdiag.end());
  s.Jdiag.erase(std::unique(s.Jdiag.begin(), s.Jdiag.end()), s.Jdiag.end());
  std::sort(s.Joff.begin(), s.Joff.end());
  s.Joff.erase(std::unique(s.Joff.begin(), s.Joff.end()), s.Joff.end());
  return s;
}

int dimension_via_sync(const VanishingPair& pair, const AdmissibleTriple& t) {
  const auto s = sync_map(pair, t);
  const int r1 = pair.r() + 1;
  const auto b = b_sequences(pair);
  int sum = 0;
  for (const int j : s.Jdiag) {
    const auto count = static_cast<int>(s.diag_preimage(j).size());
    sum += count * (b.bY[at(j + 1)] + b.bZ[at(j - 1)] + t.epsAt(j) - r1);
  }
  for (const int j : s.Joff) {
    const auto count = static_cast<int>(s.off_preimage(j).size());
    sum += count * ((b.bY[at(j)] + t.betaZ[at(j - 1)] - r1) + (b.bZ[at(j - 1)] + t.betaY[at(j)] - r1));
  }
  return sum;
}

}  // namespace lls
