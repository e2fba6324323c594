#include "lls/construction.hpp"

#include <algorithm>
#include <string>

namespace lls {

int ConstructionTrace::jk(int k, int d) const {
  if (k <= 0) return 0;
  if (k > s()) return d;
  return J[static_cast<std::size_t>(k) - 1];
}

std::vector<int> ConstructionTrace::Isizes() const {
  std::vector<int> sizes;
  sizes.reserve(I.size());
  for (const auto& set : I) sizes.push_back(static_cast<int>(set.size()));
  return sizes;
}

int greatest_witness(const VanishingPair& pair, int i) {
  const auto w = connected_at(pair, i);
  if (w.empty()) throw Error(ErrorKind::NotConnectedAt, std::nullopt, i);
  return w.witnesses.back();
}

ConstructionTrace build_trace(const VanishingPair& pair) {
  const int r = pair.r();
  const int d = pair.d();
  ConstructionTrace t;
  t.frakJ.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    const auto w = connected_at(pair, i);
    if (w.empty()) {
      throw Error(ErrorKind::NotConnected, std::nullopt, std::nullopt,
                  "not connected at i=" + std::to_string(i));
    }
    t.frakJ.push_back(w.witnesses.back());
  }
  t.Jhat = t.frakJ;
  std::sort(t.Jhat.begin(), t.Jhat.end());
  t.Jhat.erase(std::unique(t.Jhat.begin(), t.Jhat.end()), t.Jhat.end());
  for (int j : t.Jhat) {
    if (j != 0 && j != d) t.J.push_back(j);
  }
  for (int k = 0; k <= t.s() + 1; ++k) {
    const int jk = t.jk(k, d);
    std::vector<int> members;
    for (int i = 0; i <= r; ++i) {
      if (t.frakJ[static_cast<std::size_t>(i)] >= jk) members.push_back(i);
    }
    t.I.push_back(std::move(members));
  }
  return t;
}

AdmissibleTriple build_optimal_triple(const VanishingPair& pair, const ConstructionTrace& trace) {
  const int r1 = pair.r() + 1;
  const int d = pair.d();
  AdmissibleTriple out;
  out.betaY.assign(static_cast<std::size_t>(d) + 1, 0);
  out.betaZ.assign(static_cast<std::size_t>(d) + 1, 0);
  out.eps.assign(d >= 1 ? static_cast<std::size_t>(d) - 1 : 0, 0);
  out.betaY[0] = r1;
  out.betaZ[static_cast<std::size_t>(d)] = r1;
  for (int j : trace.J) out.eps[static_cast<std::size_t>(j) - 1] = 1;

  int k = 1;
  for (int j = 1; j <= d; ++j) {
    while (j > trace.jk(k, d)) ++k;
    const int size = static_cast<int>(trace.I[static_cast<std::size_t>(k)].size());
    out.betaY[static_cast<std::size_t>(j)] = size;
    out.betaZ[static_cast<std::size_t>(j) - 1] = r1 - size;
  }
  // d = 0: betaY_0 = betaZ_0 = r+1 = 1 already.
  return out;
}

AdmissibleTriple build_optimal_triple(const VanishingPair& pair) {
  return build_optimal_triple(pair, build_trace(pair));
}

}  // namespace lls
