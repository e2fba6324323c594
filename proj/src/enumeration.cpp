#include "lls/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lls/construction.hpp"

namespace lls {

namespace {

std::size_t at(int j) { return static_cast<std::size_t>(j); }

void check_range(int r, int d) {
  if (r < 0 || d < 0 || r > d) {
    throw Error(ErrorKind::InvalidRange, std::nullopt, std::nullopt,
                "need 0 <= r <= d, got r=" + std::to_string(r) + " d=" + std::to_string(d));
  }
}

// All (r+1)-subsets of {0..d} as ascending vectors, in lexicographic order.
std::vector<std::vector<int>> subsets(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(at(r) + 1);
  for (int k = 0; k <= r; ++k) cur[at(k)] = k;
  while (true) {
    out.push_back(cur);
    int k = r;
    while (k >= 0 && cur[at(k)] == d - r + k) --k;
    if (k < 0) break;
    ++cur[at(k)];
    for (int m = k + 1; m <= r; ++m) cur[at(m)] = cur[at(m - 1)] + 1;
  }
  return out;
}

class TripleSearch {
 public:
  TripleSearch(const VanishingPair& pair, const std::function<void(const AdmissibleTriple&)>& visit)
      : pair_(pair), b_(b_sequences(pair)), visit_(visit), r1_(pair.r() + 1), d_(pair.d()) {
    t_.betaY.assign(at(d_) + 1, 0);
    t_.betaZ.assign(at(d_) + 1, 0);
    t_.eps.assign(d_ >= 1 ? at(d_ - 1) : 0, 0);
    t_.betaY[0] = r1_;
    t_.betaZ[at(d_)] = r1_;
    t_.betaY[at(d_)] = pair.aZ(0) == 0 ? 1 : 0;
    t_.betaZ[0] = pair.aY(0) == 0 ? 1 : 0;
  }

  void run() {
    if (d_ == 0) {
      // Both endpoint rules land on index 0 and may disagree.
      if (is_admissible(pair_, t_)) visit_(t_);
      return;
    }
    chooseY(1);
  }

 private:
  // beta^Y_j for j = 1..d-1, nonincreasing and bounded by b^Y_j.
  void chooseY(int j) {
    if (j == d_) {
      chooseZ(1);
      return;
    }
    const int hi = std::min(t_.betaY[at(j - 1)], b_.bY[at(j)]);
    for (int v = t_.betaY[at(d_)]; v <= hi; ++v) {
      t_.betaY[at(j)] = v;
      chooseY(j + 1);
    }
  }

  // beta^Z_j for j = 1..d-1, nondecreasing, bounded by b^Z_j, with C5 and
  // the eps-free part of C4 checked as soon as both sides are known.
  void chooseZ(int j) {
    if (j == d_) {
      chooseEps(1);
      return;
    }
    const auto& Y = t_.betaY;
    const int lo = std::max(t_.betaZ[at(j - 1)], r1_ - Y[at(j)]);
    const int hi = std::min({b_.bZ[at(j)], r1_ - Y[at(j + 1)], t_.betaZ[at(d_)]});
    if (Y[at(j)] + t_.betaZ[at(j - 1)] > r1_) return;
    for (int v = lo; v <= hi; ++v) {
      t_.betaZ[at(j)] = v;
      chooseZ(j + 1);
    }
  }

  void chooseEps(int j) {
    if (j == d_) {
      visit_(t_);
      return;
    }
    const bool may_be_one = pair_.inY(j) && pair_.inZ(d_ - j);
    for (int e = 0; e <= (may_be_one ? 1 : 0); ++e) {
      t_.eps[at(j - 1)] = e;
      if (local_ok(j)) chooseEps(j + 1);
    }
    t_.eps[at(j - 1)] = 0;
  }

  // C2-C4 at j.
  bool local_ok(int j) const {
    const auto& Y = t_.betaY;
    const auto& Z = t_.betaZ;
    const int e = t_.eps[at(j - 1)];
    const int y = Y[at(j)] - e;
    const int z = Z[at(j)] - e;
    return b_.bY[at(j + 1)] >= y && y >= Y[at(j + 1)] && b_.bZ[at(j - 1)] >= z &&
           z >= Z[at(j - 1)] && Y[at(j)] + Z[at(j)] - e >= r1_;
  }

  const VanishingPair& pair_;
  BSequences b_;
  const std::function<void(const AdmissibleTriple&)>& visit_;
  int r1_;
  int d_;
  AdmissibleTriple t_;
};

struct PairOutcome {
  std::size_t triples = 0;
  std::vector<Counterexample> violations;
  std::vector<EquivalenceFailure> failures;
};

PairOutcome examine(const VanishingPair& pair, bool upper, bool equivalence) {
  PairOutcome out;
  const int sigma = ramification_sum(pair);
  const auto b = b_sequences(pair);
  bool any = false;
  int best = 0;
  for_each_triple(pair, [&](const AdmissibleTriple& t) {
    ++out.triples;
    const int dim = detail::dimension_formula(pair.r(), b, t);
    if (upper && dim > sigma) out.violations.push_back({pair, t, dim, sigma});
    if (!any || dim > best) best = dim;
    any = true;
  });
  if (!equivalence) return out;

  const bool connected = is_connected(pair);
  if (!any) {
    out.failures.push_back({pair, 0, sigma, connected, "no admissible triple"});
    return out;
  }
  if ((best == sigma) != connected) {
    out.failures.push_back({pair, best, sigma, connected,
                            connected ? "connected but max dimension below sigma"
                                      : "disconnected but max dimension equals sigma"});
    return out;
  }
  if (connected) {
    const auto t = build_optimal_triple(pair);
    if (!is_admissible(pair, t)) {
      out.failures.push_back({pair, best, sigma, connected, "constructed triple not admissible"});
    } else if (detail::dimension_formula(pair.r(), b, t) != best) {
      out.failures.push_back({pair, best, sigma, connected, "constructed triple not optimal"});
    }
  }
  return out;
}

SweepReport sweep(int r, int d, const SweepOptions& options, bool upper, bool equivalence) {
  check_range(r, d);
  if (d > options.budget) {
    throw Error(ErrorKind::BudgetExceeded, std::nullopt, std::nullopt,
                "d=" + std::to_string(d) + " exceeds budget " + std::to_string(options.budget));
  }
  const auto pairs = enumerate_pairs(r, d);
  std::vector<PairOutcome> outcomes(pairs.size());

  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      outcomes[k] = examine(pairs[k], upper, equivalence);
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++done, pairs.size());
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SweepReport report;
  report.r = r;
  report.d = d;
  report.pairsChecked = pairs.size();
  for (auto& o : outcomes) {
    report.triplesChecked += o.triples;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (auto& f : o.failures) report.equivalenceFailures.push_back(std::move(f));
  }
  return report;
}

}  // namespace

void for_each_pair(int r, int d, const std::function<void(const VanishingPair&)>& visit) {
  check_range(r, d);
  const auto subs = subsets(r, d);
  for (const auto& aY : subs) {
    for (const auto& aZ : subs) {
      bool ok = true;
      for (int i = 0; i <= r && ok; ++i) ok = aY[at(i)] + aZ[at(r - i)] >= d;
      if (ok) visit(validate_pair(r, d, aY, aZ));
    }
  }
}

std::vector<VanishingPair> enumerate_pairs(int r, int d) {
  std::vector<VanishingPair> out;
  for_each_pair(r, d, [&](const VanishingPair& p) { out.push_back(p); });
  return out;
}

void for_each_triple(const VanishingPair& pair,
                     const std::function<void(const AdmissibleTriple&)>& visit) {
  TripleSearch(pair, visit).run();
}

std::vector<AdmissibleTriple> enumerate_triples(const VanishingPair& pair) {
  std::vector<AdmissibleTriple> out;
  for_each_triple(pair, [&](const AdmissibleTriple& t) { out.push_back(t); });
  return out;
}

MaxDimension max_dimension(const VanishingPair& pair) {
  const auto b = b_sequences(pair);
  MaxDimension best;
  for_each_triple(pair, [&](const AdmissibleTriple& t) {
    const int dim = detail::dimension_formula(pair.r(), b, t);
    if (best.triples == 0 || dim > best.value) {
      best.value = dim;
      best.argmax = t;
      best.maximizers = 0;
    }
    if (dim == best.value) ++best.maximizers;
    ++best.triples;
  });
  if (best.triples == 0) throw std::logic_error("max_dimension: pair has no admissible triple");
  return best;
}

void SweepReport::merge(SweepReport later) {
  pairsChecked += later.pairsChecked;
  triplesChecked += later.triplesChecked;
  for (auto& v : later.violations) violations.push_back(std::move(v));
  for (auto& f : later.equivalenceFailures) equivalenceFailures.push_back(std::move(f));
}

SweepReport verify_upper_bound(int r, int d, const SweepOptions& options) {
  return sweep(r, d, options, true, false);
}

SweepReport verify_equivalence(int r, int d, const SweepOptions& options) {
  return sweep(r, d, options, false, true);
}

SweepReport verify_theorems(int r, int d, const SweepOptions& options) {
  return sweep(r, d, options, true, true);
}

}  // namespace lls
