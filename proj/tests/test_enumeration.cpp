#include <doctest.h>

#include <array>
#include <map>
#include <tuple>
#include <set>

#include "lls/construction.hpp"
#include "lls/enumeration.hpp"
#include "oracle.hpp"

using namespace lls;

TEST_CASE("enumerate_pairs examples") {
  const auto p01 = enumerate_pairs(0, 1);
  REQUIRE(p01.size() == 3);
  CHECK(p01[0] == validate_pair(0, 1, {0}, {1}));
  CHECK(p01[1] == validate_pair(0, 1, {1}, {0}));
  CHECK(p01[2] == validate_pair(0, 1, {1}, {1}));

  for (int d = 0; d <= 5; ++d) {
    const auto full = enumerate_pairs(d, d);
    REQUIRE(full.size() == 1);
    CHECK(is_refined(full[0]));
  }
  CHECK(enumerate_pairs(1, 2).size() == 6);

  CHECK_THROWS_AS(enumerate_pairs(3, 2), Error);
  CHECK_THROWS_AS(enumerate_pairs(-1, 2), Error);
}

TEST_CASE("enumerate_pairs matches the subset oracle and is ordered") {
  for (int d = 0; d <= 7; ++d) {
    for (int r = 0; r <= d; ++r) {
      const auto got = enumerate_pairs(r, d);
      auto want = oracle::pairs(r, d);
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
        return std::tie(a.aY, a.aZ) < std::tie(b.aY, b.aZ);
      });
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(std::vector<int>(got[k].aY().begin(), got[k].aY().end()) == want[k].aY);
        CHECK(std::vector<int>(got[k].aZ().begin(), got[k].aZ().end()) == want[k].aZ);
      }
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(enumerate_pairs(r, d) == got);
    }
  }
}

TEST_CASE("enumerate_triples examples") {
  const auto lonely = validate_pair(0, 2, {2}, {2});
  const auto ts = enumerate_triples(lonely);
  REQUIRE(ts.size() == 3);
  std::set<std::pair<int, int>> middles;
  for (const auto& t : ts) {
    middles.insert({t.betaY[1], t.betaZ[1]});
    CHECK(t.eps == std::vector<int>{0});
  }
  CHECK(middles == std::set<std::pair<int, int>>{{1, 1}, {1, 0}, {0, 1}});

  const auto point = enumerate_triples(validate_pair(0, 0, {0}, {0}));
  REQUIRE(point.size() == 1);
  CHECK(point[0] == AdmissibleTriple{{1}, {1}, {}});

  const auto ex = enumerate_triples(validate_pair(1, 2, {1, 2}, {1, 2}));
  CHECK(std::find(ex.begin(), ex.end(), AdmissibleTriple{{2, 2, 0}, {0, 2, 2}, {1}}) != ex.end());
}

TEST_CASE("pruned triple search equals the unpruned box filter for d <= 3") {
  // The acceptance suite repeats this for d = 4.
  for (int d = 0; d <= 3; ++d) {
    for (int r = 0; r <= d; ++r) {
      for (const auto& o : oracle::pairs(r, d)) {
        const auto p = validate_pair(o.r, o.d, o.aY, o.aZ);
        const auto got = enumerate_triples(p);
        CHECK(std::is_sorted(got.begin(), got.end()));
        std::vector<oracle::Triple> mine;
        for (const auto& t : got) mine.push_back({t.betaY, t.betaZ, t.eps});
        std::sort(mine.begin(), mine.end());
        CHECK(std::adjacent_find(mine.begin(), mine.end()) == mine.end());
        CHECK(mine == oracle::box_triples(o));
      }
    }
  }
}

TEST_CASE("regression counts cross-checked against an independent script") {
  // (r, d) -> {pairs, admissible triples, connected pairs}
  const std::map<std::pair<int, int>, std::array<std::size_t, 3>> frozen{
      {{0, 0}, {1, 1, 1}},     {{0, 1}, {3, 3, 2}},     {{1, 1}, {1, 1, 1}},     {{0, 2}, {6, 8, 3}},
      {{1, 2}, {6, 9, 4}},     {{2, 2}, {1, 1, 1}},     {{0, 3}, {10, 18, 4}},   {{1, 3}, {20, 52, 8}},
      {{2, 3}, {10, 27, 7}},   {{3, 3}, {1, 1, 1}},     {{0, 4}, {15, 35, 5}},   {{1, 4}, {50, 213, 13}},
      {{2, 4}, {50, 305, 19}}, {{3, 4}, {15, 81, 11}},
  };
  for (const auto& [rd, counts] : frozen) {
    const auto [r, d] = rd;
    std::size_t pairs = 0, triples = 0, connected = 0;
    for_each_pair(r, d, [&](const VanishingPair& p) {
      ++pairs;
      triples += enumerate_triples(p).size();
      connected += is_connected(p) ? 1 : 0;
    });
    CHECK(pairs == counts[0]);
    CHECK(triples == counts[1]);
    CHECK(connected == counts[2]);
  }
}

TEST_CASE("max_dimension examples") {
  const auto ex = max_dimension(validate_pair(1, 2, {1, 2}, {1, 2}));
  CHECK(ex.value == 2);
  CHECK(is_admissible(validate_pair(1, 2, {1, 2}, {1, 2}), ex.argmax));

  const auto lonely = validate_pair(0, 2, {2}, {2});
  const auto m = max_dimension(lonely);
  CHECK(m.value == 1);
  CHECK(m.value < ramification_sum(lonely));
  CHECK(m.triples == 3);
  CHECK(m.maximizers == 1);

  CHECK(max_dimension(validate_pair(1, 2, {0, 1}, {1, 2})).value == 0);
}

TEST_CASE("max_dimension argmax is first-encountered and admissible") {
  for (int d = 0; d <= 5; ++d) {
    for (int r = 0; r <= std::min(d, 3); ++r) {
      for_each_pair(r, d, [&](const VanishingPair& p) {
        const auto m = max_dimension(p);
        CHECK(is_admissible(p, m.argmax));
        CHECK(dimension(p, m.argmax) == m.value);
        CHECK(m.value <= ramification_sum(p));
        for (const auto& t : enumerate_triples(p)) {
          if (t == m.argmax) break;
          CHECK(dimension(p, t) < m.value);
        }
      });
    }
  }
}

TEST_CASE("verify sweeps") {
  auto rep = verify_upper_bound(1, 2);
  CHECK(rep.verified());
  CHECK(rep.pairsChecked == 6);
  CHECK(rep.triplesChecked == 9);

  rep = verify_upper_bound(0, 0);
  CHECK(rep.verified());
  CHECK(rep.pairsChecked == 1);
  CHECK(rep.triplesChecked == 1);

  rep = verify_upper_bound(2, 4);
  CHECK(rep.verified());
  CHECK(rep.pairsChecked == 50);
  CHECK(rep.triplesChecked == 305);

  CHECK(verify_equivalence(1, 2).verified());
  CHECK(verify_equivalence(0, 2).verified());
  CHECK(verify_equivalence(3, 3).verified());
  CHECK(verify_theorems(3, 5).verified());

  CHECK_THROWS_AS(verify_upper_bound(3, 2), Error);
  try {
    verify_theorems(0, 9);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  SweepOptions big;
  big.budget = 9;
  CHECK(verify_upper_bound(0, 9, big).verified());
}

TEST_CASE("parallel sweep matches the serial one") {
  SweepOptions par;
  par.workers = 4;
  std::size_t last = 0;
  par.progress = [&](std::size_t done, std::size_t total) {
    CHECK(done <= total);
    last = done;
  };
  const auto a = verify_theorems(2, 5);
  const auto b = verify_theorems(2, 5, par);
  CHECK(a.pairsChecked == b.pairsChecked);
  CHECK(a.triplesChecked == b.triplesChecked);
  CHECK(b.verified());
  CHECK(last == b.pairsChecked);
}

TEST_CASE("reports merge and surface counterexamples in order") {
  SweepReport a;
  a.pairsChecked = 2;
  a.triplesChecked = 5;
  SweepReport b;
  b.pairsChecked = 1;
  b.triplesChecked = 4;
  const auto p = validate_pair(0, 2, {2}, {2});
  b.equivalenceFailures.push_back({p, 1, 2, false, "synthetic"});
  a.merge(b);
  CHECK(a.pairsChecked == 3);
  CHECK(a.triplesChecked == 9);
  CHECK_FALSE(a.verified());
  CHECK(a.equivalenceFailures.front().pair == p);
}
