#include <doctest.h>

#include "lls/core_sequences.hpp"
#include "lls/enumeration.hpp"
#include "oracle.hpp"

using namespace lls;

namespace {

Error error_of(int r, int d, std::vector<int> aY, std::vector<int> aZ) {
  try {
    validate_pair(r, d, std::move(aY), std::move(aZ));
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected validate_pair to throw");
  return Error(ErrorKind::InvalidRange, std::nullopt, std::nullopt);
}

}  // namespace

TEST_CASE("validate_pair accepts the worked example and refined pairs") {
  const auto ex = validate_pair(1, 2, {1, 2}, {1, 2});
  CHECK(ex.r() == 1);
  CHECK(ex.d() == 2);
  CHECK(ex.inY(1));
  CHECK_FALSE(ex.inY(0));
  CHECK_FALSE(ex.inZ(3));

  CHECK_NOTHROW(validate_pair(1, 2, {0, 1}, {1, 2}));
  // d = 0 degenerate minimum.
  CHECK_NOTHROW(validate_pair(0, 0, {0}, {0}));
}

TEST_CASE("validate_pair error paths") {
  auto e = error_of(1, 2, {0, 1}, {0, 1});
  CHECK(e.kind() == ErrorKind::A3Violation);
  CHECK(e.index() == 0);
  CHECK(std::string(e.what()) == "A3Violation(i=0)");

  e = error_of(1, 2, {0, 1, 2}, {1, 2});
  CHECK(e.kind() == ErrorKind::LengthMismatch);

  e = error_of(1, 3, {2, 2}, {1, 3});
  CHECK(e.kind() == ErrorKind::NotStrictlyIncreasing);
  CHECK(e.side() == Side::Y);
  CHECK(e.index() == 1);

  e = error_of(1, 3, {1, 3}, {1, 4});
  CHECK(e.kind() == ErrorKind::OutOfRange);
  CHECK(e.side() == Side::Z);
  CHECK(e.index() == 1);

  e = error_of(0, 3, {-1}, {3});
  CHECK(e.kind() == ErrorKind::OutOfRange);
  CHECK(e.side() == Side::Y);

  CHECK(error_of(-1, 3, {}, {}).kind() == ErrorKind::InvalidRange);
  CHECK(error_of(0, kMaxDegree + 1, {0}, {kMaxDegree + 1}).kind() == ErrorKind::InvalidRange);
  // r > d cannot fit r+1 distinct values into [0, d].
  CHECK(error_of(2, 1, {0, 1, 2}, {0, 1, 2}).kind() == ErrorKind::OutOfRange);
}

TEST_CASE("b_sequences on small pairs") {
  auto b = b_sequences(validate_pair(1, 2, {1, 2}, {1, 2}));
  CHECK(b.bY == std::vector<int>{2, 2, 1});
  CHECK(b.bZ == std::vector<int>{1, 2, 2});

  b = b_sequences(validate_pair(1, 2, {0, 1}, {1, 2}));
  CHECK(b.bY == std::vector<int>{2, 1, 0});
  CHECK(b.bZ == std::vector<int>{1, 2, 2});

  b = b_sequences(validate_pair(0, 2, {2}, {2}));
  CHECK(b.bY == std::vector<int>{1, 1, 1});
  CHECK(b.bZ == std::vector<int>{1, 1, 1});
}

TEST_CASE("ramification_sum and is_refined") {
  const auto ex = validate_pair(1, 2, {1, 2}, {1, 2});
  CHECK(ramification_sum(ex) == 2);
  CHECK_FALSE(is_refined(ex));

  const auto refined = validate_pair(1, 2, {0, 1}, {1, 2});
  CHECK(ramification_sum(refined) == 0);
  CHECK(is_refined(refined));

  CHECK(ramification_sum(validate_pair(0, 2, {2}, {2})) == 2);
  CHECK(is_refined(validate_pair(0, 0, {0}, {0})));
}

TEST_CASE("connected_at witnesses") {
  const auto ex = validate_pair(1, 2, {1, 2}, {1, 2});
  CHECK(connected_at(ex, 0).witnesses == std::vector<int>{1});
  CHECK(connected_at(ex, 1).witnesses == std::vector<int>{1});
  CHECK(is_connected(ex));

  const auto refined = validate_pair(1, 2, {0, 1}, {1, 2});
  for (int i = 0; i <= 1; ++i) {
    const auto w = connected_at(refined, i);
    REQUIRE(w.witnesses.size() == 1);
    CHECK(w.witnesses[0] == refined.aY(i));
    CHECK(w.witnesses[0] == refined.d() - refined.aZ(refined.r() - i));
  }

  // j = 0, 1 fail on the Y side; j = 2 needs 0 and 1 in a^Z.
  const auto lonely = validate_pair(0, 2, {2}, {2});
  CHECK(connected_at(lonely, 0).empty());
  CHECK_FALSE(is_connected(lonely));

  CHECK_THROWS_AS(connected_at(ex, 2), Error);
  CHECK_THROWS_AS(connected_at(ex, -1), Error);
}

TEST_CASE("b-sequence and ramification properties over all small pairs") {
  for (int d = 0; d <= 7; ++d) {
    for (int r = 0; r <= d; ++r) {
      for_each_pair(r, d, [&](const VanishingPair& p) {
        const auto b = b_sequences(p);
        CHECK(b.bY[0] == r + 1);
        CHECK(b.bZ[static_cast<std::size_t>(d)] == r + 1);
        for (int j = 0; j < d; ++j) CHECK(b.bY[j] - b.bY[j + 1] == (p.inY(j) ? 1 : 0));
        for (int j = 1; j <= d; ++j) CHECK(b.bZ[j] - b.bZ[j - 1] == (p.inZ(d - j) ? 1 : 0));
        const int sigma = ramification_sum(p);
        CHECK(sigma >= 0);
        CHECK((sigma == 0) == is_refined(p));
        if (is_refined(p)) CHECK(is_connected(p));
      });
    }
  }
}

TEST_CASE("witness sets match brute force and are intervals") {
  // The interval shape is observed here, never assumed by the library.
  for (int d = 0; d <= 6; ++d) {
    for (int r = 0; r <= d; ++r) {
      for (const auto& o : oracle::pairs(r, d)) {
        const auto p = validate_pair(o.r, o.d, o.aY, o.aZ);
        for (int i = 0; i <= r; ++i) {
          std::vector<int> expected;
          for (int j = 0; j <= d; ++j) {
            if (oracle::connected_via(o, i, j)) expected.push_back(j);
          }
          const auto w = connected_at(p, i);
          CHECK(w.witnesses == expected);
          if (!expected.empty()) {
            CHECK(expected.back() - expected.front() + 1 == static_cast<int>(expected.size()));
          }
        }
        CHECK(is_connected(p) == oracle::connected(o));
      }
    }
  }
}

TEST_CASE("monotone witness property") {
  for (int d = 0; d <= 6; ++d) {
    for (int r = 0; r <= d; ++r) {
      for_each_pair(r, d, [&](const VanishingPair& p) {
        for (int i1 = 0; i1 <= r; ++i1) {
          for (int i2 = i1; i2 <= r; ++i2) {
            for (int j1 : connected_at(p, i1).witnesses) {
              for (int j2 : connected_at(p, i2).witnesses) {
                if (j1 < j2) continue;
                for (int i = i1; i <= i2; ++i) {
                  for (int j = j2; j <= j1; ++j) CHECK(connected_via(p, i, j));
                }
              }
            }
          }
        }
      });
    }
  }
}
