#include <doctest.h>

#include "lls/enumeration.hpp"
#include "lls/serialize.hpp"

using namespace lls;

TEST_CASE("pair JSON uses the exact field names") {
  const auto p = validate_pair(1, 2, {1, 2}, {1, 2});
  CHECK(to_json(p) == json::parse(R"({"r":1,"d":2,"aY":[1,2],"aZ":[1,2]})"));
  CHECK(pair_from_json(to_json(p)) == p);
}

TEST_CASE("pair JSON errors") {
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"r":1,"d":2,"aY":[1,2]})")), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"r":1,"d":2,"aY":[1,"2"],"aZ":[1,2]})")), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"r":1,"d":2.5,"aY":[1,2],"aZ":[1,2]})")), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"r":0,"d":99999999999,"aY":[1],"aZ":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"r":1,"d":2,"aY":[0,1],"aZ":[0,1]})")), Error);
}

TEST_CASE("JSON round trip preserves every pair and triple") {
  for (int d = 0; d <= 4; ++d) {
    for (int r = 0; r <= d; ++r) {
      for_each_pair(r, d, [&](const VanishingPair& p) {
        const auto reparsed = pair_from_json(json::parse(to_json(p).dump()));
        CHECK(reparsed == p);
        for (const auto& t : enumerate_triples(p)) {
          const auto back = triple_from_json(json::parse(to_json(t).dump()));
          CHECK(back == t);
          CHECK(dimension(reparsed, back) == dimension(p, t));
        }
      });
    }
  }
}

TEST_CASE("violations, trace and stratum report serialization") {
  const std::vector<Violation> v{{Condition::C1, 1}, {Condition::C4, 3}};
  CHECK(to_json(v) == json::parse(R"([{"cond":"C1","j":1},{"cond":"C4","j":3}])"));

  const auto p = validate_pair(1, 2, {1, 2}, {1, 2});
  CHECK(to_json(build_trace(p)) == json::parse(R"({"frakJ":[1,1],"J":[1],"Isizes":[2,2,0]})"));

  const auto s = classify(p, 0, NonemptyPolicy::GenusZero);
  const auto j = to_json(s);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"connected", "ehDim", "fiberMax", "nonempty", "nonemptyPolicy",
                                         "openSubset", "refined", "rho", "sigma", "total"});
  CHECK(j["nonemptyPolicy"] == "genus-zero");
  CHECK(to_csv_row(s) == "2,2,0,2,2,true,false,genus-zero,true,true");
}

TEST_CASE("sweep report JSON and CSV") {
  auto rep = verify_theorems(1, 2);
  auto j = to_json(rep);
  CHECK(j["pairsChecked"] == 6);
  CHECK(j["violations"].empty());
  CHECK(to_csv(rep) == "r,d,pairsChecked,triplesChecked,violations,equivalenceFailures\n1,2,6,9,0,0\n");

  const auto p = validate_pair(0, 2, {2}, {2});
  rep.violations.push_back({p, AdmissibleTriple{{1, 1, 0}, {0, 1, 1}, {0}}, 3, 2});
  j = to_json(rep);
  // Counterexamples replay: the embedded pair and triple parse back.
  const auto& cx = j["violations"][0];
  CHECK(pair_from_json(cx["pair"]) == p);
  CHECK(is_admissible(p, triple_from_json(cx["triple"])));
  const auto csv = to_csv(rep);
  CHECK(csv.find("violation,\"{\"\"aY\"\":[2]") != std::string::npos);
}

TEST_CASE("csv_field quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
