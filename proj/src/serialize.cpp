#include "lls/serialize.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace lls {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return *it;
}

int as_int(const json& v, const char* name) {
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + name + "\" must hold integers");
  }
  if (v.is_number_unsigned() ? v.get<unsigned long long>() > static_cast<unsigned long long>(std::numeric_limits<int>::max())
                             : (v.get<long long>() > std::numeric_limits<int>::max() ||
                                v.get<long long>() < std::numeric_limits<int>::min())) {
    throw std::invalid_argument(std::string("field \"") + name + "\" is out of integer range");
  }
  return v.get<int>();
}

int int_field(const json& j, const char* name) { return as_int(field(j, name), name); }

std::vector<int> int_array(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_array()) throw std::invalid_argument(std::string("field \"") + name + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, name));
  return out;
}

json ints(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

}  // namespace

json to_json(const VanishingPair& pair) {
  return {{"r", pair.r()}, {"d", pair.d()}, {"aY", ints(pair.aY())}, {"aZ", ints(pair.aZ())}};
}

VanishingPair pair_from_json(const json& j) {
  return validate_pair(int_field(j, "r"), int_field(j, "d"), int_array(j, "aY"), int_array(j, "aZ"));
}

json to_json(const AdmissibleTriple& t) {
  return {{"betaY", t.betaY}, {"betaZ", t.betaZ}, {"eps", t.eps}};
}

AdmissibleTriple triple_from_json(const json& j) {
  return {int_array(j, "betaY"), int_array(j, "betaZ"), int_array(j, "eps")};
}

json to_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"cond", std::string(to_string(v.cond))}, {"j", v.j}});
  return out;
}

json to_json(const BSequences& b) { return {{"bY", b.bY}, {"bZ", b.bZ}}; }

json to_json(const ConnectivityWitness& w) { return {{"i", w.i}, {"witnesses", w.witnesses}}; }

json to_json(const SyncData& s) {
  json psi = json::array();
  for (int i = s.iLow; i <= s.iHigh; ++i) {
    const auto& p = s.at(i);
    psi.push_back({{"i", i}, {"j1", p.j1}, {"j2", p.j2}});
  }
  return {{"iLow", s.iLow}, {"iHigh", s.iHigh}, {"psi", psi}, {"Jdiag", s.Jdiag}, {"Joff", s.Joff}};
}

json to_json(const ConstructionTrace& t) {
  return {{"frakJ", t.frakJ}, {"J", t.J}, {"Isizes", t.Isizes()}};
}

json to_json(const SweepReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"pair", to_json(v.pair)}, {"triple", to_json(v.triple)}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  json failures = json::array();
  for (const auto& f : report.equivalenceFailures) {
    failures.push_back({{"pair", to_json(f.pair)},
                        {"maxDimension", f.maxDimension},
                        {"sigma", f.sigma},
                        {"connected", f.connected},
                        {"reason", f.reason}});
  }
  return {{"r", report.r},
          {"d", report.d},
          {"pairsChecked", report.pairsChecked},
          {"triplesChecked", report.triplesChecked},
          {"violations", violations},
          {"equivalenceFailures", failures}};
}

json to_json(const StratumReport& s) {
  return {{"rho", s.rho},
          {"sigma", s.sigma},
          {"ehDim", s.ehDim},
          {"fiberMax", s.fiberMax},
          {"total", s.total},
          {"connected", s.connected},
          {"refined", s.refined},
          {"nonemptyPolicy", std::string(to_string(s.nonemptyPolicy))},
          {"nonempty", s.nonempty},
          {"openSubset", s.openSubset}};
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "r,d,pairsChecked,triplesChecked,violations,equivalenceFailures\n"
      << report.r << ',' << report.d << ',' << report.pairsChecked << ',' << report.triplesChecked << ','
      << report.violations.size() << ',' << report.equivalenceFailures.size() << '\n';
  if (report.verified()) return out.str();
  out << "\nkind,pair,triple,lhs,rhs,reason\n";
  for (const auto& v : report.violations) {
    out << "violation," << csv_field(to_json(v.pair).dump()) << ',' << csv_field(to_json(v.triple).dump())
        << ',' << v.lhs << ',' << v.rhs << ",\n";
  }
  for (const auto& f : report.equivalenceFailures) {
    out << "equivalence," << csv_field(to_json(f.pair).dump()) << ",," << f.maxDimension << ','
        << f.sigma << ',' << csv_field(f.reason) << '\n';
  }
  return out.str();
}

std::string stratum_csv_header() {
  return "rho,sigma,ehDim,fiberMax,total,connected,refined,nonemptyPolicy,nonempty,openSubset";
}

std::string to_csv_row(const StratumReport& s) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << s.rho << ',' << s.sigma << ',' << s.ehDim << ',' << s.fiberMax << ',' << s.total << ','
      << b(s.connected) << ',' << b(s.refined) << ',' << to_string(s.nonemptyPolicy) << ','
      << b(s.nonempty) << ',' << b(s.openSubset);
  return out.str();
}

}  // namespace lls
