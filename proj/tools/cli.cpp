#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lls/serialize.hpp"

namespace lls::cli {

namespace {

std::string join(std::span<const int> v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

json load_json(const std::string& input, const char* flag) {
  const auto first = input.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && input[first] == '{') {
    text = input;
  } else {
    std::ifstream in(input);
    if (!in) throw UsageError(std::string(flag) + ": cannot open file '" + input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(flag) + ": invalid JSON: " + e.what());
  }
}

VanishingPair load_pair(const CliConfig& c) {
  if (c.pairInput.empty()) throw UsageError("--pair is required");
  try {
    return pair_from_json(load_json(c.pairInput, "--pair"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pair: ") + e.what());
  }
}

AdmissibleTriple load_triple(const CliConfig& c) {
  if (c.tripleInput.empty()) throw UsageError("--triple is required");
  try {
    return triple_from_json(load_json(c.tripleInput, "--triple"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--triple: ") + e.what());
  }
}

std::string pair_text(const VanishingPair& p) {
  return "r=" + std::to_string(p.r()) + " d=" + std::to_string(p.d()) + " aY=" + join(p.aY()) +
         " aZ=" + join(p.aZ());
}

std::string triple_text(const AdmissibleTriple& t) {
  return "betaY=" + join(t.betaY) + " betaZ=" + join(t.betaZ) + " eps=" + join(t.eps);
}

int cmd_validate(const CliConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto b = b_sequences(pair);
  const int sigma = ramification_sum(pair);
  const bool refined = is_refined(pair);
  switch (c.format) {
    case Format::Json:
      out << json{{"pair", to_json(pair)}, {"b", to_json(b)}, {"sigma", sigma}, {"refined", refined}}.dump(2)
          << '\n';
      break;
    case Format::Csv:
      out << "r,d,aY,aZ,sigma,refined\n"
          << pair.r() << ',' << pair.d() << ',' << csv_field(join(pair.aY())) << ','
          << csv_field(join(pair.aZ())) << ',' << sigma << ',' << yes_no(refined) << '\n';
      break;
    case Format::Text:
      out << "valid: " << pair_text(pair) << '\n'
          << "bY=" << join(b.bY) << " bZ=" << join(b.bZ) << '\n'
          << "sigma=" << sigma << " refined=" << yes_no(refined) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_connect(const CliConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  std::vector<ConnectivityWitness> ws;
  for (int i = 0; i <= pair.r(); ++i) ws.push_back(connected_at(pair, i));
  const bool connected = std::all_of(ws.begin(), ws.end(), [](const auto& w) { return !w.empty(); });
  switch (c.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& w : ws) arr.push_back(to_json(w));
      out << json{{"pair", to_json(pair)}, {"witnesses", arr}, {"connected", connected}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "i,witnesses\n";
      for (const auto& w : ws) out << w.i << ',' << csv_field(join(w.witnesses)) << '\n';
      break;
    case Format::Text:
      out << pair_text(pair) << '\n';
      for (const auto& w : ws) out << "i=" << w.i << " via j in " << join(w.witnesses) << '\n';
      out << "connected=" << yes_no(connected) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_construct(const CliConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto trace = build_trace(pair);
  const auto triple = build_optimal_triple(pair, trace);
  const int dim = dimension(pair, triple);
  const int sigma = ramification_sum(pair);
  switch (c.format) {
    case Format::Json: {
      json doc{{"pair", to_json(pair)}, {"triple", to_json(triple)}, {"dimension", dim}, {"sigma", sigma}};
      if (c.trace) doc["trace"] = to_json(trace);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "betaY,betaZ,eps,dimension,sigma\n"
          << csv_field(join(triple.betaY)) << ',' << csv_field(join(triple.betaZ)) << ','
          << csv_field(join(triple.eps)) << ',' << dim << ',' << sigma << '\n';
      if (c.trace) {
        out << "\nfrakJ,J,Isizes\n"
            << csv_field(join(trace.frakJ)) << ',' << csv_field(join(trace.J)) << ','
            << csv_field(join(trace.Isizes())) << '\n';
      }
      break;
    case Format::Text:
      out << pair_text(pair) << '\n' << triple_text(triple) << '\n'
          << "dimension=" << dim << " sigma=" << sigma << '\n';
      if (c.trace) {
        out << "frakJ=" << join(trace.frakJ) << " J=" << join(trace.J) << " Isizes=" << join(trace.Isizes())
            << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_dim(const CliConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto triple = load_triple(c);
  const auto violations = check_admissible(pair, triple);
  if (!violations.empty()) {
    switch (c.format) {
      case Format::Json:
        out << json{{"admissible", false}, {"violations", to_json(violations)}}.dump(2) << '\n';
        break;
      case Format::Csv:
        out << "cond,j\n";
        for (const auto& v : violations) out << to_string(v.cond) << ',' << v.j << '\n';
        break;
      case Format::Text:
        out << "not admissible:";
        for (const auto& v : violations) out << ' ' << to_string(v.cond) << "@j=" << v.j;
        out << '\n';
        break;
    }
    return kExitInvalid;
  }
  const int dim = dimension(pair, triple);
  const int viaSync = dimension_via_sync(pair, triple);
  const int sigma = ramification_sum(pair);
  const auto sync = sync_map(pair, triple);
  switch (c.format) {
    case Format::Json:
      out << json{{"admissible", true},      {"dimension", dim}, {"dimensionViaSync", viaSync},
                  {"sigma", sigma},          {"sync", to_json(sync)}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      out << "dimension,dimensionViaSync,sigma,Jdiag,Joff\n"
          << dim << ',' << viaSync << ',' << sigma << ',' << csv_field(join(sync.Jdiag)) << ','
          << csv_field(join(sync.Joff)) << '\n';
      break;
    case Format::Text:
      out << "admissible; dimension=" << dim << " (via sync " << viaSync << ") sigma=" << sigma << '\n';
      for (int i = sync.iLow; i <= sync.iHigh; ++i) {
        out << "psi(" << i << ")=(" << sync.at(i).j1 << ',' << sync.at(i).j2 << ")\n";
      }
      out << "Jdiag=" << join(sync.Jdiag) << " Joff=" << join(sync.Joff) << '\n';
      break;
  }
  return kExitOk;
}

void check_budget(const CliConfig& c, int d) {
  if (d > c.budget) {
    throw UsageError("--d: d=" + std::to_string(d) + " exceeds budget " + std::to_string(c.budget) +
                     " (raise with --budget or LLS_BUDGET)");
  }
}

int cmd_enumerate(const CliConfig& c, std::ostream& out) {
  if (!c.pairInput.empty()) {
    const auto pair = load_pair(c);
    check_budget(c, pair.d());
    const auto b = b_sequences(pair);
    const auto triples = enumerate_triples(pair);
    std::vector<int> dims;
    for (const auto& t : triples) dims.push_back(detail::dimension_formula(pair.r(), b, t));
    switch (c.format) {
      case Format::Json: {
        json arr = json::array();
        for (std::size_t k = 0; k < triples.size(); ++k) {
          arr.push_back({{"triple", to_json(triples[k])}, {"dimension", dims[k]}});
        }
        out << json{{"pair", to_json(pair)}, {"count", triples.size()}, {"triples", arr}}.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out << "betaY,betaZ,eps,dimension\n";
        for (std::size_t k = 0; k < triples.size(); ++k) {
          out << csv_field(join(triples[k].betaY)) << ',' << csv_field(join(triples[k].betaZ)) << ','
              << csv_field(join(triples[k].eps)) << ',' << dims[k] << '\n';
        }
        break;
      case Format::Text:
        for (std::size_t k = 0; k < triples.size(); ++k) {
          out << triple_text(triples[k]) << " dimension=" << dims[k] << '\n';
        }
        out << triples.size() << " admissible triples\n";
        break;
    }
    return kExitOk;
  }

  if (!c.r || !c.d) throw UsageError("enumerate needs --pair, or both --r and --d");
  if (*c.r < 0 || *c.d < 0 || *c.r > *c.d) throw UsageError("--r: need 0 <= r <= d");
  check_budget(c, *c.d);
  const auto pairs = enumerate_pairs(*c.r, *c.d);
  switch (c.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back(to_json(p));
      out << json{{"r", *c.r}, {"d", *c.d}, {"count", pairs.size()}, {"pairs", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "r,d,aY,aZ,sigma,connected\n";
      for (const auto& p : pairs) {
        out << p.r() << ',' << p.d() << ',' << csv_field(join(p.aY())) << ',' << csv_field(join(p.aZ())) << ','
            << ramification_sum(p) << ',' << yes_no(is_connected(p)) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& p : pairs) {
        out << "aY=" << join(p.aY()) << " aZ=" << join(p.aZ()) << " sigma=" << ramification_sum(p)
            << " connected=" << yes_no(is_connected(p)) << '\n';
      }
      out << pairs.size() << " pairs\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.r) throw UsageError("--r is required");
  if (!c.d) throw UsageError("--d is required");
  if (*c.r < 0 || *c.d < 0 || *c.r > *c.d) throw UsageError("--r: need 0 <= r <= d");
  check_budget(c, *c.d);
  SweepOptions opts;
  opts.budget = c.budget;
  opts.workers = c.parallel;
  opts.progress = [&err, r = *c.r, d = *c.d](std::size_t done, std::size_t total) {
    if (done == total || done % 64 == 0) err << "verify r=" << r << " d=" << d << ": " << done << '/' << total << " pairs\n";
  };
  const auto report = verify_theorems(*c.r, *c.d, opts);
  switch (c.format) {
    case Format::Json: out << to_json(report).dump(2) << '\n'; break;
    case Format::Csv: out << to_csv(report); break;
    case Format::Text:
      out << "r=" << report.r << " d=" << report.d << " pairsChecked=" << report.pairsChecked
          << " triplesChecked=" << report.triplesChecked << '\n'
          << "violations=" << report.violations.size()
          << " equivalenceFailures=" << report.equivalenceFailures.size() << '\n';
      for (const auto& v : report.violations) {
        out << "  upper bound fails: " << to_json(v.pair).dump() << ' ' << to_json(v.triple).dump()
            << " dimension=" << v.lhs << " sigma=" << v.rhs << '\n';
      }
      for (const auto& f : report.equivalenceFailures) {
        out << "  equivalence fails: " << to_json(f.pair).dump() << " max=" << f.maxDimension
            << " sigma=" << f.sigma << " connected=" << yes_no(f.connected) << " (" << f.reason << ")\n";
      }
      out << (report.verified() ? "verified" : "COUNTEREXAMPLE FOUND") << '\n';
      break;
  }
  return report.verified() ? kExitOk : kExitNegative;
}

int cmd_classify(const CliConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  check_budget(c, pair.d());
  StratumReport s;
  try {
    s = classify(pair, c.g, c.policy);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidPolicy) throw UsageError(std::string("--policy: ") + e.what());
    if (e.kind() == ErrorKind::InvalidRange) throw UsageError(std::string("--g: ") + e.what());
    throw;
  }
  switch (c.format) {
    case Format::Json: out << to_json(s).dump(2) << '\n'; break;
    case Format::Csv: out << stratum_csv_header() << '\n' << to_csv_row(s) << '\n'; break;
    case Format::Text:
      out << pair_text(pair) << " g=" << c.g << '\n'
          << "rho=" << s.rho << " sigma=" << s.sigma << " ehDim=" << s.ehDim << " fiberMax=" << s.fiberMax
          << " total=" << s.total << '\n'
          << "connected=" << yes_no(s.connected) << " refined=" << yes_no(s.refined) << '\n'
          << "nonempty=" << yes_no(s.nonempty) << " (policy " << to_string(s.nonemptyPolicy)
          << (is_heuristic(s.nonemptyPolicy) ? ", heuristic" : "") << ")\n"
          << "openSubset=" << yes_no(s.openSubset) << '\n';
      break;
  }
  return (c.expectOpen && !s.openSubset) ? kExitNegative : kExitOk;
}

void report_error(const CliConfig& c, std::ostream& out, std::ostream& err, const std::string& kind,
                  const std::string& message, const Error* lls_error) {
  err << "error: " << message << '\n';
  if (c.format != Format::Json) return;
  json e{{"kind", kind}, {"message", message}};
  if (lls_error && lls_error->side()) e["side"] = std::string(to_string(*lls_error->side()));
  if (lls_error && lls_error->index()) e["index"] = *lls_error->index();
  out << json{{"error", e}}.dump(2) << '\n';
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig c;
  if (const char* env = std::getenv("LLS_BUDGET")) {
    try {
      std::size_t used = 0;
      c.budget = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError(std::string("LLS_BUDGET: not an integer: '") + env + "'");
    }
  }

  CLI::App app{"Combinatorics of crude limit linear series on a two-component curve", "lls"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  std::string policy_name(to_string(c.policy));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto pair_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--pair", c.pairInput, "Pair as inline JSON or a path to a JSON file");
    if (required) o->required();
  };

  auto* validate = app.add_subcommand("validate", "Validate a pair and print its b-sequences");
  pair_opt(validate, true);
  common(validate);

  auto* connect = app.add_subcommand("connect", "Connectivity witnesses for every i");
  pair_opt(connect, true);
  common(connect);

  auto* construct = app.add_subcommand("construct", "Optimal admissible triple for a connected pair");
  pair_opt(construct, true);
  construct->add_flag("--trace", c.trace, "Also print the construction trace");
  common(construct);

  auto* dim = app.add_subcommand("dim", "Check a triple and evaluate its stratum dimension");
  pair_opt(dim, true);
  dim->add_option("--triple", c.tripleInput, "Triple as inline JSON or a path to a JSON file")->required();
  common(dim);

  auto* enumerate = app.add_subcommand("enumerate", "List all pairs for (r, d), or all triples of --pair");
  pair_opt(enumerate, false);
  enumerate->add_option("--r", c.r, "Rank r");
  enumerate->add_option("--d", c.d, "Degree d");
  enumerate->add_option("--budget", c.budget, "Largest d allowed");
  common(enumerate);

  auto* verify = app.add_subcommand("verify", "Exhaustively verify the upper bound and the equivalence");
  verify->add_option("--r", c.r, "Rank r")->required();
  verify->add_option("--d", c.d, "Degree d")->required();
  verify->add_option("--budget", c.budget, "Largest d allowed");
  verify->add_option("--parallel", c.parallel, "Worker threads")->check(CLI::Range(1u, 1024u));
  common(verify);

  auto* classify_cmd = app.add_subcommand("classify", "Open-subset verdict for a pair and genus");
  pair_opt(classify_cmd, true);
  classify_cmd->add_option("--g", c.g, "Genus g")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--policy", policy_name,
                           "Nonemptiness policy: assume-nonempty, assume-empty, genus-zero, rho-heuristic");
  classify_cmd->add_flag("--expect-open", c.expectOpen, "Exit 1 unless the verdict is openSubset=true");
  classify_cmd->add_option("--budget", c.budget, "Largest d allowed");
  common(classify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Command> table[] = {
      {validate, Command::Validate}, {connect, Command::Connect},     {construct, Command::Construct},
      {dim, Command::Dim},           {enumerate, Command::Enumerate}, {verify, Command::Verify},
      {classify_cmd, Command::Classify}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) c.command = cmd;
  }
  const auto policy = parse_policy(policy_name);
  if (!policy) throw UsageError("--policy: unknown policy '" + policy_name + "'");
  c.policy = *policy;
  if (c.budget < 0) throw UsageError("--budget: must be nonnegative");
  return c;
}

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Validate: return cmd_validate(c, out);
      case Command::Connect: return cmd_connect(c, out);
      case Command::Construct: return cmd_construct(c, out);
      case Command::Dim: return cmd_dim(c, out);
      case Command::Enumerate: return cmd_enumerate(c, out);
      case Command::Verify: return cmd_verify(c, out, err);
      case Command::Classify: return cmd_classify(c, out);
    }
  } catch (const Error& e) {
    report_error(c, out, err, std::string(to_string(e.kind())), e.what(), &e);
    return kExitInvalid;
  } catch (const UsageError& e) {
    report_error(c, out, err, "UsageError", e.what(), nullptr);
    return kExitInvalid;
  }
  return kExitInvalid;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return run(config, out, err);
}

}  // namespace lls::cli
