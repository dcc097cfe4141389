#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superweyl/invariants.hpp"
#include "superweyl/superweyl.hpp"

namespace superweyl::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "superweyl 0.1.0";

/// Exit codes; every error category maps to its own code.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDomainError = 2,
  kVerificationError = 3,
  kInternalError = 4,
};

struct Options {
  std::string verb;
  std::string algebra;
  std::string weight;
  bool rho_shifted = false;
  bool plain = false;
  bool typical = false;
  bool timing = false;
  std::string batch_file;
  std::int64_t depth = 4;
  std::optional<std::size_t> target;
  std::size_t source = 0;
  std::string chain;
  std::string mode = "verma";
  std::uint64_t seed = SuiteOptions{}.seed;
  int samples = SuiteOptions{}.random_samples;
};

namespace detail {

inline json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.to_root_string());
  return a;
}

inline json gamma_json(const GammaSet& g, const RootSystem& rs) { return g.root_strings(rs); }

/// Context shared by every verb for one algebra.
struct Session {
  RootSystem rs;
  std::optional<WeylGroup> weyl;
  std::optional<BorelGraph> borels;

  explicit Session(const std::string& algebra) : rs(build_root_system(algebra)) {}

  const WeylGroup& W() {
    if (!weyl) weyl = generate(rs);
    return *weyl;
  }
  const BorelGraph& graph() {
    if (!borels) borels = enumerate_borels(rs);
    return *borels;
  }
};

inline Weight read_lambda(Session& s, const std::string& text, bool rho_shifted) {
  if (text.empty()) throw ParseError("a weight argument is required");
  const Weight w = s.rs.parse_weight(text);
  return rho_shifted ? s.rs.canonical(w - s.rs.rho) : w;
}

inline json shapovalov_json(const std::vector<ShapovalovFactor>& fs) {
  json a = json::array();
  for (const auto& f : fs) {
    json e{{"root", f.root.to_root_string()}, {"kind", to_string(f.kind)}};
    e["n"] = f.n ? json(*f.n) : json(nullptr);
    a.push_back(e);
  }
  return a;
}

inline json roots_result(Session& s) {
  const auto& rs = s.rs;
  json gram = json::array();
  for (const auto& row : rs.gram) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    gram.push_back(r);
  }
  return json{{"even_positive", weights_json(rs.even_pos)},
              {"odd_positive", weights_json(rs.odd_pos)},
              {"reduced_even", weights_json(rs.reduced_even)},
              {"reduced_odd", weights_json(rs.reduced_odd)},
              {"simple", weights_json(rs.simple)},
              {"even_simple", weights_json(rs.even_simple)},
              {"rho0", rs.rho0.to_string()},
              {"rho1", rs.rho1.to_string()},
              {"rho", rs.rho.to_string()},
              {"gram", gram},
              {"weyl_order", s.W().size()}};
}

inline json typical_result(Session& s, const Weight& lambda) {
  return json{{"typical", is_typical(lambda, s.rs)},
              {"strongly_typical", is_strongly_typical(lambda, s.rs)},
              {"t_value", eval_t(lambda, s.rs).to_string()}};
}

inline json simple_result(Session& s, const Weight& lambda) {
  const auto fs = vanishing_shapovalov_factors(lambda, s.rs);
  return json{{"simple", fs.empty()},
              {"witnesses", shapovalov_json(fs)},
              {"dot_minimal", is_dot_extremal(lambda, Extremum::Min, s.W(), s.rs)},
              {"dot_maximal", is_dot_extremal(lambda, Extremum::Max, s.W(), s.rs)}};
}

inline json factors_result(Session& s, const Weight& lambda) {
  const auto [even, odd] = parity_split_factors(lambda, s.rs);
  json e = json::array();
  json o = json::array();
  for (const auto& w : even) e.push_back(w.to_string());
  for (const auto& w : odd) o.push_back(w.to_string());
  return json{{"shapovalov", shapovalov_json(vanishing_shapovalov_factors(lambda, s.rs))},
              {"g0_factors", {{"even", e}, {"odd", o}}},
              {"count", even.size() + odd.size()}};
}

inline json decompose_result(Session& s, const Weight& lambda) {
  const auto d = verma_decomposition(lambda, s.rs, s.W());
  json witnesses = json::array();
  if (d.witness) {
    const auto& w = *d.witness;
    witnesses.push_back({{"gamma", gamma_json(w.first, s.rs)},
                         {"gamma_prime", gamma_json(w.second, s.rs)},
                         {"weyl_index", w.w_index}});
  }
  return json{{"verdict", d.decomposes},
              {"witnesses", witnesses},
              {"all_g0_factors_simple", all_g0_factors_simple(lambda, s.rs)},
              {"verma_simple", is_verma_simple(lambda, s.rs)}};
}

inline json borel_json(const Borel& b, std::size_t index, const BorelGraph& g, const RootSystem& rs) {
  json edges = json::array();
  for (const auto& e : g.edges[index]) edges.push_back({{"beta", e.beta.to_root_string()}, {"target", e.target}});
  return json{{"index", index},
              {"odd_roots", b.root_strings(rs)},
              {"simple", weights_json(b.simple_roots(rs))},
              {"rho", b.rho().to_string()},
              {"reflections", edges}};
}

inline json borels_result(Session& s) {
  const auto& g = s.graph();
  json a = json::array();
  for (std::size_t i = 0; i < g.borels.size(); ++i) a.push_back(borel_json(g.borels[i], i, g, s.rs));
  return json{{"count", g.borels.size()}, {"borels", a}};
}

inline TransportMode parse_mode(const std::string& m) {
  if (m == "verma") return TransportMode::Verma;
  if (m == "simple") return TransportMode::Simple;
  throw ParseError("unknown transport mode '" + m + "' (expected verma or simple)");
}

inline json transport_result(Session& s, const Weight& lambda, const Options& opt) {
  const auto mode = parse_mode(opt.mode);
  const auto& g = s.graph();
  if (opt.source >= g.borels.size()) throw DomainError("source Borel index out of range");
  TransportResult r;
  if (!opt.chain.empty()) {
    std::vector<Weight> chain;
    for (const auto& part : superweyl::detail::split_list(opt.chain, ',')) {
      chain.push_back(s.rs.parse_root(superweyl::detail::trim(part)));
    }
    r = transport_along(lambda, g.borels[opt.source], chain, mode, s.rs);
  } else {
    if (!opt.target) throw ParseError("transport needs --target INDEX or --chain ROOTS");
    if (*opt.target >= g.borels.size()) throw DomainError("target Borel index out of range");
    r = transport_weight(lambda, opt.source, *opt.target, g, mode, s.rs);
  }
  const auto target = g.index_of(r.borel);
  return json{{"lambda_prime", r.lambda.to_string()},
              {"chain", weights_json(r.chain)},
              {"mode", to_string(mode)},
              {"target", target ? json(*target) : json(nullptr)},
              {"target_odd_roots", r.borel.root_strings(s.rs)},
              {"lambda_plus_rho_b", (r.lambda + r.borel.rho()).to_string()}};
}

inline json matrix_json(const WeylElement& w) {
  json cols = json::array();
  for (std::size_t j = 0; j < w.dim(); ++j) {
    json c = json::array();
    for (const auto& x : w.column(j)) c.push_back(x.to_string());
    cols.push_back(c);
  }
  return cols;
}

inline json mate_result(Session& s, const Weight& lambda) {
  const CentralCharacter chi{lambda};
  json out;
  out["strongly_typical"] = chi.is_strongly_typical(s.rs);
  if (s.rs.id.is_type_two()) out["generic"] = is_generic(chi, s.rs, s.W());
  const auto cert = find_perfect_mate(chi, s.rs, s.W());
  json witnesses = json::object();
  if (cert.witnesses.gamma_prime) witnesses["gamma_prime"] = gamma_json(*cert.witnesses.gamma_prime, s.rs);
  if (cert.witnesses.w_index) witnesses["weyl_element"] = matrix_json(s.W()[*cert.witnesses.w_index]);
  if (cert.witnesses.stabilizer_index) {
    witnesses["stabilizer_element"] = matrix_json(s.W()[*cert.witnesses.stabilizer_index]);
  }
  out["lambda"] = cert.lambda.to_string();
  out["lambda_plus_rho"] = (cert.lambda + s.rs.rho).to_string();
  out["gamma"] = gamma_json(cert.gamma, s.rs);
  out["mate_weight"] = cert.mate_weight.to_string();
  out["shifted_mate_weight"] = (cert.mate_weight + s.rs.rho0).to_string();
  out["is_mate"] = cert.is_mate;
  out["is_perfect"] = cert.is_perfect;
  out["witnesses"] = witnesses;
  return out;
}

inline json character_result(Session& s, const Weight& lambda, const Options& opt) {
  const FormalCharacter ch =
      opt.typical ? typical_character(lambda, opt.depth, s.rs, s.W()) : verma_character(lambda, opt.depth, s.rs);
  json terms = json::array();
  for (const auto& [nu, c] : ch.coeffs()) {
    terms.push_back({{"weight", cone_weight(ch, nu, s.rs).to_string()}, {"height", height(nu)}, {"multiplicity", c}});
  }
  json out{{"kind", opt.typical ? "typical" : "verma"}, {"depth", opt.depth}, {"terms", terms}};
  // Heuristic only: nonnegative truncated coefficients do not prove finite-dimensionality.
  if (opt.typical) out["heuristic_nonnegative"] = ch.all_nonnegative();
  return out;
}

inline json verify_result(Session& s, const Options& opt, bool& all_passed) {
  SuiteOptions so;
  so.seed = opt.seed;
  so.random_samples = opt.samples;
  const auto results = run_invariant_suite(s.rs, so);
  json props = json::array();
  all_passed = true;
  for (const auto& r : results) {
    json p{{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (opt.timing) p["seconds"] = r.seconds;
    props.push_back(p);
    all_passed = all_passed && r.passed;
  }
  return json{{"passed", all_passed}, {"properties", props}};
}

inline bool verb_takes_weight(const std::string& verb) {
  return verb == "typical" || verb == "simple" || verb == "factors" || verb == "decompose" || verb == "transport" ||
         verb == "mate" || verb == "character";
}

/// Runs one request and returns its report; throws the library errors.
inline json run_one(Session& s, const Options& opt, const std::string& weight_text, int& exit_code) {
  json report{{"version", kVersion}, {"verb", opt.verb}, {"algebra", s.rs.name()}};
  const auto t0 = std::chrono::steady_clock::now();
  json result;
  if (verb_takes_weight(opt.verb)) {
    const Weight lambda = read_lambda(s, weight_text, opt.rho_shifted);
    report["input"] = {{"weight", lambda.to_string()}, {"lambda_plus_rho", (lambda + s.rs.rho).to_string()}};
    if (opt.verb == "typical") result = typical_result(s, lambda);
    else if (opt.verb == "simple") result = simple_result(s, lambda);
    else if (opt.verb == "factors") result = factors_result(s, lambda);
    else if (opt.verb == "decompose") result = decompose_result(s, lambda);
    else if (opt.verb == "transport") result = transport_result(s, lambda, opt);
    else if (opt.verb == "mate") result = mate_result(s, lambda);
    else result = character_result(s, lambda, opt);
  } else if (opt.verb == "roots") {
    result = roots_result(s);
  } else if (opt.verb == "borels") {
    result = borels_result(s);
  } else if (opt.verb == "verify") {
    bool passed = true;
    result = verify_result(s, opt, passed);
    if (!passed) exit_code = kVerificationError;
  } else {
    throw ParseError("unknown verb '" + opt.verb + "'");
  }
  report["result"] = result;
  if (opt.timing) {
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return report;
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const DomainError*>(&e)) return kDomainError;
  if (dynamic_cast<const VerificationError*>(&e)) return kVerificationError;
  return kInternalError;
}

inline json error_json(const std::exception& e, const Options& opt) {
  return json{{"version", kVersion}, {"verb", opt.verb}, {"error", e.what()}, {"exit_code", exit_code_for(e)}};
}

inline void print_plain(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_plain(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_plain(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& v : j) out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

/// Character tables read better as two columns.
inline void print_character_plain(std::ostream& out, const json& report) {
  out << "algebra: " << report["algebra"].get<std::string>() << "\n";
  out << "weight: " << report["input"]["weight"].get<std::string>() << "\n";
  out << "kind: " << report["result"]["kind"].get<std::string>() << "  depth: " << report["result"]["depth"] << "\n";
  for (const auto& t : report["result"]["terms"]) {
    out << t["weight"].get<std::string>() << "\t" << t["multiplicity"] << "\n";
  }
}

inline void emit(std::ostream& out, const json& report, const Options& opt, bool ndjson) {
  if (ndjson) {
    out << report.dump() << "\n";
  } else if (opt.plain) {
    if (opt.verb == "character" && report.contains("result")) print_character_plain(out, report);
    else print_plain(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
}

}  // namespace detail

/// Parses argv-style arguments (without the program name), runs the request,
/// writes the report to `out` and diagnostics to `err`, and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact combinatorics of basic classical Lie superalgebras", "superweyl"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"roots", "root system data of an algebra"},
      {"typical", "typicality, strong typicality and t(lambda)"},
      {"simple", "Shapovalov simplicity of the Verma module"},
      {"factors", "Shapovalov factors and the even-part Verma factors"},
      {"decompose", "decomposability of the Verma module over the even part"},
      {"borels", "Borel subalgebras connected by odd reflections"},
      {"transport", "transport a highest weight along odd reflections"},
      {"mate", "perfect mate certificate for a strongly typical character"},
      {"character", "truncated formal character"},
      {"verify", "run the invariant suite for one algebra"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", opt.algebra, "algebra, e.g. B(1,1), D(2,1,a=3/2), F(4)")->required();
    if (detail::verb_takes_weight(name)) {
      sub->add_option("weight", opt.weight, "weight \"k1,..,kn;l1,..,lm\" (delta part first)");
      sub->add_flag("--rho-shifted", opt.rho_shifted, "the weight is given as lambda + rho");
      sub->add_option("--batch", opt.batch_file, "file with one weight per line; NDJSON output");
    }
    sub->add_flag("--plain", opt.plain, "plain text instead of JSON");
    sub->add_flag("--timing", opt.timing, "include wall-clock timings in the report");
    if (name == "character") {
      sub->add_option("--depth", opt.depth, "truncation height")->check(CLI::NonNegativeNumber);
      sub->add_flag("--typical", opt.typical, "typical character formula instead of the Verma character");
    }
    if (name == "transport") {
      sub->add_option("--target", opt.target, "index of the target Borel (see `borels`)");
      sub->add_option("--source", opt.source, "index of the source Borel (default: the fixed Borel)");
      sub->add_option("--chain", opt.chain, "comma-separated reflecting roots, e.g. \"d1-e1,d1\"");
      sub->add_option("--mode", opt.mode, "verma or simple")->check(CLI::IsMember({"verma", "simple"}));
    }
    if (name == "verify") {
      sub->add_option("--seed", opt.seed, "seed of the random samples");
      sub->add_option("--samples", opt.samples, "random samples per property")->check(CLI::PositiveNumber);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  for (const auto* sub : app.get_subcommands()) opt.verb = sub->get_name();

  std::optional<detail::Session> session;
  try {
    session.emplace(opt.algebra);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    detail::emit(out, detail::error_json(e, opt), opt, false);
    return detail::exit_code_for(e);
  }

  if (!opt.batch_file.empty()) {
    std::ifstream in(opt.batch_file);
    if (!in) {
      err << "error: cannot open batch file " << opt.batch_file << "\n";
      return kParseError;
    }
    int code = kOk;
    std::string line;
    while (std::getline(in, line)) {
      const std::string w = superweyl::detail::trim(line);
      if (w.empty() || w.front() == '#') continue;
      int line_code = kOk;
      try {
        json report = detail::run_one(*session, opt, w, line_code);
        detail::emit(out, report, opt, true);
      } catch (const std::exception& e) {
        line_code = detail::exit_code_for(e);
        detail::emit(out, detail::error_json(e, opt), opt, true);
      }
      if (code == kOk) code = line_code;
    }
    return code;
  }

  int code = kOk;
  try {
    json report = detail::run_one(*session, opt, opt.weight, code);
    detail::emit(out, report, opt, false);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    detail::emit(out, detail::error_json(e, opt), opt, false);
    return detail::exit_code_for(e);
  }
  return code;
}

}  // namespace superweyl::cli
