#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "ramsey/bounds.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/named_graphs.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/selftest.hpp"

using namespace ramsey;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kExhausted = 3 };

/// Thrown for bad parameter combinations that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;
  std::optional<long> precision;  // starting bits; RAMSEY_PRECISION when unset
  std::uint64_t budget = 0;
  std::map<std::string, std::string> inputs;

  PrecisionPolicy policy() const {
    PrecisionPolicy p = default_precision_policy();
    if (precision) p.start = *precision;
    if (p.start < 2) throw UsageError("precision must be at least 2 bits");
    if (p.cap < p.start) p.cap = p.start;
    return p;
  }

  Json to_json() const {
    const PrecisionPolicy p = policy();
    return {{"command", command}, {"format", format},    {"seed", seed},
            {"threads", threads}, {"precision_start", p.start}, {"precision_cap", p.cap},
            {"budget", budget},   {"inputs", inputs}};
  }
};

Graph load_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_graph_file(arg);
  try {
    return named_graph(arg);
  } catch (const std::invalid_argument&) {
    throw UsageError("'" + arg + "' is neither a readable file nor a built-in graph name");
  }
}

TwoColoring load_coloring(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_coloring_file(arg);
  try {
    return named_coloring(arg);
  } catch (const std::invalid_argument&) {
    throw UsageError("'" + arg + "' is neither a readable file nor a built-in coloring name");
  }
}

Json embedding_json(const Embedding& e) {
  Json edges = Json::array();
  for (const auto& [u, v] : e.pattern.edges()) edges.push_back({e.host[u], e.host[v]});
  return {{"color", e.color == Color::Blue ? "blue" : "red"}, {"host_vertices", e.host}, {"host_edges", edges}};
}

// ---------------------------------------------------------------- table output

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_report_table(std::ostream& os, const Json& report) {
  os << "theorem: " << cell(report.value("theorem", Json(""))) << "\n";
  os << "overall: " << cell(report.value("overall", Json(""))) << "\n";
  for (const Json& c : report.value("clauses", Json::array())) {
    os << "  [" << cell(c["verdict"]) << "] " << cell(c["id"]);
    if (!c.value("gating", true)) os << " (non-gating)";
    os << "  " << cell(c["text"]) << "\n";
  }
  for (const Json& n : report.value("notes", Json::array())) os << "  note: " << cell(n) << "\n";
}

void print_table(std::ostream& os, const Json& out) {
  os << "config:\n";
  const Json config = out["config"].flatten();
  for (const auto& [k, v] : config.items()) os << "  " << k << " = " << cell(v) << "\n";
  const Json& r = out["result"];
  if (r.contains("stages") && out["config"]["command"] == "trace") {
    os << "m = " << r["m"] << "\n";
    os << "i  alpha_lo  alpha_hi  sum_hi  y_over_sqrt_m_lo  growth  amplified\n";
    for (const Json& s : r["stages"])
      os << s["i"] << "  " << cell(s["alpha"]["lo"]) << "  " << cell(s["alpha"]["hi"]) << "  "
         << cell(s["partial_sum"]["hi"]) << "  " << cell(s["y_exponent_over_sqrt_m"]["lo"]) << "  "
         << cell(s["growth"]) << "  " << s["amplified"] << "\n";
    return;
  }
  for (const auto& [k, v] : r.items()) {
    if (v.is_object() && v.contains("clauses")) {
      os << k << ":\n";
      print_report_table(os, v);
    } else if (v.is_object() || v.is_array()) {
      const Json flat = v.flatten();
      for (const auto& [fk, fv] : flat.items()) os << k << fk << " = " << cell(fv) << "\n";
    } else {
      os << k << " = " << cell(v) << "\n";
    }
  }
}

int emit(const RunConfig& cfg, Json result, int code) {
  Json out = {{"config", cfg.to_json()}, {"result", std::move(result)}, {"exit_code", code}};
  if (cfg.format == "table")
    print_table(std::cout, out);
  else
    std::cout << out.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------- bounds

struct BoundParams {
  std::string id;
  std::optional<long> n, m, m1, m2, p, l, k, r;
  std::optional<std::string> q, h;
};

long need(const std::optional<long>& v, const char* name, const std::string& id) {
  if (!v) throw UsageError("bounds " + id + " requires --" + name);
  return *v;
}

mpz_class need_big(const std::optional<std::string>& v, const char* name, const std::string& id) {
  if (!v) throw UsageError("bounds " + id + " requires --" + name);
  mpz_class z;
  if (z.set_str(*v, 10) != 0 || z < 0) throw UsageError("--" + std::string(name) + " must be a non-negative integer");
  return z;
}

int cmd_bounds(const RunConfig& cfg, const BoundParams& b) {
  const PrecisionPolicy pol = cfg.policy();
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(pol.start, 256);
  const std::string& id = b.id;
  Json result = {{"id", id}};
  auto with_report = [&](const BoundResult& br) {
    result["exponent"] = br.bound.to_json();
    result["report"] = br.report.to_json();
    return emit(cfg, result, br.report.passed() ? kPass : kFail);
  };
  try {
    if (id == "t1") {
      result["statement"] = "R(K_n) <= 2^(2n)";
      result["exponent"] = bound_erdos_szekeres(need(b.n, "n", id), prec).to_json();
    } else if (id == "t2") {
      result["statement"] = "R(K_n) >= 2^(n/2)";
      result["exponent"] = bound_erdos_lower(need(b.n, "n", id), prec).to_json();
    } else if (id == "t3") {
      result["statement"] = "R(G) <= 2^(250 sqrt(m))";
      result["exponent"] = bound_sudakov(need(b.m, "m", id), prec).to_json();
    } else if (id == "t4") {
      const long m = need(b.m, "m", id);
      const mpz_class n = b.n ? mpz_class(*b.n) : max_admissible_order(m, prec);
      result["statement"] = "R(G1, G2) <= 2^(250 sqrt(m))";
      result["n"] = n.get_str();
      result["exponent"] = bound_sudakov(m, prec).to_json();
      const HypothesisReport rep = verify_main_arithmetic(m, n, pol);
      result["report"] = rep.to_json();
      return emit(cfg, result, rep.passed() ? kPass : kFail);
    } else if (id == "t5") {
      const long m = need(b.m, "m", id);
      result["statement"] = "R(K_p, K_l + H) <= 2^(250 sqrt(m))";
      result["exponent"] = bound_sudakov(m, prec).to_json();
      const HypothesisReport rep = verify_main2_arithmetic(m, need(b.p, "p", id), need(b.l, "l", id),
                                                           need_big(b.q, "q", id), need(b.k, "k", id),
                                                           need(b.r, "r", id), pol);
      result["report"] = rep.to_json();
      return emit(cfg, result, rep.passed() ? kPass : kFail);
    } else if (id == "t7") {
      result["statement"] = "R(H, K_p) for H on h vertices, k colour classes, degree <= r off the first class";
      result["exponent"] =
          bound_alon(need_big(b.h, "horder", id), need(b.p, "p", id), need(b.k, "k", id), need(b.r, "r", id), prec)
              .to_json();
    } else if (id == "c1") {
      return with_report(bound_corollary_edges(need(b.m1, "m1", id), need(b.m2, "m2", id), pol));
    } else if (id == "c2") {
      result["statement"] = "R(G1, G2) <= 2^(250 n^(1/3))";
      result["exponent"] = bound_corollary_vertices(need(b.n, "n", id), prec).to_json();
    } else if (id == "c3") {
      return with_report(bound_corollary_join(need(b.m, "m", id), need(b.p, "p", id), need(b.l, "l", id),
                                              need_big(b.q, "q", id), pol));
    } else if (id == "c4") {
      return with_report(bound_corollary_bipartite(need(b.p, "p", id), need_big(b.q, "q", id), pol));
    } else {
      throw UsageError("unknown bound id '" + id + "' (expected t1 t2 t3 t4 t5 t7 c1 c2 c3 c4)");
    }
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("domain error: ") + e.what());
  }
  return emit(cfg, result, kPass);
}

// ---------------------------------------------------------------- verify

struct VerifyParams {
  std::string id;
  std::string g1, g2, h;
  std::optional<long> m, p, l;
};

int cmd_verify(const RunConfig& cfg, const VerifyParams& v) {
  const PrecisionPolicy pol = cfg.policy();
  if (!v.m || *v.m < 1) throw UsageError("verify requires --m >= 1");
  const long m = *v.m;
  Json result = {{"id", v.id}};
  if (v.id == "t4") {
    if (v.g1.empty() || v.g2.empty()) throw UsageError("verify t4 requires --g1 and --g2");
    const Graph g1 = load_graph(v.g1);
    const Graph g2 = load_graph(v.g2);
    HypothesisReport rep("main theorem hypotheses");
    rep.add("pre.edges.G1", "e(G1) <= m", tri(static_cast<long>(g1.edge_count()) <= m), {{"edges", g1.edge_count()}});
    rep.add("pre.edges.G2", "e(G2) <= m", tri(static_cast<long>(g2.edge_count()) <= m), {{"edges", g2.edge_count()}});
    rep.append(check_condition_I(g1, g2, m), "I.");
    if (m >= 2) {
      const HypothesisReport arith = verify_main_arithmetic(m, std::max(g1.order(), g2.order()), pol);
      rep.append(arith, "arith.");
      rep.precision = arith.precision;
    }
    result["report"] = rep.to_json();
    return emit(cfg, result, rep.passed() ? kPass : kFail);
  }
  if (v.id == "t5") {
    if (v.h.empty() || !v.p || !v.l) throw UsageError("verify t5 requires --hgraph, --p and --l");
    if (m < 27) throw UsageError("verify t5 requires --m >= 27");
    const Main2Check chk = check_main2_hypotheses(*v.p, *v.l, load_graph(v.h), m, pol);
    result["report"] = chk.report.to_json();
    if (chk.certificates) result["certificates"] = chk.certificates->to_json();
    return emit(cfg, result, chk.report.passed() ? kPass : kFail);
  }
  throw UsageError("unknown verify id '" + v.id + "' (expected t4 or t5)");
}

// ---------------------------------------------------------------- extract / oracle / trace / selftest

int cmd_extract(const RunConfig& cfg, const std::string& coloring, const std::string& g1s, const std::string& g2s,
                long m) {
  const TwoColoring c = load_coloring(coloring);
  const Graph g1 = load_graph(g1s);
  const Graph g2 = load_graph(g2s);
  if (m < 1 || m < static_cast<long>(g1.edge_count()) || m < static_cast<long>(g2.edge_count()))
    throw UsageError("--m must be positive and at least the edge count of both patterns");
  ExtractOptions opts;
  opts.search.seed = cfg.seed;
  if (cfg.budget) opts.attach.node_cap = cfg.budget;
  const ExtractResult r = extract_ramsey_witness(c, g1, g2, m, opts);
  Json result = {{"found", r.embedding.has_value()}, {"proven_absent", r.proven_absent},
                 {"trace", r.trace.to_json()}};
  if (r.embedding) {
    result["embedding"] = embedding_json(*r.embedding);
    result["validated"] = check_embedding(c, *r.embedding);
    return emit(cfg, result, result["validated"].get<bool>() ? kPass : kFail);
  }
  return emit(cfg, result, r.proven_absent ? kFail : kExhausted);
}

int cmd_oracle(const RunConfig& cfg, const std::string& g1s, const std::string& g2s, int n_max) {
  if (n_max < 1) throw UsageError("--n-max must be positive");
  OracleOptions o;
  o.budget = cfg.budget;
  o.threads = cfg.threads;
  const ExactResult r = exact_ramsey(load_graph(g1s), load_graph(g2s), n_max, o);
  if (r.status == ExactResult::Status::Exact) return emit(cfg, r.to_json(), kPass);
  return emit(cfg, r.to_json(), r.certificate.exhaustive ? kFail : kExhausted);
}

int cmd_trace(const RunConfig& cfg, long m) {
  if (m < 2) throw UsageError("--m must be at least 2");
  return emit(cfg, alpha_sequence(m, std::max<mpfr_prec_t>(cfg.policy().start, 256)).to_json(), kPass);
}

int cmd_selftest(const RunConfig& cfg, std::vector<std::string> suites) {
  static const std::map<std::string, std::string> aliases = {{"lemma1", "base-pair"}, {"all", ""}};
  std::vector<std::string> run;
  for (const auto& s : suites) {
    auto it = aliases.find(s);
    const std::string name = it == aliases.end() ? s : it->second;
    if (name.empty()) {
      run = suite_names();
      break;
    }
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("unknown suite '" + s + "'");
    run.push_back(name);
  }
  if (run.empty()) run = suite_names();
  SelftestOptions o;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  o.max_precision = std::max<mpfr_prec_t>(cfg.policy().start, 512);
  Json rows = Json::array();
  bool all = true;
  for (const auto& name : run) {
    const SuiteResult s = run_suite(name, o);
    all = all && s.passed;
    rows.push_back({{"suite", s.name}, {"passed", s.passed}, {"summary", s.summary}, {"report", s.report}});
    if (cfg.format == "table") std::cerr << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.summary << "\n";
  }
  return emit(cfg, {{"suites", rows}, {"passed", all}}, all ? kPass : kFail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey bound evaluation, hypothesis checking, witness extraction and exact search"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "Seed for randomised choices (default 1)");
  app.add_option("--threads", cfg.threads, "Worker threads (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision, "Starting MPFR precision in bits (env RAMSEY_PRECISION, default 128)");
  app.add_option("--budget", cfg.budget, "Search node budget, 0 = unlimited");

  BoundParams bp;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound: t1 t2 t3 t4 t5 t7 c1 c2 c3 c4");
  bounds->add_option("id", bp.id)->required();
  bounds->add_option("--n", bp.n);
  bounds->add_option("--m", bp.m);
  bounds->add_option("--m1", bp.m1);
  bounds->add_option("--m2", bp.m2);
  bounds->add_option("--p", bp.p);
  bounds->add_option("--l", bp.l);
  bounds->add_option("--q", bp.q, "Integer, may exceed 64 bits");
  bounds->add_option("--k", bp.k);
  bounds->add_option("--r", bp.r);
  bounds->add_option("--horder", bp.h, "Order of H, may exceed 64 bits");

  VerifyParams vp;
  auto* verify = app.add_subcommand("verify", "Check theorem hypotheses on concrete graphs: t4 (G1, G2) or t5 (K_p vs K_l + H)");
  verify->add_option("id", vp.id)->required();
  verify->add_option("--g1", vp.g1, "Graph file or built-in name");
  verify->add_option("--g2", vp.g2, "Graph file or built-in name");
  verify->add_option("--hgraph", vp.h, "Graph H, file or built-in name");
  verify->add_option("--m", vp.m);
  verify->add_option("--p", vp.p);
  verify->add_option("--l", vp.l);

  std::string coloring, eg1, eg2;
  long em = 0;
  auto* extract = app.add_subcommand("extract", "Find a blue G1 or red G2 in a colouring via the pair pipeline");
  extract->add_option("--coloring", coloring, "Colouring file or built-in name")->required();
  extract->add_option("--g1", eg1)->required();
  extract->add_option("--g2", eg2)->required();
  extract->add_option("--m", em)->required();

  std::string og1, og2;
  int n_max = 10;
  auto* oracle = app.add_subcommand("oracle", "Exact R(G1, G2) by exhaustive search");
  oracle->add_option("--g1", og1)->required();
  oracle->add_option("--g2", og2)->required();
  oracle->add_option("--n-max", n_max, "Largest n tried (default 10)");

  long tm = 0;
  auto* trace = app.add_subcommand("trace", "Alpha sequence and Y exponents for m");
  trace->add_option("--m", tm)->required();

  std::vector<std::string> suites;
  auto* selftest = app.add_subcommand("selftest", "Run self-test suites (default all)");
  selftest->add_option("suite", suites);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  auto record = [&](const char* k, const std::string& v) {
    if (!v.empty()) cfg.inputs[k] = v;
  };
  record("coloring", coloring);
  record("g1", eg1.empty() ? (og1.empty() ? vp.g1 : og1) : eg1);
  record("g2", eg2.empty() ? (og2.empty() ? vp.g2 : og2) : eg2);
  record("h", vp.h);

  try {
    if (*bounds) return cmd_bounds(cfg, bp);
    if (*verify) return cmd_verify(cfg, vp);
    if (*extract) return cmd_extract(cfg, coloring, eg1, eg2, em);
    if (*oracle) return cmd_oracle(cfg, og1, og2, n_max);
    if (*trace) return cmd_trace(cfg, tm);
    if (*selftest) return cmd_selftest(cfg, suites);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
