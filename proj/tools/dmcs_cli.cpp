// Command-line front end. Talks to the library only through dmcs/dmcs.h.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmcs/dmcs.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitRefused = 4;
constexpr int kExitInternal = 1;

struct GraphDeleter {
  void operator()(dmcs_graph* g) const { dmcs_graph_free(g); }
};
struct ResultDeleter {
  void operator()(dmcs_result* r) const { dmcs_result_free(r); }
};
struct CommunitiesDeleter {
  void operator()(dmcs_communities* c) const { dmcs_communities_free(c); }
};
using GraphPtr = std::unique_ptr<dmcs_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<dmcs_result, ResultDeleter>;
using CommunitiesPtr = std::unique_ptr<dmcs_communities, CommunitiesDeleter>;

// Carries a library status out of a command body.
struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

int exit_code_for(dmcs_status st) {
  switch (st) {
    case DMCS_OK: return kExitOk;
    case DMCS_ERROR_QUERIES_DISCONNECTED:
    case DMCS_ERROR_NO_K_CORE:
    case DMCS_ERROR_NOT_APPLICABLE: return kExitInfeasible;
    case DMCS_ERROR_SIZE_REFUSAL: return kExitRefused;
    case DMCS_ERROR_INTERNAL:
    case DMCS_ERROR_DANGLING_NODE:
    case DMCS_ERROR_CONTRACT_VIOLATION: return kExitInternal;
    default: return kExitInput;
  }
}

void check(dmcs_status st) {
  if (st != DMCS_OK) throw Failure{exit_code_for(st), dmcs_status_name(st), dmcs_last_error()};
}

[[noreturn]] void input_error(const std::string& message) { throw Failure{kExitInput, "invalid-argument", message}; }

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw Failure{kExitInput, "io-error", "cannot write " + out_path};
  os << text;
}

Json ids_json(const int64_t* ids, size_t count) {
  Json arr = Json::array();
  for (size_t i = 0; i < count; ++i) arr.push_back(ids[i]);
  return arr;
}

GraphPtr load_graph(const std::string& path, bool weighted) {
  dmcs_graph* g = nullptr;
  check(dmcs_graph_load(path.c_str(), weighted ? 1 : 0, &g));
  return GraphPtr(g);
}

size_t oracle_limit(std::optional<size_t> flag) {
  size_t limit = flag.value_or(16);
  if (const char* env = std::getenv("DMCS_ORACLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') input_error("DMCS_ORACLE_LIMIT must be a non-negative integer");
    limit = std::min<size_t>(limit, cap);
  }
  return limit;
}

struct SearchArgs {
  std::string graph;
  std::vector<int64_t> query;
  std::string algo = "fpa";
  std::optional<uint32_t> k;
  std::optional<size_t> limit;
  bool no_pruning = false;
  bool weighted = false;
  std::string out;
};

void run_search(const SearchArgs& a) {
  dmcs_search_options opt;
  dmcs_search_options_init(&opt);
  if (a.algo == "fpa") opt.algorithm = DMCS_ALGO_FPA;
  else if (a.algo == "nca") opt.algorithm = DMCS_ALGO_NCA;
  else if (a.algo == "kcore") opt.algorithm = DMCS_ALGO_KCORE;
  else if (a.algo == "highcore") opt.algorithm = DMCS_ALGO_HIGHCORE;
  else if (a.algo == "exact") opt.algorithm = DMCS_ALGO_EXACT;
  else input_error("unknown algorithm '" + a.algo + "'");
  if (opt.algorithm == DMCS_ALGO_KCORE && !a.k) input_error("--k is required for --algo kcore");
  opt.pruning = a.no_pruning ? 0 : 1;
  opt.k = a.k.value_or(0);
  opt.node_limit = oracle_limit(a.limit);

  auto graph = load_graph(a.graph, a.weighted);
  for (int64_t id : a.query)
    if (!dmcs_graph_has_node(graph.get(), id))
      throw Failure{kExitInput, "unknown-node", "query id " + std::to_string(id) + " is not in the graph"};

  const auto t0 = std::chrono::steady_clock::now();
  dmcs_result* raw = nullptr;
  check(dmcs_search(graph.get(), a.query.data(), a.query.size(), &opt, &raw));
  ResultPtr result(raw);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json flags;
  flags["pruning"] = !a.no_pruning;
  flags["k"] = a.k ? Json(*a.k) : Json(nullptr);
  flags["node_limit"] = opt.node_limit;
  flags["weighted"] = a.weighted;

  Json doc;
  doc["schema"] = "dmcs/run-record";
  doc["version"] = kSchemaVersion;
  doc["command"] = "search";
  doc["graph"] = a.graph;
  doc["algorithm"] = dmcs_result_algorithm(result.get());
  doc["query"] = a.query;
  doc["flags"] = flags;
  doc["community"] = ids_json(dmcs_result_members(result.get()), dmcs_result_size(result.get()));
  doc["size"] = dmcs_result_size(result.get());
  doc["dm"] = dmcs_result_density_modularity(result.get());
  doc["cm"] = dmcs_result_classic_modularity(result.get());
  doc["best_iteration"] = dmcs_result_best_iteration(result.get());
  doc["removals"] = dmcs_result_removals(result.get());
  doc["core_level"] = dmcs_result_core_level(result.get());
  doc["wall_time_ms"] = wall_ms;
  emit(doc, a.out);
}

void write_generated(dmcs_graph* g, dmcs_communities* truth, const std::string& prefix, Json doc) {
  const std::string el = prefix + ".el", cmty = prefix + ".cmty";
  check(dmcs_graph_save(g, el.c_str()));
  check(dmcs_communities_save(truth, cmty.c_str()));
  doc["n"] = dmcs_graph_node_count(g);
  doc["m"] = dmcs_graph_edge_count(g);
  doc["communities"] = dmcs_communities_count(truth);
  doc["files"] = {el, cmty};
  emit(doc, "");
}

Json gen_header(const char* kind) {
  Json doc;
  doc["schema"] = "dmcs/gen";
  doc["version"] = kSchemaVersion;
  doc["kind"] = kind;
  return doc;
}

struct EvalArgs {
  std::string result;
  std::string truth;
  std::optional<size_t> n;
  std::string graph;
  std::string out;
};

std::vector<int64_t> read_id_array(const Json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key) || !doc[key].is_array()) input_error(path + ": missing array '" + key + "'");
  std::vector<int64_t> ids;
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer()) input_error(path + ": '" + key + "' must hold integer ids");
    ids.push_back(v.get<int64_t>());
  }
  return ids;
}

void run_eval(const EvalArgs& a) {
  if (!a.n && a.graph.empty()) input_error("either --n or --graph is required");
  std::ifstream in(a.result);
  if (!in) throw Failure{kExitInput, "io-error", "cannot open " + a.result};
  Json record;
  try {
    record = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Failure{kExitInput, "parse-error", a.result + ": " + e.what()};
  }
  const auto community = read_id_array(record, "community", a.result);
  const auto query = read_id_array(record, "query", a.result);

  dmcs_communities* raw = nullptr;
  check(dmcs_communities_load(a.truth.c_str(), &raw));
  CommunitiesPtr truths(raw);
  GraphPtr graph;
  if (!a.graph.empty()) graph = load_graph(a.graph, false);

  dmcs_eval_report report{};
  check(dmcs_evaluate(community.data(), community.size(), truths.get(), query.data(), query.size(), graph.get(),
                      a.n.value_or(0), &report));
  Json doc;
  doc["schema"] = "dmcs/eval-report";
  doc["version"] = kSchemaVersion;
  doc["result"] = a.result;
  doc["truth"] = a.truth;
  doc["nmi"] = report.nmi;
  doc["ari"] = report.ari;
  doc["fscore"] = report.fscore;
  doc["matched_truth"] = report.matched_truth;
  emit(doc, a.out);
}

void run_stats(const std::string& path, bool weighted) {
  auto graph = load_graph(path, weighted);
  dmcs_graph_stats st{};
  check(dmcs_graph_stats_compute(graph.get(), &st));
  size_t len = 0;
  check(dmcs_graph_degree_histogram(graph.get(), nullptr, 0, &len));
  std::vector<uint64_t> hist(len);
  check(dmcs_graph_degree_histogram(graph.get(), hist.data(), hist.size(), &len));

  Json doc;
  doc["schema"] = "dmcs/graph-stats";
  doc["version"] = kSchemaVersion;
  doc["graph"] = path;
  doc["n"] = st.nodes;
  doc["m"] = st.edges;
  doc["components"] = st.components;
  doc["largest_component"] = st.largest_component;
  doc["max_degree"] = st.max_degree;
  doc["degree_histogram"] = hist;
  doc["diameter_estimate"] = st.diameter_estimate;
  doc["diameter_is_lower_bound"] = true;
  Json warnings = Json::array();
  if (st.nodes == 0) warnings.push_back("graph is empty");
  doc["warnings"] = warnings;
  emit(doc, "");
}

void print_failure(const Failure& f) {
  Json doc;
  doc["schema"] = "dmcs/error";
  doc["version"] = kSchemaVersion;
  doc["error"] = {{"code", f.code}, {"message", f.message}};
  std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-modularity community search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dmcs_version()));

  SearchArgs search;
  auto* cmd_search = app.add_subcommand("search", "Find a community around query nodes");
  cmd_search->add_option("graph", search.graph, "Edge-list file")->required();
  cmd_search->add_option("-q,--query", search.query, "Query node ids (external)")->required();
  cmd_search->add_option("-a,--algo", search.algo, "fpa | nca | kcore | highcore | exact");
  cmd_search->add_option("--k", search.k, "Minimum degree for kcore");
  cmd_search->add_option("--limit", search.limit, "Component size cap for exact (capped by DMCS_ORACLE_LIMIT)");
  cmd_search->add_flag("--no-pruning", search.no_pruning, "Disable FPA layer pruning");
  cmd_search->add_flag("--weighted", search.weighted, "Read a third weight column");
  cmd_search->add_option("-o,--out", search.out, "Write the run record here instead of stdout");

  auto* cmd_gen = app.add_subcommand("gen", "Generate a synthetic graph and its ground truth");
  cmd_gen->require_subcommand(1);
  std::string gen_out;
  uint32_t ring_cliques = 0, ring_size = 0;
  auto* gen_ring = cmd_gen->add_subcommand("ring", "Ring of cliques");
  gen_ring->add_option("cliques", ring_cliques)->required();
  gen_ring->add_option("size", ring_size)->required();
  gen_ring->add_option("-o,--out", gen_out, "Output prefix")->required();

  uint32_t sbm_n = 0, sbm_g = 0;
  double sbm_pin = 0.0, sbm_pout = 0.0;
  uint64_t sbm_seed = 1;
  auto* gen_sbm = cmd_gen->add_subcommand("sbm", "Planted partition");
  gen_sbm->add_option("n", sbm_n)->required();
  gen_sbm->add_option("communities", sbm_g)->required();
  gen_sbm->add_option("p_in", sbm_pin)->required();
  gen_sbm->add_option("p_out", sbm_pout)->required();
  gen_sbm->add_option("--seed", sbm_seed, "PRNG seed");
  gen_sbm->add_option("-o,--out", gen_out, "Output prefix")->required();

  EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Score a run record against ground truth");
  cmd_eval->add_option("result", eval.result, "Run record JSON from `search`")->required();
  cmd_eval->add_option("truth", eval.truth, "Community file")->required();
  cmd_eval->add_option("--n", eval.n, "Universe size when ids are 0..n-1");
  cmd_eval->add_option("--graph", eval.graph, "Edge list defining the id universe");
  cmd_eval->add_option("-o,--out", eval.out, "Write the report here instead of stdout");

  std::string stats_graph;
  bool stats_weighted = false;
  auto* cmd_stats = app.add_subcommand("stats", "Summary statistics of an edge list");
  cmd_stats->add_option("graph", stats_graph)->required();
  cmd_stats->add_flag("--weighted", stats_weighted);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_failure({kExitInput, "invalid-argument", e.what()});
    return kExitInput;
  }

  try {
    if (cmd_search->parsed()) {
      run_search(search);
    } else if (gen_ring->parsed()) {
      dmcs_graph* g = nullptr;
      dmcs_communities* c = nullptr;
      check(dmcs_generate_ring_of_cliques(ring_cliques, ring_size, &g, &c));
      GraphPtr graph(g);
      CommunitiesPtr truth(c);
      auto doc = gen_header("ring");
      doc["params"] = {{"cliques", ring_cliques}, {"size", ring_size}};
      write_generated(graph.get(), truth.get(), gen_out, doc);
    } else if (gen_sbm->parsed()) {
      dmcs_graph* g = nullptr;
      dmcs_communities* c = nullptr;
      check(dmcs_generate_planted_partition(sbm_n, sbm_g, sbm_pin, sbm_pout, sbm_seed, &g, &c));
      GraphPtr graph(g);
      CommunitiesPtr truth(c);
      auto doc = gen_header("sbm");
      doc["params"] = {{"n", sbm_n}, {"communities", sbm_g}, {"p_in", sbm_pin}, {"p_out", sbm_pout}};
      doc["seed"] = sbm_seed;
      write_generated(graph.get(), truth.get(), gen_out, doc);
    } else if (cmd_eval->parsed()) {
      run_eval(eval);
    } else if (cmd_stats->parsed()) {
      run_stats(stats_graph, stats_weighted);
    }
  } catch (const Failure& f) {
    print_failure(f);
    return f.exit_code;
  }
  return kExitOk;
}
