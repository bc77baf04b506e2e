#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dmcs/dmcs.h"

namespace fs = std::filesystem;

namespace {

dmcs_graph* parse(const std::string& text, int weighted = 0) {
  dmcs_graph* g = nullptr;
  REQUIRE(dmcs_graph_parse(text.data(), text.size(), weighted, &g) == DMCS_OK);
  return g;
}

std::vector<int64_t> members(const dmcs_result* r) {
  return {dmcs_result_members(r), dmcs_result_members(r) + dmcs_result_size(r)};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "dmcs_c_api_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(dmcs_version()) == "1.0.0");
  CHECK(std::string(dmcs_status_name(DMCS_OK)) == "ok");
  CHECK(std::string(dmcs_status_name(DMCS_ERROR_QUERIES_DISCONNECTED)) == "queries-disconnected");
  CHECK(std::string(dmcs_status_name(DMCS_ERROR_NO_K_CORE)) == "no-k-core-community");
  CHECK(std::string(dmcs_status_name(DMCS_ERROR_SIZE_REFUSAL)) == "size-refusal");
}

TEST_CASE("parse errors surface through status and message") {
  dmcs_graph* g = nullptr;
  const std::string bad = "0 1\n2 2\n";
  CHECK(dmcs_graph_parse(bad.data(), bad.size(), 0, &g) == DMCS_ERROR_SELF_LOOP);
  CHECK(g == nullptr);
  CHECK(std::string(dmcs_last_error()).find("line 2") != std::string::npos);

  const std::string junk = "0 one\n";
  CHECK(dmcs_graph_parse(junk.data(), junk.size(), 0, &g) == DMCS_ERROR_PARSE);
  const std::string neg = "0 1 -1\n";
  CHECK(dmcs_graph_parse(neg.data(), neg.size(), 1, &g) == DMCS_ERROR_NEGATIVE_WEIGHT);
  CHECK(dmcs_graph_parse(neg.data(), neg.size(), 0, nullptr) == DMCS_ERROR_INVALID_ARGUMENT);
  CHECK(dmcs_graph_load("/nonexistent/graph.el", 0, &g) == DMCS_ERROR_IO);
}

TEST_CASE("graph accessors and stats") {
  auto* g = parse("10 11\n11 12\n12 13\n");
  CHECK(dmcs_graph_node_count(g) == 4);
  CHECK(dmcs_graph_edge_count(g) == 3);
  CHECK(dmcs_graph_has_node(g, 12));
  CHECK_FALSE(dmcs_graph_has_node(g, 0));

  dmcs_graph_stats st{};
  REQUIRE(dmcs_graph_stats_compute(g, &st) == DMCS_OK);
  CHECK(st.nodes == 4);
  CHECK(st.edges == 3);
  CHECK(st.components == 1);
  CHECK(st.max_degree == 2);
  CHECK(st.diameter_estimate == 3);

  uint64_t hist[2] = {9, 9};
  size_t written = 0;
  REQUIRE(dmcs_graph_degree_histogram(g, hist, 2, &written) == DMCS_OK);
  CHECK(written == 3);
  CHECK(hist[0] == 0);
  CHECK(hist[1] == 2);
  dmcs_graph_free(g);
}

TEST_CASE("file round trips") {
  dmcs_graph* g = nullptr;
  dmcs_communities* truth = nullptr;
  REQUIRE(dmcs_generate_ring_of_cliques(4, 3, &g, &truth) == DMCS_OK);
  const auto el = scratch("ring.el"), cm = scratch("ring.cmty");
  REQUIRE(dmcs_graph_save(g, el.c_str()) == DMCS_OK);
  REQUIRE(dmcs_communities_save(truth, cm.c_str()) == DMCS_OK);

  dmcs_graph* back = nullptr;
  dmcs_communities* truth_back = nullptr;
  REQUIRE(dmcs_graph_load(el.c_str(), 0, &back) == DMCS_OK);
  REQUIRE(dmcs_communities_load(cm.c_str(), &truth_back) == DMCS_OK);
  CHECK(dmcs_graph_node_count(back) == 12);
  CHECK(dmcs_graph_edge_count(back) == 16);
  REQUIRE(dmcs_communities_count(truth_back) == 4);
  CHECK(dmcs_communities_size(truth_back, 2) == 3);
  CHECK(dmcs_communities_members(truth_back, 2)[0] == 6);
  CHECK(dmcs_communities_members(truth_back, 9) == nullptr);

  dmcs_graph_free(g);
  dmcs_graph_free(back);
  dmcs_communities_free(truth);
  dmcs_communities_free(truth_back);
}

TEST_CASE("search through every algorithm") {
  dmcs_graph* g = nullptr;
  dmcs_communities* truth = nullptr;
  REQUIRE(dmcs_generate_ring_of_cliques(30, 6, &g, &truth) == DMCS_OK);
  const int64_t q[] = {2};
  const std::vector<int64_t> clique{0, 1, 2, 3, 4, 5};

  dmcs_search_options opt;
  dmcs_search_options_init(&opt);
  CHECK(opt.algorithm == DMCS_ALGO_FPA);
  CHECK(opt.pruning == 1);

  for (auto algo : {DMCS_ALGO_FPA, DMCS_ALGO_NCA}) {
    opt.algorithm = algo;
    dmcs_result* r = nullptr;
    REQUIRE(dmcs_search(g, q, 1, &opt, &r) == DMCS_OK);
    CHECK(members(r) == clique);
    CHECK(dmcs_result_density_modularity(r) == doctest::Approx(2.411111).epsilon(1e-6));
    CHECK(dmcs_result_classic_modularity(r) == doctest::Approx(0.03013889).epsilon(1e-6));
    CHECK(dmcs_result_removals(r) == 174);
    dmcs_result_free(r);
  }

  opt.algorithm = DMCS_ALGO_KCORE;
  dmcs_result* r = nullptr;
  CHECK(dmcs_search(g, q, 1, &opt, &r) == DMCS_ERROR_INVALID_ARGUMENT);
  opt.k = 6;
  CHECK(dmcs_search(g, q, 1, &opt, &r) == DMCS_ERROR_NO_K_CORE);
  opt.k = 5;
  REQUIRE(dmcs_search(g, q, 1, &opt, &r) == DMCS_OK);
  CHECK(dmcs_result_size(r) == 180);
  CHECK(dmcs_result_core_level(r) == 5);
  CHECK(std::string(dmcs_result_algorithm(r)) == "kcore");
  dmcs_result_free(r);

  opt.algorithm = DMCS_ALGO_HIGHCORE;
  REQUIRE(dmcs_search(g, q, 1, &opt, &r) == DMCS_OK);
  CHECK(dmcs_result_core_level(r) == 5);
  dmcs_result_free(r);

  opt.algorithm = DMCS_ALGO_EXACT;
  CHECK(dmcs_search(g, q, 1, &opt, &r) == DMCS_ERROR_SIZE_REFUSAL);

  const int64_t unknown[] = {999};
  opt.algorithm = DMCS_ALGO_FPA;
  CHECK(dmcs_search(g, unknown, 1, &opt, &r) == DMCS_ERROR_UNKNOWN_NODE);
  CHECK(dmcs_search(g, q, 0, &opt, &r) == DMCS_ERROR_INVALID_ARGUMENT);

  dmcs_graph_free(g);
  dmcs_communities_free(truth);
}

TEST_CASE("exact search on a small graph") {
  auto* g = parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
  dmcs_search_options opt;
  dmcs_search_options_init(&opt);
  opt.algorithm = DMCS_ALGO_EXACT;
  const int64_t q[] = {0};
  dmcs_result* r = nullptr;
  REQUIRE(dmcs_search(g, q, 1, &opt, &r) == DMCS_OK);
  CHECK(members(r) == std::vector<int64_t>{0, 1, 2, 3});
  CHECK(dmcs_result_density_modularity(r) == doctest::Approx(0.6875));
  dmcs_result_free(r);

  const int64_t split[] = {0, 9};
  auto* h = parse("0 1\n9 8\n");
  CHECK(dmcs_search(h, split, 2, &opt, &r) == DMCS_ERROR_QUERIES_DISCONNECTED);
  dmcs_graph_free(h);
  dmcs_graph_free(g);
}

TEST_CASE("scores from counts") {
  double v = 0;
  REQUIRE(dmcs_classic_modularity(4, 6, 14, 26, &v) == DMCS_OK);
  CHECK(v == doctest::Approx(0.158284).epsilon(1e-6));
  REQUIRE(dmcs_density_modularity(8, 14, 28, 26, &v) == DMCS_OK);
  CHECK(v == doctest::Approx(0.8076923).epsilon(1e-6));
  CHECK(dmcs_density_modularity(8, 14, 28, 0, &v) == DMCS_ERROR_EMPTY_GRAPH);
}

TEST_CASE("evaluation") {
  const auto path = scratch("truth.cmty");
  {
    std::ofstream f(path);
    f << "1 2 4\n0 5\n";
  }
  dmcs_communities* truth = nullptr;
  REQUIRE(dmcs_communities_load(path.c_str(), &truth) == DMCS_OK);
  const int64_t pred[] = {1, 2, 3};
  const int64_t q[] = {1};
  dmcs_eval_report rep{};
  REQUIRE(dmcs_evaluate(pred, 3, truth, q, 1, nullptr, 6, &rep) == DMCS_OK);
  CHECK(rep.nmi == doctest::Approx(0.08170416594551037).epsilon(1e-12));
  CHECK(rep.ari == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
  CHECK(rep.fscore == doctest::Approx(2.0 / 3.0));
  CHECK(rep.matched_truth == 0);

  const int64_t q3[] = {3};
  CHECK(dmcs_evaluate(pred, 3, truth, q3, 1, nullptr, 6, &rep) == DMCS_ERROR_NOT_APPLICABLE);
  CHECK(dmcs_evaluate(pred, 3, truth, q, 1, nullptr, 3, &rep) == DMCS_ERROR_UNKNOWN_NODE);

  auto* g = parse("0 1\n1 2\n2 3\n3 4\n4 5\n");
  REQUIRE(dmcs_evaluate(pred, 3, truth, q, 1, g, 0, &rep) == DMCS_OK);
  CHECK(rep.fscore == doctest::Approx(2.0 / 3.0));
  dmcs_graph_free(g);
  dmcs_communities_free(truth);
}

TEST_CASE("null handles are tolerated") {
  dmcs_graph_free(nullptr);
  dmcs_result_free(nullptr);
  dmcs_communities_free(nullptr);
  CHECK(dmcs_graph_node_count(nullptr) == 0);
  CHECK(dmcs_result_size(nullptr) == 0);
  CHECK(dmcs_search(nullptr, nullptr, 0, nullptr, nullptr) == DMCS_ERROR_INVALID_ARGUMENT);
}
