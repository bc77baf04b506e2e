#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dmcs/error.hpp"
#include "dmcs/graph.hpp"
#include "dmcs/graph_io.hpp"
#include "dmcs/synth.hpp"
#include "oracles.hpp"

using namespace dmcs;

namespace {

Graph parse(const std::string& text, bool weighted = false) {
  std::istringstream in(text);
  return load_edge_list(in, weighted);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge list ingestion") {
  SUBCASE("path") {
    auto g = parse("0 1\n1 2");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
  }
  SUBCASE("duplicates merge") {
    auto g = parse("0 1\n1 0");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.total_weight() == 1.0);
  }
  SUBCASE("weighted duplicates sum") {
    auto g = parse("# header\n5 9 1.5\n9 5 2\n\n9 7 0.5\n", true);
    CHECK(g.edge_count() == 2);
    CHECK(g.total_weight() == doctest::Approx(4.0));
    CHECK(g.weighted_degree(*g.internal_id(9)) == doctest::Approx(4.0));
  }
  SUBCASE("external ids remap ascending") {
    auto g = parse("100 -3\n42 100\n");
    REQUIRE(g.node_count() == 3);
    CHECK(g.external_id(0) == -3);
    CHECK(g.external_id(1) == 42);
    CHECK(g.external_id(2) == 100);
    for (NodeId v = 0; v < 3; ++v) CHECK(*g.internal_id(g.external_id(v)) == v);
    CHECK_FALSE(g.internal_id(7).has_value());
  }
  SUBCASE("self-loop rejected") {
    try {
      parse("0 0");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SelfLoop);
      CHECK(std::string(e.what()).find("node 0") != std::string::npos);
    }
  }
  SUBCASE("malformed line names its number") {
    try {
      parse("0 1\n# c\n1 x\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
    }
    CHECK(code_of([] { parse("0 1 2 3"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse("7"); }) == ErrorCode::Parse);
  }
  SUBCASE("negative weight rejected") { CHECK(code_of([] { parse("0 1 -2", true); }) == ErrorCode::NegativeWeight); }
  SUBCASE("empty input") { CHECK(parse("# nothing\n").node_count() == 0); }
}

TEST_CASE("edge list round trip keeps external ids") {
  auto g = parse("10 20\n20 30\n30 10\n30 99\n");
  std::ostringstream out;
  write_edge_list(out, g);
  auto h = parse(out.str());
  REQUIRE(h.node_count() == g.node_count());
  CHECK(h.edge_count() == g.edge_count());
  for (NodeId v = 0; v < g.node_count(); ++v) CHECK(h.external_id(v) == g.external_id(v));
}

TEST_CASE("community file round trip") {
  CommunityList list{{3, 1, 2}, {7}, {2, 9}};
  std::ostringstream out;
  write_communities(out, list);
  std::istringstream in(out.str());
  auto back = load_communities(in);
  REQUIRE(back.size() == 3);
  CHECK(back[0] == std::vector<ExternalId>{1, 2, 3});
  CHECK(back[2] == std::vector<ExternalId>{2, 9});
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::erdos_renyi(25, 0.2, rng);
    std::uint64_t degree_total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      degree_total += g.degree(v);
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (NodeId u : nb) {
        CHECK(u != v);
        CHECK(g.has_edge(u, v));
      }
    }
    CHECK(degree_total == 2 * g.edge_count());
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    auto c = induced_counts(g, NodeSet(all));
    CHECK(c.edges == g.edge_count());
    CHECK(c.degree_sum == 2 * g.edge_count());
    CHECK(c.weight == doctest::Approx(g.total_weight()));
  }
}

TEST_CASE("connected component containing queries") {
  // path 0-1-2 plus isolated-ish pair 3-4 (node 3 plays the isolated d)
  auto g = oracle::make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(connected_component_containing(g, {0}) == NodeSet{0, 1, 2});
  CHECK(code_of([&] { connected_component_containing(g, {0, 3}); }) == ErrorCode::QueriesDisconnected);
  CHECK(code_of([&] { connected_component_containing(g, {}); }) == ErrorCode::InvalidArgument);

  auto ring = ring_of_cliques(3, 3);
  CHECK(connected_component_containing(ring.graph, {4}).size() == 9);
}

TEST_CASE("bfs distances and layers") {
  auto g = oracle::path(4);
  auto one = bfs_distances(g, {0});
  CHECK(one.dist == std::vector<std::int32_t>{0, 1, 2, 3});
  CHECK(one.max_distance() == 3);

  auto two = bfs_distances(g, {0, 3});
  CHECK(two.dist == std::vector<std::int32_t>{0, 1, 1, 0});
  CHECK(two.max_distance() == 1);
  CHECK(two.layers[0] == std::vector<NodeId>{0, 3});
  CHECK(two.layers[1] == std::vector<NodeId>{1, 2});

  auto split = oracle::make_graph(4, {{0, 1}, {2, 3}});
  auto d = bfs_distances(split, {0});
  CHECK_FALSE(d.reachable(2));
  CHECK(d.dist[3] == DistanceIndex::kUnreachable);
  CHECK(d.layers.size() == 2);
}

TEST_CASE("distance layers: every deeper node has a parent one layer up") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::erdos_renyi(30, 0.1, rng);
    auto idx = bfs_distances(g, {0});
    for (std::size_t t = 1; t < idx.layers.size(); ++t)
      for (NodeId v : idx.layers[t]) {
        bool parent = false;
        for (NodeId u : g.neighbors(v)) parent |= idx.dist[u] == static_cast<std::int32_t>(t) - 1;
        CHECK(parent);
      }
    // stripping any subset of the deepest layer leaves shallower nodes reachable
    const auto depth = idx.max_distance();
    if (depth < 1) continue;
    std::vector<NodeId> keep;
    for (std::size_t t = 0; t + 1 < idx.layers.size(); ++t)
      keep.insert(keep.end(), idx.layers[t].begin(), idx.layers[t].end());
    for (NodeId v : idx.layers[depth])
      if (rng() & 1) keep.push_back(v);
    CHECK(is_connected(g, NodeSet(keep)));
  }
}

TEST_CASE("articulation nodes") {
  CHECK(articulation_nodes(oracle::path(3), {0, 1, 2}) == NodeSet{1});
  auto cycle = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(articulation_nodes(cycle, {0, 1, 2, 3}).empty());

  // two triangles sharing node 2
  auto bowtie = oracle::make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const NodeSet all{0, 1, 2, 3, 4};
  CHECK(oracle::brute_articulation(bowtie, all) == NodeSet{2});
  CHECK(articulation_nodes(bowtie, all) == NodeSet{2});

  CHECK(code_of([&] { articulation_nodes(oracle::path(4), {0, 1, 3}); }) == ErrorCode::NotConnected);
}

TEST_CASE("articulation nodes match brute force on random connected subsets") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::erdos_renyi(14, 0.25, rng);
    auto s = oracle::random_connected_subset(g, 1 + rng() % 10, rng);
    CHECK(articulation_nodes(g, s) == oracle::brute_articulation(g, s));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("induced counts") {
  auto g = oracle::two_cliques_bridge();
  auto c = induced_counts(g, {0, 1, 2, 3});
  auto ref = oracle::counts_by_pairs(g, {0, 1, 2, 3});
  CHECK(ref.edges == 6);
  CHECK(ref.degree_sum == 13);
  CHECK(c.edges == 6);
  CHECK(c.degree_sum == 13);

  auto single = induced_counts(g, {3});
  CHECK(single.edges == 0);
  CHECK(single.degree_sum == 4);
}

TEST_CASE("graph stats") {
  auto st = graph_stats(oracle::path(4));
  CHECK(st.nodes == 4);
  CHECK(st.edges == 3);
  CHECK(st.components == 1);
  CHECK(st.diameter_estimate == 3);
  CHECK(st.degree_histogram == std::vector<std::uint64_t>{0, 2, 2});

  auto ring = graph_stats(ring_of_cliques(3, 3).graph);
  CHECK(ring.nodes == 9);
  CHECK(ring.edges == 12);

  CHECK(graph_stats(Graph::from_edges(0, {})).nodes == 0);
}

}  // TEST_SUITE
