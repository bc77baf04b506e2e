#include "dmcs/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string_view>

#include "dmcs/error.hpp"

namespace dmcs {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r\n");
  return pos == std::string_view::npos || line[pos] == '#';
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

}  // namespace

Graph load_edge_list(std::istream& in, bool weighted) {
  struct RawEdge {
    ExternalId u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tok = split_ws(line);
    if (tok.size() < 2 || tok.size() > 3) parse_fail(line_no, "expected 'u v [weight]'");
    RawEdge e{0, 0, 1.0};
    if (!parse_number(tok[0], e.u) || !parse_number(tok[1], e.v))
      parse_fail(line_no, "node ids must be integers");
    if (tok.size() == 3 && !parse_number(tok[2], e.w)) parse_fail(line_no, "weight must be a number");
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop on node " + std::to_string(e.u));
    if (e.w < 0.0) throw Error(ErrorCode::NegativeWeight, "line " + std::to_string(line_no) + ": negative weight");
    raw.push_back(e);
  }

  std::vector<ExternalId> ids;
  ids.reserve(2 * raw.size());
  for (const auto& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto to_internal = [&](ExternalId x) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };

  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) edges.push_back({to_internal(e.u), to_internal(e.v), e.w});
  const std::size_t n = ids.size();
  return Graph::from_edges(n, edges, weighted, std::move(ids));
}

Graph load_edge_list_file(const std::string& path, bool weighted) {
  auto in = open_or_throw(path);
  return load_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) {
    out << g.external_id(e.u) << ' ' << g.external_id(e.v);
    if (g.is_weighted()) out << ' ' << std::setprecision(17) << e.weight;
    out << '\n';
  }
}

CommunityList load_communities(std::istream& in) {
  CommunityList out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::vector<ExternalId> members;
    for (auto tok : split_ws(line)) {
      ExternalId id = 0;
      if (!parse_number(tok, id)) parse_fail(line_no, "community members must be integer ids");
      members.push_back(id);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

CommunityList load_communities_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_communities(in);
}

void write_communities(std::ostream& out, const CommunityList& communities) {
  for (const auto& c : communities) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

}  // namespace dmcs
