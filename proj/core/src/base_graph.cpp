#include "liftlab/base_graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

namespace liftlab {

BaseGraph BaseGraph::join(int k, int s) {
  if (k < 3) throw std::domain_error("cycle length k must be at least 3");
  if (s < 1) throw std::domain_error("stable set size s must be at least 1");
  return BaseGraph(k, s);
}

BaseGraph::BaseGraph(int k, int s) : k_(k), s_(s), incidence_(static_cast<std::size_t>(k + s)) {
  edges_.reserve(static_cast<std::size_t>(k + k * s));
  for (int i = 0; i < k; ++i)
    edges_.push_back({i, (i + 1) % k, i});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < s; ++j)
      edges_.push_back({i, k + j, join_edge(i, j)});
  for (const auto& e : edges_) {
    incidence_[static_cast<std::size_t>(e.tail)].push_back(e.index);
    incidence_[static_cast<std::size_t>(e.head)].push_back(e.index);
  }
  for (auto& inc : incidence_) std::sort(inc.begin(), inc.end());
}

std::string BaseGraph::label(int v) const {
  return is_stable(v) ? "y" + std::to_string(v - k_ + 1) : "x" + std::to_string(v + 1);
}

std::string BaseGraph::to_edge_list() const {
  std::string out;
  for (const auto& e : edges_) {
    out += label(e.tail);
    out += ' ';
    out += label(e.head);
    out += '\n';
  }
  return out;
}

namespace {

struct Label {
  bool stable;
  int number;  // 1-based
};

Label parse_label(std::string_view token, int line_no) {
  auto fail = [&] {
    return ParseError("line " + std::to_string(line_no) + ": bad vertex label '" +
                      std::string(token) + "'");
  };
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) throw fail();
  int number = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), number);
  if (ec != std::errc() || ptr != token.data() + token.size() || number < 1) throw fail();
  return {token[0] == 'y', number};
}

}  // namespace

BaseGraph BaseGraph::parse_edge_list(std::string_view text) {
  std::vector<std::pair<Label, Label>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'tail head'");
    lines.emplace_back(parse_label(a, line_no), parse_label(b, line_no));
  }
  if (lines.empty()) throw ParseError("empty edge list");

  int k = 0;
  int s = 0;
  for (const auto& [a, b] : lines) {
    for (const Label& l : {a, b}) {
      int& bound = l.stable ? s : k;
      bound = std::max(bound, l.number);
    }
  }
  if (k < 3 || s < 1)
    throw ParseError("edge list is not of join shape: need at least x1..x3 and y1");

  auto index_of = [k](const Label& l) { return l.stable ? k + l.number - 1 : l.number - 1; };
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : lines) {
    if (a.stable && b.stable)
      throw ParseError("edge y" + std::to_string(a.number) + " y" + std::to_string(b.number) +
                       " joins two stable vertices");
    int u = index_of(a);
    int v = index_of(b);
    if (u == v) throw ParseError("loop at vertex index " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError("duplicated edge between vertex indices " + std::to_string(u) + " and " +
                       std::to_string(v));
  }

  BaseGraph g(k, s);
  std::set<std::pair<int, int>> expected;
  for (const auto& e : g.edges())
    expected.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
  if (seen != expected)
    throw ParseError("edge set is not the canonical join of C" + std::to_string(k) +
                     " with " + std::to_string(s) + " stable vertices");
  return g;
}

}  // namespace liftlab
