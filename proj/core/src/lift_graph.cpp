#include "liftlab/lift_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace liftlab {

LiftGraph::LiftGraph(BaseGraph base, std::vector<Permutation> perms)
    : base_(std::move(base)), h_(perms.empty() ? 0 : perms.front().size()), perms_(std::move(perms)) {
  if (perms_.size() != static_cast<std::size_t>(base_.edge_count()))
    throw std::invalid_argument("need exactly one permutation per base edge");
  if (h_ == 0) throw std::invalid_argument("lift fibre size must be positive");
  inverses_.reserve(perms_.size());
  for (const auto& p : perms_) {
    if (p.size() != h_) throw std::invalid_argument("edge permutations differ in size");
    inverses_.push_back(p.inverse());
  }
}

bool LiftGraph::is_covering() const {
  std::vector<int> images;
  for (LiftVertex v = 0; v < vertex_count(); ++v) {
    images.clear();
    for_each_neighbour(v, [&](LiftVertex u) { images.push_back(project(u)); });
    std::sort(images.begin(), images.end());
    std::vector<int> expected;
    for (int e : base_.incident_edges(project(v))) {
      const BaseEdge& be = base_.edge(e);
      expected.push_back(be.tail == project(v) ? be.head : be.tail);
    }
    std::sort(expected.begin(), expected.end());
    if (images != expected) return false;
    // Adjacency must also be symmetric.
    for (int e : base_.incident_edges(project(v)))
      if (neighbour(neighbour(v, e), e) != v) return false;
  }
  return true;
}

std::string LiftGraph::serialize() const {
  std::string out;
  for (std::size_t e = 0; e < perms_.size(); ++e) {
    out += std::to_string(e);
    out += ':';
    for (auto j : perms_[e].image()) {
      out += ' ';
      out += std::to_string(j);
    }
    out += '\n';
  }
  return out;
}

LiftGraph LiftGraph::parse(std::string_view text, const BaseGraph& base) {
  std::vector<std::vector<Permutation::value_type>> images(static_cast<std::size_t>(base.edge_count()));
  std::vector<bool> present(images.size(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("line " + std::to_string(line_no) + ": missing ':'");
    }
    int e = -1;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + colon, e);
    if (ec != std::errc() || ptr != line.data() + colon || e < 0 || e >= base.edge_count())
      throw ParseError("line " + std::to_string(line_no) + ": bad edge index");
    if (present[static_cast<std::size_t>(e)])
      throw ParseError("line " + std::to_string(line_no) + ": edge listed twice");
    present[static_cast<std::size_t>(e)] = true;
    std::istringstream fields(line.substr(colon + 1));
    long long j = 0;
    auto& img = images[static_cast<std::size_t>(e)];
    while (fields >> j) {
      if (j < 0) throw ParseError("line " + std::to_string(line_no) + ": negative image");
      img.push_back(static_cast<Permutation::value_type>(j));
    }
    if (!fields.eof()) throw ParseError("line " + std::to_string(line_no) + ": bad image entry");
  }
  std::vector<Permutation> perms;
  for (std::size_t e = 0; e < images.size(); ++e) {
    if (!present[e]) throw ParseError("edge " + std::to_string(e) + " missing");
    try {
      perms.emplace_back(std::move(images[e]));
    } catch (const std::invalid_argument&) {
      throw ParseError("edge " + std::to_string(e) + " is not a permutation");
    }
  }
  try {
    return LiftGraph(base, std::move(perms));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

}  // namespace liftlab
