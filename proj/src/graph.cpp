#include "bicirc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"

namespace bicirc {

std::string to_string(Vertex v) {
  return (v.side == Side::kOuter ? "u" : "v") + std::to_string(v.index);
}

std::optional<Vertex> parse_vertex(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'u' && token[0] != 'v')) return std::nullopt;
  int index = 0;
  auto body = token.substr(1);
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), index);
  if (ec != std::errc() || ptr != body.data() + body.size() || index < 0) return std::nullopt;
  return Vertex{token[0] == 'u' ? Side::kOuter : Side::kInner, index};
}

std::string format_sequence(std::span<const Vertex> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += to_string(seq[i]);
  }
  return out;
}

VertexSeq parse_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  VertexSeq out;
  for (std::string token; in >> token;) {
    auto v = parse_vertex(token);
    if (!v) throw Error(ErrorCode::kParse, "bad vertex token '" + token + "'");
    out.push_back(*v);
  }
  return out;
}

Graph::Graph(int m)
    : m_(m), adj_(2 * m), matrix_(static_cast<std::size_t>(2 * m) * (2 * m), 0) {}

bool Graph::adjacent(Vertex x, Vertex y) const {
  if (!contains(x) || !contains(y)) return false;
  return adjacent_ids(id(x), id(y));
}

bool Graph::add_edge(Vertex x, Vertex y, EdgeKind kind, int type) {
  int ix = id(x), iy = id(y);
  if (ix == iy || adjacent_ids(ix, iy)) return false;
  matrix_[static_cast<std::size_t>(ix) * order() + iy] = 1;
  matrix_[static_cast<std::size_t>(iy) * order() + ix] = 1;
  adj_[ix].insert(std::lower_bound(adj_[ix].begin(), adj_[ix].end(), iy), iy);
  adj_[iy].insert(std::lower_bound(adj_[iy].begin(), adj_[iy].end(), ix), ix);
  if (y < x && kind != EdgeKind::kSpoke) std::swap(x, y);
  edges_.push_back({x, y, kind, type});
  return true;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(order(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < order(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj_[x]) {
        if (label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Graph build(const BicirculantSpec& spec) {
  const int m = spec.m();
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j : spec.outer_types()) g.add_edge(outer(i), outer(mod(i + j, m)), EdgeKind::kOuter, std::min(j, m - j));
    for (int s : spec.spoke_types()) g.add_edge(outer(i), inner(mod(i + s, m)), EdgeKind::kSpoke, s);
    for (int k : spec.inner_types()) g.add_edge(inner(i), inner(mod(i + k, m)), EdgeKind::kInner, std::min(k, m - k));
  }
  return g;
}

Graph build(const AnySpec& spec) { return build(to_bicirculant(spec)); }

bool is_connected(const BicirculantSpec& spec) { return spec.delta() == 1; }

std::string to_edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.x, e.y), std::max(e.x, e.y));
  std::sort(pairs.begin(), pairs.end());
  std::string out;
  for (auto& [x, y] : pairs) out += to_string(x) + " " + to_string(y) + "\n";
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.x, e.y), std::max(e.x, e.y));
  std::sort(pairs.begin(), pairs.end());
  std::string out = "graph \"" + std::string(name) + "\" {\n";
  for (int i = 0; i < g.order(); ++i) out += "  " + to_string(g.vertex(i)) + ";\n";
  for (auto& [x, y] : pairs) out += "  " + to_string(x) + " -- " + to_string(y) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace bicirc
