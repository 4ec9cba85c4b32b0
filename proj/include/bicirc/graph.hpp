#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicirc/spec.hpp"

namespace bicirc {

enum class Side : std::uint8_t { kOuter = 0, kInner = 1 };

// u_i is (kOuter, i), v_i is (kInner, i). Ordered by (side, index).
struct Vertex {
  Side side;
  int index;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex outer(int i) { return {Side::kOuter, i}; }
inline Vertex inner(int i) { return {Side::kInner, i}; }

std::string to_string(Vertex v);
std::optional<Vertex> parse_vertex(std::string_view token);

using VertexSeq = std::vector<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

std::string format_sequence(std::span<const Vertex> seq);
// Whitespace separated u<i>/v<i> tokens; throws Error(kParse).
VertexSeq parse_sequence(std::string_view text);

enum class EdgeKind : std::uint8_t { kOuter, kInner, kSpoke };

struct Edge {
  Vertex x;
  Vertex y;
  EdgeKind kind;
  int type;  // outer/inner: min(j, m - j); spoke: s with y = v_{x.index + s}
};

// Simple graph on {u_i, v_i : i in Z_m}. Vertex ids are i for u_i and m + i for v_i.
class Graph {
 public:
  explicit Graph(int m);

  int m() const { return m_; }
  int order() const { return 2 * m_; }

  int id(Vertex v) const { return v.side == Side::kOuter ? v.index : m_ + v.index; }
  Vertex vertex(int id) const { return id < m_ ? outer(id) : inner(id - m_); }
  bool contains(Vertex v) const { return v.index >= 0 && v.index < m_; }

  bool adjacent_ids(int x, int y) const { return matrix_[static_cast<std::size_t>(x) * order() + y]; }
  bool adjacent(Vertex x, Vertex y) const;
  std::span<const int> neighbors(int id) const { return adj_[id]; }
  int degree(int id) const { return static_cast<int>(adj_[id].size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Returns false for loops and repeated edges.
  bool add_edge(Vertex x, Vertex y, EdgeKind kind, int type);

  // Component id per vertex id, numbered in order of least member.
  std::vector<int> component_labels() const;
  int component_count() const;

 private:
  int m_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Edge> edges_;
};

Graph build(const BicirculantSpec& spec);
Graph build(const AnySpec& spec);

// gcd criterion; see BicirculantSpec::delta.
bool is_connected(const BicirculantSpec& spec);

// One "x y" line per edge (x < y).
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g, std::string_view name);

}  // namespace bicirc
