#pragma once

#include <span>
#include <vector>

#include "bicirc/arith.hpp"
#include "bicirc/graph.hpp"

namespace bicirc::detail {

// Position lookup for a Hamilton cycle on the 2m vertices u_i, v_i.
class CycleView {
 public:
  CycleView(int m, std::span<const Vertex> cycle) : m_(m), seq_(cycle.begin(), cycle.end()), pos_(2 * m, -1) {
    for (std::size_t i = 0; i < seq_.size(); ++i) pos_[key(seq_[i])] = static_cast<int>(i);
  }

  int n() const { return static_cast<int>(seq_.size()); }
  int m() const { return m_; }
  int pos(Vertex v) const { return pos_[key(v)]; }
  Vertex at(int i) const { return seq_[mod(i, n())]; }
  const VertexSeq& sequence() const { return seq_; }

  bool has_edge(Vertex x, Vertex y) const {
    int d = mod(pos(x) - pos(y), n());
    return d == 1 || d == n() - 1;
  }

  // Steps from `from` to `to` moving in `direction`.
  int distance(Vertex from, Vertex to, int direction) const {
    return mod(static_cast<long long>(direction) * (pos(to) - pos(from)), n());
  }

 private:
  int key(Vertex v) const { return (v.side == Side::kOuter ? 0 : m_) + mod(v.index, m_); }

  int m_;
  VertexSeq seq_;
  std::vector<int> pos_;
};

}  // namespace bicirc::detail
