#include "bicirc/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "bicirc/error.hpp"

namespace bicirc {

namespace {

class Searcher {
 public:
  // target < 0 searches for a cycle through start.
  Searcher(const Graph& g, int start, int target, std::uint64_t budget)
      : g_(g),
        n_(g.order()),
        start_(start),
        target_(target),
        budget_(budget),
        visited_(n_, 0),
        unvisited_(n_, 0),
        seen_(n_, 0) {
    for (int v = 0; v < n_; ++v) unvisited_[v] = g.degree(v);
    if (target_ >= 0) mark(target_);
    mark(start_);
    path_.push_back(start_);
  }

  void enumerate(std::size_t cap) {
    enumerate_ = true;
    cap_ = cap;
  }

  void run() { extend(); }

  bool aborted() const { return aborted_; }
  bool found() const { return !solutions_.empty(); }
  bool truncated() const { return truncated_; }
  std::uint64_t expansions() const { return expansions_; }
  const std::vector<std::vector<int>>& solutions() const { return solutions_; }

 private:
  void mark(int v) {
    visited_[v] = 1;
    for (int w : g_.neighbors(v)) --unvisited_[w];
  }

  void unmark(int v) {
    visited_[v] = 0;
    for (int w : g_.neighbors(v)) ++unvisited_[w];
  }

  int remaining() const {
    return n_ - static_cast<int>(path_.size()) - (target_ >= 0 ? 1 : 0);
  }

  int anchor() const { return target_ >= 0 ? target_ : start_; }

  // Returns true when the search must stop.
  bool extend() {
    if (++expansions_ > budget_) {
      aborted_ = true;
      return true;
    }
    int head = path_.back();
    if (remaining() == 0) {
      if (g_.adjacent_ids(head, anchor()) && (target_ >= 0 || n_ >= 3)) return record();
      return false;
    }
    std::vector<int> next;
    for (int w : g_.neighbors(head)) {
      if (!visited_[w]) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), [&](int x, int y) {
      return unvisited_[x] != unvisited_[y] ? unvisited_[x] < unvisited_[y] : x < y;
    });
    for (int w : next) {
      mark(w);
      path_.push_back(w);
      bool stop = feasible(head, w) && extend();
      path_.pop_back();
      unmark(w);
      if (stop) return true;
    }
    return false;
  }

  bool record() {
    if (enumerate_) {
      std::vector<int> cycle = path_;
      if (cycle[1] > cycle.back()) return false;  // keep one orientation
      if (solutions_.size() == cap_) {
        truncated_ = true;
        return true;
      }
      solutions_.push_back(std::move(cycle));
      return false;
    }
    std::vector<int> sol = path_;
    if (target_ >= 0) sol.push_back(target_);
    solutions_.push_back(std::move(sol));
    return true;
  }

  bool usable(int z, int head) const {
    int avail = unvisited_[z] + (g_.adjacent_ids(z, head) ? 1 : 0) +
                (g_.adjacent_ids(z, anchor()) ? 1 : 0);
    return avail >= 2;
  }

  bool feasible(int old_head, int head) {
    if (remaining() == 0) return true;
    if (unvisited_[head] == 0 || unvisited_[anchor()] == 0) return false;
    for (int z : g_.neighbors(head)) {
      if (!visited_[z] && !usable(z, head)) return false;
    }
    for (int z : g_.neighbors(old_head)) {
      if (!visited_[z] && !usable(z, head)) return false;
    }
    return rest_connected(head);
  }

  bool rest_connected(int head) {
    ++stamp_;
    stack_.clear();
    int reached = 0;
    for (int z : g_.neighbors(head)) {
      if (!visited_[z] && seen_[z] != stamp_) {
        seen_[z] = stamp_;
        stack_.push_back(z);
      }
    }
    while (!stack_.empty()) {
      int x = stack_.back();
      stack_.pop_back();
      ++reached;
      for (int z : g_.neighbors(x)) {
        if (!visited_[z] && seen_[z] != stamp_) {
          seen_[z] = stamp_;
          stack_.push_back(z);
        }
      }
    }
    return reached == remaining();
  }

  const Graph& g_;
  int n_;
  int start_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  bool enumerate_ = false;
  bool truncated_ = false;
  std::size_t cap_ = 0;
  std::vector<char> visited_;
  std::vector<int> unvisited_;
  std::vector<int> path_;
  std::vector<std::vector<int>> solutions_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<int> stack_;
};

VertexSeq to_vertices(const Graph& g, const std::vector<int>& ids) {
  VertexSeq out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(g.vertex(id));
  return out;
}

SearchResult absent() { return {SearchStatus::kProvedAbsent, {}, 0}; }

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BICIRC_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "Found";
    case SearchStatus::kNotFoundWithinBudget: return "NotFoundWithinBudget";
    case SearchStatus::kProvedAbsent: return "ProvedAbsent";
  }
  return "?";
}

SearchResult find_hamilton_cycle(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n < 3 || g.component_count() != 1) return absent();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return absent();
  }
  Searcher s(g, 0, -1, budget);
  s.run();
  if (s.found()) return {SearchStatus::kFound, canonical_cycle(to_vertices(g, s.solutions()[0])), s.expansions()};
  return {s.aborted() ? SearchStatus::kNotFoundWithinBudget : SearchStatus::kProvedAbsent, {}, s.expansions()};
}

SearchResult find_hamilton_path(const Graph& g, Vertex from, Vertex to, std::uint64_t budget) {
  if (!g.contains(from) || !g.contains(to) || from == to) {
    throw Error(ErrorCode::kPreconditionUnmet, "path endpoints must be distinct vertices of the graph");
  }
  const int n = g.order();
  int s_id = g.id(from), t_id = g.id(to);
  if (n == 2) {
    if (g.adjacent_ids(s_id, t_id)) return {SearchStatus::kFound, {from, to}, 1};
    return absent();
  }
  if (g.component_count() != 1) return absent();
  for (int v = 0; v < n; ++v) {
    int need = (v == s_id || v == t_id) ? 1 : 2;
    if (g.degree(v) < need) return absent();
  }
  Searcher s(g, s_id, t_id, budget);
  s.run();
  if (s.found()) return {SearchStatus::kFound, to_vertices(g, s.solutions()[0]), s.expansions()};
  return {s.aborted() ? SearchStatus::kNotFoundWithinBudget : SearchStatus::kProvedAbsent, {}, s.expansions()};
}

std::string_view to_string(VerifyFailure failure) {
  switch (failure) {
    case VerifyFailure::kNone: return "None";
    case VerifyFailure::kRepeatedVertex: return "RepeatedVertex";
    case VerifyFailure::kMissingVertex: return "MissingVertex";
    case VerifyFailure::kNonEdge: return "NonEdge";
  }
  return "?";
}

namespace {

Verification verify_walk(const Graph& g, std::span<const Vertex> seq, bool closed) {
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.contains(seq[i])) return {false, VerifyFailure::kNonEdge, i};
    int id = g.id(seq[i]);
    if (seen[id]) return {false, VerifyFailure::kRepeatedVertex, i};
    seen[id] = 1;
  }
  if (static_cast<int>(seq.size()) < g.order()) {
    return {false, VerifyFailure::kMissingVertex, seq.size()};
  }
  std::size_t steps = closed ? seq.size() : seq.size() - 1;
  if (closed && seq.size() < 3) return {false, VerifyFailure::kNonEdge, 0};
  for (std::size_t i = 0; i < steps; ++i) {
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return {false, VerifyFailure::kNonEdge, i};
  }
  return {true, VerifyFailure::kNone, 0};
}

}  // namespace

Verification verify_cycle(const Graph& g, std::span<const Vertex> seq) { return verify_walk(g, seq, true); }

Verification verify_path(const Graph& g, std::span<const Vertex> seq) { return verify_walk(g, seq, false); }

VertexSeq canonical_cycle(std::span<const Vertex> seq) {
  if (seq.empty()) return {};
  const std::size_t n = seq.size();
  std::size_t lo = std::min_element(seq.begin(), seq.end()) - seq.begin();
  const Vertex& next = seq[(lo + 1) % n];
  const Vertex& prev = seq[(lo + n - 1) % n];
  VertexSeq out;
  out.reserve(n);
  bool forward = !(prev < next);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(forward ? seq[(lo + k) % n] : seq[(lo + n - k) % n]);
  }
  return out;
}

Enumeration enumerate_hamilton_cycles(const Graph& g, const EnumerateOptions& options) {
  if (g.order() > options.max_order && !options.force) {
    throw Error(ErrorCode::kTooLarge, "graph has " + std::to_string(g.order()) +
                                          " vertices; enumeration is limited to " +
                                          std::to_string(options.max_order));
  }
  Enumeration out;
  const int n = g.order();
  if (n < 3 || g.component_count() != 1) return out;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return out;
  }
  Searcher s(g, 0, -1, options.budget);
  s.enumerate(options.cap);
  s.run();
  for (const auto& ids : s.solutions()) out.cycles.push_back(to_vertices(g, ids));
  out.truncated = s.truncated() || s.aborted();
  out.expansions = s.expansions();
  return out;
}

std::vector<VertexPair> edges_of(std::span<const Vertex> seq, bool closed) {
  std::vector<VertexPair> out;
  if (seq.size() < 2) return out;
  std::size_t steps = closed ? seq.size() : seq.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) out.emplace_back(seq[i], seq[(i + 1) % seq.size()]);
  return out;
}

namespace {

Assembly assemble(const Graph& g, std::span<const VertexPair> edges, bool closed,
                  std::optional<Vertex> from) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  std::vector<std::pair<int, int>> seen;
  for (const auto& [x, y] : edges) {
    if (!g.adjacent(x, y)) return {std::nullopt, to_string(x) + " " + to_string(y) + " is not an edge"};
    int a = g.id(x), b = g.id(y);
    auto key = std::minmax(a, b);
    seen.emplace_back(key.first, key.second);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return {std::nullopt, "repeated edge"};
  std::size_t want = closed ? n : n - 1;
  if (edges.size() != want) {
    return {std::nullopt, "expected " + std::to_string(want) + " edges, got " + std::to_string(edges.size())};
  }
  std::vector<int> ends;
  for (int v = 0; v < n; ++v) {
    std::size_t d = adj[v].size();
    if (d == 2) continue;
    if (!closed && d == 1) {
      ends.push_back(v);
      continue;
    }
    return {std::nullopt, to_string(g.vertex(v)) + " has degree " + std::to_string(d)};
  }
  if (!closed && ends.size() != 2) return {std::nullopt, "path needs exactly two ends"};
  int start = closed ? 0 : ends[0];
  if (!closed && from) {
    int f = g.id(*from);
    if (f != ends[0] && f != ends[1]) return {std::nullopt, to_string(*from) + " is not an end"};
    start = f;
  }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adj[cur]) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == -1 || next == start) break;
    order.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(order.size()) > n) break;
  }
  if (static_cast<int>(order.size()) != n) return {std::nullopt, "edges split into several pieces"};
  VertexSeq seq = to_vertices(g, order);
  if (closed) seq = canonical_cycle(seq);
  return {std::move(seq), ""};
}

}  // namespace

Assembly cycle_from_edges(const Graph& g, std::span<const VertexPair> edges) {
  return assemble(g, edges, true, std::nullopt);
}

Assembly path_from_edges(const Graph& g, std::span<const VertexPair> edges, std::optional<Vertex> from) {
  return assemble(g, edges, false, from);
}

}  // namespace bicirc
