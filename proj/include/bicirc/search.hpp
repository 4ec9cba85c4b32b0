#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicirc/graph.hpp"

namespace bicirc {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

// BICIRC_BUDGET if set to a positive integer, else kDefaultBudget.
std::uint64_t default_budget();

enum class SearchStatus { kFound, kNotFoundWithinBudget, kProvedAbsent };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFoundWithinBudget;
  VertexSeq sequence;
  std::uint64_t expansions = 0;  // node expansions used
  bool found() const { return status == SearchStatus::kFound; }
};

// Depth-first search from u_0. Extends to the unvisited neighbour with the
// fewest unvisited neighbours first (ties by (side, index)) and prunes when
// an unvisited vertex is left with fewer than two usable neighbours or the
// unvisited part is disconnected.
SearchResult find_hamilton_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

SearchResult find_hamilton_path(const Graph& g, Vertex from, Vertex to,
                                std::uint64_t budget = kDefaultBudget);

enum class VerifyFailure { kNone, kRepeatedVertex, kMissingVertex, kNonEdge };

std::string_view to_string(VerifyFailure failure);

struct Verification {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::kNone;
  std::size_t position = 0;  // index into the sequence
  explicit operator bool() const { return ok; }
};

Verification verify_cycle(const Graph& g, std::span<const Vertex> seq);
Verification verify_path(const Graph& g, std::span<const Vertex> seq);

// Rotated to start at the least vertex, oriented so the second vertex is the
// smaller of its two neighbours.
VertexSeq canonical_cycle(std::span<const Vertex> seq);

struct EnumerateOptions {
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  int max_order = 24;  // refuse larger graphs unless force is set
  bool force = false;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
};

struct Enumeration {
  std::vector<VertexSeq> cycles;  // canonical, in discovery order
  bool truncated = false;         // cap or budget stopped the search early
  std::uint64_t expansions = 0;
};

// Throws Error(kTooLarge) when the order exceeds max_order without force.
Enumeration enumerate_hamilton_cycles(const Graph& g, const EnumerateOptions& options = {});

std::vector<VertexPair> edges_of(std::span<const Vertex> seq, bool closed);

struct Assembly {
  std::optional<VertexSeq> sequence;
  std::string reason;  // why the edges do not form the requested structure
};

// Reads the edge set as a Hamilton cycle of g (canonical form).
Assembly cycle_from_edges(const Graph& g, std::span<const VertexPair> edges);

// Reads the edge set as a Hamilton path of g, starting at `from` when given
// (else at the smaller end).
Assembly path_from_edges(const Graph& g, std::span<const VertexPair> edges,
                         std::optional<Vertex> from = std::nullopt);

}  // namespace bicirc
