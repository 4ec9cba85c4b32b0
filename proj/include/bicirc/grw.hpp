#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <string>
#include <tuple>

#include "bicirc/graph.hpp"
#include "bicirc/igraph.hpp"
#include "bicirc/search.hpp"
#include "bicirc/spec.hpp"

namespace bicirc {

// G = R(m;a,b,c) and the layers H_0..H_lambda of G minus its type-c spokes.
// Layer vertices are addressed in the coordinates of the quotient I-graph
// I(m0; a/g, b/g): local (side, k) in layer i is (side, g k + i c) in G.
struct ConstructionContext {
  GrwSpec grw;
  int g = 1;       // gcd(m, a, b)
  int lambda = 0;  // g - 1
  int m0 = 0;
  IGraphSpec component;  // quotient of every layer
  Graph graph;           // build(grw)
  Graph quotient;        // build(component)

  Vertex lift(int layer, Vertex local) const;
  int layer_of(Vertex v) const;
  Vertex local(Vertex v) const;
  VertexPair lift(int layer, const VertexPair& e) const { return {lift(layer, e.first), lift(layer, e.second)}; }
};

// Throws Error(kDisconnected) when gcd(m, a, b, c) != 1.
ConstructionContext construction_context(const GrwSpec& grw);

enum class Route {
  kConnectedH,
  kConnectedHPetersenPath,
  kAlternatingConstruction,
  kTwoHookedConstruction,
  kTwoHookedRemark10,
  kFourHookedConstruction,
  kPetersenExceptionConstruction,
};

std::string_view to_string(Route route);
std::optional<Route> parse_route(std::string_view text);

// Each construction returns the canonical form of a verified Hamilton cycle of G
// and throws Error(kWiringFailed) if the assembled edges are not one.

// `alt` is an alternating Hamilton cycle of the quotient. Needs lambda >= 1.
VertexSeq alternating_construction(const ConstructionContext& ctx, std::span<const Vertex> alt);

// `witness` is a Hamilton path v_0..v_a or u_0..u_b of the quotient; `companion`
// is any Hamilton cycle of the quotient, used for the path u_0..u_a (v_0..v_b).
struct TwoHookedPlan {
  TwoHookedWitness witness;
  VertexSeq companion;  // path u_0..u_a (v_0..v_b)
  int tau = 0;          // layer shift step
};
TwoHookedPlan plan_two_hooked(const ConstructionContext& ctx, const TwoHookedWitness& witness,
                              std::span<const Vertex> companion_cycle);
VertexSeq two_hooked_construction(const ConstructionContext& ctx, const TwoHookedPlan& plan);

// Paths u_0..u_p, v_0..v_p and a pair {u_0..v_p, u_p..v_0} or {u_0..v_0, u_p..v_p}.
// Throws Error(kPathsInconsistent) on wrong ends or coverage.
VertexSeq remark10_construction(const ConstructionContext& ctx, const SpecialPaths& paths);

// Wires the four strands of a standard 4-hooked cycle across the layers.
// Throws Error(kElusiveInput) for an elusive labeling.
VertexSeq four_hooked_wiring(const ConstructionContext& ctx, std::span<const Vertex> cycle, const Labeling& labeling);

struct FourHookedResult {
  VertexSeq cycle;
  std::optional<Labeling> wired;           // labeling used by the direct wiring
  std::optional<TwoHookedPlan> delegated;  // witness used otherwise
  std::string derivation;                  // "wiring", "surgery", "chord" or "search"
};
// Tries the direct wiring for every standard labeling, then derives a witness path
// by removing hook edges and adding designated spokes, then falls back to chord
// derivation and path search, delegating to the 2-hooked construction.
FourHookedResult four_hooked_construction(const ConstructionContext& ctx, std::span<const Vertex> cycle,
                                          std::uint64_t budget = kDefaultBudget);

struct PetersenPlan {
  int x = 0;                 // in (lambda+1) Z_m
  std::optional<int> y;      // even lambda only
  VertexSeq path_v0_ux;      // local v_0..u_x
  VertexSeq path_vx_u0;      // local v_x..u_0
  VertexSeq path_top;        // local v_{x+gc}..u_0 (odd) or v_{y+gc}..u_0 (even)
  VertexSeq path_bottom;     // local v_0..u_x (odd) or v_x..u_y (even)
};
// For layers isomorphic to G(n,2), n = 5 mod 6, lambda >= 1. Throws Error(kNoValidX).
PetersenPlan plan_petersen(const ConstructionContext& ctx, std::uint64_t budget = kDefaultBudget);
VertexSeq petersen_exception_construction(const ConstructionContext& ctx, const PetersenPlan& plan);

struct Certificate {
  GrwSpec spec;
  Route route = Route::kConnectedH;
  nlohmann::json params;
  VertexSeq cycle;
  bool verified = false;
};

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// Usable forms of quotient I-graphs, shared across calls and threads.
class ComponentCache {
 public:
  std::shared_ptr<const UsableForm> get(const IGraphSpec& spec, std::uint64_t budget);

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const UsableForm>> forms_;
};

// Throws Error(kDisconnected), Error(kBudgetExhausted) or Error(kWiringFailed).
Certificate hamilton_cycle_grw(const GrwSpec& grw, std::uint64_t budget = kDefaultBudget,
                               ComponentCache* cache = nullptr);

// Rebuilds the cycle from the route and parameters alone.
VertexSeq replay(const Certificate& cert);

}  // namespace bicirc
