#include "bicirc/grw.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "bicirc/iso.hpp"

namespace bicirc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool same_edge(const VertexPair& e, Vertex x, Vertex y) {
  return (e.first == x && e.second == y) || (e.first == y && e.second == x);
}

VertexSeq shifted(std::span<const Vertex> seq, int m, int by) { return map_indices(seq, m, 1, by); }

// Collects lifted edges and reads them back as one Hamilton cycle of G.
class Assembler {
 public:
  explicit Assembler(const ConstructionContext& ctx) : ctx_(ctx) {}

  void path(int layer, std::span<const Vertex> local, int shift = 0) {
    for (std::size_t i = 0; i + 1 < local.size(); ++i) edge(layer, local[i], local[i + 1], shift);
  }
  void edges(int layer, std::span<const VertexPair> local, int shift = 0) {
    for (const auto& [x, y] : local) edge(layer, x, y, shift);
  }
  void edge(int layer, Vertex x, Vertex y, int shift) {
    auto s = [&](Vertex v) { return Vertex{v.side, mod(v.index + shift, ctx_.m0)}; };
    edges_.push_back(ctx_.lift(layer, VertexPair{s(x), s(y)}));
  }
  // u^layer_k v^{layer+1}_k
  void spoke(int layer, int k) {
    edges_.emplace_back(ctx_.lift(layer, outer(mod(k, ctx_.m0))), ctx_.lift(layer + 1, inner(mod(k, ctx_.m0))));
  }
  // u^lambda_k v^0_{k+c}
  void wrap(int k) {
    edges_.emplace_back(ctx_.lift(ctx_.lambda, outer(mod(k, ctx_.m0))),
                        ctx_.lift(0, inner(mod(k + ctx_.grw.c, ctx_.m0))));
  }

  VertexSeq finish(std::string_view what) const {
    Assembly a = cycle_from_edges(ctx_.graph, edges_);
    if (!a.sequence) fail(ErrorCode::kWiringFailed, std::string(what) + ": " + a.reason);
    if (!verify_cycle(ctx_.graph, *a.sequence)) fail(ErrorCode::kWiringFailed, std::string(what) + ": cycle does not verify");
    return *a.sequence;
  }

 private:
  const ConstructionContext& ctx_;
  std::vector<VertexPair> edges_;
};

std::vector<VertexPair> cycle_edges_without(std::span<const Vertex> cycle, std::span<const VertexPair> drop) {
  std::vector<VertexPair> out;
  for (const auto& e : edges_of(cycle, true)) {
    if (std::none_of(drop.begin(), drop.end(), [&](const VertexPair& d) { return same_edge(d, e.first, e.second); })) {
      out.push_back(e);
    }
  }
  return out;
}

void require_layers(const ConstructionContext& ctx) {
  if (ctx.lambda < 1) fail(ErrorCode::kPreconditionUnmet, "construction needs lambda >= 1");
}

// Hamilton path of the quotient obtained by dropping an edge x y of `cycle` with
// y = x + step on `side`, moved so that it runs from index 0 to index step.
VertexSeq companion_path(const ConstructionContext& ctx, std::span<const Vertex> cycle, Side side, int step) {
  const int n = static_cast<int>(cycle.size());
  const int m0 = ctx.m0;
  for (int i = 0; i < n; ++i) {
    Vertex x = cycle[i], y = cycle[(i + 1) % n];
    if (x.side != side || y.side != side) continue;
    int from = -1;
    VertexSeq path;
    // the cycle minus x y, read from y round to x
    for (int k = 0; k < n; ++k) path.push_back(cycle[(i + 1 + k) % n]);
    if (mod(y.index - x.index, m0) == step) {
      std::reverse(path.begin(), path.end());
      from = x.index;
    } else if (mod(x.index - y.index, m0) == step) {
      from = y.index;
    } else {
      continue;
    }
    return shifted(path, m0, -from);
  }
  fail(ErrorCode::kMissingOuterEdge, "companion cycle has no edge of the required type");
}

json seq_json(std::span<const Vertex> seq) {
  json j = json::array();
  for (Vertex v : seq) j.push_back(to_string(v));
  return j;
}

VertexSeq seq_from(const json& j) {
  VertexSeq out;
  for (const auto& t : j) {
    auto v = parse_vertex(t.get<std::string>());
    if (!v) fail(ErrorCode::kParse, "bad vertex token " + t.dump());
    out.push_back(*v);
  }
  return out;
}

json labeling_json(const Labeling& l) { return {{"t", l.shift}, {"A", l.a}, {"B", l.b}}; }
Labeling labeling_from(const json& j) { return {j.at("t").get<int>(), j.at("A").get<int>(), j.at("B").get<int>()}; }

json plan_json(const TwoHookedPlan& p) {
  return {{"ends", p.witness.ends == HookedEnds::kInnerA ? "inner_a" : "outer_b"},
          {"witness", seq_json(p.witness.path)},
          {"witness_source", p.witness.source},
          {"companion", seq_json(p.companion)},
          {"tau", p.tau}};
}

TwoHookedPlan plan_from(const json& j) {
  TwoHookedPlan p;
  p.witness.ends = j.at("ends").get<std::string>() == "inner_a" ? HookedEnds::kInnerA : HookedEnds::kOuterB;
  p.witness.path = seq_from(j.at("witness"));
  p.witness.source = j.value("witness_source", "");
  p.companion = seq_from(j.at("companion"));
  p.tau = j.at("tau").get<int>();
  return p;
}

json special_json(const SpecialPaths& s) {
  return {{"p", s.p},
          {"outer_path", seq_json(s.outer_path)},
          {"inner_path", seq_json(s.inner_path)},
          {"cross_first", seq_json(s.cross_first)},
          {"cross_second", seq_json(s.cross_second)}};
}

SpecialPaths special_from(const json& j) {
  return {j.at("p").get<int>(), seq_from(j.at("outer_path")), seq_from(j.at("inner_path")),
          seq_from(j.at("cross_first")), seq_from(j.at("cross_second"))};
}

json petersen_json(const ConstructionContext& ctx, const PetersenPlan& p) {
  json j = {{"x", p.x},
            {"y", p.y ? json(*p.y) : json(nullptr)},
            {"path_v0_ux", seq_json(p.path_v0_ux)},
            {"path_vx_u0", seq_json(p.path_vx_u0)},
            {"path_top", seq_json(p.path_top)},
            {"path_bottom", seq_json(p.path_bottom)}};
  j["lambda_parity"] = ctx.lambda % 2 ? "odd" : "even";
  return j;
}

PetersenPlan petersen_from(const json& j) {
  PetersenPlan p;
  p.x = j.at("x").get<int>();
  if (!j.at("y").is_null()) p.y = j.at("y").get<int>();
  p.path_v0_ux = seq_from(j.at("path_v0_ux"));
  p.path_vx_u0 = seq_from(j.at("path_vx_u0"));
  p.path_top = seq_from(j.at("path_top"));
  p.path_bottom = seq_from(j.at("path_bottom"));
  return p;
}

VertexSeq found_path(const Graph& g, Vertex from, Vertex to, std::uint64_t budget) {
  SearchResult r = find_hamilton_path(g, from, to, budget);
  if (r.found()) return r.sequence;
  if (r.status == SearchStatus::kProvedAbsent) {
    fail(ErrorCode::kWiringFailed, "no Hamilton path " + to_string(from) + " .. " + to_string(to));
  }
  fail(ErrorCode::kBudgetExhausted, "path search " + to_string(from) + " .. " + to_string(to) + " ran out of budget");
}

}  // namespace

Vertex ConstructionContext::lift(int layer, Vertex local) const {
  return {local.side, mod(1LL * g * local.index + 1LL * layer * grw.c, grw.m)};
}

int ConstructionContext::layer_of(Vertex v) const {
  if (g == 1) return 0;
  int inv = *inverse_mod(mod(grw.c, g), g);
  return mod(1LL * v.index * inv, g);
}

Vertex ConstructionContext::local(Vertex v) const {
  int i = layer_of(v);
  return {v.side, mod(v.index - 1LL * i * grw.c, grw.m) / g};
}

ConstructionContext construction_context(const GrwSpec& grw) {
  const int m = grw.m;
  const int g = gcd(gcd(m, grw.a), grw.b);
  if (gcd(g, grw.c) != 1) fail(ErrorCode::kDisconnected, grw.to_string() + " is disconnected");
  IGraphSpec component(m / g, grw.a / g, grw.b / g);
  ConstructionContext ctx{grw, g, g - 1, m / g, component, build(grw.bicirculant()), build(component.bicirculant())};

  // Cross-check the layers against the component decomposition of H.
  ComponentDecomposition d = decompose(grw.i_graph().bicirculant());
  if (d.delta != g || d.quotient != component.bicirculant()) {
    fail(ErrorCode::kWiringFailed, "layer quotient disagrees with decompose");
  }
  for (int i = 0; i < g; ++i) {
    std::set<Vertex> layer, comp(d.components[mod(1LL * i * grw.c, g)].begin(), d.components[mod(1LL * i * grw.c, g)].end());
    for (int k = 0; k < ctx.m0; ++k) {
      for (Vertex v : {outer(k), inner(k)}) {
        Vertex x = ctx.lift(i, v);
        layer.insert(x);
        if (ctx.layer_of(x) != i || ctx.local(x) != v) fail(ErrorCode::kWiringFailed, "layer coordinates do not invert");
      }
    }
    if (layer != comp) fail(ErrorCode::kWiringFailed, "layer " + std::to_string(i) + " is not a component of H");
    for (const Edge& e : ctx.quotient.edges()) {
      if (!ctx.graph.adjacent(ctx.lift(i, e.x), ctx.lift(i, e.y))) {
        fail(ErrorCode::kWiringFailed, "lifted edge missing from G");
      }
    }
  }
  if (g * ctx.quotient.edges().size() + m != ctx.graph.edges().size()) {
    fail(ErrorCode::kWiringFailed, "H is not G minus its type-c spokes");
  }
  return ctx;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::kConnectedH: return "ConnectedH";
    case Route::kConnectedHPetersenPath: return "ConnectedH_PetersenPath";
    case Route::kAlternatingConstruction: return "AlternatingConstruction";
    case Route::kTwoHookedConstruction: return "TwoHookedConstruction";
    case Route::kTwoHookedRemark10: return "TwoHookedRemark10";
    case Route::kFourHookedConstruction: return "FourHookedConstruction";
    case Route::kPetersenExceptionConstruction: return "PetersenExceptionConstruction";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view text) {
  for (Route r : {Route::kConnectedH, Route::kConnectedHPetersenPath, Route::kAlternatingConstruction,
                  Route::kTwoHookedConstruction, Route::kTwoHookedRemark10, Route::kFourHookedConstruction,
                  Route::kPetersenExceptionConstruction}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

VertexSeq alternating_construction(const ConstructionContext& ctx, std::span<const Vertex> alt) {
  require_layers(ctx);
  if (ctx.m0 % 2) fail(ErrorCode::kOddM0, "alternating cycles need an even quotient order");
  if (!verify_cycle(ctx.quotient, alt)) fail(ErrorCode::kNotAlternating, "not a Hamilton cycle of the quotient");
  std::vector<VertexPair> spokes, outer_edges, inner_edges;
  for (const auto& e : edges_of(alt, true)) {
    if (e.first.side != e.second.side) {
      spokes.push_back(e);
    } else {
      (e.first.side == Side::kOuter ? outer_edges : inner_edges).push_back(e);
    }
  }
  if (static_cast<int>(spokes.size()) != ctx.m0) fail(ErrorCode::kNotAlternating, "cycle misses a spoke");

  Assembler as(ctx);
  for (int i = 0; i <= ctx.lambda; ++i) {
    as.edges(i, spokes);
    if (i == 0) as.edges(i, inner_edges);
    if (i == ctx.lambda) as.edges(i, outer_edges);
    if (i < ctx.lambda) {
      for (int k = 0; k < ctx.m0; ++k) as.spoke(i, k);
    }
  }
  return as.finish("alternating construction");
}

TwoHookedPlan plan_two_hooked(const ConstructionContext& ctx, const TwoHookedWitness& witness,
                              std::span<const Vertex> companion_cycle) {
  require_layers(ctx);
  const int m0 = ctx.m0;
  const bool v_kind = witness.ends == HookedEnds::kInnerA;
  const Side rim = v_kind ? Side::kOuter : Side::kInner;
  const int step = v_kind ? ctx.component.a : ctx.component.b;
  const Vertex first = v_kind ? inner(0) : outer(0);
  const Vertex last = v_kind ? inner(ctx.component.a) : outer(ctx.component.b);
  const auto& w = witness.path;
  if (!verify_path(ctx.quotient, w) || w.front() != first || w.back() != last) {
    fail(ErrorCode::kWitnessInvalid, "witness is not a Hamilton path " + to_string(first) + " .. " + to_string(last));
  }
  if (!verify_cycle(ctx.quotient, companion_cycle)) fail(ErrorCode::kWitnessInvalid, "companion is not a Hamilton cycle");

  TwoHookedPlan plan{witness, {}, 0};
  bool found = false;
  for (std::size_t i = 0; i + 1 < w.size() && !found; ++i) {
    if (w[i].side != rim || w[i + 1].side != rim) continue;
    int p = w[i].index, q = w[i + 1].index;
    if (mod(q - p, m0) == step) {
      plan.tau = p;
    } else if (mod(p - q, m0) == step) {
      plan.tau = q;
    } else {
      continue;
    }
    found = true;
  }
  if (!found) fail(ErrorCode::kMissingOuterEdge, "witness has no edge of the required type");
  // u_0 .. u_a for the v-kind, v_0 .. v_b for the u-kind
  plan.companion = companion_path(ctx, companion_cycle, rim, step);
  return plan;
}

VertexSeq two_hooked_construction(const ConstructionContext& ctx, const TwoHookedPlan& plan) {
  require_layers(ctx);
  const int m0 = ctx.m0, lambda = ctx.lambda;
  const bool v_kind = plan.witness.ends == HookedEnds::kInnerA;
  const Side rim = v_kind ? Side::kOuter : Side::kInner;
  const int step = v_kind ? ctx.component.a : ctx.component.b;
  const auto& w = plan.witness.path;
  const VertexPair split{Vertex{rim, mod(plan.tau, m0)}, Vertex{rim, mod(plan.tau + step, m0)}};

  auto split_edges = edges_of(w, false);
  auto it = std::find_if(split_edges.begin(), split_edges.end(),
                         [&](const VertexPair& e) { return same_edge(e, split.first, split.second); });
  if (it == split_edges.end()) fail(ErrorCode::kWitnessInvalid, "split edge is not on the witness");
  std::vector<VertexPair> strands(split_edges.begin(), split_edges.end());
  strands.erase(strands.begin() + (it - split_edges.begin()));
  const auto& comp = plan.companion;
  if (comp.empty() || comp.front() != Vertex{rim, 0} || comp.back() != Vertex{rim, step}) {
    fail(ErrorCode::kWitnessInvalid, "companion path has the wrong ends");
  }

  Assembler as(ctx);
  if (v_kind) {
    // s_i = (i - 1) tau on the middle layers
    const int tau = plan.tau;
    as.path(0, comp);
    as.spoke(0, 0);
    as.spoke(0, step);
    for (int i = 1; i < lambda; ++i) {
      const int s = (i - 1) * tau;
      as.edges(i, strands, s);
      as.spoke(i, tau + s);
      as.spoke(i, tau + step + s);
    }
    as.path(lambda, w, (lambda - 1) * tau);
  } else {
    // s_i = (1 - i) e, layer 0 carries the witness shifted by e
    const int e = plan.tau;
    as.path(0, w, e);
    as.spoke(0, e);
    as.spoke(0, e + step);
    for (int i = 1; i < lambda; ++i) {
      const int s = (1 - i) * e;
      as.edges(i, strands, s);
      as.spoke(i, s);
      as.spoke(i, s + step);
    }
    as.path(lambda, comp, (2 - lambda) * e);
  }
  return as.finish("2-hooked construction");
}

VertexSeq remark10_construction(const ConstructionContext& ctx, const SpecialPaths& paths) {
  require_layers(ctx);
  const int p = mod(paths.p, ctx.m0);
  const Graph& q = ctx.quotient;
  auto ends = [](const VertexSeq& s, Vertex x, Vertex y) { return !s.empty() && s.front() == x && s.back() == y; };
  if (!verify_path(q, paths.outer_path) || !ends(paths.outer_path, outer(0), outer(p))) {
    fail(ErrorCode::kPathsInconsistent, "outer path is not a Hamilton path u0 .. up");
  }
  if (!verify_path(q, paths.inner_path) || !ends(paths.inner_path, inner(0), inner(p))) {
    fail(ErrorCode::kPathsInconsistent, "inner path is not a Hamilton path v0 .. vp");
  }
  const bool crossing = ends(paths.cross_first, outer(0), inner(p)) && ends(paths.cross_second, outer(p), inner(0));
  const bool straight = ends(paths.cross_first, outer(0), inner(0)) && ends(paths.cross_second, outer(p), inner(p));
  VertexSeq joined(paths.cross_first);
  joined.insert(joined.end(), paths.cross_second.begin(), paths.cross_second.end());
  std::set<Vertex> cover(joined.begin(), joined.end());
  bool paths_ok = true;
  for (const auto* s : {&paths.cross_first, &paths.cross_second}) {
    for (std::size_t i = 0; i + 1 < s->size(); ++i) paths_ok = paths_ok && q.adjacent((*s)[i], (*s)[i + 1]);
  }
  if ((!crossing && !straight) || !paths_ok || static_cast<int>(cover.size()) != q.order() ||
      static_cast<int>(joined.size()) != q.order()) {
    fail(ErrorCode::kPathsInconsistent, "pair does not partition the quotient");
  }

  Assembler as(ctx);
  as.path(0, paths.outer_path);
  for (int i = 1; i < ctx.lambda; ++i) {
    as.path(i, paths.cross_first);
    as.path(i, paths.cross_second);
  }
  as.path(ctx.lambda, paths.inner_path);
  for (int i = 0; i < ctx.lambda; ++i) {
    as.spoke(i, 0);
    as.spoke(i, p);
  }
  return as.finish("special subpath construction");
}

namespace {

struct HookEdges {
  std::array<int, 4> designated;       // t, t+A, t+B, t+A+B
  std::array<VertexPair, 2> outer_hooks;
  std::array<VertexPair, 2> inner_hooks;
};

HookEdges hook_edges(int m0, const Labeling& l) {
  HookEdges h;
  h.designated = {l.index(m0, 0, 0), l.index(m0, 1, 0), l.index(m0, 0, 1), l.index(m0, 1, 1)};
  h.outer_hooks = {VertexPair{l.u(m0, 0, 0), l.u(m0, 1, 0)}, VertexPair{l.u(m0, 0, 1), l.u(m0, 1, 1)}};
  h.inner_hooks = {VertexPair{l.v(m0, 0, 0), l.v(m0, 0, 1)}, VertexPair{l.v(m0, 1, 0), l.v(m0, 1, 1)}};
  return h;
}

bool equal_jumps(const IGraphSpec& s) { return s.a == s.b || s.a + s.b == s.m; }

}  // namespace

VertexSeq four_hooked_wiring(const ConstructionContext& ctx, std::span<const Vertex> cycle, const Labeling& labeling) {
  require_layers(ctx);
  auto w = hook_witness(ctx.component, cycle, labeling);
  if (!w) fail(ErrorCode::kWitnessInvalid, "hook edges are not on the cycle");
  if (w->order != HookOrder::kStandard) fail(ErrorCode::kElusiveInput, "labeling is elusive");
  HookEdges h = hook_edges(ctx.m0, labeling);
  std::vector<VertexPair> all(h.outer_hooks.begin(), h.outer_hooks.end());
  all.insert(all.end(), h.inner_hooks.begin(), h.inner_hooks.end());

  Assembler as(ctx);
  as.edges(0, cycle_edges_without(cycle, h.outer_hooks));
  for (int i = 1; i < ctx.lambda; ++i) as.edges(i, cycle_edges_without(cycle, all));
  as.edges(ctx.lambda, cycle_edges_without(cycle, h.inner_hooks));
  for (int i = 0; i < ctx.lambda; ++i) {
    for (int j : h.designated) as.spoke(i, j);
  }
  return as.finish("4-hooked wiring");
}

FourHookedResult four_hooked_construction(const ConstructionContext& ctx, std::span<const Vertex> cycle,
                                          std::uint64_t budget) {
  require_layers(ctx);
  const IGraphSpec& spec = ctx.component;
  const Graph& q = ctx.quotient;
  std::vector<HookWitness> hooks;
  if (!equal_jumps(spec)) hooks = hook_labelings(spec, cycle);
  std::stable_partition(hooks.begin(), hooks.end(), [](const HookWitness& h) { return h.order == HookOrder::kStandard; });

  for (const auto& h : hooks) {
    if (h.order != HookOrder::kStandard) continue;
    try {
      return {four_hooked_wiring(ctx, cycle, h.labeling), h.labeling, std::nullopt, "wiring"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kWiringFailed) throw;
    }
  }

  auto delegate = [&](const std::optional<TwoHookedWitness>& w, const char* how) -> std::optional<FourHookedResult> {
    if (!w) return std::nullopt;
    try {
      TwoHookedPlan plan = plan_two_hooked(ctx, *w, cycle);
      return FourHookedResult{two_hooked_construction(ctx, plan), std::nullopt, plan, how};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kWiringFailed && e.code() != ErrorCode::kMissingOuterEdge) throw;
      return std::nullopt;
    }
  };

  // Remove r hook edges and add r - 1 designated spokes off the cycle.
  const std::set<VertexPair> on_cycle = [&] {
    std::set<VertexPair> s;
    for (auto [x, y] : edges_of(cycle, true)) s.insert(std::minmax(x, y));
    return s;
  }();
  for (const auto& h : hooks) {
    HookEdges he = hook_edges(ctx.m0, h.labeling);
    std::array<VertexPair, 4> hook{he.outer_hooks[0], he.outer_hooks[1], he.inner_hooks[0], he.inner_hooks[1]};
    std::vector<VertexPair> free_spokes;
    for (int j : he.designated) {
      VertexPair s{outer(j), inner(j)};
      if (!on_cycle.contains(s) && std::find(free_spokes.begin(), free_spokes.end(), s) == free_spokes.end()) {
        free_spokes.push_back(s);
      }
    }
    const int nf = static_cast<int>(free_spokes.size());
    for (int size = 2; size <= 4; ++size) {
      for (int rm = 0; rm < 16; ++rm) {
        if (std::popcount(static_cast<unsigned>(rm)) != size) continue;
        for (int ad = 0; ad < (1 << nf); ++ad) {
          if (std::popcount(static_cast<unsigned>(ad)) != size - 1) continue;
          Surgery s;
          for (int k = 0; k < 4; ++k) {
            if (rm >> k & 1) s.remove.push_back(hook[k]);
          }
          for (int k = 0; k < nf; ++k) {
            if (ad >> k & 1) s.add.push_back(free_spokes[k]);
          }
          SurgeryResult r;
          try {
            r = apply_surgery(q, cycle, true, s);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kSurgeryBroken) throw;
            continue;
          }
          if (r.closed) continue;
          if (auto out = delegate(as_two_hooked(spec, r.sequence, "surgery"), "surgery")) return *out;
        }
      }
    }
  }
  if (!equal_jumps(spec)) {
    if (auto out = delegate(derive_two_hooked(spec, q, cycle), "chord")) return *out;
  }
  if (auto out = delegate(search_two_hooked(spec, q, budget), "search")) return *out;
  fail(ErrorCode::kWiringFailed, "no wiring or witness path for " + spec.to_string());
}

PetersenPlan plan_petersen(const ConstructionContext& ctx, std::uint64_t budget) {
  require_layers(ctx);
  if (!is_petersen_exception(ctx.component)) {
    fail(ErrorCode::kPreconditionUnmet, ctx.component.to_string() + " is not an exceptional generalized Petersen graph");
  }
  const int m0 = ctx.m0, c = ctx.grw.c;
  const bool odd = ctx.lambda % 2 == 1;
  auto closes = [&](int k) { return mod(k + c, m0) != 0; };
  std::optional<int> k, l;
  for (int x = 1; x < m0 && !k; ++x) {
    if (!odd || closes(x)) k = x;
  }
  if (!k) fail(ErrorCode::kNoValidX, "no valid x");
  if (!odd) {
    for (int y = 0; y < m0 && !l; ++y) {
      if (y != *k && closes(y)) l = y;
    }
    if (!l) fail(ErrorCode::kNoValidX, "no valid y");
  }

  const Graph& q = ctx.quotient;
  PetersenPlan plan;
  plan.x = ctx.g * *k;
  if (l) plan.y = ctx.g * *l;
  plan.path_v0_ux = found_path(q, inner(0), outer(*k), budget);
  if (ctx.lambda >= 3) plan.path_vx_u0 = found_path(q, inner(*k), outer(0), budget);
  if (odd) {
    plan.path_top = found_path(q, inner(mod(*k + c, m0)), outer(0), budget);
    plan.path_bottom = plan.path_v0_ux;
  } else {
    plan.path_top = found_path(q, inner(mod(*l + c, m0)), outer(0), budget);
    plan.path_bottom = found_path(q, inner(*k), outer(*l), budget);
  }
  return plan;
}

VertexSeq petersen_exception_construction(const ConstructionContext& ctx, const PetersenPlan& plan) {
  require_layers(ctx);
  const int lambda = ctx.lambda;
  const bool odd = lambda % 2 == 1;
  if (plan.x % ctx.g || (!odd && (!plan.y || *plan.y % ctx.g))) fail(ErrorCode::kNoValidX, "x, y must lie in g Z_m");
  const int k = plan.x / ctx.g;
  Assembler as(ctx);
  as.path(0, plan.path_top);
  as.spoke(0, 0);
  for (int i = 1; i < lambda; ++i) {
    as.path(i, i % 2 ? plan.path_v0_ux : plan.path_vx_u0);
    if (i + 1 < lambda) as.spoke(i, i % 2 ? k : 0);
  }
  if (lambda >= 2) as.spoke(lambda - 1, odd ? 0 : k);
  as.path(lambda, plan.path_bottom);
  as.wrap(odd ? k : *plan.y / ctx.g);
  return as.finish("exceptional Petersen construction");
}

json to_json(const Certificate& cert) {
  return {{"spec", cert.spec.to_string()},
          {"route", std::string(to_string(cert.route))},
          {"params", cert.params},
          {"cycle", seq_json(cert.cycle)},
          {"verified", cert.verified}};
}

Certificate certificate_from_json(const json& j) {
  AnySpec spec = parse_spec(j.at("spec").get<std::string>());
  if (!std::holds_alternative<GrwSpec>(spec)) fail(ErrorCode::kInvalidSpec, "certificate spec is not a GRW spec");
  auto route = parse_route(j.at("route").get<std::string>());
  if (!route) fail(ErrorCode::kParse, "unknown route " + j.at("route").dump());
  return {std::get<GrwSpec>(spec), *route, j.at("params"), seq_from(j.at("cycle")), j.value("verified", false)};
}

std::shared_ptr<const UsableForm> ComponentCache::get(const IGraphSpec& spec, std::uint64_t budget) {
  auto key = std::make_tuple(spec.m, spec.a, spec.b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = forms_.find(key); it != forms_.end()) return it->second;
  }
  auto form = std::make_shared<const UsableForm>(usable_cycle(spec, budget));
  std::lock_guard lock(mutex_);
  return forms_.emplace(key, form).first->second;
}

namespace {

Certificate finish_certificate(const ConstructionContext& ctx, Route route, json params, VertexSeq cycle) {
  Certificate cert{ctx.grw, route, std::move(params), canonical_cycle(cycle), false};
  cert.verified = verify_cycle(ctx.graph, cert.cycle).ok;
  if (!cert.verified) fail(ErrorCode::kWiringFailed, "final cycle of " + ctx.grw.to_string() + " does not verify");
  return cert;
}

json four_hooked_json(const FourHookedResult& r, std::span<const Vertex> quotient_cycle) {
  json j = {{"cycle", seq_json(quotient_cycle)}, {"derivation", r.derivation}};
  if (r.wired) j["labeling"] = labeling_json(*r.wired);
  if (r.delegated) j["plan"] = plan_json(*r.delegated);
  return j;
}

}  // namespace

Certificate hamilton_cycle_grw(const GrwSpec& grw, std::uint64_t budget, ComponentCache* cache) {
  ConstructionContext ctx = construction_context(grw);
  json params = {{"lambda", ctx.lambda}, {"component", ctx.component.to_string()}};

  if (ctx.lambda == 0) {
    if (is_petersen_exception(ctx.component)) {
      VertexSeq path = found_path(ctx.quotient, outer(0), inner(grw.c), budget);
      params["path"] = seq_json(path);
      return finish_certificate(ctx, Route::kConnectedHPetersenPath, params, path);
    }
    SearchResult r = find_hamilton_cycle(ctx.quotient, budget);
    if (!r.found()) {
      fail(r.status == SearchStatus::kProvedAbsent ? ErrorCode::kWiringFailed : ErrorCode::kBudgetExhausted,
           "no Hamilton cycle of " + ctx.component.to_string());
    }
    params["h_cycle"] = seq_json(r.sequence);
    return finish_certificate(ctx, Route::kConnectedH, params, r.sequence);
  }

  if (is_petersen_exception(ctx.component)) {
    PetersenPlan plan = plan_petersen(ctx, budget);
    params.update(petersen_json(ctx, plan));
    return finish_certificate(ctx, Route::kPetersenExceptionConstruction, params,
                              petersen_exception_construction(ctx, plan));
  }

  std::shared_ptr<const UsableForm> form =
      cache ? cache->get(ctx.component, budget) : std::make_shared<const UsableForm>(usable_cycle(ctx.component, budget));
  params["form"] = std::string(to_string(form->kind));
  params["provenance"] = form->provenance;
  if (form->resolution) {
    params["rule"] = form->resolution->rule;
    params["fired"] = form->resolution->fired;
  }

  switch (form->kind) {
    case UsableForm::Kind::kAlternating:
      params["alternating_cycle"] = seq_json(form->cycle);
      return finish_certificate(ctx, Route::kAlternatingConstruction, params,
                                alternating_construction(ctx, form->cycle));
    case UsableForm::Kind::kStandard4Hooked: {
      FourHookedResult r = four_hooked_construction(ctx, form->cycle, budget);
      params.update(four_hooked_json(r, form->cycle));
      return finish_certificate(ctx, Route::kFourHookedConstruction, params, r.cycle);
    }
    case UsableForm::Kind::kTwoHooked: {
      TwoHookedPlan plan = plan_two_hooked(ctx, *form->two_hooked, form->cycle);
      params.update(plan_json(plan));
      return finish_certificate(ctx, Route::kTwoHookedConstruction, params, two_hooked_construction(ctx, plan));
    }
    case UsableForm::Kind::kSpecialSubpaths:
      params.update(special_json(*form->special));
      return finish_certificate(ctx, Route::kTwoHookedRemark10, params,
                                remark10_construction(ctx, *form->special));
  }
  fail(ErrorCode::kWiringFailed, "unhandled usable form");
}

VertexSeq replay(const Certificate& cert) {
  ConstructionContext ctx = construction_context(cert.spec);
  const json& p = cert.params;
  VertexSeq out;
  switch (cert.route) {
    case Route::kConnectedH: out = seq_from(p.at("h_cycle")); break;
    case Route::kConnectedHPetersenPath: out = seq_from(p.at("path")); break;
    case Route::kAlternatingConstruction: out = alternating_construction(ctx, seq_from(p.at("alternating_cycle"))); break;
    case Route::kTwoHookedConstruction: out = two_hooked_construction(ctx, plan_from(p)); break;
    case Route::kTwoHookedRemark10: out = remark10_construction(ctx, special_from(p)); break;
    case Route::kFourHookedConstruction:
      if (p.contains("labeling")) {
        out = four_hooked_wiring(ctx, seq_from(p.at("cycle")), labeling_from(p.at("labeling")));
      } else {
        out = two_hooked_construction(ctx, plan_from(p.at("plan")));
      }
      break;
    case Route::kPetersenExceptionConstruction:
      out = petersen_exception_construction(ctx, petersen_from(p));
      break;
  }
  if (!verify_cycle(ctx.graph, out)) fail(ErrorCode::kWiringFailed, "replayed cycle does not verify");
  return canonical_cycle(out);
}

}  // namespace bicirc
