#include "bicirc/igraph.hpp"

#include <algorithm>
#include <set>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "cycle_view.hpp"

namespace bicirc {

namespace {

using detail::CycleView;

constexpr std::array<std::string_view, 8> kNames = {"u0", "ua", "ub", "uab", "v0", "va", "vb", "vab"};
constexpr std::array<std::string_view, 8> kType1 = {"u0", "ua", "ub", "uab", "vab", "va", "vb", "v0"};
constexpr std::array<std::string_view, 8> kType2 = {"u0", "ua", "va", "vab", "v0", "vb", "ub", "uab"};

bool plus_minus(int x, int y, int m) { return mod(x - y, m) == 0 || mod(x + y, m) == 0; }

void require_distinct_ab(const IGraphSpec& spec) {
  if (plus_minus(spec.a, spec.b, spec.m)) {
    throw Error(ErrorCode::kNotApplicable, spec.to_string() + " has a = +-b");
  }
}

}  // namespace

int Labeling::index(int m, int ca, int cb) const {
  return mod(static_cast<long long>(shift) + static_cast<long long>(ca) * a + static_cast<long long>(cb) * b, m);
}

std::string_view to_string(HookOrder order) {
  switch (order) {
    case HookOrder::kStandard: return "standard";
    case HookOrder::kElusive1: return "elusive-1";
    case HookOrder::kElusive2: return "elusive-2";
  }
  return "?";
}

std::string HookWitness::pattern_string() const {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ' ';
    out += pattern[i];
  }
  return out;
}

std::optional<HookWitness> hook_witness(const IGraphSpec& spec, std::span<const Vertex> cycle,
                                        const Labeling& lab) {
  const int m = spec.m;
  CycleView view(m, cycle);
  std::array<Vertex, 8> designated = {lab.u(m, 0, 0), lab.u(m, 1, 0), lab.u(m, 0, 1), lab.u(m, 1, 1),
                                      lab.v(m, 0, 0), lab.v(m, 1, 0), lab.v(m, 0, 1), lab.v(m, 1, 1)};
  const auto& d = designated;
  if (!view.has_edge(d[0], d[1]) || !view.has_edge(d[2], d[3]) || !view.has_edge(d[4], d[6]) ||
      !view.has_edge(d[5], d[7])) {
    return std::nullopt;
  }
  HookWitness w;
  w.labeling = lab;
  w.direction = mod(view.pos(d[1]) - view.pos(d[0]), view.n()) == 1 ? 1 : -1;
  std::array<int, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return view.distance(d[0], d[x], w.direction) < view.distance(d[0], d[y], w.direction);
  });
  for (int i = 0; i < 8; ++i) w.pattern[i] = kNames[order[i]];
  if (w.pattern == kType1) {
    w.order = HookOrder::kElusive1;
  } else if (w.pattern == kType2) {
    w.order = HookOrder::kElusive2;
  }
  return w;
}

std::vector<HookWitness> hook_labelings(const IGraphSpec& spec, std::span<const Vertex> cycle) {
  require_distinct_ab(spec);
  std::vector<HookWitness> out;
  for (int t = 0; t < spec.m; ++t) {
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        Labeling lab{t, mod(sa * spec.a, spec.m), mod(sb * spec.b, spec.m)};
        if (auto w = hook_witness(spec, cycle, lab)) out.push_back(*w);
      }
    }
  }
  return out;
}

VertexSeq map_indices(std::span<const Vertex> seq, int m, int mult, int add) {
  VertexSeq out;
  out.reserve(seq.size());
  for (const Vertex& v : seq) {
    out.push_back({v.side, mod(static_cast<long long>(mult) * v.index + add, m)});
  }
  return out;
}

std::optional<TwoHookedWitness> as_two_hooked(const IGraphSpec& spec, std::span<const Vertex> path,
                                              std::string source) {
  if (path.size() < 2) return std::nullopt;
  const int m = spec.m;
  Vertex x = path.front(), y = path.back();
  if (x.side != y.side) return std::nullopt;
  int step = x.side == Side::kInner ? spec.a : spec.b;
  int diff = mod(y.index - x.index, m);
  TwoHookedWitness w;
  w.ends = x.side == Side::kInner ? HookedEnds::kInnerA : HookedEnds::kOuterB;
  w.source = std::move(source);
  if (diff == step) {
    w.path = map_indices(path, m, 1, -x.index);
  } else if (diff == mod(-step, m)) {
    w.path = map_indices(path, m, -1, x.index);
  } else {
    return std::nullopt;
  }
  return w;
}

std::optional<TwoHookedWitness> derive_two_hooked(const IGraphSpec& spec, const Graph& g,
                                                  std::span<const Vertex> cycle) {
  const int m = spec.m;
  CycleView view(m, cycle);
  std::vector<VertexPair> base = edges_of(cycle, true);
  auto try_ends = [&](Vertex p, Vertex q) -> std::optional<TwoHookedWitness> {
    for (int dp : {-1, 1}) {
      Vertex p2 = view.at(view.pos(p) + dp);
      for (int dq : {-1, 1}) {
        Vertex q2 = view.at(view.pos(q) + dq);
        if (p2 == q || q2 == p || p2 == q2) continue;
        if (!g.adjacent(p2, q2) || view.has_edge(p2, q2)) continue;
        std::vector<VertexPair> edges;
        for (const auto& e : base) {
          auto same = [](const VertexPair& e, Vertex s, Vertex t) {
            return (e.first == s && e.second == t) || (e.first == t && e.second == s);
          };
          if (same(e, p, p2) || same(e, q, q2)) continue;
          edges.push_back(e);
        }
        edges.emplace_back(p2, q2);
        auto assembled = path_from_edges(g, edges, p);
        if (!assembled.sequence) continue;
        if (auto w = as_two_hooked(spec, *assembled.sequence, "derived")) return w;
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < m; ++i) {
    if (auto w = try_ends(inner(i), inner(mod(i + spec.a, m)))) return w;
  }
  for (int i = 0; i < m; ++i) {
    if (auto w = try_ends(outer(i), outer(mod(i + spec.b, m)))) return w;
  }
  return std::nullopt;
}

std::optional<TwoHookedWitness> search_two_hooked(const IGraphSpec& spec, const Graph& g,
                                                  std::uint64_t budget) {
  auto r = find_hamilton_path(g, inner(0), inner(spec.a), budget);
  if (r.found()) return TwoHookedWitness{HookedEnds::kInnerA, r.sequence, "search"};
  r = find_hamilton_path(g, outer(0), outer(spec.b), budget);
  if (r.found()) return TwoHookedWitness{HookedEnds::kOuterB, r.sequence, "search"};
  return std::nullopt;
}

std::string_view to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::kAlternating: return "alternating";
    case CycleKind::kFourHooked: return "4-hooked";
    case CycleKind::kTwoHooked: return "2-hooked";
  }
  return "?";
}

CycleClass classify_cycle(const IGraphSpec& spec, std::span<const Vertex> cycle, std::uint64_t budget) {
  require_distinct_ab(spec);
  Graph g = build(spec.bicirculant());
  if (!verify_cycle(g, cycle)) throw Error(ErrorCode::kPreconditionUnmet, "not a Hamilton cycle");
  CycleClass out;
  int spokes = 0;
  for (const auto& [x, y] : edges_of(cycle, true)) spokes += x.side != y.side;
  if (spokes == spec.m) {
    out.kind = CycleKind::kAlternating;
    return out;
  }
  out.hooks = hook_labelings(spec, cycle);
  if (!out.hooks.empty()) {
    out.kind = CycleKind::kFourHooked;
    for (HookOrder want : {HookOrder::kStandard, HookOrder::kElusive1, HookOrder::kElusive2}) {
      auto it = std::find_if(out.hooks.begin(), out.hooks.end(),
                             [&](const HookWitness& w) { return w.order == want; });
      if (it != out.hooks.end()) {
        out.chosen = *it;
        break;
      }
    }
    return out;
  }
  out.kind = CycleKind::kTwoHooked;
  out.two_hooked = derive_two_hooked(spec, g, cycle);
  if (!out.two_hooked) out.two_hooked = search_two_hooked(spec, g, budget);
  if (!out.two_hooked) {
    throw Error(ErrorCode::kClassificationFailed, "no class applies to a cycle of " + spec.to_string());
  }
  return out;
}

Lemma5Cycle lemma5_cycle(const IGraphSpec& spec) {
  const int m = spec.m, a = spec.a;
  if (!plus_minus(a, spec.b, m)) throw Error(ErrorCode::kPreconditionUnmet, "needs a = +-b");
  if (gcd(m, a) != 1) throw Error(ErrorCode::kDisconnected, spec.to_string() + " is disconnected");
  VertexSeq seq{inner(0)};
  for (int k = 0; k < m; ++k) seq.push_back(outer(mod(1LL * k * a, m)));
  for (int k = m - 1; k >= 1; --k) seq.push_back(inner(mod(1LL * k * a, m)));
  Graph g = build(spec.bicirculant());
  if (!verify_cycle(g, seq) || !verify_path(g, seq)) {
    throw Error(ErrorCode::kWitnessInvalid, "constructed cycle does not verify");
  }
  return {seq, {HookedEnds::kInnerA, seq, "lemma5"}};
}

SurgeryResult apply_surgery(const Graph& g, std::span<const Vertex> base, bool base_closed,
                            const Surgery& surgery, std::optional<Vertex> from) {
  auto key = [&](Vertex x, Vertex y) { int i = g.id(x), j = g.id(y); return std::pair<int, int>(std::min(i, j), std::max(i, j)); };
  std::set<std::pair<int, int>> edges;
  for (const auto& [x, y] : edges_of(base, base_closed)) edges.insert(key(x, y));
  for (const auto& [x, y] : surgery.remove) {
    if (!g.contains(x) || !g.contains(y) || !edges.erase(key(x, y))) {
      throw Error(ErrorCode::kSurgeryBroken, "edge " + to_string(x) + " " + to_string(y) + " is not present");
    }
  }
  for (const auto& [x, y] : surgery.add) {
    if (!g.adjacent(x, y)) {
      throw Error(ErrorCode::kSurgeryBroken, to_string(x) + " " + to_string(y) + " is not an edge");
    }
    if (!edges.insert(key(x, y)).second) {
      throw Error(ErrorCode::kSurgeryBroken, "edge " + to_string(x) + " " + to_string(y) + " already present");
    }
  }
  std::vector<VertexPair> list;
  for (const auto& [x, y] : edges) list.emplace_back(g.vertex(x), g.vertex(y));
  bool closed = static_cast<int>(list.size()) == g.order();
  Assembly a = closed ? cycle_from_edges(g, list) : path_from_edges(g, list, from);
  if (!a.sequence) throw Error(ErrorCode::kSurgeryBroken, a.reason);
  return {closed, std::move(*a.sequence)};
}

HookWitness normalize_elusive(const IGraphSpec& spec, std::span<const Vertex> cycle,
                              const HookWitness& elusive) {
  if (elusive.order != HookOrder::kElusive2) return elusive;
  const Labeling& l = elusive.labeling;
  Labeling next{mod(l.shift + l.a, spec.m), mod(-l.a, spec.m), l.b};
  auto w = hook_witness(spec, cycle, next);
  if (!w || w->order != HookOrder::kElusive1) {
    throw Error(ErrorCode::kPreconditionUnmet, "type-2 labeling did not normalise to type 1");
  }
  return *w;
}

std::string_view to_string(Resolution::Outcome outcome) {
  switch (outcome) {
    case Resolution::Outcome::kStandard4Hooked: return "standard-4-hooked";
    case Resolution::Outcome::kTwoHooked: return "2-hooked";
    case Resolution::Outcome::kSpecialCase: return "special-case";
  }
  return "?";
}

std::string_view to_string(UsableForm::Kind kind) {
  switch (kind) {
    case UsableForm::Kind::kAlternating: return "alternating";
    case UsableForm::Kind::kStandard4Hooked: return "standard-4-hooked";
    case UsableForm::Kind::kTwoHooked: return "2-hooked";
    case UsableForm::Kind::kSpecialSubpaths: return "special-subpaths";
  }
  return "?";
}

UsableForm usable_cycle(const IGraphSpec& spec, std::uint64_t budget) {
  UsableForm out;
  if (plus_minus(spec.a, spec.b, spec.m)) {
    auto l5 = lemma5_cycle(spec);
    out.kind = UsableForm::Kind::kTwoHooked;
    out.cycle = l5.cycle;
    out.two_hooked = l5.witness;
    out.provenance = "lemma5";
    return out;
  }
  Graph g = build(spec.bicirculant());
  auto found = find_hamilton_cycle(g, budget);
  if (found.status == SearchStatus::kProvedAbsent) {
    throw Error(ErrorCode::kNotApplicable, spec.to_string() + " is not hamiltonian");
  }
  if (!found.found()) throw Error(ErrorCode::kBudgetExhausted, "no cycle of " + spec.to_string() + " within budget");
  out.cycle = found.sequence;
  CycleClass cls = classify_cycle(spec, out.cycle, budget);
  switch (cls.kind) {
    case CycleKind::kAlternating:
      out.kind = UsableForm::Kind::kAlternating;
      out.provenance = "oracle:alternating";
      return out;
    case CycleKind::kTwoHooked:
      out.kind = UsableForm::Kind::kTwoHooked;
      out.two_hooked = cls.two_hooked;
      out.provenance = "oracle:2-hooked";
      return out;
    case CycleKind::kFourHooked:
      break;
  }
  if (cls.chosen->order == HookOrder::kStandard) {
    out.kind = UsableForm::Kind::kStandard4Hooked;
    out.hooks = cls.hooks;
    out.provenance = "oracle:standard-4-hooked";
    return out;
  }
  HookWitness elusive = normalize_elusive(spec, out.cycle, *cls.chosen);
  Resolution res = resolve_elusive(spec, out.cycle, elusive, budget);
  out.provenance = "oracle:elusive:" + res.rule;
  switch (res.outcome) {
    case Resolution::Outcome::kStandard4Hooked:
      out.kind = UsableForm::Kind::kStandard4Hooked;
      out.cycle = res.cycle;
      out.hooks = hook_labelings(spec, res.cycle);
      break;
    case Resolution::Outcome::kTwoHooked:
      out.kind = UsableForm::Kind::kTwoHooked;
      out.two_hooked = res.two_hooked;
      break;
    case Resolution::Outcome::kSpecialCase:
      out.kind = UsableForm::Kind::kSpecialSubpaths;
      out.special = special_case_paths(spec, res.cycle, *res.special);
      break;
  }
  out.resolution = std::move(res);
  return out;
}

}  // namespace bicirc
