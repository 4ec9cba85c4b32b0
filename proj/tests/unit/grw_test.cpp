#include <gtest/gtest.h>

#include <set>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "bicirc/grw.hpp"
#include "bicirc/iso.hpp"
#include "support/oracles.hpp"

using namespace bicirc;

namespace {

std::vector<int> ids(int m, const VertexSeq& s) {
  std::vector<int> out;
  for (Vertex v : s) out.push_back(v.side == Side::kOuter ? v.index : m + v.index);
  return out;
}

void expect_hamiltonian(const GrwSpec& s, const VertexSeq& c) {
  EXPECT_TRUE(oracle::is_hamilton_cycle(s.bicirculant(), ids(s.m, c))) << s.to_string();
}

bool has_edge(const VertexSeq& c, Vertex x, Vertex y) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex p = c[i], q = c[(i + 1) % c.size()];
    if ((p == x && q == y) || (p == y && q == x)) return true;
  }
  return false;
}

// Edges of the cycle with both ends in the given layer.
int layer_edges(const ConstructionContext& ctx, const VertexSeq& c, int layer, bool spokes) {
  int n = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex p = c[i], q = c[(i + 1) % c.size()];
    if (ctx.layer_of(p) != layer || ctx.layer_of(q) != layer) continue;
    if ((p.side != q.side) == spokes) ++n;
  }
  return n;
}

// Paths left in a middle layer: vertices minus edges of a linear forest.
int strands(const ConstructionContext& ctx, const VertexSeq& c, int layer) {
  return 2 * ctx.m0 - layer_edges(ctx, c, layer, true) - layer_edges(ctx, c, layer, false);
}

// Type-c spokes u_j v_{j+c} of the cycle.
std::vector<VertexPair> c_spokes(const GrwSpec& s, const VertexSeq& c) {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex p = c[i], q = c[(i + 1) % c.size()];
    if (p.side == q.side) continue;
    if (p.side == Side::kInner) std::swap(p, q);
    if (mod(q.index - p.index, s.m) == s.c) out.emplace_back(p, q);
  }
  return out;
}

std::vector<VertexSeq> cycles_of(const IGraphSpec& spec) {
  return enumerate_hamilton_cycles(build(spec.bicirculant())).cycles;
}

bool uses_every_spoke(const VertexSeq& c) {
  int n = 0;
  for (std::size_t i = 0; i < c.size(); ++i) n += c[i].side != c[(i + 1) % c.size()].side;
  return 2 * n == static_cast<int>(c.size());
}

}  // namespace

TEST(Context, Examples) {
  auto c1 = construction_context(GrwSpec(12, 3, 4, 2));
  EXPECT_EQ(c1.lambda, 0);
  EXPECT_EQ(c1.component, IGraphSpec(12, 3, 4));
  EXPECT_EQ(oracle::component_count(IGraphSpec(12, 3, 4).bicirculant()), 1);

  auto c2 = construction_context(GrwSpec(10, 2, 4, 1));
  EXPECT_EQ(c2.lambda, 1);
  EXPECT_EQ(c2.component, IGraphSpec(5, 1, 2));
  EXPECT_TRUE(is_petersen_exception(c2.component));

  auto c3 = construction_context(GrwSpec(12, 4, 8, 1));
  EXPECT_EQ(c3.lambda, 3);
  EXPECT_EQ(c3.m0, 3);
  EXPECT_EQ(c3.component, IGraphSpec(3, 1, 2));
  EXPECT_EQ(oracle::component_count(IGraphSpec(12, 4, 8).bicirculant()), 4);
}

TEST(Context, RejectsDisconnected) {
  try {
    construction_context(GrwSpec(12, 2, 4, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(Context, LayerCoordinatesInvert) {
  for (GrwSpec s : {GrwSpec(12, 4, 8, 1), GrwSpec(18, 3, 6, 5), GrwSpec(20, 4, 8, 3)}) {
    auto ctx = construction_context(s);
    EXPECT_EQ(ctx.layer_of(outer(0)), 0);
    for (int i = 0; i < s.m; ++i) {
      for (Vertex v : {outer(i), inner(i)}) EXPECT_EQ(ctx.lift(ctx.layer_of(v), ctx.local(v)), v);
    }
    // u^i_x v^{i+1}_x is a type-c spoke
    for (int i = 0; i < ctx.lambda; ++i) {
      Vertex u = ctx.lift(i, outer(1)), v = ctx.lift(i + 1, inner(1));
      EXPECT_EQ(mod(v.index - u.index, s.m), s.c);
    }
  }
}

TEST(Route, Examples) {
  EXPECT_EQ(hamilton_cycle_grw(GrwSpec(12, 3, 4, 2)).route, Route::kConnectedH);
  EXPECT_EQ(hamilton_cycle_grw(GrwSpec(10, 2, 4, 1)).route, Route::kPetersenExceptionConstruction);
  // G(11,2) spans R(11;1,2,c), so the path u_0 .. v_c closes the cycle
  Certificate c = hamilton_cycle_grw(GrwSpec(11, 1, 2, 3));
  EXPECT_EQ(c.route, Route::kConnectedHPetersenPath);
  EXPECT_TRUE(has_edge(c.cycle, outer(0), inner(3)));
  expect_hamiltonian(c.spec, c.cycle);
  for (Route r : {Route::kConnectedH, Route::kTwoHookedRemark10, Route::kPetersenExceptionConstruction}) {
    EXPECT_EQ(parse_route(to_string(r)), r);
  }
  EXPECT_FALSE(parse_route("Nope"));
}

TEST(Alternating, MiddleLayersKeepOnlySpokes) {
  IGraphSpec q(8, 1, 3);
  std::vector<VertexSeq> alts;
  for (const auto& c : cycles_of(q)) {
    if (uses_every_spoke(c)) alts.push_back(c);
  }
  ASSERT_FALSE(alts.empty());
  for (int g : {2, 3, 4}) {
    GrwSpec s(8 * g, g, 3 * g, 1);
    auto ctx = construction_context(s);
    for (const auto& alt : alts) {
      VertexSeq c = alternating_construction(ctx, alt);
      expect_hamiltonian(s, c);
      for (int i = 1; i < ctx.lambda; ++i) {
        EXPECT_EQ(layer_edges(ctx, c, i, true), ctx.m0);
        EXPECT_EQ(layer_edges(ctx, c, i, false), 0);
      }
    }
  }
}

TEST(Alternating, RejectsBadInput) {
  auto ctx = construction_context(GrwSpec(16, 2, 6, 1));
  VertexSeq non_alt;
  for (const auto& c : cycles_of(ctx.component)) {
    if (!uses_every_spoke(c)) non_alt = c;
  }
  ASSERT_FALSE(non_alt.empty());
  try {
    alternating_construction(ctx, non_alt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAlternating);
  }
  auto odd = construction_context(GrwSpec(14, 2, 4, 1));
  try {
    alternating_construction(odd, cycles_of(odd.component).front());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddM0);
  }
}

TEST(TwoHooked, LambdaOneJoinsByTwoSpokes) {
  // I(5;1,1) and its witness v_0 u_0 u_1 .. u_4 v_4 .. v_1
  GrwSpec s(10, 2, 2, 1);
  auto ctx = construction_context(s);
  auto l5 = lemma5_cycle(ctx.component);
  auto plan = plan_two_hooked(ctx, l5.witness, l5.cycle);
  EXPECT_EQ(plan.companion.front(), outer(0));
  EXPECT_EQ(plan.companion.back(), outer(1));
  VertexSeq c = two_hooked_construction(ctx, plan);
  expect_hamiltonian(s, c);
  std::set<VertexPair> got;
  for (auto e : c_spokes(s, c)) got.insert(e);
  std::set<VertexPair> want{{ctx.lift(0, outer(0)), ctx.lift(1, inner(0))},
                            {ctx.lift(0, outer(1)), ctx.lift(1, inner(1))}};
  EXPECT_EQ(got, want);
}

TEST(TwoHooked, EveryWitnessOfI11) {
  std::set<HookedEnds> kinds;
  for (IGraphSpec q : {IGraphSpec(11, 1, 3), IGraphSpec(11, 3, 1)}) {
    int used = 0;
    for (const auto& cyc : cycles_of(q)) {
      CycleClass cl = classify_cycle(q, cyc);
      if (cl.kind != CycleKind::kTwoHooked) continue;
      ++used;
      kinds.insert(cl.two_hooked->ends);
      for (int g : {2, 3, 4}) {
        GrwSpec s(11 * g, q.a * g, q.b * g, 1);
        auto ctx = construction_context(s);
        VertexSeq c = two_hooked_construction(ctx, plan_two_hooked(ctx, *cl.two_hooked, cyc));
        expect_hamiltonian(s, c);
        for (int i = 1; i < ctx.lambda; ++i) EXPECT_EQ(strands(ctx, c, i), 2);
        EXPECT_EQ(static_cast<int>(c_spokes(s, c).size()), 2 * ctx.lambda);
      }
    }
    EXPECT_GT(used, 0);
  }
  EXPECT_EQ(kinds.size(), 2u);
}

TEST(TwoHooked, RejectsBadWitness) {
  auto ctx = construction_context(GrwSpec(22, 2, 6, 1));
  auto cyc = cycles_of(ctx.component).front();
  TwoHookedWitness w{HookedEnds::kInnerA, cyc, "test"};
  try {
    plan_two_hooked(ctx, w, cyc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWitnessInvalid);
  }
}

TEST(FourHooked, StandardCyclesAssemble) {
  for (IGraphSpec q : {IGraphSpec(7, 2, 3), IGraphSpec(8, 1, 3), IGraphSpec(9, 1, 4)}) {
    for (const auto& cyc : cycles_of(q)) {
      bool standard = false;
      for (const auto& h : hook_labelings(q, cyc)) standard = standard || h.order == HookOrder::kStandard;
      if (!standard) continue;
      for (int g : {2, 3}) {
        GrwSpec s(q.m * g, q.a * g, q.b * g, 1);
        auto ctx = construction_context(s);
        FourHookedResult r = four_hooked_construction(ctx, cyc);
        expect_hamiltonian(s, r.cycle);
        EXPECT_TRUE(r.wired || r.delegated);
        const int want = r.wired ? 4 : 2;
        for (int i = 1; i < ctx.lambda; ++i) EXPECT_EQ(strands(ctx, r.cycle, i), want);
        if (r.wired) EXPECT_EQ(four_hooked_wiring(ctx, cyc, *r.wired), r.cycle);
      }
    }
  }
}

TEST(FourHooked, ElusiveLabelingRejected) {
  auto ctx = construction_context(GrwSpec(12, 2, 4, 1));
  auto c = parse_sequence("u0 u1 u2 u3 v3 v1 v5 u5 u4 v4 v2 v0");
  try {
    four_hooked_wiring(ctx, c, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElusiveInput);
  }
}

TEST(SpecialRoute, SpecialPathsAssemble) {
  IGraphSpec q(9, 1, 7);  // 7 = -2 mod 9
  std::optional<SpecialPaths> paths;
  for (const auto& cyc : cycles_of(q)) {
    for (const auto& h : hook_labelings(q, cyc)) {
      if (h.order == HookOrder::kStandard || paths) continue;
      Resolution r = resolve_elusive(q, cyc, h);
      if (r.outcome == Resolution::Outcome::kSpecialCase) paths = special_case_paths(q, r.cycle, *r.special);
    }
  }
  ASSERT_TRUE(paths);
  for (int g : {2, 3}) {
    GrwSpec s(9 * g, g, 7 * g, 1);
    auto ctx = construction_context(s);
    VertexSeq c = remark10_construction(ctx, *paths);
    expect_hamiltonian(s, c);
    EXPECT_TRUE(has_edge(c, ctx.lift(0, outer(0)), ctx.lift(1, inner(0))));
    EXPECT_TRUE(has_edge(c, ctx.lift(0, outer(paths->p)), ctx.lift(1, inner(paths->p))));
  }
  SpecialPaths bad = *paths;
  std::swap(bad.outer_path, bad.inner_path);
  try {
    remark10_construction(construction_context(GrwSpec(18, 2, 14, 1)), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPathsInconsistent);
  }
}

TEST(Petersen, OddLambdaClosingSpokes) {
  for (GrwSpec s : {GrwSpec(10, 2, 4, 1), GrwSpec(20, 4, 8, 1), GrwSpec(20, 4, 8, 3)}) {
    auto ctx = construction_context(s);
    const int g = ctx.g, lambda = ctx.lambda;
    // smallest nonzero x in g Z_m with x + g c != 0
    int x = g;
    while (mod(x + g * s.c, s.m) == 0) x += g;
    PetersenPlan plan = plan_petersen(ctx);
    EXPECT_EQ(plan.x, x);
    VertexSeq c = petersen_exception_construction(ctx, plan);
    expect_hamiltonian(s, c);
    auto u = [&](int i, int k) { return outer(mod(k + i * s.c, s.m)); };
    auto v = [&](int i, int k) { return inner(mod(k + i * s.c, s.m)); };
    EXPECT_TRUE(has_edge(c, u(0, 0), v(1, 0)));
    EXPECT_TRUE(has_edge(c, u(lambda - 1, 0), v(lambda, 0)));
    EXPECT_TRUE(has_edge(c, u(lambda, x), v(0, x + g * s.c)));
  }
  EXPECT_EQ(plan_petersen(construction_context(GrwSpec(10, 2, 4, 1))).x, 2);
}

TEST(Petersen, EvenLambdaChoosesY) {
  for (GrwSpec s : {GrwSpec(15, 3, 6, 1), GrwSpec(15, 3, 6, 2), GrwSpec(25, 5, 10, 1)}) {
    auto ctx = construction_context(s);
    PetersenPlan plan = plan_petersen(ctx);
    ASSERT_TRUE(plan.y);
    const int g = ctx.g;
    EXPECT_EQ(plan.x % g, 0);
    EXPECT_EQ(*plan.y % g, 0);
    EXPECT_NE(*plan.y, plan.x);
    EXPECT_NE(mod(*plan.y + g * s.c, s.m), 0);
    VertexSeq c = petersen_exception_construction(ctx, plan);
    expect_hamiltonian(s, c);
    EXPECT_TRUE(has_edge(c, outer(mod(*plan.y + ctx.lambda * s.c, s.m)), inner(mod(*plan.y + g * s.c, s.m))));
  }
}

TEST(Certificate, ReplayAndJsonRoundTrip) {
  ComponentCache cache;
  std::set<Route> routes;
  for (int m = 3; m <= 16; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        for (int c = 1; 2 * c <= m; ++c) {
          if (gcd(gcd(gcd(m, a), b), c) != 1) continue;
          Certificate cert = hamilton_cycle_grw(GrwSpec(m, a, b, c), kDefaultBudget, &cache);
          routes.insert(cert.route);
          EXPECT_TRUE(cert.verified);
          EXPECT_EQ(replay(cert), cert.cycle) << cert.spec.to_string();
          auto j = to_json(cert);
          Certificate back = certificate_from_json(j);
          EXPECT_EQ(replay(back), cert.cycle);
          EXPECT_EQ(to_json(back).dump(), j.dump());
        }
      }
    }
  }
  EXPECT_GE(routes.size(), 5u);
}

TEST(Certificate, LayerWiringSanity) {
  ComponentCache cache;
  for (int m = 3; m <= 20; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        for (int c = 1; 2 * c <= m; ++c) {
          if (gcd(gcd(gcd(m, a), b), c) != 1 || gcd(gcd(m, a), b) == 1) continue;
          GrwSpec s(m, a, b, c);
          Certificate cert = hamilton_cycle_grw(s, kDefaultBudget, &cache);
          expect_hamiltonian(s, cert.cycle);
          if (cert.route == Route::kPetersenExceptionConstruction) continue;
          auto ctx = construction_context(s);
          for (auto [u, v] : c_spokes(s, cert.cycle)) {
            EXPECT_EQ(ctx.layer_of(v), ctx.layer_of(u) + 1) << s.to_string();
            EXPECT_EQ(ctx.local(u).index, ctx.local(v).index) << s.to_string();
          }
        }
      }
    }
  }
}

TEST(Certificate, SmallSpecsAgreeWithOracle) {
  for (int m = 3; m <= 10; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        for (int c = 1; 2 * c <= m; ++c) {
          if (gcd(gcd(gcd(m, a), b), c) != 1) continue;
          GrwSpec s(m, a, b, c);
          EXPECT_TRUE(oracle::has_hamilton_cycle(s.bicirculant())) << s.to_string();
          expect_hamiltonian(s, hamilton_cycle_grw(s).cycle);
        }
      }
    }
  }
}
