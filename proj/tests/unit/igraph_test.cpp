#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "bicirc/igraph.hpp"

using namespace bicirc;

namespace {

bool is_path_between(const Graph& g, const VertexSeq& p, Vertex x, Vertex y) {
  return verify_path(g, p) && p.front() == x && p.back() == y;
}

// Checks a witness against its definition, not against the library's helpers.
void expect_two_hooked(const IGraphSpec& spec, const TwoHookedWitness& w) {
  Graph g = build(spec.bicirculant());
  if (w.ends == HookedEnds::kInnerA) {
    EXPECT_TRUE(is_path_between(g, w.path, inner(0), inner(spec.a))) << format_sequence(w.path);
  } else {
    EXPECT_TRUE(is_path_between(g, w.path, outer(0), outer(spec.b))) << format_sequence(w.path);
  }
}

void expect_special(const IGraphSpec& spec, const SpecialPaths& s) {
  Graph g = build(spec.bicirculant());
  EXPECT_TRUE(s.p == mod(3LL * spec.a, spec.m) || s.p == mod(3LL * spec.b, spec.m));
  EXPECT_TRUE(is_path_between(g, s.outer_path, outer(0), outer(s.p)));
  EXPECT_TRUE(is_path_between(g, s.inner_path, inner(0), inner(s.p)));
  // the pair is a spanning linear forest of two paths
  for (const auto& part : {s.cross_first, s.cross_second}) {
    for (std::size_t i = 0; i + 1 < part.size(); ++i) EXPECT_TRUE(g.adjacent(part[i], part[i + 1]));
  }
  EXPECT_EQ(s.cross_first.front(), outer(0));
  EXPECT_EQ(s.cross_first.back(), inner(s.p));
  EXPECT_EQ(s.cross_second.front(), outer(s.p));
  EXPECT_EQ(s.cross_second.back(), inner(0));
  std::set<Vertex> all(s.cross_first.begin(), s.cross_first.end());
  all.insert(s.cross_second.begin(), s.cross_second.end());
  EXPECT_EQ(all.size(), s.cross_first.size() + s.cross_second.size());
  EXPECT_EQ(static_cast<int>(all.size()), 2 * spec.m);
}

void expect_resolution(const IGraphSpec& spec, const Resolution& r) {
  Graph g = build(spec.bicirculant());
  EXPECT_TRUE(r.broken.empty()) << r.broken.front();
  switch (r.outcome) {
    case Resolution::Outcome::kStandard4Hooked:
      ASSERT_TRUE(r.hook);
      EXPECT_TRUE(verify_cycle(g, r.cycle));
      EXPECT_EQ(r.hook->order, HookOrder::kStandard);
      break;
    case Resolution::Outcome::kTwoHooked:
      ASSERT_TRUE(r.two_hooked);
      expect_two_hooked(spec, *r.two_hooked);
      break;
    case Resolution::Outcome::kSpecialCase:
      ASSERT_TRUE(r.special);
      expect_special(spec, special_case_paths(spec, r.cycle, *r.special));
      break;
  }
}

}  // namespace

TEST(Labeling, HookEdgesOnStandardCycle) {
  // u0 u1 u2 u3 v3 v1 v5 u5 u4 v4 v2 v0 in I(6;1,2): hooks with t = 0, A = 1, B = 2.
  IGraphSpec spec(6, 1, 2);
  auto c = parse_sequence("u0 u1 u2 u3 v3 v1 v5 u5 u4 v4 v2 v0");
  ASSERT_TRUE(verify_cycle(build(spec.bicirculant()), c));
  auto w = hook_witness(spec, c, {0, 1, 2});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->order, HookOrder::kElusive1);
  EXPECT_EQ(w->pattern_string(), "u0 ua ub uab vab va vb v0");
  EXPECT_FALSE(hook_witness(spec, c, {0, 1, 4}));
}

TEST(Labeling, TypeTwoNormalizesToTypeOne) {
  int seen = 0;
  for (int m = 7; m <= 10; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        if (a == b) continue;
        IGraphSpec spec(m, a, b);
        for (const auto& c : enumerate_hamilton_cycles(build(spec.bicirculant())).cycles) {
          for (const auto& h : hook_labelings(spec, c)) {
            if (h.order != HookOrder::kElusive2) continue;
            auto n = normalize_elusive(spec, c, h);
            EXPECT_EQ(n.order, HookOrder::kElusive1);
            EXPECT_EQ(n.labeling.shift, mod(h.labeling.shift + h.labeling.a, m));
            ++seen;
          }
        }
      }
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(EqualJumps, EqualJumpsGiveWitnessPath) {
  for (auto spec : {IGraphSpec(7, 2, 2), IGraphSpec(8, 3, 5), IGraphSpec(9, 4, 4)}) {
    auto l = lemma5_cycle(spec);
    EXPECT_TRUE(verify_cycle(build(spec.bicirculant()), l.cycle));
    expect_two_hooked(spec, l.witness);
  }
  EXPECT_THROW(lemma5_cycle(IGraphSpec(8, 2, 2)), Error);
}

TEST(TwoHooked, NormalizesEndpoints) {
  IGraphSpec spec(5, 1, 2);
  VertexSeq p{inner(3), inner(4)};
  auto w = as_two_hooked(spec, p, "t");
  ASSERT_TRUE(w);
  EXPECT_EQ(w->path.front(), inner(0));
  EXPECT_EQ(w->path.back(), inner(1));
  VertexSeq q{inner(4), inner(3)};
  w = as_two_hooked(spec, q, "t");
  ASSERT_TRUE(w);
  EXPECT_EQ(w->path.back(), inner(1));
  EXPECT_FALSE(as_two_hooked(spec, VertexSeq{inner(0), inner(2)}, "t"));
}

TEST(Surgery, ChordSwapGivesPath) {
  IGraphSpec spec(3, 1, 1);
  Graph g = build(spec.bicirculant());
  auto c = parse_sequence("u0 u1 u2 v2 v1 v0");
  auto r = apply_surgery(g, c, true, {{{outer(0), inner(0)}}, {}}, inner(0));
  EXPECT_FALSE(r.closed);
  EXPECT_EQ(r.sequence.front(), inner(0));
  EXPECT_THROW(apply_surgery(g, c, true, {{{outer(0), inner(1)}}, {}}), Error);
  EXPECT_THROW(apply_surgery(g, c, true, {{}, {{outer(0), outer(1)}}}), Error);
}

TEST(Classify, EveryCycleOfSmallIGraphs) {
  std::map<CycleKind, int> kinds;
  for (int m = 3; m <= 9; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        if (a == b || gcd(gcd(m, a), b) != 1) continue;
        IGraphSpec spec(m, a, b);
        Graph g = build(spec.bicirculant());
        for (const auto& c : enumerate_hamilton_cycles(g).cycles) {
          CycleClass cls = classify_cycle(spec, c);
          ++kinds[cls.kind];
          if (cls.kind == CycleKind::kFourHooked) {
            ASSERT_TRUE(cls.chosen);
            for (const auto& h : cls.hooks) {
              const int t = h.labeling.shift, A = h.labeling.a, B = h.labeling.b;
              for (auto [x, y] : {std::pair{outer(t), outer(mod(t + A, m))},
                                  {outer(mod(t + B, m)), outer(mod(t + A + B, m))},
                                  {inner(t), inner(mod(t + B, m))},
                                  {inner(mod(t + A, m)), inner(mod(t + A + B, m))}}) {
                auto it = std::find(c.begin(), c.end(), x);
                auto next = it + 1 == c.end() ? c.begin() : it + 1;
                auto prev = it == c.begin() ? c.end() - 1 : it - 1;
                EXPECT_TRUE(*next == y || *prev == y);
              }
            }
          } else if (cls.kind == CycleKind::kTwoHooked) {
            ASSERT_TRUE(cls.two_hooked);
            expect_two_hooked(spec, *cls.two_hooked);
          } else {
            int spokes = 0;
            for (std::size_t i = 0; i < c.size(); ++i) spokes += c[i].side != c[(i + 1) % c.size()].side;
            EXPECT_EQ(spokes, m);
          }
        }
      }
    }
  }
  EXPECT_GT(kinds[CycleKind::kFourHooked], 0);
  EXPECT_GT(kinds[CycleKind::kAlternating], 0);
}

TEST(Classify, TwoHookedCyclesOfI11) {
  IGraphSpec spec(11, 1, 3);
  int two = 0;
  for (const auto& c : enumerate_hamilton_cycles(build(spec.bicirculant())).cycles) {
    CycleClass cls = classify_cycle(spec, c);
    if (cls.kind != CycleKind::kTwoHooked) continue;
    ASSERT_TRUE(cls.two_hooked);
    expect_two_hooked(spec, *cls.two_hooked);
    ++two;
  }
  EXPECT_GT(two, 0);
}

TEST(Classify, RejectsEqualJumps) { EXPECT_THROW(classify_cycle(IGraphSpec(5, 1, 1), parse_sequence("u0 u1 u2 u3 u4 v4 v3 v2 v1 v0")), Error); }

TEST(Resolve, EveryElusiveLabelingUpToTen) {
  int resolved = 0, by_rule = 0;
  for (int m = 5; m <= 10; ++m) {
    for (int a = 1; 2 * a < m; ++a) {
      for (int b = 1; 2 * b < m; ++b) {
        if (a == b) continue;
        IGraphSpec spec(m, a, b);
        for (const auto& c : enumerate_hamilton_cycles(build(spec.bicirculant())).cycles) {
          for (const auto& h : hook_labelings(spec, c)) {
            if (h.order == HookOrder::kStandard) continue;
            Resolution r = resolve_elusive(spec, c, h);
            expect_resolution(spec, r);
            ++resolved;
            by_rule += !r.fallback;
          }
        }
      }
    }
  }
  EXPECT_GT(resolved, 0);
  EXPECT_GT(by_rule, 0);
}

TEST(Resolve, RejectsStandardLabeling) {
  IGraphSpec spec(7, 1, 3);
  for (const auto& c : enumerate_hamilton_cycles(build(spec.bicirculant())).cycles) {
    for (const auto& h : hook_labelings(spec, c)) {
      if (h.order == HookOrder::kStandard) {
        EXPECT_THROW(resolve_elusive(spec, c, h), Error);
        return;
      }
    }
  }
  FAIL() << "no standard labeling found";
}

TEST(Special, BothCongruencesGiveSubpaths) {
  // b = -2a in I(9;1,7) and a = -2b in I(9;7,1).
  std::set<Congruence> seen;
  for (auto spec : {IGraphSpec(9, 1, 7), IGraphSpec(9, 7, 1), IGraphSpec(10, 3, 4), IGraphSpec(10, 4, 3)}) {
    for (const auto& c : enumerate_hamilton_cycles(build(spec.bicirculant())).cycles) {
      for (const auto& h : hook_labelings(spec, c)) {
        if (h.order == HookOrder::kStandard) continue;
        Resolution r = resolve_elusive(spec, c, h);
        if (r.outcome != Resolution::Outcome::kSpecialCase) continue;
        seen.insert(r.special->congruence);
        expect_special(spec, special_case_paths(spec, r.cycle, *r.special));
      }
    }
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Usable, FormsVerify) {
  for (auto spec : {IGraphSpec(7, 2, 3), IGraphSpec(8, 1, 3), IGraphSpec(9, 1, 7), IGraphSpec(10, 1, 3),
                    IGraphSpec(12, 5, 5), IGraphSpec(13, 1, 5)}) {
    UsableForm f = usable_cycle(spec);
    Graph g = build(spec.bicirculant());
    EXPECT_TRUE(verify_cycle(g, f.cycle)) << spec.to_string();
    EXPECT_FALSE(f.provenance.empty());
    if (f.two_hooked) expect_two_hooked(spec, *f.two_hooked);
    if (f.special) expect_special(spec, *f.special);
  }
  EXPECT_THROW(usable_cycle(IGraphSpec(5, 1, 2)), Error);
}
