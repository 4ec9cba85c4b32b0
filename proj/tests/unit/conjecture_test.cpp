#include <gtest/gtest.h>

#include <random>

#include "bicirc/arith.hpp"
#include "bicirc/conjecture.hpp"
#include "bicirc/error.hpp"
#include "support/oracles.hpp"

using namespace bicirc;

namespace {

std::vector<int> ids(int m, const VertexSeq& s) {
  std::vector<int> out;
  for (Vertex v : s) out.push_back(v.side == Side::kOuter ? v.index : m + v.index);
  return out;
}

int gcd3(int m, int x, int y) { return gcd(gcd(m, mod(x, m)), mod(y, m)); }

// Any (k, i, j) with gcd(m, c_i - c_k, c_j - c_k) = 1, by plain enumeration.
bool haar_triple_exists(int m, const std::vector<int>& s) {
  for (int k : s)
    for (int i : s)
      for (int j : s)
        if (i != k && j != k && i != j && gcd3(m, i - k, j - k) == 1) return true;
  return false;
}

std::optional<int> least_grw_difference(int m, int a, int b, const std::vector<int>& s) {
  std::optional<int> best;
  for (int i : s)
    for (int j : s) {
      int d = mod(i - j, m);
      if (i != j && gcd(gcd3(m, a, b), d) == 1 && (!best || d < *best)) best = d;
    }
  return best;
}

BicirculantSpec pentavalent(int m, int a, int b, std::vector<int> s) {
  return BicirculantSpec::from_representatives(m, {a}, s, {b});
}

}  // namespace

TEST(HaarSubgraph, DirectPair) {
  auto sub = find_cubic_haar_subgraph(HaarSpec(12, {0, 1, 4, 6}));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->ck, 0);
  EXPECT_EQ(gcd3(12, sub->ci, sub->cj), 1);
}

TEST(HaarSubgraph, ThreePrimesNeedsShift) {
  // every pair through 0 shares one of 2, 3, 5 with 30
  const std::vector<int> s{0, 6, 10, 15};
  for (int i : s)
    for (int j : s)
      if (i && j && i != j) ASSERT_GT(gcd3(30, i, j), 1);
  auto sub = find_cubic_haar_subgraph(HaarSpec(30, s));
  ASSERT_TRUE(sub);
  EXPECT_NE(sub->ck, 0);
  HaarSpec cubic = sub->cubic();
  EXPECT_EQ(cubic.spokes.size(), 3u);
  EXPECT_EQ(oracle::component_count(cubic.bicirculant()), 1);
  // shifted back, each spoke type of the subgraph is a spoke type of H(30; S)
  for (int x : cubic.spokes) EXPECT_TRUE(oracle::member(s, 30, x + sub->ck)) << x;
}

TEST(HaarSubgraph, AgreesWithEnumerationAtFourPrimes) {
  std::mt19937 rng(210);
  std::uniform_int_distribution<int> pick(1, 209);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> s{0, pick(rng), pick(rng), pick(rng)};
    HaarSpec h(210, s);
    if (h.spokes.size() < 4 || h.bicirculant().delta() != 1) continue;
    auto sub = find_cubic_haar_subgraph(h);
    EXPECT_EQ(sub.has_value(), haar_triple_exists(210, h.spokes)) << h.to_string();
  }
  // the obstruction is real at four primes
  EXPECT_FALSE(find_cubic_haar_subgraph(HaarSpec(210, {0, 6, 20, 195})));
  EXPECT_FALSE(haar_triple_exists(210, {0, 6, 20, 195}));
}

TEST(HaarSubgraph, Preconditions) {
  EXPECT_THROW(find_cubic_haar_subgraph(HaarSpec(10, {0, 1, 3})), Error);
  EXPECT_THROW(find_cubic_haar_subgraph(HaarSpec(12, {0, 2, 4, 6})), Error);
}

TEST(GrwSubgraph, UnitRimTakesLeastDifference) {
  auto sub = find_grw_subgraph(pentavalent(11, 1, 3, {0, 4, 7}));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->grw.c, 3);
  EXPECT_EQ(sub->cj, 4);
  EXPECT_EQ(sub->ci, 7);
}

TEST(GrwSubgraph, DifferenceOfSpokes) {
  // gcd(30, 10, 6) = 2, so the difference must be odd
  auto sub = find_grw_subgraph(pentavalent(30, 10, 6, {0, 4, 15}));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->grw.c, 11);
  EXPECT_EQ(mod(sub->ci - sub->cj, 30), 11);
}

TEST(GrwSubgraph, AgreesWithEnumeration) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int m = std::uniform_int_distribution<int>(5, 60)(rng);
    std::uniform_int_distribution<int> pick(1, m - 1);
    int a = pick(rng), b = pick(rng);
    if (2 * a == m || 2 * b == m) continue;
    BicirculantSpec spec = pentavalent(m, a, b, {0, pick(rng), pick(rng)});
    if (spec.spoke_types().size() < 3 || spec.delta() != 1) continue;
    auto sub = find_grw_subgraph(spec);
    auto want = least_grw_difference(m, a, b, spec.spoke_types());
    ASSERT_EQ(sub.has_value(), want.has_value()) << spec.to_string();
    if (sub) EXPECT_EQ(sub->grw.c, *want) << spec.to_string();
  }
}

TEST(GrwSubgraph, ConnectedSpecWithoutGrwSubgraph) {
  // 90 = 2 * 3^2 * 5: gcd(90, 30, 60) = 30 and every difference of S shares a prime with 30
  BicirculantSpec spec = pentavalent(90, 30, 60, {0, 6, 10, 15});
  ASSERT_EQ(spec.delta(), 1);
  EXPECT_FALSE(find_grw_subgraph(spec));
  EXPECT_FALSE(least_grw_difference(90, 30, 60, spec.spoke_types()));
  EXPECT_TRUE(find_cubic_haar_subgraph(HaarSpec(90, spec.spoke_types())));
}

TEST(Certify, SmallExceptions) {
  auto k2 = certify_hamiltonian(BicirculantSpec(1, {}, {0}, {}));
  EXPECT_EQ(k2.status, HamStatus::kNonHamiltonian);
  EXPECT_EQ(family_label(k2.spec), "K_2");
  auto p = certify_hamiltonian(IGraphSpec(5, 1, 2).bicirculant());
  EXPECT_EQ(p.status, HamStatus::kNonHamiltonian);
  EXPECT_EQ(family_label(p.spec), "G(5,2)");
  EXPECT_FALSE(p.note.empty());
}

TEST(Certify, PentavalentViaGrwSubgraph) {
  BicirculantSpec spec = pentavalent(10, 2, 4, {0, 1, 3});
  auto rep = certify_hamiltonian(spec);
  ASSERT_EQ(rep.status, HamStatus::kHamiltonian);
  EXPECT_EQ(rep.methods.back(), "subgraph:grw");
  ASSERT_TRUE(rep.grw);
  EXPECT_TRUE(oracle::is_hamilton_cycle(spec, ids(10, rep.cycle)));
}

TEST(Certify, HaarSubgraphLifts) {
  BicirculantSpec spec = HaarSpec(30, {0, 6, 10, 15}).bicirculant();
  auto rep = certify_hamiltonian(spec);
  ASSERT_EQ(rep.status, HamStatus::kHamiltonian);
  EXPECT_EQ(rep.methods.back(), "subgraph:haar-cubic");
  EXPECT_TRUE(oracle::is_hamilton_cycle(spec, ids(30, rep.cycle)));
}

TEST(Certify, DisconnectedThrows) {
  try {
    certify_hamiltonian(BicirculantSpec::from_representatives(6, {2}, {0, 2}, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(Certify, SmallSpecsAgreeWithOracle) {
  for (const auto& spec : scan_specs(ScanRange{.max_m = 6})) {
    auto rep = certify_hamiltonian(spec);
    EXPECT_EQ(rep.status == HamStatus::kHamiltonian, oracle::has_hamilton_cycle(spec)) << spec.to_string();
    if (rep.status == HamStatus::kHamiltonian) {
      EXPECT_TRUE(oracle::is_hamilton_cycle(spec, ids(spec.m(), rep.cycle))) << spec.to_string();
    }
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int m = std::uniform_int_distribution<int>(3, 13)(rng);
    std::uniform_int_distribution<int> pick(1, m - 1);
    BicirculantSpec s = BicirculantSpec::from_representatives(m, {pick(rng)}, {0, pick(rng)}, {pick(rng)});
    int r = pick(rng);
    if (gcd(r, m) != 1) continue;
    auto scale = [&](const ResidueSet& xs, int f) {
      std::vector<int> out;
      for (int x : xs) out.push_back(mod(x * f, m));
      return make_residues(m, out);
    };
    BicirculantSpec scaled(m, scale(s.outer_types(), r), scale(s.spoke_types(), r), scale(s.inner_types(), r));
    BicirculantSpec swapped(m, s.inner_types(), scale(s.spoke_types(), -1), s.outer_types());
    EXPECT_EQ(canonical_form(s), canonical_form(scaled)) << s.to_string();
    EXPECT_EQ(canonical_form(s), canonical_form(swapped)) << s.to_string();
  }
}

TEST(Scan, JobsDoNotChangeOutput) {
  ScanRange range{.max_m = 8};
  auto one = scan(range, kDefaultBudget, 1);
  auto many = scan(range, kDefaultBudget, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(to_json(one[i]).dump(), to_json(many[i]).dump());
}

TEST(Scan, Guard) {
  EXPECT_THROW(scan_specs(ScanRange{.max_m = 13}), Error);
  EXPECT_NO_THROW(scan_specs(ScanRange{.min_m = 13, .max_m = 13, .degree = 3, .force = true}));
}

TEST(Scan, CubicExceptions) {
  auto reps = scan(ScanRange{.max_m = 12, .degree = 3});
  EXPECT_EQ(exceptions(reps), (std::vector<std::string>{"G(5,2)", "G(11,2)"}));
}
