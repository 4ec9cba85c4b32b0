#include "bicirc/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "bicirc/iso.hpp"

namespace bicirc {

namespace {

using nlohmann::json;

// Sub-bicirculant cycles live in coordinates where S was shifted by c: v_i -> v_{i+c}.
VertexSeq unshift(const VertexSeq& seq, int m, int c) {
  VertexSeq out;
  for (Vertex v : seq) out.push_back(v.side == Side::kInner ? inner(mod(v.index + c, m)) : v);
  return out;
}

int gcd_all(int m, std::initializer_list<int> xs) {
  int g = m;
  for (int x : xs) g = gcd(g, mod(x, m));
  return g;
}

}  // namespace

std::optional<HaarSubgraph> find_cubic_haar_subgraph(const HaarSpec& spec) {
  const int m = spec.m;
  const auto& s = spec.spokes;
  if (s.size() < 4) throw Error(ErrorCode::kPreconditionUnmet, "needs |S| >= 4");
  if (spec.bicirculant().delta() != 1) throw Error(ErrorCode::kPreconditionUnmet, spec.to_string() + " is disconnected");
  for (int ck : s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == ck) continue;
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[j] == ck) continue;
        if (gcd_all(m, {s[i] - ck, s[j] - ck}) == 1) return HaarSubgraph{m, ck, s[i], s[j]};
      }
    }
  }
  return std::nullopt;
}

std::optional<GrwSubgraph> find_grw_subgraph(const BicirculantSpec& spec) {
  const int m = spec.m();
  const auto& r = spec.outer_types();
  const auto& t = spec.inner_types();
  const auto& s = spec.spoke_types();
  if (r.size() != 2 || t.size() != 2 || s.size() < 3 || m < 3) {
    throw Error(ErrorCode::kPreconditionUnmet, "needs R = {+-a}, T = {+-b} and |S| >= 3");
  }
  if (spec.delta() != 1) throw Error(ErrorCode::kPreconditionUnmet, spec.to_string() + " is disconnected");
  const int a = r[0], b = t[0];
  std::vector<std::tuple<int, int, int>> candidates;  // (c', c_j, c_i)
  for (int cj : s) {
    for (int ci : s) {
      if (ci != cj) candidates.emplace_back(mod(ci - cj, m), cj, ci);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (auto [d, cj, ci] : candidates) {
    if (gcd_all(m, {a, b, d}) == 1) return GrwSubgraph{cj, ci, GrwSpec(m, a, b, d)};
  }
  return std::nullopt;
}

std::string_view to_string(HamStatus status) {
  switch (status) {
    case HamStatus::kHamiltonian: return "Hamiltonian";
    case HamStatus::kNonHamiltonian: return "NonHamiltonian";
    case HamStatus::kUnknown: return "Unknown";
  }
  return "?";
}

HamiltonicityReport certify_hamiltonian(const BicirculantSpec& spec, std::uint64_t budget, ComponentCache* cache) {
  if (spec.delta() != 1) throw Error(ErrorCode::kDisconnected, spec.to_string() + " is disconnected");
  HamiltonicityReport rep{spec};
  const Graph g = build(spec);
  const int m = spec.m();
  bool budget_hit = false;

  auto accept = [&](const VertexSeq& cycle) {
    if (!verify_cycle(g, cycle)) return false;
    rep.status = HamStatus::kHamiltonian;
    rep.cycle = canonical_cycle(cycle);
    return true;
  };
  auto via_grw = [&](const GrwSpec& grw, int shift) {
    try {
      Certificate cert = hamilton_cycle_grw(grw, budget, cache);
      if (accept(unshift(cert.cycle, m, shift))) {
        rep.grw = std::move(cert);
        return true;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExhausted) throw;
      budget_hit = true;
    }
    return false;
  };
  // Returns true once the question is settled either way.
  auto via_search = [&](const Graph& h, int shift, bool whole) {
    SearchResult r = find_hamilton_cycle(h, budget);
    if (r.found()) return accept(unshift(r.sequence, m, shift));
    if (r.status == SearchStatus::kNotFoundWithinBudget) {
      budget_hit = true;
    } else if (whole) {
      rep.status = HamStatus::kNonHamiltonian;
      rep.note = "exhaustive search, " + std::to_string(r.expansions) + " expansions";
      return true;
    }
    return false;
  };

  FamilyInfo info = classify_family(spec);
  const auto& s = spec.spoke_types();
  if (info.grw) {
    rep.methods.push_back("family:grw");
    if (via_grw(*info.grw, 0)) return rep;
  } else if (info.i_graph) {
    rep.methods.push_back(info.tag == FamilyTag::kPetersenException ? "family:petersen-exception" : "family:i-graph");
    if (via_search(g, 0, true)) return rep;
  } else if (info.tag == FamilyTag::kHaar && s.size() == 3) {
    rep.methods.push_back("family:haar-cubic");
    if (via_search(g, 0, true)) return rep;
  }

  if (spec.outer_types().size() == 2 && spec.inner_types().size() == 2 && s.size() >= 3) {
    if (auto sub = find_grw_subgraph(spec)) {
      rep.methods.push_back("subgraph:grw");
      if (via_grw(sub->grw, sub->cj)) return rep;
    }
  }
  if (info.tag == FamilyTag::kHaar && s.size() >= 4) {
    if (auto sub = find_cubic_haar_subgraph(HaarSpec(m, s))) {
      rep.methods.push_back("subgraph:haar-cubic");
      if (via_search(build(sub->cubic().bicirculant()), sub->ck, false)) return rep;
    }
  }
  rep.methods.push_back("search");
  if (via_search(g, 0, true)) return rep;
  rep.status = HamStatus::kUnknown;
  rep.note = budget_hit ? "search budget exhausted" : "no method applied";
  return rep;
}

std::string family_label(const BicirculantSpec& spec) {
  if (spec.m() == 1 && spec.outer_types().empty() && spec.inner_types().empty()) return "K_2";
  FamilyInfo info = classify_family(spec);
  if (info.petersen_k && spec.delta() == 1) {
    return "G(" + std::to_string(spec.m()) + "," + std::to_string(*info.petersen_k) + ")";
  }
  return spec.to_string();
}

BicirculantSpec canonical_form(const BicirculantSpec& spec) {
  const int m = spec.m();
  auto scaled = [m](const ResidueSet& xs, int r) {
    std::vector<int> out;
    for (int x : xs) out.push_back(mod(1LL * x * r, m));
    return make_residues(m, out);
  };
  BicirculantSpec best = spec;
  for (int r = 1; r <= std::max(1, m - 1); ++r) {
    if (gcd(r, m) != 1 && m > 1) continue;
    for (bool swap : {false, true}) {
      ResidueSet outs = scaled(swap ? spec.inner_types() : spec.outer_types(), r);
      ResidueSet ins = scaled(swap ? spec.outer_types() : spec.inner_types(), r);
      ResidueSet sp = scaled(spec.spoke_types(), swap ? -r : r);
      for (int c : sp) {
        std::vector<int> shifted;
        for (int x : sp) shifted.push_back(x - c);
        BicirculantSpec cand(m, outs, make_residues(m, shifted), ins);
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

std::vector<BicirculantSpec> scan_specs(const ScanRange& range) {
  if (!range.force && 2 * range.max_m > 24) {
    throw Error(ErrorCode::kTooLarge, "2m must stay within 24 without --force");
  }
  std::set<BicirculantSpec> out;
  const int max_d = range.degree.value_or(4);
  const int min_d = range.degree.value_or(1);
  for (int m = std::max(1, range.min_m); m <= range.max_m; ++m) {
    // symmetric subsets of Z_m \ {0}, built from the orbits {j, -j}
    std::vector<std::vector<int>> orbits;
    for (int j = 1; 2 * j <= m; ++j) orbits.push_back(2 * j == m ? std::vector<int>{j} : std::vector<int>{j, m - j});
    std::vector<ResidueSet> sym;
    for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
      std::vector<int> xs;
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (mask >> k & 1) xs.insert(xs.end(), orbits[k].begin(), orbits[k].end());
      }
      if (static_cast<int>(xs.size()) < max_d) sym.push_back(make_residues(m, xs));
    }
    for (const auto& r : sym) {
      const int rim = static_cast<int>(r.size());
      // S = {0} plus a subset of 1..m-1 of size s - 1
      const int s_lo = std::max(1, min_d - rim);
      const int s_hi = std::min(m, max_d - rim);
      for (int size = s_lo; size <= s_hi; ++size) {
        if (range.s && *range.s != size) continue;
        std::vector<int> pick(size - 1);
        std::vector<int> pool;
        for (int x = 1; x < m; ++x) pool.push_back(x);
        std::vector<bool> sel(pool.size(), false);
        std::fill(sel.begin(), sel.begin() + (size - 1), true);
        do {
          std::vector<int> sp{0};
          for (std::size_t k = 0; k < pool.size(); ++k) {
            if (sel[k]) sp.push_back(pool[k]);
          }
          for (const auto& t : sym) {
            if (t.size() != r.size()) continue;
            BicirculantSpec spec(m, r, make_residues(m, sp), t);
            if (spec.delta() != 1) continue;
            out.insert(canonical_form(spec));
          }
        } while (std::prev_permutation(sel.begin(), sel.end()));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<HamiltonicityReport> scan(const ScanRange& range, std::uint64_t budget, int jobs) {
  const auto specs = scan_specs(range);
  std::vector<std::optional<HamiltonicityReport>> slots(specs.size());
  ComponentCache cache;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) slots[i] = certify_hamiltonian(specs[i], budget, &cache);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  std::vector<std::jthread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::vector<HamiltonicityReport> out;
  for (auto& r : slots) out.push_back(std::move(*r));
  return out;
}

std::vector<std::string> exceptions(const std::vector<HamiltonicityReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) {
    if (r.status != HamStatus::kHamiltonian) out.push_back(family_label(r.spec));
  }
  return out;
}

json to_json(const HamiltonicityReport& report) {
  json j = {{"spec", report.spec.to_string()},
            {"family", family_label(report.spec)},
            {"status", std::string(to_string(report.status))},
            {"methods", report.methods}};
  if (report.grw) {
    j["route"] = std::string(to_string(report.grw->route));
    j["grw"] = report.grw->spec.to_string();
  }
  json cycle = json::array();
  for (Vertex v : report.cycle) cycle.push_back(to_string(v));
  j["cycle_length"] = report.cycle.size();
  j["cycle"] = cycle;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

}  // namespace bicirc
