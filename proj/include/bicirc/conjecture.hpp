#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicirc/grw.hpp"
#include "bicirc/spec.hpp"

namespace bicirc {

// H(m; {0, c_i - c_k, c_j - c_k}) inside H(m; S), read after shifting S by c_k.
struct HaarSubgraph {
  int m = 0;
  int ck = 0;
  int ci = 0;
  int cj = 0;
  HaarSpec cubic() const { return HaarSpec(m, {0, ci - ck, cj - ck}); }
};

// First triple (k, i, j) of sorted S, i < j, whose differences generate Z_m
// together with m. Throws Error(kPreconditionUnmet) unless |S| >= 4 and
// gcd(m, S) = 1.
std::optional<HaarSubgraph> find_cubic_haar_subgraph(const HaarSpec& spec);

// R(m; a, b, c_i - c_j) inside B(m; {+-a}, S, {+-b}) after shifting S by c_j.
struct GrwSubgraph {
  int cj = 0;
  int ci = 0;
  GrwSpec grw;
};

// Smallest difference c' = c_i - c_j (ties by c_j) with gcd(m, a, b, c') = 1.
// Throws Error(kPreconditionUnmet) unless R = {+-a}, T = {+-b}, |S| >= 3 and
// the spec is connected.
std::optional<GrwSubgraph> find_grw_subgraph(const BicirculantSpec& spec);

enum class HamStatus { kHamiltonian, kNonHamiltonian, kUnknown };

std::string_view to_string(HamStatus status);

struct HamiltonicityReport {
  BicirculantSpec spec;
  HamStatus status = HamStatus::kUnknown;
  std::vector<std::string> methods;  // attempted, in order; the last one decided
  std::optional<Certificate> grw;    // when a GRW (sub)graph carried the cycle
  VertexSeq cycle;                   // verified against build(spec)
  std::string note;                  // proof bound or budget remark
};

// Family match, then a GRW subgraph, then a cubic Haar subgraph, then direct
// search. Throws Error(kDisconnected) for a disconnected spec.
HamiltonicityReport certify_hamiltonian(const BicirculantSpec& spec, std::uint64_t budget = kDefaultBudget,
                                        ComponentCache* cache = nullptr);

// "K_2", "G(n,k)" for the connected generalized Petersen graphs, else the spec text.
std::string family_label(const BicirculantSpec& spec);

// Least spec among the images under unit multipliers, a side swap and shifts of S.
BicirculantSpec canonical_form(const BicirculantSpec& spec);

struct ScanRange {
  int min_m = 1;
  int max_m = 12;
  std::optional<int> degree;  // exact valence; default all valences up to 4
  std::optional<int> s;       // exact |S|
  bool force = false;         // lift the 2m <= 24 guard
};

// Connected regular bicirculants in range, one per canonical form, in order.
// Throws Error(kTooLarge) past the guard without force.
std::vector<BicirculantSpec> scan_specs(const ScanRange& range);

std::vector<HamiltonicityReport> scan(const ScanRange& range, std::uint64_t budget = kDefaultBudget, int jobs = 1);

// Specs whose status is not Hamiltonian, labelled with family_label.
std::vector<std::string> exceptions(const std::vector<HamiltonicityReport>& reports);

nlohmann::json to_json(const HamiltonicityReport& report);

}  // namespace bicirc
