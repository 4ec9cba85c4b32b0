#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/search.hpp"
#include "bicirc/spec.hpp"

namespace bicirc {

// Designated indices t + ca A + cb B with A = +-a, B = +-b.
struct Labeling {
  int shift = 0;
  int a = 0;
  int b = 0;

  int index(int m, int ca, int cb) const;
  Vertex u(int m, int ca, int cb) const { return outer(index(m, ca, cb)); }
  Vertex v(int m, int ca, int cb) const { return inner(index(m, ca, cb)); }
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

enum class HookOrder { kStandard, kElusive1, kElusive2 };

std::string_view to_string(HookOrder order);

// A labeling under which the cycle holds u_0u_a, u_bu_{a+b}, v_0v_b, v_av_{a+b}.
struct HookWitness {
  Labeling labeling;
  int direction = 1;  // +1 when u_a follows u_0 in the stored cycle sequence
  HookOrder order = HookOrder::kStandard;
  // Names ("u0", "ua", "ub", "uab", "v0", ...) of the eight designated vertices
  // in the order met from u_0 towards u_a.
  std::array<std::string_view, 8> pattern{};

  std::string pattern_string() const;
};

// Every labeling (t, +-a, +-b) with all four hook edges on the cycle, in
// (t, sign a, sign b) order. Requires a != +-b.
std::vector<HookWitness> hook_labelings(const IGraphSpec& spec, std::span<const Vertex> cycle);

std::optional<HookWitness> hook_witness(const IGraphSpec& spec, std::span<const Vertex> cycle,
                                        const Labeling& labeling);

enum class HookedEnds { kInnerA, kOuterB };

// A Hamilton path v_0 .. v_a or u_0 .. u_b.
struct TwoHookedWitness {
  HookedEnds ends = HookedEnds::kInnerA;
  VertexSeq path;
  std::string source;
};

// Moves a Hamilton path whose ends are v_p, v_{p+-a} (or u_p, u_{p+-b}) to
// v_0 .. v_a (u_0 .. u_b) with an automorphism i -> +-i + t.
std::optional<TwoHookedWitness> as_two_hooked(const IGraphSpec& spec, std::span<const Vertex> path,
                                              std::string source);

// Looks for such a path obtained from the cycle by deleting two of its edges
// and adding one chord.
std::optional<TwoHookedWitness> derive_two_hooked(const IGraphSpec& spec, const Graph& g,
                                                  std::span<const Vertex> cycle);

std::optional<TwoHookedWitness> search_two_hooked(const IGraphSpec& spec, const Graph& g,
                                                  std::uint64_t budget);

enum class CycleKind { kAlternating, kFourHooked, kTwoHooked };

std::string_view to_string(CycleKind kind);

struct CycleClass {
  CycleKind kind = CycleKind::kAlternating;
  std::vector<HookWitness> hooks;  // all hook labelings (four-hooked cycles)
  std::optional<HookWitness> chosen;
  std::optional<TwoHookedWitness> two_hooked;
};

// Alternating if all m spokes are used; four-hooked if some labeling carries
// the hook edges (a standard one preferred, then type 1, then type 2);
// otherwise a witness path is derived or searched. Throws
// Error(kClassificationFailed) when none applies and Error(kNotApplicable)
// when a = +-b.
CycleClass classify_cycle(const IGraphSpec& spec, std::span<const Vertex> cycle,
                          std::uint64_t budget = kDefaultBudget);

// i -> mult * i + add on both sides.
VertexSeq map_indices(std::span<const Vertex> seq, int m, int mult, int add);

// For a = +-b: v_0, u_0, u_a, ..., u_{(m-1)a}, v_{(m-1)a}, ..., v_a. Dropping
// v_0 v_a leaves a witness path.
struct Lemma5Cycle {
  VertexSeq cycle;
  TwoHookedWitness witness;
};
Lemma5Cycle lemma5_cycle(const IGraphSpec& spec);

struct Surgery {
  std::vector<VertexPair> remove;
  std::vector<VertexPair> add;
};

struct SurgeryResult {
  bool closed = false;
  VertexSeq sequence;
};

// Deletes and adds edges on a Hamilton cycle (closed) or path and reads the
// result as a Hamilton cycle or path. Throws Error(kSurgeryBroken).
SurgeryResult apply_surgery(const Graph& g, std::span<const Vertex> base, bool base_closed,
                            const Surgery& surgery, std::optional<Vertex> from = std::nullopt);

// Type-2 elusive labeling (t, A, B) read as type 1 via (t + A, -A, B).
HookWitness normalize_elusive(const IGraphSpec& spec, std::span<const Vertex> cycle,
                              const HookWitness& elusive);

enum class Congruence { kBIsMinus2A, kAIsMinus2B };

struct SpecialCase {
  Congruence congruence;
  Labeling labeling;
};

struct Resolution {
  enum class Outcome { kStandard4Hooked, kTwoHooked, kSpecialCase };
  Outcome outcome = Outcome::kTwoHooked;
  std::string rule;       // rule id, or the fallback used
  bool fallback = false;
  VertexSeq cycle;        // the cycle carrying `hook` or `special`
  std::optional<HookWitness> hook;
  std::optional<TwoHookedWitness> two_hooked;
  std::optional<SpecialCase> special;
  std::vector<std::string> fired;   // rules whose preconditions held, in order
  std::vector<std::string> broken;  // fired rules whose result did not verify
};

std::string_view to_string(Resolution::Outcome outcome);

// Runs the table of case rules on an elusive cycle, then falls back to path
// search. Throws Error(kPreconditionUnmet) for a non-elusive witness and
// Error(kResolutionFailed) when nothing works.
Resolution resolve_elusive(const IGraphSpec& spec, std::span<const Vertex> cycle,
                           const HookWitness& elusive, std::uint64_t budget = kDefaultBudget);

// Paths u_0..u_p, v_0..v_p and the pair u_0..v_p, u_p..v_0 (p = 3a or 3b after
// moving the special labeling to t = 0, A = a).
struct SpecialPaths {
  int p = 0;
  VertexSeq outer_path;
  VertexSeq inner_path;
  VertexSeq cross_first;   // u_0 .. v_p
  VertexSeq cross_second;  // u_p .. v_0
};

// Throws Error(kPreconditionUnmet) if a surgery does not apply.
SpecialPaths special_case_paths(const IGraphSpec& spec, std::span<const Vertex> cycle,
                                const SpecialCase& special);

struct UsableForm {
  enum class Kind { kAlternating, kStandard4Hooked, kTwoHooked, kSpecialSubpaths };
  Kind kind = Kind::kAlternating;
  VertexSeq cycle;                 // a Hamilton cycle of the I-graph
  std::vector<HookWitness> hooks;  // kStandard4Hooked
  std::optional<TwoHookedWitness> two_hooked;
  std::optional<SpecialPaths> special;
  std::optional<Resolution> resolution;
  std::string provenance;
};

std::string_view to_string(UsableForm::Kind kind);

// a = +-b gives the Lemma5Cycle; otherwise an oracle cycle is classified and,
// if elusive, resolved. Throws Error(kNotApplicable) for a non-hamiltonian
// I-graph and Error(kBudgetExhausted) when the search gives up.
UsableForm usable_cycle(const IGraphSpec& spec, std::uint64_t budget = kDefaultBudget);

}  // namespace bicirc
