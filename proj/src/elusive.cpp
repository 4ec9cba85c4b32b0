// Case rules that turn an elusive type-1 Hamilton cycle of an I-graph into a
// standard 4-hooked cycle, a witness path, or the special configuration.
//
// Vertices are written symbolically relative to the elusive labeling: "u-a+b"
// is u_{t - A + B}. Conditions:
//   path X Y ..        consecutive on the cycle (either direction)
//   order X Y Z W      cyclic order on the cycle (either orientation)
//   seg S B1 B2 ..     every vertex lies on segment S and the blocks appear in
//                      this order along it; {X Y} is a block in either order
//   edge X Y / noedge X Y
//   distinct X Y ..    the symbolic vertices name different vertices
//   cong               b = -2a or a = -2b under the labeling
//   !cond              negation
// Segments are the four paths left after removing the hook edges, oriented
// u_0 -> u_a -> ... : UaUb, UabVab, VaVb, V0U0.

#include <algorithm>
#include <sstream>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"
#include "bicirc/igraph.hpp"
#include "cycle_view.hpp"

namespace bicirc {

namespace {

using detail::CycleView;

struct SymVertex {
  Side side;
  int ca;
  int cb;
};

enum class CondKind { kPath, kOrder, kSegment, kEdge, kNoEdge, kDistinct, kCongruence };
enum class Segment { kUaUb, kUabVab, kVaVb, kV0U0 };

struct Condition {
  CondKind kind;
  bool negated = false;
  Segment segment = Segment::kUaUb;
  std::vector<std::vector<SymVertex>> blocks;  // single vertices are one-element blocks
};

enum class ResultKind { kPath, kRelabel, kCycleRelabel, kSpecial };

struct Rule {
  std::string id;
  std::vector<Condition> when;
  std::vector<std::pair<SymVertex, SymVertex>> remove;
  std::vector<std::pair<SymVertex, SymVertex>> add;
  ResultKind result = ResultKind::kPath;
  SymVertex from{}, to{};     // path ends
  int shift_a = 0, shift_b = 0;  // relabel: add shift_a a + shift_b b to subscripts
};

struct RuleText {
  const char* id;
  const char* when;
  const char* remove;
  const char* add;
  const char* result;
};

// Context shared by the rules of each case.
#define CASE_I "path v-a+b v-a v-a-b"
#define CASE_II "path u0 u-a v-a"
#define CASE_III "path vb v0 u0 ua u2a v2a; path ub ua+b va+b va va-b ua-b"
#define ASSUMPTION2 CASE_III "; !cong; edge ua+b va+b; edge u2a+b v2a+b; order ua+b va+b v2a+b u2a+b;" \
  " path u2a v2a v2a-b; path va-b ua-b u2a-b; order v0 u0 u-b v-b"
#define CASE_C ASSUMPTION2 "; seg VaVb {u-b v-b}; seg UaUb {u2a+b v2a+b}"
#define CASE_CC CASE_C "; order ua+b va+b va+2b ua+2b; order u0 v0 v-a u-a"
#define CASE_1 CASE_CC "; path va+2b ua+2b u2a+2b; seg UaUb {va+2b ua+2b u2a+2b} {u2a+b v2a+b} {u-a v-a}"
#define CASE_2 CASE_CC "; path va+2b ua+2b u2a+2b; seg UaUb {va+2b ua+2b u2a+2b} {u2a+b v2a+b};" \
  " path v-a-b v-a u-a; seg VaVb {v-a-b v-a u-a} {u-b v-b}"
#define CASE_3 CASE_CC "; path v2b u2b ua+2b va+2b; seg UaUb {u2a+b v2a+b} {u-a v-a}"
#define CASE_4 CASE_CC "; path v2b u2b ua+2b va+2b; path v-a-b v-a u-a; seg VaVb {v-a-b v-a u-a} {u-b v-b}"

// A4 surgery shared by several sub-cases.
#define A4_SWAP_REMOVE "v0 vb, v2a v2a-b, u-b v-b, ub ua+b, ua-b va-b, u2a+b v2a+b"
#define A4_SWAP_ADD "ub vb, v0 v-b, v2a v2a+b, u-b ua-b, ua+b u2a+b"
#define A4_UB_REMOVE "u0 v0, v2a v2a-b, u-b v-b, u2a+b v2a+b, ub ua+b, ua-b u2a-b"
#define A4_UB_ADD "v0 v-b, v2a v2a+b, u2a-b v2a-b, u-b ua-b, ua+b u2a+b"
#define A4_C1_REMOVE "u0 v0, u-a v-a, u-b v-b, u2a+b v2a+b, v0 vb, v2a v2a-b, ub ua+b, ua-b u2a-b"
#define A4_C1_ADD "v0 v-b, u0 u-a, v2a v2a+b, u2a-b v2a-b, ua+b u2a+b, ub vb, u-b ua-b"
#define A4_1B_REMOVE "vb v2b, v-a+b v-a+2b, ub u-a+b"
#define A4_1B_ADD "ub vb, u-a+b v-a+b"
#define A4_1C_REMOVE "v0 vb, v2a v2a-b, u2a+b v2a+b, v-a v-a-b, ub ua+b, ua-b u2a-b, u-b u-a-b"
#define A4_1C_ADD "ub vb, v2a v2a+b, u2a-b v2a-b, ua+b u2a+b, u-a-b v-a-b, u-b ua-b"

constexpr RuleText kRules[] = {
    // Side condition for case I: (v_{-a+b}, v_{-a}, v_{-a-b}) on the cycle.
    {"I.a1", CASE_I "; seg UaUb v-a+b v-a v-a-b", "v-a v-a-b, u0 u-a, v0 v-b", "u-a v-a, u0 v0", "path v-b v-a-b"},
    {"I.a2", CASE_I "; seg UaUb v-a-b v-a v-a+b", "", "", "relabel a"},
    {"I.b1", CASE_I "; seg UabVab v-a+b v-a v-a-b", "ub u-a+b, v0 vb, v-a v-a+b", "ub vb, u-a+b v-a+b", "path v0 v-a"},
    {"I.b2", CASE_I "; seg UabVab v-a-b v-a v-a+b", "ub u-a+b, u0 u-a, v-a v-a+b", "u-a v-a, u-a+b v-a+b", "path u0 ub"},
    {"I.c1", CASE_I "; seg VaVb v-a+b v-a v-a-b", "ub u-a+b, v0 vb, v-a v-a+b", "ub vb, u-a+b v-a+b", "path v0 v-a"},
    {"I.c2", CASE_I "; seg VaVb v-a-b v-a v-a+b", "u0 u-a, v0 v-b, v-a v-a-b", "u-a v-a, u0 v0", "path v-b v-a-b"},
    {"I.d1", CASE_I "; seg V0U0 v-a-b v-a v-a+b", "u0 u-a, ub u-a+b, v-a v-a+b", "u-a v-a, u-a+b v-a+b", "path u0 ub"},
    {"I.d2.i", CASE_I "; seg V0U0 v-a+b v-a v-a-b; edge u-b v-b; path ua-b u-b v-b; order u-b v-b u-a-b v-a-b",
     "u-a-b v-a-b, u-b v-b", "u-b u-a-b", "path v-b v-a-b"},
    {"I.d2.ii", CASE_I "; seg V0U0 v-a+b v-a v-a-b; edge u-b v-b; path u-a-b u-b v-b; order u-b v-b ua-b va-b",
     "u-b v-b, ua-b va-b", "u-b ua-b", "path v-b va-b"},
    {"I.d2.iii", CASE_I "; seg V0U0 v-a+b v-a v-a-b; noedge u-b v-b; path u-a-b u-b ua-b; !seg V0U0 u-a-b u-b ua-b",
     "", "", "relabel b"},
    // Side condition for case II: (u_0, u_{-a}, v_{-a}) on the cycle.
    {"II.a1", CASE_II "; edge u-b v-b; noedge u-b ua-b; order u-b v-b ua-b va-b", "ua-b va-b, u-b v-b", "u-b ua-b",
     "path v-b va-b"},
    {"II.a2", CASE_II "; edge u-b v-b; edge u-b ua-b; noedge v-a v-a+b; order v-a u-a v-a+b u-a+b",
     "u-a+b v-a+b, u-a v-a", "v-a v-a+b", "path u-a u-a+b"},
    {"II.a3", CASE_II "; edge u-b v-b; edge u-b ua-b; edge v-a v-a+b; order v-a u-a v-a-b u-a-b",
     "u-a-b v-a-b, u-a v-a", "v-a v-a-b", "path u-a u-a-b"},
    {"II.a4", CASE_II "; edge u-b v-b; edge u-b ua-b; edge v-a v-a+b; order v-a u-a u-a-b v-a-b; !seg V0U0 {u-a-b v-a-b}",
     "ub u-a+b, va va-b, u-a-b v-a-b, v0 vb, u-b ua-b, u-a v-a, u0 ua",
     "u0 v0, ua va, ub vb, ua-b va-b, u-b u-a-b, v-a v-a-b", "path u-a u-a+b"},
    {"II.a5", CASE_II "; edge u-b v-b; edge u-b ua-b; edge v-a v-a+b; order v-a u-a u-a-b v-a-b; seg V0U0 {u-a-b v-a-b}",
     "ub u-a+b, va va-b, u-a-b v-a-b, v0 vb, u-b ua-b, u0 ua, v-a v-a+b",
     "u0 v0, ua va, ub vb, ua-b va-b, u-b u-a-b, v-a v-a-b, u-a+b v-a+b", "cycle-relabel a+b"},
    {"II.b1", CASE_II "; noedge u-b v-b; path u-a-b u-b ua-b; !seg V0U0 u-a-b u-b ua-b", "", "", "relabel b"},
    {"II.b2", CASE_II "; noedge u-b v-b; seg V0U0 u-a-b u-b ua-b; path u-a v-a v-a+b; order v-a u-a v-a-b u-a-b",
     "u-a v-a, u-a-b v-a-b", "v-a v-a-b", "path u-a u-a-b"},
    {"II.b3", CASE_II "; noedge u-b v-b; seg V0U0 u-a-b u-b ua-b; path u-a v-a v-a-b", "", "", "relabel a+b"},
    // Side condition for case III.
    {"III.special", CASE_III "; cong", "", "", "special"},
    {"III.1", CASE_III "; !cong; order ua+b va+b u2a+b v2a+b", "ua+b va+b, u2a+b v2a+b", "ua+b u2a+b",
     "path va+b v2a+b"},
    {"III.a1", CASE_III "; !cong; order ua+b va+b v2a+b u2a+b; path u2a v2a v2a+b u2a+b; order u2a v2a u2a-b v2a-b",
     "u2a v2a, u2a-b v2a-b", "v2a v2a-b", "path u2a u2a-b"},
    {"III.a2",
     CASE_III "; !cong; order ua+b va+b v2a+b u2a+b; path u2a v2a v2a+b u2a+b; order u2a v2a v2a-b u2a-b;"
              " order ua-b va-b u2a-b v2a-b",
     "ua-b va-b, u2a-b v2a-b", "ua-b u2a-b", "path va-b v2a-b"},
    {"III.b1",
     CASE_III "; !cong; order ua+b va+b v2a+b u2a+b; path u2a v2a v2a-b; path va-b ua-b u-b v-b;"
              " order ua-b va-b u2a-b v2a-b",
     "ua-b va-b, u2a-b v2a-b", "ua-b u2a-b", "path va-b v2a-b"},
    {"III.b2",
     CASE_III "; !cong; order ua+b va+b v2a+b u2a+b; path u2a v2a v2a-b; path va-b ua-b u2a-b; order v0 u0 v-b u-b",
     "u0 v0, u-b v-b", "v0 v-b", "path u0 u-b"},
    // Remaining configuration of case III.
    {"IV.a1", ASSUMPTION2 "; seg UaUb {v2a+b u2a+b} {u-b v-b}",
     "v0 vb, v2a v2a-b, u2a+b v2a+b, u-b v-b, ub ua+b, va-b ua-b", "v2a v2a+b, ua+b u2a+b, u-b ua-b, v0 v-b, ub vb",
     "path va-b v2a-b"},
    {"IV.a2", ASSUMPTION2 "; seg UaUb {u-b v-b} {v2a+b u2a+b}", A4_UB_REMOVE, A4_UB_ADD, "path u0 ub"},
    {"IV.a3", ASSUMPTION2 "; seg UaUb {u-b v-b}; seg VaVb {v2a+b u2a+b}", A4_SWAP_REMOVE, A4_SWAP_ADD,
     "path va-b v2a-b"},
    {"IV.b1", ASSUMPTION2 "; seg VaVb {v2a+b u2a+b} {u-b v-b}", A4_SWAP_REMOVE, A4_SWAP_ADD, "path va-b v2a-b"},
    {"IV.b2", ASSUMPTION2 "; seg VaVb {u-b v-b} {v2a+b u2a+b}",
     "u0 v0, v2a v2a-b, ub ua+b, ua-b u2a-b, u-b v-b, u2a+b v2a+b", "v0 v-b, ua+b u2a+b, v2a v2a+b, u2a-b v2a-b, u-b ua-b",
     "path u0 ub"},
    {"IV.c0a", CASE_C "; order ua+b va+b ua+2b va+2b", "ua+b va+b, ua+2b va+2b", "va+b va+2b", "path ua+b ua+2b"},
    {"IV.c0b", CASE_C "; order u0 v0 u-a v-a", "u0 v0, u-a v-a", "u0 u-a", "path v0 v-a"},
    {"IV.c1", CASE_CC "; seg UaUb {u-a v-a} {u2a+b v2a+b}; distinct u-a u2a", A4_C1_REMOVE, A4_C1_ADD, "path v0 v-a"},
    {"IV.c2", CASE_CC "; seg VaVb {u-b v-b} {u-a v-a}; distinct u-a u2a", A4_C1_REMOVE, A4_C1_ADD, "path v0 v-a"},
    {"IV.c3", CASE_CC "; path v-a+b v-a u-a; seg VaVb {v-a+b v-a u-a} {u-b v-b}", "v0 vb, ub u-a+b, v-a v-a+b",
     "ub vb, u-a+b v-a+b", "path v0 v-a"},
    {"IV.c4", CASE_CC "; path va+2b ua+2b u2b; seg UaUb {va+2b ua+2b u2b}", "vb v2b, u2b ua+2b, ub ua+b",
     "ub vb, u2b v2b", "path ua+b ua+2b"},
    {"IV.c5", CASE_CC "; path va+2b ua+2b u2a+2b; seg UaUb {u2a+b v2a+b} {va+2b ua+2b u2a+2b}",
     "v0 vb, v2a v2a-b, u2a+b v2a+b, ua+2b va+2b, ub ua+b, ua+b va+b, ua-b u2a-b, u-b v-b",
     "ub vb, v0 v-b, v2a v2a+b, u2a-b v2a-b, ua+b u2a+b, va+b va+2b, u-b ua-b", "path ua+b ua+2b"},
    {"IV.c6", CASE_CC "; seg VaVb {ua+2b va+2b} {u-b v-b}; distinct va-b va+2b",
     "u2a+b v2a+b, ua+b va+b, ua+2b va+2b, u-b v-b, v0 vb, v2a v2a-b, ub ua+b, ua-b u2a-b",
     "v0 v-b, v2a v2a+b, u2a-b v2a-b, ua+b u2a+b, ub vb, va+b va+2b, u-b ua-b", "path ua+b ua+2b"},
    {"IV.c7", CASE_CC "; path u2a+2b ua+2b va+2b; seg VaVb {u-b v-b} {u2a+2b ua+2b va+2b}",
     "v0 vb, v2a v2a-b, v2a+b v2a+2b, ub ua+b, ua-b u2a-b, u-b v-b, ua+2b u2a+2b",
     "v0 v-b, v2a v2a+b, u2a-b v2a-b, u2a+2b v2a+2b, u-b ua-b, ub vb", "path ua+b ua+2b"},
    {"IV.c8", CASE_CC "; path u-a+2b u2b ua+2b va+2b; seg VaVb {u-b v-b} {u-a+2b u2b ua+2b va+2b}",
     "vb v2b, ub u-a+b, u2b u-a+2b", "ub vb, u2b v2b", "path u-a+b u-a+2b"},
    {"IV.1a", CASE_1 "; path u-a v-a v-a+b u-a+b; order u-a+2b v-a+2b u-a+b v-a+b", "u-a+2b v-a+2b, u-a+b v-a+b",
     "v-a+b v-a+2b", "path u-a+2b u-a+b"},
    {"IV.1b", CASE_1 "; path u-a v-a v-a+b v-a+2b", A4_1B_REMOVE, A4_1B_ADD, "path v2b v-a+2b"},
    {"IV.1c", CASE_1 "; path u-a v-a v-a-b", A4_1C_REMOVE, A4_1C_ADD, "path v0 v-a"},
    {"IV.2", CASE_2, "ua+2b va+2b, u-a+b v-a+b, u-a v-a, u0 ua, va va+b, u2b u-a+2b",
     "u0 u-a, ua va, va+b va+2b, u2b ua+2b, v-a v-a+b", "path u-a+b u-a+2b"},
    {"IV.3b", CASE_3 "; path u-a v-a v-a+b v-a+2b", A4_1B_REMOVE, A4_1B_ADD, "path v2b v-a+2b"},
    {"IV.3c", CASE_3 "; path u-a v-a v-a-b", A4_1C_REMOVE, A4_1C_ADD, "path v0 v-a"},
    {"IV.3d", CASE_3 "; path u-a v-a v-a+b u-a+b; order v2b u2b v-a+2b u-a+2b", "u2b v2b, u-a+2b v-a+2b",
     "u2b u-a+2b", "path v2b v-a+2b"},
    {"IV.3e", CASE_3 "; path u-a v-a v-a+b u-a+b; order v2b u2b u-a+2b v-a+2b; order v-a+2b u-a+2b v-a+b u-a+b",
     "u-a+b v-a+b, u-a+2b v-a+2b", "v-a+b v-a+2b", "path u-a+2b u-a+b"},
    {"IV.4", CASE_4 "; order u2b v2b u-a+2b v-a+2b", "u2b v2b, u-a+2b v-a+2b", "u2b u-a+2b", "path v2b v-a+2b"},
};

#undef CASE_I
#undef CASE_II
#undef CASE_III
#undef ASSUMPTION2
#undef CASE_C
#undef CASE_CC
#undef CASE_1
#undef CASE_2
#undef CASE_3
#undef CASE_4

std::pair<int, int> parse_combination(std::string_view s) {
  int ca = 0, cb = 0;
  std::size_t i = 0;
  if (s == "0") return {0, 0};
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    int coeff = 0;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = coeff * 10 + (s[i] - '0');
      digits = true;
      ++i;
    }
    if (!digits) coeff = 1;
    if (i >= s.size() || (s[i] != 'a' && s[i] != 'b')) {
      throw std::logic_error("bad symbolic index '" + std::string(s) + "'");
    }
    (s[i] == 'a' ? ca : cb) += sign * coeff;
    ++i;
  }
  return {ca, cb};
}

SymVertex parse_sym(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'u' && token[0] != 'v')) {
    throw std::logic_error("bad symbolic vertex '" + std::string(token) + "'");
  }
  auto [ca, cb] = parse_combination(token.substr(1));
  return {token[0] == 'u' ? Side::kOuter : Side::kInner, ca, cb};
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Segment parse_segment(const std::string& name) {
  if (name == "UaUb") return Segment::kUaUb;
  if (name == "UabVab") return Segment::kUabVab;
  if (name == "VaVb") return Segment::kVaVb;
  if (name == "V0U0") return Segment::kV0U0;
  throw std::logic_error("bad segment " + name);
}

Condition parse_condition(std::string text) {
  Condition c;
  auto w = words(text);
  if (w.empty()) throw std::logic_error("empty condition");
  std::string head = w[0];
  if (head[0] == '!') {
    c.negated = true;
    head = head.substr(1);
  }
  std::size_t first = 1;
  if (head == "path") {
    c.kind = CondKind::kPath;
  } else if (head == "order") {
    c.kind = CondKind::kOrder;
  } else if (head == "seg") {
    c.kind = CondKind::kSegment;
    c.segment = parse_segment(w.at(1));
    first = 2;
  } else if (head == "edge") {
    c.kind = CondKind::kEdge;
  } else if (head == "noedge") {
    c.kind = CondKind::kNoEdge;
  } else if (head == "distinct") {
    c.kind = CondKind::kDistinct;
  } else if (head == "cong") {
    c.kind = CondKind::kCongruence;
    return c;
  } else {
    throw std::logic_error("bad condition " + text);
  }
  bool open = false;
  for (std::size_t i = first; i < w.size(); ++i) {
    std::string tok = w[i];
    bool starts = tok.front() == '{', ends = tok.back() == '}';
    if (starts) tok = tok.substr(1);
    if (ends) tok.pop_back();
    if (!open) c.blocks.emplace_back();
    c.blocks.back().push_back(parse_sym(tok));
    if (starts) open = true;
    if (ends) open = false;
  }
  return c;
}

std::vector<std::pair<SymVertex, SymVertex>> parse_edges(std::string_view text) {
  std::vector<std::pair<SymVertex, SymVertex>> out;
  if (words(text).empty()) return out;
  for (const auto& part : split(text, ',')) {
    auto w = words(part);
    if (w.size() != 2) throw std::logic_error("bad edge '" + part + "'");
    out.emplace_back(parse_sym(w[0]), parse_sym(w[1]));
  }
  return out;
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    std::vector<Rule> out;
    for (const RuleText& text : kRules) {
      Rule r;
      r.id = text.id;
      for (const auto& part : split(text.when, ';')) r.when.push_back(parse_condition(part));
      r.remove = parse_edges(text.remove);
      r.add = parse_edges(text.add);
      auto w = words(text.result);
      if (w[0] == "path") {
        r.result = ResultKind::kPath;
        r.from = parse_sym(w.at(1));
        r.to = parse_sym(w.at(2));
      } else if (w[0] == "relabel" || w[0] == "cycle-relabel") {
        r.result = w[0] == "relabel" ? ResultKind::kRelabel : ResultKind::kCycleRelabel;
        std::tie(r.shift_a, r.shift_b) = parse_combination(w.at(1));
      } else {
        r.result = ResultKind::kSpecial;
      }
      out.push_back(std::move(r));
    }
    return out;
  }();
  return table;
}

class Evaluator {
 public:
  Evaluator(const IGraphSpec& spec, const CycleView& view, const HookWitness& w)
      : spec_(spec), view_(view), w_(w) {}

  Vertex resolve(const SymVertex& s) const {
    return {s.side, w_.labeling.index(spec_.m, s.ca, s.cb)};
  }

  bool holds(const Condition& c) const {
    bool value = evaluate(c);
    return c.negated ? !value : value;
  }

  bool holds_all(const std::vector<Condition>& conds) const {
    return std::all_of(conds.begin(), conds.end(), [&](const Condition& c) { return holds(c); });
  }

 private:
  std::vector<Vertex> flat(const Condition& c) const {
    std::vector<Vertex> out;
    for (const auto& block : c.blocks)
      for (const auto& s : block) out.push_back(resolve(s));
    return out;
  }

  static bool distinct(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
  }

  int rel(Vertex x) const { return view_.distance(resolve({Side::kOuter, 0, 0}), x, w_.direction); }

  std::pair<int, int> bounds(Segment s) const {
    auto r = [&](Side side, int ca, int cb) { return rel(resolve({side, ca, cb})); };
    switch (s) {
      case Segment::kUaUb: return {r(Side::kOuter, 1, 0), r(Side::kOuter, 0, 1)};
      case Segment::kUabVab: return {r(Side::kOuter, 1, 1), r(Side::kInner, 1, 1)};
      case Segment::kVaVb: return {r(Side::kInner, 1, 0), r(Side::kInner, 0, 1)};
      case Segment::kV0U0: return {r(Side::kInner, 0, 0), view_.n()};
    }
    return {0, 0};
  }

  bool evaluate(const Condition& c) const {
    const int m = spec_.m;
    switch (c.kind) {
      case CondKind::kCongruence: {
        int a = w_.labeling.a, b = w_.labeling.b;
        return mod(b + 2LL * a, m) == 0 || mod(a + 2LL * b, m) == 0;
      }
      case CondKind::kEdge:
      case CondKind::kNoEdge: {
        auto v = flat(c);
        bool in = v[0] != v[1] && view_.has_edge(v[0], v[1]);
        return c.kind == CondKind::kEdge ? in : !in;
      }
      case CondKind::kDistinct:
        return distinct(flat(c));
      case CondKind::kPath: {
        auto v = flat(c);
        if (!distinct(v)) return false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
          if (!view_.has_edge(v[i], v[i + 1])) return false;
        }
        return true;
      }
      case CondKind::kOrder: {
        auto v = flat(c);
        if (!distinct(v)) return false;
        for (int dir : {1, -1}) {
          bool ok = true;
          for (std::size_t i = 1; i + 1 < v.size() && ok; ++i) {
            ok = view_.distance(v[0], v[i], dir) < view_.distance(v[0], v[i + 1], dir);
          }
          if (ok) return true;
        }
        return false;
      }
      case CondKind::kSegment: {
        auto v = flat(c);
        if (!distinct(v)) return false;
        auto [lo, hi] = bounds(c.segment);
        auto where = [&](Vertex x) {
          int r = rel(x);
          if (c.segment == Segment::kV0U0 && r == 0) r = view_.n();
          return r;
        };
        int prev_max = -1;
        for (const auto& block : c.blocks) {
          int bmin = view_.n() + 1, bmax = -1;
          for (const auto& s : block) {
            int r = where(resolve(s));
            if (r < lo || r > hi) return false;
            bmin = std::min(bmin, r);
            bmax = std::max(bmax, r);
          }
          if (bmin <= prev_max) return false;
          prev_max = bmax;
        }
        return true;
      }
    }
    return false;
  }

  const IGraphSpec& spec_;
  const CycleView& view_;
  const HookWitness& w_;
};

std::vector<VertexPair> resolve_edges(const Evaluator& ev, const std::vector<std::pair<SymVertex, SymVertex>>& edges) {
  std::vector<VertexPair> out;
  for (const auto& [x, y] : edges) out.emplace_back(ev.resolve(x), ev.resolve(y));
  return out;
}

// Removed edges must lie on the cycle, added ones must be chords of the graph.
bool applicable(const Graph& g, const CycleView& view, const Surgery& s) {
  for (const auto& [x, y] : s.remove) {
    if (x == y || !view.has_edge(x, y)) return false;
  }
  for (const auto& [x, y] : s.add) {
    if (x == y || !g.adjacent(x, y) || view.has_edge(x, y)) return false;
  }
  return true;
}

Labeling relabeled(const IGraphSpec& spec, const Labeling& l, int sa, int sb) {
  return {mod(static_cast<long long>(l.shift) - static_cast<long long>(sa) * l.a - static_cast<long long>(sb) * l.b, spec.m),
          l.a, l.b};
}

// Outcome of a fired rule, or nullopt if its result does not verify.
std::optional<Resolution> execute(const IGraphSpec& spec, const Graph& g, std::span<const Vertex> cycle,
                                  const HookWitness& w, const Rule& rule, const Evaluator& ev, const Surgery& s) {
  Resolution res;
  res.rule = rule.id;
  switch (rule.result) {
    case ResultKind::kSpecial: {
      int a = w.labeling.a, b = w.labeling.b;
      res.outcome = Resolution::Outcome::kSpecialCase;
      res.cycle.assign(cycle.begin(), cycle.end());
      res.special = SpecialCase{mod(b + 2LL * a, spec.m) == 0 ? Congruence::kBIsMinus2A : Congruence::kAIsMinus2B,
                                w.labeling};
      return res;
    }
    case ResultKind::kRelabel: {
      auto next = hook_witness(spec, cycle, relabeled(spec, w.labeling, rule.shift_a, rule.shift_b));
      if (!next || next->order != HookOrder::kStandard) return std::nullopt;
      res.outcome = Resolution::Outcome::kStandard4Hooked;
      res.cycle.assign(cycle.begin(), cycle.end());
      res.hook = next;
      return res;
    }
    case ResultKind::kCycleRelabel: {
      SurgeryResult out;
      try {
        out = apply_surgery(g, cycle, true, s);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (!out.closed) return std::nullopt;
      auto next = hook_witness(spec, out.sequence, relabeled(spec, w.labeling, rule.shift_a, rule.shift_b));
      if (!next || next->order != HookOrder::kStandard) return std::nullopt;
      res.outcome = Resolution::Outcome::kStandard4Hooked;
      res.cycle = std::move(out.sequence);
      res.hook = next;
      return res;
    }
    case ResultKind::kPath: {
      Vertex from = ev.resolve(rule.from), to = ev.resolve(rule.to);
      SurgeryResult out;
      try {
        out = apply_surgery(g, cycle, true, s, from);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (out.closed || out.sequence.back() != to) return std::nullopt;
      auto witness = as_two_hooked(spec, out.sequence, "rule:" + rule.id);
      if (!witness) return std::nullopt;
      res.outcome = Resolution::Outcome::kTwoHooked;
      res.cycle.assign(cycle.begin(), cycle.end());
      res.two_hooked = std::move(witness);
      return res;
    }
  }
  return std::nullopt;
}

}  // namespace

Resolution resolve_elusive(const IGraphSpec& spec, std::span<const Vertex> cycle, const HookWitness& elusive,
                           std::uint64_t budget) {
  if (elusive.order == HookOrder::kStandard) {
    throw Error(ErrorCode::kPreconditionUnmet, "the labeling is standard, not elusive");
  }
  HookWitness w = normalize_elusive(spec, cycle, elusive);
  Graph g = build(spec.bicirculant());
  CycleView view(spec.m, cycle);
  Evaluator ev(spec, view, w);
  std::vector<std::string> fired, broken;
  for (const Rule& rule : rules()) {
    if (!ev.holds_all(rule.when)) continue;
    Surgery s{resolve_edges(ev, rule.remove), resolve_edges(ev, rule.add)};
    if (!applicable(g, view, s)) continue;
    fired.push_back(rule.id);
    if (auto res = execute(spec, g, cycle, w, rule, ev, s)) {
      res->fired = std::move(fired);
      res->broken = std::move(broken);
      return *res;
    }
    broken.push_back(rule.id);
  }
  Resolution res;
  res.fallback = true;
  res.fired = std::move(fired);
  res.broken = std::move(broken);
  res.cycle.assign(cycle.begin(), cycle.end());
  res.outcome = Resolution::Outcome::kTwoHooked;
  if ((res.two_hooked = derive_two_hooked(spec, g, cycle))) {
    res.rule = "fallback:derived";
    return res;
  }
  if ((res.two_hooked = search_two_hooked(spec, g, budget))) {
    res.rule = "fallback:search";
    return res;
  }
  if (g.order() <= 24) {
    for (const auto& c : enumerate_hamilton_cycles(g, {.budget = budget}).cycles) {
      for (const auto& h : hook_labelings(spec, c)) {
        if (h.order != HookOrder::kStandard) continue;
        res.outcome = Resolution::Outcome::kStandard4Hooked;
        res.rule = "fallback:enumeration";
        res.cycle = c;
        res.hook = h;
        return res;
      }
    }
  }
  throw Error(ErrorCode::kResolutionFailed, "no resolution for an elusive cycle of " + spec.to_string());
}

namespace {

// Paths for the configuration with B = -2A under labeling (t, A, B).
SpecialPaths special_minus_two_a(const IGraphSpec& spec, std::span<const Vertex> cycle, const Labeling& lab) {
  const int m = spec.m;
  Graph g = build(spec.bicirculant());
  auto U = [&](int k) { return outer(mod(lab.shift + 1LL * k * lab.a, m)); };
  auto V = [&](int k) { return inner(mod(lab.shift + 1LL * k * lab.a, m)); };
  auto run = [&](const Surgery& s, Vertex from, Vertex to) {
    SurgeryResult r;
    try {
      r = apply_surgery(g, cycle, true, s, from);
    } catch (const Error& e) {
      throw Error(ErrorCode::kPreconditionUnmet, std::string("special configuration: ") + e.what());
    }
    if (r.closed || r.sequence.back() != to) {
      throw Error(ErrorCode::kPreconditionUnmet, "special configuration: unexpected path ends");
    }
    return r.sequence;
  };
  // Cutting the two spokes at 0 and 3a leaves the crossing pair.
  VertexSeq rotated;
  {
    CycleView view(m, cycle);
    if (!view.has_edge(U(0), V(0)) || !view.has_edge(U(3), V(3))) {
      throw Error(ErrorCode::kPreconditionUnmet, "special configuration: spokes at 0 and 3a are not on the cycle");
    }
    int start = view.pos(V(0));
    int dir = view.at(start + 1) == U(0) ? -1 : 1;  // walk away from u_0
    for (int i = 0; i < view.n(); ++i) rotated.push_back(view.at(start + dir * i));
  }
  // rotated = v_0 ... u_0; the pair splits where the spoke u_{3a} v_{3a} sits.
  auto it = std::find_if(rotated.begin(), rotated.end(), [&](Vertex x) { return x == U(3) || x == V(3); });
  VertexSeq first(rotated.begin(), it + 1), second(it + 1, rotated.end());
  std::reverse(second.begin(), second.end());  // starts at u_0
  VertexSeq cross_first, cross_second;
  if (first.back() == U(3) && second.back() == V(3)) {
    cross_first = second;
    cross_second = first;
    std::reverse(cross_second.begin(), cross_second.end());  // u_{3a} .. v_0
  } else {
    throw Error(ErrorCode::kPreconditionUnmet, "special configuration: spoke pair is not crossing");
  }
  VertexSeq inner_path = run({{{V(0), V(-2)}, {U(0), U(1)}, {U(-1), U(-2)}, {V(1), V(3)}},
                              {{U(0), U(-1)}, {U(1), V(1)}, {U(-2), V(-2)}}},
                             V(0), V(3));
  VertexSeq outer_path = run({{{U(0), V(0)}, {V(2), V(4)}, {U(3), U(4)}}, {{V(0), V(2)}, {U(4), V(4)}}}, U(0), U(3));
  // Move the labeling to t = 0, A = a.
  int sign = lab.a == spec.a ? 1 : -1;
  auto norm = [&](const VertexSeq& s) { return map_indices(map_indices(s, m, 1, -lab.shift), m, sign, 0); };
  SpecialPaths out;
  out.p = mod(3LL * spec.a, m);
  out.outer_path = norm(outer_path);
  out.inner_path = norm(inner_path);
  out.cross_first = norm(cross_first);
  out.cross_second = norm(cross_second);
  return out;
}

VertexSeq swap_sides(std::span<const Vertex> seq) {
  VertexSeq out;
  for (const Vertex& v : seq) out.push_back({v.side == Side::kOuter ? Side::kInner : Side::kOuter, v.index});
  return out;
}

}  // namespace

SpecialPaths special_case_paths(const IGraphSpec& spec, std::span<const Vertex> cycle, const SpecialCase& special) {
  const int m = spec.m;
  const Labeling& l = special.labeling;
  if (special.congruence == Congruence::kBIsMinus2A) {
    if (mod(l.b + 2LL * l.a, m) != 0) throw Error(ErrorCode::kPreconditionUnmet, "b != -2a under the labeling");
    return special_minus_two_a(spec, cycle, l);
  }
  if (mod(l.a + 2LL * l.b, m) != 0) throw Error(ErrorCode::kPreconditionUnmet, "a != -2b under the labeling");
  IGraphSpec swapped(m, spec.b, spec.a);
  SpecialPaths s = special_minus_two_a(swapped, swap_sides(cycle), {l.shift, l.b, l.a});
  SpecialPaths out;
  out.p = s.p;
  out.outer_path = swap_sides(s.inner_path);
  out.inner_path = swap_sides(s.outer_path);
  // (v_0 .. u_p) and (v_p .. u_0) after the swap.
  VertexSeq x = swap_sides(s.cross_first), y = swap_sides(s.cross_second);
  std::reverse(y.begin(), y.end());
  std::reverse(x.begin(), x.end());
  out.cross_first = y;   // u_0 .. v_p
  out.cross_second = x;  // u_p .. v_0
  return out;
}

}  // namespace bicirc
