#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bicirc {

// Sorted, duplicate-free residues in [0, m).
using ResidueSet = std::vector<int>;

// B(m; R, S, T): outer edges u_i u_{i+j} (j in R), spokes u_i v_{i+s} (s in S),
// inner edges v_i v_{i+k} (k in T).
class BicirculantSpec {
 public:
  // Sets are taken as given (reduced mod m); R and T must already be symmetric.
  BicirculantSpec(int m, ResidueSet outer, ResidueSet spokes, ResidueSet inner);

  // Each listed value j stands for the pair {j, -j} in R and T.
  static BicirculantSpec from_representatives(int m, const std::vector<int>& outer,
                                              const std::vector<int>& spokes,
                                              const std::vector<int>& inner);

  int m() const { return m_; }
  const ResidueSet& outer_types() const { return outer_; }
  const ResidueSet& spoke_types() const { return spokes_; }
  const ResidueSet& inner_types() const { return inner_; }

  bool regular() const { return outer_.size() == inner_.size(); }
  int valence() const { return static_cast<int>(outer_.size() + spokes_.size()); }

  // gcd(m, R, S, T); the graph is connected iff this is 1.
  int delta() const;

  // "B m R=.. S=.. T=.." with one representative per +/- pair in R and T.
  std::string to_string() const;

  friend auto operator<=>(const BicirculantSpec&, const BicirculantSpec&) = default;

 private:
  int m_;
  ResidueSet outer_;
  ResidueSet spokes_;
  ResidueSet inner_;
};

// I(m; a, b) = B(m; {+-a}, {0}, {+-b}).
struct IGraphSpec {
  int m;
  int a;
  int b;

  IGraphSpec(int m, int a, int b);
  BicirculantSpec bicirculant() const;
  std::string to_string() const;
  friend auto operator<=>(const IGraphSpec&, const IGraphSpec&) = default;
};

// R(m; a, b, c) = B(m; {+-a}, {0, c}, {+-b}).
struct GrwSpec {
  int m;
  int a;
  int b;
  int c;

  GrwSpec(int m, int a, int b, int c);
  BicirculantSpec bicirculant() const;
  IGraphSpec i_graph() const { return IGraphSpec(m, a, b); }
  // a, b, c replaced by min(x, m - x).
  GrwSpec normalized() const;
  std::string to_string() const;
  friend auto operator<=>(const GrwSpec&, const GrwSpec&) = default;
};

// H(m; S) = B(m; {}, S, {}) with 0 in S.
struct HaarSpec {
  int m;
  ResidueSet spokes;

  HaarSpec(int m, ResidueSet spokes);
  BicirculantSpec bicirculant() const;
  std::string to_string() const;
};

using AnySpec = std::variant<BicirculantSpec, IGraphSpec, GrwSpec, HaarSpec>;

// Accepts "B m R=.. S=.. T=..", "I m a b", "GRW m a b c", "H m S=..".
// Throws Error(kParse) on malformed text and Error(kInvalidSpec) on bad values.
AnySpec parse_spec(std::string_view text);

BicirculantSpec to_bicirculant(const AnySpec& spec);
std::string to_string(const AnySpec& spec);

// Least spec among the shifts S - c (c in S); used to deduplicate scans.
BicirculantSpec canonical_shift(const BicirculantSpec& spec);

ResidueSet make_residues(int m, const std::vector<int>& values);
ResidueSet symmetric_closure(int m, const std::vector<int>& values);

}  // namespace bicirc
