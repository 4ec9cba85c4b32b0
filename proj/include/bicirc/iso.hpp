#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/spec.hpp"

namespace bicirc {

// Maps the vertices of a graph on Z_m x {u, v}; indexed by source vertex id.
class VertexMap {
 public:
  VertexMap(int source_m, std::vector<Vertex> image);

  int source_m() const { return source_m_; }
  Vertex operator()(Vertex v) const;
  const std::vector<Vertex>& image() const { return image_; }

 private:
  int source_m_;
  std::vector<Vertex> image_;
};

struct IsoCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Checks that `map` is a bijection V(from) -> V(to) preserving adjacency both ways.
IsoCheck verify_isomorphism(const Graph& from, const Graph& to, const VertexMap& map);

// Checks that `map` is an isomorphism from `from` onto the subgraph of `to`
// induced by the image of `map`.
IsoCheck verify_embedding(const Graph& from, const Graph& to, const VertexMap& map);

struct SpecTransform {
  BicirculantSpec target;
  VertexMap map;  // source vertices -> target vertices
};

// B(m; R, S, T) -> B(m; R, S - c, T) by u_i -> u_i, v_i -> v_{i-c}. Needs c in S.
SpecTransform shift_spec(const BicirculantSpec& spec, int c);

// (side, i) -> (side, r i) onto B(m; rR, rS, rT). Needs gcd(m, r) = 1.
SpecTransform multiplier_spec(const BicirculantSpec& spec, int r);

// Components G_i (0 <= i < delta) hold u_j, v_j with j = i mod delta; each is a copy
// of the quotient B(m/delta; R/delta, S/delta, T/delta) via (side, k) -> (side, i + k delta).
struct ComponentDecomposition {
  int delta;
  BicirculantSpec quotient;
  std::vector<std::vector<Vertex>> components;

  Vertex lift(int component, Vertex local) const;
  VertexMap labeling(int component) const;
};

ComponentDecomposition decompose(const BicirculantSpec& spec);

// Every component is checked against the quotient with verify_embedding.
IsoCheck verify_decomposition(const BicirculantSpec& spec, const ComponentDecomposition& d);

enum class FamilyTag {
  kGeneralBicirculant,
  kHaar,
  kIGraph,
  kGeneralizedPetersen,
  kGrwGraph,
  kPetersenException,
};

std::string_view to_string(FamilyTag tag);

struct FamilyInfo {
  FamilyTag tag = FamilyTag::kGeneralBicirculant;  // most specific tag
  std::optional<IGraphSpec> i_graph;    // when S = {0} and |R| = |T| = 2
  std::optional<GrwSpec> grw;           // when |S| = 2 and |R| = |T| = 2
  std::optional<int> petersen_k;        // I-graph isomorphic to G(m, k)
  std::optional<int> multiplier;        // unit used for the G(m, k) form
  bool sides_swapped = false;           // G(m, k) form needs u <-> v
  std::optional<int> petersen_exception_n;  // isomorphic to G(n, 2), n = 5 mod 6
};

FamilyInfo classify_family(const BicirculantSpec& spec);

// G(m, k) form of a connected I-graph, if one exists.
struct PetersenForm {
  int k;
  int multiplier;
  bool sides_swapped;
};
std::optional<PetersenForm> petersen_form(const IGraphSpec& spec);

bool is_petersen_exception(const IGraphSpec& spec);

}  // namespace bicirc
