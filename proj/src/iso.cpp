#include "bicirc/iso.hpp"

#include <algorithm>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"

namespace bicirc {

VertexMap::VertexMap(int source_m, std::vector<Vertex> image)
    : source_m_(source_m), image_(std::move(image)) {}

Vertex VertexMap::operator()(Vertex v) const {
  return image_[v.side == Side::kOuter ? v.index : source_m_ + v.index];
}

IsoCheck verify_embedding(const Graph& from, const Graph& to, const VertexMap& map) {
  if (static_cast<int>(map.image().size()) != from.order()) return {false, "map has wrong size"};
  std::vector<char> hit(to.order(), 0);
  for (const Vertex& v : map.image()) {
    if (!to.contains(v)) return {false, "image vertex " + to_string(v) + " out of range"};
    int id = to.id(v);
    if (hit[id]) return {false, "map is not injective at " + to_string(v)};
    hit[id] = 1;
  }
  for (const Edge& e : from.edges()) {
    if (!to.adjacent(map(e.x), map(e.y))) {
      return {false, "edge " + to_string(e.x) + " " + to_string(e.y) + " is not preserved"};
    }
  }
  std::size_t induced = 0;
  for (const Edge& e : to.edges()) {
    if (hit[to.id(e.x)] && hit[to.id(e.y)]) ++induced;
  }
  if (induced != from.edges().size()) return {false, "image has extra edges"};
  return {true, ""};
}

IsoCheck verify_isomorphism(const Graph& from, const Graph& to, const VertexMap& map) {
  if (from.order() != to.order()) return {false, "orders differ"};
  return verify_embedding(from, to, map);
}

SpecTransform shift_spec(const BicirculantSpec& spec, int c) {
  const int m = spec.m();
  c = mod(c, m);
  const auto& s = spec.spoke_types();
  if (!std::binary_search(s.begin(), s.end(), c)) {
    throw Error(ErrorCode::kNotInS, std::to_string(c) + " is not a spoke type");
  }
  std::vector<int> shifted;
  for (int x : s) shifted.push_back(x - c);
  BicirculantSpec target(m, spec.outer_types(), make_residues(m, shifted), spec.inner_types());
  std::vector<Vertex> image(2 * m);
  for (int i = 0; i < m; ++i) {
    image[i] = outer(i);
    image[m + i] = inner(mod(i - c, m));
  }
  return {target, VertexMap(m, std::move(image))};
}

SpecTransform multiplier_spec(const BicirculantSpec& spec, int r) {
  const int m = spec.m();
  r = mod(r, m);
  if (gcd(m, r) != 1) throw Error(ErrorCode::kNotAUnit, std::to_string(r) + " is not a unit mod " + std::to_string(m));
  auto scale = [&](const ResidueSet& set) {
    std::vector<int> out;
    for (int x : set) out.push_back(static_cast<long long>(x) * r % m);
    return make_residues(m, out);
  };
  BicirculantSpec target(m, scale(spec.outer_types()), scale(spec.spoke_types()),
                         scale(spec.inner_types()));
  std::vector<Vertex> image(2 * m);
  for (int i = 0; i < m; ++i) {
    int j = static_cast<int>(static_cast<long long>(i) * r % m);
    image[i] = outer(j);
    image[m + i] = inner(j);
  }
  return {target, VertexMap(m, std::move(image))};
}

Vertex ComponentDecomposition::lift(int component, Vertex local) const {
  return {local.side, component + local.index * delta};
}

VertexMap ComponentDecomposition::labeling(int component) const {
  const int q = quotient.m();
  std::vector<Vertex> image(2 * q);
  for (int k = 0; k < q; ++k) {
    image[k] = lift(component, outer(k));
    image[q + k] = lift(component, inner(k));
  }
  return VertexMap(q, std::move(image));
}

ComponentDecomposition decompose(const BicirculantSpec& spec) {
  const int m = spec.m();
  const int delta = spec.delta();
  const int q = m / delta;
  auto divide = [&](const ResidueSet& set) {
    std::vector<int> out;
    for (int x : set) out.push_back(x / delta);
    return make_residues(q, out);
  };
  BicirculantSpec quotient(q, divide(spec.outer_types()), divide(spec.spoke_types()),
                           divide(spec.inner_types()));
  std::vector<std::vector<Vertex>> components(delta);
  for (int i = 0; i < delta; ++i) {
    for (int k = 0; k < q; ++k) components[i].push_back(outer(i + k * delta));
    for (int k = 0; k < q; ++k) components[i].push_back(inner(i + k * delta));
  }
  return {delta, quotient, std::move(components)};
}

IsoCheck verify_decomposition(const BicirculantSpec& spec, const ComponentDecomposition& d) {
  Graph g = build(spec);
  Graph q = build(d.quotient);
  auto labels = g.component_labels();
  int count = g.component_count();
  if (count != d.delta) {
    return {false, "graph has " + std::to_string(count) + " components, expected " + std::to_string(d.delta)};
  }
  for (int i = 0; i < d.delta; ++i) {
    VertexMap map = d.labeling(i);
    if (auto check = verify_embedding(q, g, map); !check) {
      return {false, "component " + std::to_string(i) + ": " + check.reason};
    }
    int label = labels[g.id(d.components[i].front())];
    for (const Vertex& v : d.components[i]) {
      if (labels[g.id(v)] != label) return {false, "component " + std::to_string(i) + " is split"};
    }
  }
  return {true, ""};
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kGeneralBicirculant: return "GeneralBicirculant";
    case FamilyTag::kHaar: return "Haar";
    case FamilyTag::kIGraph: return "IGraph";
    case FamilyTag::kGeneralizedPetersen: return "GeneralizedPetersen";
    case FamilyTag::kGrwGraph: return "GrwGraph";
    case FamilyTag::kPetersenException: return "PetersenException";
  }
  return "?";
}

std::optional<PetersenForm> petersen_form(const IGraphSpec& spec) {
  const int m = spec.m;
  auto normalise = [m](long long k) {
    int r = mod(k, m);
    return std::min(r, m - r);
  };
  if (auto r = inverse_mod(spec.a, m)) {
    return PetersenForm{normalise(static_cast<long long>(*r) * spec.b), *r, false};
  }
  if (auto r = inverse_mod(spec.b, m)) {
    return PetersenForm{normalise(static_cast<long long>(*r) * spec.a), *r, true};
  }
  return std::nullopt;
}

bool is_petersen_exception(const IGraphSpec& spec) {
  const int m = spec.m;
  if (m % 6 != 5) return false;
  auto twice = [m](int x, int y) {
    return mod(2LL * x - y, m) == 0 || mod(2LL * x + y, m) == 0;
  };
  // I(m; a, b) = G(m, 2) iff some unit r maps {a, b} onto {+-1, +-2}, sides in either order.
  return (gcd(m, spec.a) == 1 && twice(spec.a, spec.b)) ||
         (gcd(m, spec.b) == 1 && twice(spec.b, spec.a));
}

FamilyInfo classify_family(const BicirculantSpec& spec) {
  FamilyInfo info;
  const int m = spec.m();
  const auto& r = spec.outer_types();
  const auto& s = spec.spoke_types();
  const auto& t = spec.inner_types();
  if (r.empty() && t.empty()) {
    info.tag = FamilyTag::kHaar;
    return info;
  }
  bool pair_r = r.size() == 2, pair_t = t.size() == 2;
  if (m < 3 || !pair_r || !pair_t) return info;
  int a = std::min(r[0], r[1]);
  int b = std::min(t[0], t[1]);
  if (s.size() == 1) {
    IGraphSpec ig(m, a, b);
    info.tag = FamilyTag::kIGraph;
    info.i_graph = ig;
    if (auto form = petersen_form(ig)) {
      info.tag = FamilyTag::kGeneralizedPetersen;
      info.petersen_k = form->k;
      info.multiplier = form->multiplier;
      info.sides_swapped = form->sides_swapped;
      if (is_petersen_exception(ig)) {
        info.tag = FamilyTag::kPetersenException;
        info.petersen_exception_n = m;
      }
    }
    return info;
  }
  if (s.size() == 2) {
    info.tag = FamilyTag::kGrwGraph;
    info.grw = GrwSpec(m, a, b, s[1]);
  }
  return info;
}

}  // namespace bicirc
