#include "bicirc/spec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bicirc/arith.hpp"
#include "bicirc/error.hpp"

namespace bicirc {

namespace {

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// One representative (the smaller) per +/- pair.
std::vector<int> representatives(int m, const ResidueSet& set) {
  std::vector<int> out;
  for (int x : set) {
    if (x <= m - x) out.push_back(x);
  }
  return out;
}

bool is_symmetric(int m, const ResidueSet& set) {
  return std::all_of(set.begin(), set.end(), [&](int x) {
    return std::binary_search(set.begin(), set.end(), mod(-x, m));
  });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidSpec, what);
}

int parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view body) {
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    out.push_back(parse_int(body.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

// Parses "X=list" where X is the expected key.
std::vector<int> keyed_list(const std::string& token, char key) {
  if (token.size() < 2 || token[0] != key || token[1] != '=') {
    throw Error(ErrorCode::kParse, std::string("expected ") + key + "=..., got '" + token + "'");
  }
  return parse_list(std::string_view(token).substr(2));
}

int parse_modulus(const std::string& token) {
  int m = parse_int(token);
  require(m >= 1, "m must be positive");
  return m;
}

}  // namespace

ResidueSet make_residues(int m, const std::vector<int>& values) {
  ResidueSet out;
  out.reserve(values.size());
  for (int x : values) out.push_back(mod(x, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ResidueSet symmetric_closure(int m, const std::vector<int>& values) {
  std::vector<int> both;
  for (int x : values) {
    both.push_back(x);
    both.push_back(-x);
  }
  return make_residues(m, both);
}

BicirculantSpec::BicirculantSpec(int m, ResidueSet outer, ResidueSet spokes, ResidueSet inner)
    : m_(m) {
  require(m >= 1, "m must be positive");
  outer_ = make_residues(m, outer);
  spokes_ = make_residues(m, spokes);
  inner_ = make_residues(m, inner);
  require(!std::binary_search(outer_.begin(), outer_.end(), 0), "0 must not be in R");
  require(!std::binary_search(inner_.begin(), inner_.end(), 0), "0 must not be in T");
  require(is_symmetric(m, outer_), "R must equal -R");
  require(is_symmetric(m, inner_), "T must equal -T");
  require(std::binary_search(spokes_.begin(), spokes_.end(), 0), "0 must be in S");
}

BicirculantSpec BicirculantSpec::from_representatives(int m, const std::vector<int>& outer,
                                                      const std::vector<int>& spokes,
                                                      const std::vector<int>& inner) {
  require(m >= 1, "m must be positive");
  return BicirculantSpec(m, symmetric_closure(m, outer), make_residues(m, spokes),
                         symmetric_closure(m, inner));
}

int BicirculantSpec::delta() const { return gcd_with(m_, {outer_, spokes_, inner_}); }

std::string BicirculantSpec::to_string() const {
  return "B " + std::to_string(m_) + " R=" + join(representatives(m_, outer_)) +
         " S=" + join(spokes_) + " T=" + join(representatives(m_, inner_));
}

IGraphSpec::IGraphSpec(int m_, int a_, int b_) : m(m_), a(0), b(0) {
  require(m >= 3, "I-graph needs m >= 3");
  a = mod(a_, m);
  b = mod(b_, m);
  require(a != 0 && b != 0, "a and b must be nonzero");
  require(2 * a != m && 2 * b != m, "a and b must differ from m/2");
}

BicirculantSpec IGraphSpec::bicirculant() const {
  return BicirculantSpec::from_representatives(m, {a}, {0}, {b});
}

std::string IGraphSpec::to_string() const {
  return "I " + std::to_string(m) + " " + std::to_string(a) + " " + std::to_string(b);
}

GrwSpec::GrwSpec(int m_, int a_, int b_, int c_) : m(m_), a(0), b(0), c(0) {
  require(m >= 3, "GRW graph needs m >= 3");
  a = mod(a_, m);
  b = mod(b_, m);
  c = mod(c_, m);
  require(a != 0 && b != 0 && c != 0, "a, b and c must be nonzero");
  require(2 * a != m && 2 * b != m, "a and b must differ from m/2");
}

BicirculantSpec GrwSpec::bicirculant() const {
  return BicirculantSpec::from_representatives(m, {a}, {0, c}, {b});
}

GrwSpec GrwSpec::normalized() const {
  auto n = [this](int x) { return std::min(x, m - x); };
  return GrwSpec(m, n(a), n(b), n(c));
}

std::string GrwSpec::to_string() const {
  return "GRW " + std::to_string(m) + " " + std::to_string(a) + " " + std::to_string(b) + " " +
         std::to_string(c);
}

HaarSpec::HaarSpec(int m_, ResidueSet spokes_) : m(m_) {
  require(m >= 1, "m must be positive");
  spokes = make_residues(m, spokes_);
  require(std::binary_search(spokes.begin(), spokes.end(), 0), "0 must be in S");
}

BicirculantSpec HaarSpec::bicirculant() const { return BicirculantSpec(m, {}, spokes, {}); }

std::string HaarSpec::to_string() const {
  return "H " + std::to_string(m) + " S=" + join(spokes);
}

AnySpec parse_spec(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw Error(ErrorCode::kParse, "empty spec");
  const std::string& kind = tokens[0];
  auto expect_count = [&](std::size_t n) {
    if (tokens.size() != n) {
      throw Error(ErrorCode::kParse, "'" + kind + "' spec takes " + std::to_string(n - 1) +
                                         " fields, got " + std::to_string(tokens.size() - 1));
    }
  };
  if (kind == "B") {
    expect_count(5);
    int m = parse_modulus(tokens[1]);
    return BicirculantSpec::from_representatives(m, keyed_list(tokens[2], 'R'),
                                                 keyed_list(tokens[3], 'S'),
                                                 keyed_list(tokens[4], 'T'));
  }
  if (kind == "I") {
    expect_count(4);
    return IGraphSpec(parse_modulus(tokens[1]), parse_int(tokens[2]), parse_int(tokens[3]));
  }
  if (kind == "GRW") {
    expect_count(5);
    return GrwSpec(parse_modulus(tokens[1]), parse_int(tokens[2]), parse_int(tokens[3]),
                   parse_int(tokens[4]));
  }
  if (kind == "H") {
    expect_count(3);
    int m = parse_modulus(tokens[1]);
    return HaarSpec(m, make_residues(m, keyed_list(tokens[2], 'S')));
  }
  throw Error(ErrorCode::kParse, "unknown spec kind '" + kind + "'");
}

BicirculantSpec to_bicirculant(const AnySpec& spec) {
  return std::visit(
      [](const auto& s) -> BicirculantSpec {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BicirculantSpec>) {
          return s;
        } else {
          return s.bicirculant();
        }
      },
      spec);
}

std::string to_string(const AnySpec& spec) {
  return std::visit([](const auto& s) { return s.to_string(); }, spec);
}

BicirculantSpec canonical_shift(const BicirculantSpec& spec) {
  BicirculantSpec best = spec;
  for (int c : spec.spoke_types()) {
    std::vector<int> shifted;
    for (int s : spec.spoke_types()) shifted.push_back(s - c);
    BicirculantSpec candidate(spec.m(), spec.outer_types(), make_residues(spec.m(), shifted),
                              spec.inner_types());
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace bicirc
