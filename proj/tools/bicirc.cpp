// bicirc: graphs, Hamilton cycles and scans for bicirculants.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bicirc/conjecture.hpp"
#include "bicirc/error.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/grw.hpp"
#include "bicirc/igraph.hpp"
#include "bicirc/search.hpp"

using namespace bicirc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kParseExit = 2, kInvalidExit = 3, kUnknownExit = 4 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kParseExit;
    case ErrorCode::kBudgetExhausted: return kUnknownExit;
    default: return kInvalidExit;
  }
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json meta() { return {{"timestamp", timestamp()}, {"tool", "bicirc"}}; }

struct Output {
  std::string path;
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw Error(ErrorCode::kInvalidSpec, "cannot write " + path);
    }
    return file;
  }
};

struct Common {
  std::string format = "text";
  std::uint64_t budget = default_budget();
  bool force = false;
  Output out;
};

json seq_json(const VertexSeq& s) {
  json j = json::array();
  for (Vertex v : s) j.push_back(to_string(v));
  return j;
}

void guard(const BicirculantSpec& spec, bool force) {
  if (!force && 2 * spec.m() > 24) {
    throw Error(ErrorCode::kTooLarge, spec.to_string() + " exceeds 2m <= 24; pass --force");
  }
}

int cmd_gen(const std::string& text, Common& c) {
  AnySpec spec = parse_spec(text);
  BicirculantSpec b = to_bicirculant(spec);
  Graph g = build(b);
  if (g.component_count() != 1) {
    std::cerr << "warning: " << b.to_string() << " is disconnected (" << g.component_count() << " components)\n";
  }
  std::ostream& os = c.out.stream();
  if (c.format == "dot") {
    os << to_dot(g, to_string(spec));
  } else if (c.format == "json") {
    std::vector<VertexPair> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.x, e.y), std::max(e.x, e.y));
    std::sort(pairs.begin(), pairs.end());
    json edges = json::array();
    for (const auto& [x, y] : pairs) edges.push_back({to_string(x), to_string(y)});
    os << json{{"spec", to_string(spec)}, {"order", g.order()}, {"components", g.component_count()}, {"edges", edges}}.dump()
       << "\n";
  } else {
    os << to_edge_list(g);
  }
  return kOk;
}

int cmd_ham(const std::string& text, Common& c) {
  AnySpec spec = parse_spec(text);
  BicirculantSpec b = to_bicirculant(spec);
  if (b.delta() != 1) throw Error(ErrorCode::kDisconnected, b.to_string() + " is disconnected");
  std::ostream& os = c.out.stream();
  if (auto* grw = std::get_if<GrwSpec>(&spec)) {
    Certificate cert = hamilton_cycle_grw(*grw, c.budget);
    json j = to_json(cert);
    j["status"] = "Hamiltonian";
    j["meta"] = meta();
    if (c.format == "json") {
      os << j.dump() << "\n";
    } else {
      os << "Hamiltonian " << cert.spec.to_string() << " via " << to_string(cert.route) << "\n"
         << format_sequence(cert.cycle) << "\n";
    }
    return kOk;
  }
  guard(b, c.force);
  HamiltonicityReport rep = certify_hamiltonian(b, c.budget);
  json j = to_json(rep);
  j["meta"] = meta();
  if (c.format == "json") {
    os << j.dump() << "\n";
  } else {
    os << to_string(rep.status) << " " << b.to_string() << " via " << rep.methods.back();
    if (!rep.note.empty()) os << " (" << rep.note << ")";
    os << "\n";
    if (!rep.cycle.empty()) os << format_sequence(rep.cycle) << "\n";
  }
  switch (rep.status) {
    case HamStatus::kHamiltonian: return kOk;
    case HamStatus::kNonHamiltonian: return kNegative;
    case HamStatus::kUnknown: return kUnknownExit;
  }
  return kUnknownExit;
}

json classify_row(const IGraphSpec& spec, const VertexSeq& cycle, std::uint64_t budget) {
  json row = {{"cycle", seq_json(cycle)}, {"shift", nullptr}, {"elusive", false}};
  const bool equal = spec.a == spec.b || spec.a + spec.b == spec.m;
  try {
    if (equal) {
      // With a = +-b every inner edge v_p v_{p+-a} on C leaves a witness path.
      int spokes = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) spokes += cycle[i].side != cycle[(i + 1) % cycle.size()].side;
      if (2 * spokes == static_cast<int>(cycle.size())) {
        row["class"] = "Alternating";
        return row;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex x = cycle[i], y = cycle[(i + 1) % cycle.size()];
        if (x.side != Side::kInner || y.side != Side::kInner) continue;
        VertexSeq path;
        for (std::size_t k = 0; k < cycle.size(); ++k) path.push_back(cycle[(i + 1 + k) % cycle.size()]);
        if (auto w = as_two_hooked(spec, path, "inner-edge")) {
          row["class"] = "TwoHooked";
          row["witness"] = format_sequence(w->path);
          return row;
        }
      }
      row["class"] = "Failed";
      return row;
    }
    CycleClass cl = classify_cycle(spec, cycle, budget);
    switch (cl.kind) {
      case CycleKind::kAlternating: row["class"] = "Alternating"; break;
      case CycleKind::kTwoHooked:
        row["class"] = "TwoHooked";
        row["witness"] = format_sequence(cl.two_hooked->path);
        row["witness_source"] = cl.two_hooked->source;
        break;
      case CycleKind::kFourHooked: {
        row["class"] = "FourHooked";
        const HookWitness& h = *cl.chosen;
        row["shift"] = h.labeling.shift;
        row["labeling"] = {{"t", h.labeling.shift}, {"A", h.labeling.a}, {"B", h.labeling.b}};
        row["order"] = std::string(to_string(h.order));
        row["witness"] = h.pattern_string();
        if (h.order != HookOrder::kStandard) {
          row["elusive"] = true;
          Resolution r = resolve_elusive(spec, cycle, h, budget);
          row["resolution"] = {{"outcome", std::string(to_string(r.outcome))}, {"rule", r.rule}, {"fallback", r.fallback}};
        }
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExhausted) throw;
    row["class"] = "Failed";
    row["error"] = e.what();
  }
  return row;
}

int cmd_classify(const std::string& text, Common& c, std::size_t cap) {
  AnySpec spec = parse_spec(text);
  auto* ig = std::get_if<IGraphSpec>(&spec);
  if (!ig) throw Error(ErrorCode::kInvalidSpec, "classify needs an I-graph spec");
  BicirculantSpec b = ig->bicirculant();
  if (b.delta() != 1) throw Error(ErrorCode::kDisconnected, b.to_string() + " is disconnected");
  Graph g = build(b);
  Enumeration en = enumerate_hamilton_cycles(g, {.cap = cap, .max_order = 24, .force = c.force});
  std::ostream& os = c.out.stream();
  json rows = json::array();
  for (const auto& cycle : en.cycles) rows.push_back(classify_row(*ig, cycle, c.budget));
  if (c.format == "json") {
    os << json{{"spec", ig->to_string()}, {"rows", rows}, {"truncated", en.truncated}, {"meta", meta()}}.dump() << "\n";
  } else {
    int i = 0;
    for (const auto& r : rows) {
      os << i++ << "\t" << r["class"].get<std::string>() << "\t" << (r["shift"].is_null() ? "-" : r["shift"].dump()) << "\t"
         << (r["elusive"].get<bool>() ? "elusive" : "-") << "\t" << r.value("witness", "-") << "\n";
    }
    if (en.truncated) os << "# truncated at cap\n";
  }
  return kOk;
}

int cmd_scan(ScanRange range, Common& c, int jobs) {
  range.force = c.force;
  auto start = std::chrono::steady_clock::now();
  auto reports = scan(range, c.budget, jobs);
  std::ostream& os = c.out.stream();
  std::vector<std::string> non_ham, unknown;
  for (const auto& r : reports) {
    os << to_json(r).dump() << "\n";
    if (r.status == HamStatus::kNonHamiltonian) non_ham.push_back(family_label(r.spec));
    if (r.status == HamStatus::kUnknown) unknown.push_back(r.spec.to_string());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json m = meta();
  m["elapsed_seconds"] = secs;
  os << json{{"summary", {{"count", reports.size()}, {"exceptions", non_ham}, {"unknown", unknown}}}, {"meta", m}}.dump()
     << "\n";
  std::cerr << reports.size() << " specs, " << non_ham.size() << " non-hamiltonian, " << unknown.size() << " unknown\n";
  for (const auto& e : non_ham) std::cerr << "  exception: " << e << "\n";
  return kOk;
}

int cmd_verify(const std::string& text, const std::string& file, Common& c) {
  AnySpec spec = parse_spec(text);
  std::stringstream buf;
  if (file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::kParse, "cannot read " + file);
    buf << in.rdbuf();
  }
  std::string body = buf.str();
  VertexSeq cycle;
  auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("cycle")) throw Error(ErrorCode::kParse, "JSON has no cycle");
    for (const auto& t : j["cycle"]) {
      if (!t.is_string()) throw Error(ErrorCode::kParse, "cycle tokens must be strings");
      auto v = parse_vertex(t.get<std::string>());
      if (!v) throw Error(ErrorCode::kParse, "bad vertex " + t.dump());
      cycle.push_back(*v);
    }
  } else {
    // text output of ham starts with a status line
    std::string tokens;
    std::istringstream lines(body);
    for (std::string line; std::getline(lines, line);) {
      std::istringstream words(line);
      std::string head;
      words >> head;
      if (head != "Hamiltonian" && head != "NonHamiltonian" && head != "Unknown") tokens += line + "\n";
    }
    cycle = parse_sequence(tokens);
  }
  Graph g = build(spec);
  Verification v = verify_cycle(g, cycle);
  if (v) {
    c.out.stream() << "ok " << cycle.size() << " vertices\n";
    return kOk;
  }
  std::cerr << "not a Hamilton cycle: " << to_string(v.failure) << " at position " << v.position << "\n";
  return kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicirculant graphs and their Hamilton cycles"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')));
    sub->add_option("--budget", c.budget, "Search budget in node expansions")->check(CLI::PositiveNumber);
    sub->add_flag("--force", c.force, "Lift the 2m <= 24 guard");
    sub->add_option("--out", c.out.path, "Write output to a file");
  };

  std::string spec_text, cycle_file;
  std::size_t cap = 1000;
  int jobs = 1;
  ScanRange range;
  int degree = 0, s = 0;

  auto* gen = app.add_subcommand("gen", "Export a graph");
  gen->add_option("spec", spec_text, "Spec text")->required();
  common(gen, "text,edgelist,dot,json");

  auto* ham = app.add_subcommand("ham", "Find and certify a Hamilton cycle");
  ham->add_option("spec", spec_text, "Spec text")->required();
  common(ham, "text,json");

  auto* cls = app.add_subcommand("classify", "Classify the Hamilton cycles of an I-graph");
  cls->add_option("spec", spec_text, "Spec text")->required();
  cls->add_option("--cap", cap, "Stop after this many cycles")->check(CLI::PositiveNumber);
  common(cls, "text,json");

  auto* scn = app.add_subcommand("scan", "Check every connected bicirculant in a range");
  scn->add_option("--min-m", range.min_m, "Smallest m")->check(CLI::PositiveNumber);
  scn->add_option("--max-m", range.max_m, "Largest m")->check(CLI::NonNegativeNumber);
  scn->add_option("--degree", degree, "Exact valence (default: all up to 4)")->check(CLI::PositiveNumber);
  scn->add_option("--s", s, "Exact number of spoke types")->check(CLI::PositiveNumber);
  scn->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(scn, "json");

  auto* ver = app.add_subcommand("verify", "Check a cycle against a spec");
  ver->add_option("spec", spec_text, "Spec text")->required();
  ver->add_option("cycle", cycle_file, "File (or -) with vertex tokens, ham output or a certificate")->required();
  common(ver, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseExit;
  }
  if (c.format == "text" && gen->parsed()) c.format = "edgelist";

  try {
    if (gen->parsed()) return cmd_gen(spec_text, c);
    if (ham->parsed()) return cmd_ham(spec_text, c);
    if (cls->parsed()) return cmd_classify(spec_text, c, cap);
    if (scn->parsed()) {
      if (degree) range.degree = degree;
      if (s) range.s = s;
      return cmd_scan(range, c, jobs);
    }
    if (ver->parsed()) return cmd_verify(spec_text, cycle_file, c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kOk;
}
