#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicirc/conjecture.hpp"
#include "bicirc/error.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/grw.hpp"
#include "bicirc/igraph.hpp"
#include "bicirc/search.hpp"

namespace py = pybind11;
using namespace bicirc;

namespace {

std::vector<std::string> tokens(const VertexSeq& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(to_string(v));
  return out;
}

VertexSeq from_tokens(const std::vector<std::string>& ts) {
  VertexSeq out;
  for (const auto& t : ts) {
    auto v = parse_vertex(t);
    if (!v) throw Error(ErrorCode::kParse, "bad vertex token '" + t + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hamilton cycles in bicirculant graphs";

  static py::exception<Error> error(m, "BicircError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("normalize_spec", [](const std::string& text) { return to_string(parse_spec(text)); });
  m.def("bicirculant", [](const std::string& text) { return to_bicirculant(parse_spec(text)).to_string(); });

  m.def(
      "edges",
      [](const std::string& text) {
        Graph g = build(parse_spec(text));
        std::vector<std::pair<std::string, std::string>> out;
        for (const Edge& e : g.edges()) out.emplace_back(to_string(e.x), to_string(e.y));
        return out;
      },
      "Edge list of the graph as vertex token pairs.");

  m.def(
      "verify_cycle",
      [](const std::string& text, const std::vector<std::string>& cycle) {
        Verification v = verify_cycle(build(parse_spec(text)), from_tokens(cycle));
        return std::make_tuple(v.ok, std::string(to_string(v.failure)), v.position);
      },
      py::arg("spec"), py::arg("cycle"));

  m.def(
      "find_hamilton_cycle",
      [](const std::string& text, std::uint64_t budget) {
        SearchResult r = find_hamilton_cycle(build(parse_spec(text)), budget);
        return std::make_pair(std::string(to_string(r.status)), tokens(r.sequence));
      },
      py::arg("spec"), py::arg("budget") = kDefaultBudget);

  m.def(
      "hamilton_cycle_grw",
      [](int mm, int a, int b, int c, std::uint64_t budget) {
        py::gil_scoped_release release;
        return to_json(hamilton_cycle_grw(GrwSpec(mm, a, b, c), budget)).dump();
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("budget") = kDefaultBudget,
      "Certificate JSON for R(m;a,b,c).");

  m.def(
      "replay",
      [](const std::string& certificate) {
        return tokens(replay(certificate_from_json(nlohmann::json::parse(certificate))));
      },
      py::arg("certificate"));

  m.def(
      "usable_form",
      [](int mm, int a, int b, std::uint64_t budget) {
        UsableForm f = usable_cycle(IGraphSpec(mm, a, b), budget);
        py::dict d;
        d["kind"] = std::string(to_string(f.kind));
        d["cycle"] = tokens(f.cycle);
        d["provenance"] = f.provenance;
        if (f.two_hooked) d["witness"] = tokens(f.two_hooked->path);
        return d;
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget);

  m.def(
      "certify",
      [](const std::string& text, std::uint64_t budget) {
        py::gil_scoped_release release;
        return to_json(certify_hamiltonian(to_bicirculant(parse_spec(text)), budget)).dump();
      },
      py::arg("spec"), py::arg("budget") = kDefaultBudget, "Hamiltonicity report JSON.");

  m.def(
      "scan",
      [](int max_m, std::optional<int> degree, std::optional<int> s, int jobs, std::uint64_t budget, bool force) {
        py::gil_scoped_release release;
        ScanRange range;
        range.max_m = max_m;
        range.degree = degree;
        range.s = s;
        range.force = force;
        std::vector<std::string> out;
        for (const auto& r : scan(range, budget, jobs)) out.push_back(to_json(r).dump());
        return out;
      },
      py::arg("max_m"), py::arg("degree") = py::none(), py::arg("s") = py::none(), py::arg("jobs") = 1,
      py::arg("budget") = kDefaultBudget, py::arg("force") = false, "Report JSON per spec, in canonical order.");
}
