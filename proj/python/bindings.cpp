#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "widthlab/branchdec.hpp"
#include "widthlab/classify.hpp"
#include "widthlab/constructive.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/families.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hgraph.hpp"
#include "widthlab/patterns.hpp"
#include "widthlab/solvers.hpp"

namespace py = pybind11;
using namespace widthlab;

namespace {

py::object to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(py::str(r.str()));
}

Rational from_py(const py::handle& x) {
  py::object f = py::module_::import("fractions").attr("Fraction")(x);
  BigInt num(py::str(f.attr("numerator")).cast<std::string>());
  BigInt den(py::str(f.attr("denominator")).cast<std::string>());
  return Rational(num, den);
}

std::optional<std::vector<Rational>> weights_from_py(const std::optional<py::sequence>& w) {
  if (!w) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& x : *w) out.push_back(from_py(x));
  return out;
}

WidthKind kind_of(const std::string& which) {
  if (which == "mim") return WidthKind::mim;
  if (which == "sim") return WidthKind::sim;
  throw std::invalid_argument("which must be 'mim' or 'sim'");
}

std::vector<Graph> realize_all(const std::vector<std::string>& patterns) {
  std::vector<Graph> out;
  for (const auto& p : patterns) out.push_back(realize(parse_pattern(p)));
  return out;
}

py::dict ramsey_dict(const RamseyBound& r) {
  py::dict d;
  d["r"] = r.r;
  d["s"] = r.s;
  d["value"] = to_py(r.value);
  d["provenance"] = to_string(r.provenance);
  return d;
}

py::dict certified(const CertifiedDecomposition& cd) {
  py::dict d;
  d["bd"] = cd.bd;
  d["case"] = to_string(cd.construction);
  d["formula"] = cd.formula;
  d["ramsey"] = ramsey_dict(cd.ramsey);
  d["certificate"] = to_py(cd.certificate);
  d["evaluated_mimw"] = cd.evaluated_mimw ? py::cast(*cd.evaluated_mimw) : py::none();
  d["claims_checked"] = cd.claims_checked;
  return d;
}

py::dict outcome_dict(const ClassificationOutcome& o) {
  py::dict d;
  d["verdict"] = to_string(o.verdict);
  d["bullet"] = o.bullet;
  d["quickly_computable"] = o.quickly_computable;
  d["evidence"] = o.evidence;
  return d;
}

py::list occurrences(const HGraphResult& hg) {
  py::list out;
  for (const auto& o : hg.index.occurrences) {
    py::dict d;
    d["pattern"] = o.pattern;
    d["vertices"] = o.vertices;
    d["edges"] = o.edges;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_widthlab, m) {
  m.doc() = "Branch decompositions, mim-width and sim-width";

  static py::exception<PreconditionFailed> precondition(m, "PreconditionFailed",
                                                        PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionFailed& e) {
      // args = (message, witness)
      py::tuple args = py::make_tuple(e.what(), e.witness());
      PyErr_SetObject(precondition.ptr(), args.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges,
                       std::vector<std::string> labels) {
             return Graph(n, edges, std::move(labels));
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{},
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbours",
           [](const Graph& g, Vertex v) {
             if (v >= g.order()) throw py::index_error("vertex out of range");
             auto n = g.neighbours(v);
             return std::vector<Vertex>(n.begin(), n.end());
           })
      .def("to_json", &graph_to_json)
      .def("to_dot", &graph_to_dot)
      .def_static("from_json", &graph_from_json)
      .def_static("named", [](const std::string& name, const std::vector<long long>& params) {
        return build_named(name, params);
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) +
               ">";
      });

  m.def("complement", &complement);

  py::class_<BranchDecomposition>(m, "BranchDecomposition")
      .def_property_readonly("node_count", &BranchDecomposition::node_count)
      .def_property_readonly("vertex_count", &BranchDecomposition::vertex_count)
      .def("edges", &BranchDecomposition::edges)
      .def("to_json", &decomposition_to_json)
      .def("to_dot", [](const BranchDecomposition& bd) { return decomposition_to_dot(bd); })
      .def_static("from_json", &decomposition_from_json)
      .def("__eq__", [](const BranchDecomposition& a, const BranchDecomposition& b) {
        return a == b;
      });

  m.def(
      "contains_induced",
      [](const Graph& g, const std::string& pattern) {
        return contains_induced(g, parse_pattern(pattern));
      },
      "Embedding of the pattern (mini-language string) or None.");
  m.def("is_free", [](const Graph& g, const std::vector<std::string>& patterns) {
    std::vector<PatternSpec> ps;
    for (const auto& p : patterns) ps.push_back(parse_pattern(p));
    auto v = is_free(g, ps);
    py::dict d;
    d["free"] = v.free;
    d["pattern"] = v.free ? py::none() : py::cast(patterns[v.pattern_index]);
    d["witness"] = v.witness;
    return d;
  });

  m.def("caterpillar_decomposition",
        [](const Graph& g) { return caterpillar_decomposition(g); });
  m.def("maxdeg2_decomposition", &maxdeg2_decomposition);
  m.def("evaluate", [](const Graph& g, const BranchDecomposition& bd) {
    auto w = evaluate(g, bd);
    py::dict d;
    d["mimw"] = w.mimw;
    d["simw"] = w.simw;
    return d;
  });
  m.def(
      "exact_width",
      [](const Graph& g, const std::string& which, std::optional<std::size_t> cap) {
        auto ex = exact_width(g, kind_of(which), cap);
        return py::make_tuple(ex.width, ex.witness);
      },
      py::arg("g"), py::arg("which") = "mim", py::arg("cap") = py::none());

  m.def("ramsey", [](std::size_t r, std::size_t s) { return ramsey_dict(ramsey(r, s)); });
  m.def(
      "decompose_3p1",
      [](const Graph& g, std::size_t t, bool check) {
        return certified(decompose_3p1(g, t, {check, check}));
      },
      py::arg("g"), py::arg("t"), py::arg("check") = true);
  m.def(
      "decompose_4p1",
      [](const Graph& g, std::size_t t, bool check) {
        return certified(decompose_4p1(g, t, {check, check}));
      },
      py::arg("g"), py::arg("t"), py::arg("check") = true);

  m.def(
      "build_hgraph",
      [](const Graph& g, const std::vector<std::string>& patterns, std::size_t cap) {
        auto hg = build_hgraph(g, realize_all(patterns), cap);
        return py::make_tuple(hg.hgraph, occurrences(hg));
      },
      py::arg("g"), py::arg("patterns"), py::arg("cap") = default_pattern_cap);
  m.def(
      "solve_packing",
      [](const Graph& g, const std::vector<std::string>& patterns,
         std::optional<py::sequence> weights) {
        auto p = solve_packing(g, realize_all(patterns), weights_from_py(weights));
        return py::make_tuple(p.occurrences, to_py(p.weight));
      },
      py::arg("g"), py::arg("patterns"), py::arg("weights") = py::none());

  m.def(
      "mwis",
      [](const Graph& g, std::optional<py::sequence> weights, const BranchDecomposition* bd) {
        WeightedInstance inst = unit_weights(g);
        if (auto w = weights_from_py(weights)) inst.weights = *w;
        MwisResult r = bd ? mwis_mim_dp(inst, *bd) : mwis_oracle(inst);
        return py::make_tuple(r.set, to_py(r.weight));
      },
      py::arg("g"), py::arg("weights") = py::none(), py::arg("bd") = nullptr);

  m.def(
      "list_colouring",
      [](const Graph& g, std::size_t k, std::optional<std::vector<std::vector<int>>> lists,
         const BranchDecomposition* bd) {
        ListAssignment l{k, {}};
        if (lists) {
          l.lists = *lists;
        } else {
          std::vector<int> all;
          for (int c = 1; c <= static_cast<int>(k); ++c) all.push_back(c);
          l.lists.assign(g.order(), all);
        }
        auto res = list_colouring_pipeline(g, l, bd ? *bd : caterpillar_decomposition(g));
        py::dict d;
        d["feasible"] = res.feasible;
        d["colouring"] = res.colouring ? py::cast(*res.colouring) : py::none();
        d["clique"] = res.clique;
        d["simw"] = res.simw;
        d["mim_bound"] = res.mim_bound ? to_py(res.mim_bound->value) : py::none();
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("lists") = py::none(), py::arg("bd") = nullptr);

  m.def("classify_edgeless", [](std::size_t r, std::size_t s, std::size_t t) {
    return outcome_dict(classify_edgeless(r, s, t));
  });
  m.def("classify_complete", [](std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
    return outcome_dict(classify_complete(r, {s, t, u}));
  });

  m.def("generate_family", &generate_family);
  m.def("verify_family", [](const std::string& family, const Graph& g) {
    py::list out;
    for (const auto& v : verify_family(family, g)) {
      py::dict d;
      d["claim"] = v.claim;
      d["holds"] = v.holds;
      d["witness"] = v.witness;
      out.append(d);
    }
    return out;
  });
}
