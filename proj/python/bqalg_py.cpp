// Python bindings. Relations cross the boundary as lists of arrow ids in
// traversal order; modules use the command-line syntax ("S:1", "Delta:2").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "bqalg/chains.hpp"
#include "bqalg/cli.hpp"
#include "bqalg/constructions.hpp"
#include "bqalg/error.hpp"
#include "bqalg/oracle.hpp"
#include "bqalg/qv_format.hpp"
#include "bqalg/render.hpp"
#include "bqalg/sqh.hpp"

namespace py = pybind11;
using namespace bqalg;

namespace {

  using IdWords = std::vector<std::vector<std::string>>;

  py::object ext(ExtNat x) {
    if (x.is_infinite()) {
      return py::float_(INFINITY);
    }
    return py::int_(x.value());
  }

  py::list ext_list(std::vector<ExtNat> const& xs) {
    py::list out;
    for (auto x : xs) {
      out.append(ext(x));
    }
    return out;
  }

  std::vector<std::string> ids_of(Quiver const& q, Word const& w) {
    std::vector<std::string> out;
    for (ArrowIndex a : w) {
      out.push_back(q.arrow(a).id);
    }
    return out;
  }

  IdWords ids_of(Quiver const& q, RelationSet const& r) {
    IdWords out;
    for (auto const& g : r.generators()) {
      out.push_back(ids_of(q, g.word()));
    }
    return out;
  }

  py::dict resolution_dict(Resolution const& r) {
    py::dict d;
    d["betti"]    = r.betti;
    d["complete"] = r.complete;
    return d;
  }

  py::dict certificate_dict(Quiver const& q, Certificate const& c) {
    py::dict d;
    d["kind"]           = to_string(c.kind);
    d["m"]              = c.m ? py::object(py::int_(*c.m)) : py::object(py::none());
    d["relabeling"]     = c.relabeling.image();
    d["ideal"]          = ids_of(q, c.ideal);
    d["verified_gldim"] = ext(c.verified_gldim);
    d["pdims"]          = ext_list(c.pdims);
    return d;
  }

}  // namespace

PYBIND11_MODULE(_bqalg, m) {
  m.doc() = "Monomial algebras of bound quivers: global dimension, resolutions, constructions";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", error);
  py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError", error);
  py::register_exception<InfiniteResolutionError>(m, "InfiniteResolutionError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(
          "add_arrow",
          [](Quiver& q, std::string id, Vertex s, Vertex t) { (void)q.add_arrow(std::move(id), s, t); },
          py::arg("id"), py::arg("source"), py::arg("target"))
      .def_property_readonly("vertex_count", &Quiver::vertex_count)
      .def_property_readonly("arrow_count", &Quiver::arrow_count)
      .def_property_readonly("arrows",
                             [](Quiver const& q) {
                               py::list out;
                               for (auto const& a : q.arrows()) {
                                 out.append(py::make_tuple(a.id, a.source, a.target));
                               }
                               return out;
                             })
      .def("structure",
           [](Quiver const& q) {
             auto const f = structure_predicates(q);
             py::dict   d;
             d["has_loop"]           = f.has_loop;
             d["has_oriented_cycle"] = f.has_oriented_cycle;
             d["has_length2_path"]   = f.has_length2_path;
             return d;
           })
      .def("__repr__", [](Quiver const& q) {
        std::ostringstream s;
        s << "Quiver(" << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows)";
        return s.str();
      });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](Quiver const& q, IdWords const& rels) {
             return Algebra(q, relations_from_ids(q, rels));
           }),
           py::arg("quiver"), py::arg("relations") = IdWords{})
      .def_property_readonly("quiver", &Algebra::quiver)
      .def_property_readonly("relations",
                             [](Algebra const& a) { return ids_of(a.quiver(), a.relations()); })
      .def_property_readonly("is_admissible", &Algebra::is_admissible)
      .def_property_readonly("dimension", &Algebra::dimension)
      .def("composition_vector", [](Algebra const& a, std::string const& module) {
        return a.composition_vector(parse_module_spec(a.quiver(), module));
      });

  m.def("gldim", [](Algebra const& a) { return ext(gldim(a)); }, py::arg("algebra"));
  m.def("simple_pdims", [](Algebra const& a) { return ext_list(simple_pdims(a)); },
        py::arg("algebra"));
  m.def(
      "pdim",
      [](Algebra const& a, std::string const& module) {
        return ext(pdim(a, parse_module_spec(a.quiver(), module)));
      },
      py::arg("algebra"), py::arg("module"));
  m.def(
      "resolve",
      [](Algebra const& a, std::string const& module, std::optional<std::size_t> max_deg) {
        return resolution_dict(resolve(a, parse_module_spec(a.quiver(), module), max_deg));
      },
      py::arg("algebra"), py::arg("module"), py::arg("max_deg") = py::none(),
      "Minimal projective resolution by the combinatorial chain engine.");
  m.def(
      "matrix_resolve",
      [](Algebra const& a, std::string const& module, std::size_t max_deg, std::uint32_t p) {
        return resolution_dict(
            minimal_resolution(a, parse_module_spec(a.quiver(), module), max_deg, PrimeField(p)));
      },
      py::arg("algebra"), py::arg("module"), py::arg("max_deg"), py::arg("p") = PrimeField::default_modulus,
      "Minimal projective resolution by linear algebra over GF(p).");

  m.def("build_I", [](Quiver const& q) { return ids_of(q, build_I(q)); }, py::arg("quiver"));
  m.def("build_Iprime", [](Quiver const& q, std::size_t k) { return ids_of(q, build_Iprime(q, k)); },
        py::arg("quiver"), py::arg("m"));
  m.def(
      "build_Idoubleprime",
      [](Quiver const& q, std::size_t k) { return ids_of(q, build_Idoubleprime(q, k)); },
      py::arg("quiver"), py::arg("m"));
  m.def(
      "achieve_gldim",
      [](Quiver const& q, std::size_t target) -> py::object {
        PlanResult const r = achieve_gldim(q, target);
        if (!r.certificate) {
          return py::none();
        }
        return certificate_dict(q, *r.certificate);
      },
      py::arg("quiver"), py::arg("target"),
      "A verified certificate for the target global dimension, or None.");
  m.def("gldim2_exists", [](Quiver const& q) { return decide_gldim2_exists(q).exists; },
        py::arg("quiver"));
  m.def(
      "is_strongly_qh", [](Algebra const& a) { return check_strongly_qh(a).verdict; },
      py::arg("algebra"));

  m.def(
      "parse_qv",
      [](std::string const& text) {
        QuiverFile f = parse_qv(text);
        IdWords    rels;
        for (auto const& p : f.relations) {
          rels.push_back(ids_of(f.quiver, p.word()));
        }
        return py::make_tuple(std::move(f.quiver), rels);
      },
      py::arg("text"), "Returns (quiver, relations).");
  m.def(
      "emit_qv",
      [](Quiver const& q, IdWords const& rels) {
        return emit_qv(QuiverFile{q, relations_from_ids(q, rels).generators(), true});
      },
      py::arg("quiver"), py::arg("relations") = IdWords{});
  m.def(
      "render_dot",
      [](Algebra const& a, std::string const& module) {
        return render_module_quiver(a, parse_module_spec(a.quiver(), module));
      },
      py::arg("algebra"), py::arg("module"));
  m.def(
      "run_cli",
      [](std::vector<std::string> const& args) {
        std::vector<char const*> argv{"bqalg"};
        for (auto const& s : args) {
          argv.push_back(s.c_str());
        }
        std::ostringstream out;
        std::ostringstream err;
        int const code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
