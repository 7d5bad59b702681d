// Python bindings. Big integers cross the boundary as Python ints (via
// their decimal string form); chains and diagrams keep their C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qh/catalog.hpp"
#include "qh/chains.hpp"
#include "qh/diagrams.hpp"
#include "qh/homology.hpp"
#include "qh/quandle.hpp"

namespace py = pybind11;
using namespace qh;

namespace {

py::int_ to_py(const Int& x) { return py::int_(py::str(x.get_str())); }

Int from_py(const py::int_& x) {
    return Int(py::str(static_cast<py::handle>(x)).cast<std::string>());
}

py::list to_py(const std::vector<Int>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

py::list to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict group_dict(const HomologyGroup& h) {
    py::list gens;
    for (const auto& g : h.generators()) gens.append(g);
    return py::dict(py::arg("free_rank") = h.free_rank(), py::arg("torsion") = to_py(h.torsion()),
                    py::arg("generators") = gens, py::arg("str") = h.str());
}

py::dict class_dict(const ClassCoordinates& c) {
    return py::dict(py::arg("free") = to_py(c.free_part),
                    py::arg("torsion") = to_py(c.torsion_part), py::arg("zero") = c.is_zero());
}

std::map<std::string, std::string> dict_assignments(const py::dict& d) {
    std::map<std::string, std::string> out;
    for (auto item : d)
        out[py::str(item.first).cast<std::string>()] = py::str(item.second).cast<std::string>();
    return out;
}

}  // namespace

PYBIND11_MODULE(_qh, m) {
    m.doc() = "integral rack/degenerate/quandle homology of finite quandles";

    py::register_exception<std::domain_error>(m, "MathError", PyExc_ValueError);

    py::class_<FiniteQuandle>(m, "Quandle")
        .def(py::init([](const std::vector<std::vector<int>>& table,
                         const std::vector<std::string>& labels) {
                 return FiniteQuandle(table, labels);
             }),
             py::arg("table"), py::arg("labels") = std::vector<std::string>{})
        .def("__len__", &FiniteQuandle::size)
        .def("op", &FiniteQuandle::op)
        .def("op_inv", &FiniteQuandle::op_inv)
        .def("label", &FiniteQuandle::label)
        .def("element_of",
             [](const FiniteQuandle& q, const std::string& s) -> py::object {
                 auto e = q.element_of(s);
                 return e ? py::cast(*e) : py::none();
             })
        .def("table", &FiniteQuandle::table)
        .def("is_quandle", &FiniteQuandle::is_quandle)
        .def("__str__", [](const FiniteQuandle& q) { return format_quandle(q); })
        .def("__repr__", [](const FiniteQuandle& q) {
            return "<Quandle of order " + std::to_string(q.size()) + ">";
        });

    m.def("load_quandle", &load_quandle, py::arg("source"),
          "catalog key (e.g. 'dihedral:3') or path to a table file");
    m.def("parse_quandle", &parse_quandle);
    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog_entries()) out.append(py::make_tuple(e.key, e.description));
        return out;
    });
    m.def("orbits", &orbits);
    m.def("is_hom", [](const std::vector<int>& map, const FiniteQuandle& src,
                       const FiniteQuandle& tgt) { return check_hom(map, src, tgt).ok; });

    py::class_<Chain>(m, "Chain")
        .def(py::init<int>(), py::arg("degree"))
        .def_property_readonly("degree", &Chain::degree)
        .def("empty", &Chain::empty)
        .def("add",
             [](Chain& c, const std::vector<int>& xs, const py::int_& k) {
                 c.add(Tuple{xs}, from_py(k));
             })
        .def("coefficient",
             [](const Chain& c, const std::vector<int>& xs) {
                 return to_py(c.coefficient(Tuple{xs}));
             })
        .def("terms",
             [](const Chain& c) {
                 py::list out;
                 for (const auto& [t, k] : c.terms())
                     out.append(py::make_tuple(t.xs, to_py(k)));
                 return out;
             })
        .def("__add__", [](const Chain& a, const Chain& b) { return a + b; })
        .def("__sub__", [](const Chain& a, const Chain& b) { return a - b; })
        .def("__neg__", [](const Chain& c) { return -c; })
        .def("__eq__", [](const Chain& a, const Chain& b) { return a == b; })
        .def("__str__", [](const Chain& c) { return format_chain(c); });

    m.def("parse_chain",
          [](const std::string& text, const FiniteQuandle& q) { return parse_chain(text, q); });
    m.def("format_chain", &format_chain);
    m.def("boundary",
          [](const FiniteQuandle& q, const Chain& c) { return boundary(q, c); });
    m.def("project",
          [](const Chain& c, const std::string& v) { return project(c, parse_variant(v)); });
    m.def("basis_size", [](const FiniteQuandle& q, const std::string& v, int n) {
        return basis_size(q, parse_variant(v), n);
    });

    m.def("homology", [](const FiniteQuandle& q, const std::string& v, int degree) {
        return group_dict(homology(q, parse_variant(v), degree));
    });
    m.def("is_cycle", [](const FiniteQuandle& q, const Chain& c, const std::string& v) {
        return is_cycle(q, c, parse_variant(v));
    });
    m.def("is_boundary",
          [](const FiniteQuandle& q, const Chain& c, const std::string& v) -> py::object {
              auto w = is_boundary(q, c, parse_variant(v));
              return w ? py::cast(*w) : py::none();
          });
    m.def("class_of", [](const FiniteQuandle& q, const Chain& c, const std::string& v) {
        return class_dict(class_of(q, c, parse_variant(v)));
    });
    m.def("induced_map", [](const FiniteQuandle& src, const FiniteQuandle& tgt,
                            const std::vector<int>& map, const std::string& v, int degree) {
        QuandleHom f(src, tgt, map);
        InducedMap im = induced_map(f, parse_variant(v), degree);
        return py::dict(py::arg("source") = im.source->str(), py::arg("target") = im.target->str(),
                        py::arg("matrix") = to_py(im.matrix),
                        py::arg("surjective") = im.surjective,
                        py::arg("injective") = im.injective);
    });
    m.def("les_boundary_map", [](const FiniteQuandle& q, int degree) {
        ConnectingMap c = les_boundary_map(q, degree);
        return py::dict(py::arg("source") = c.source->str(), py::arg("target") = c.target->str(),
                        py::arg("matrix") = to_py(c.matrix), py::arg("zero") = c.is_zero);
    });
    m.def("les_check", [](const FiniteQuandle& q, int degree) {
        LesReport r = les_check(q, degree);
        return py::dict(py::arg("hd_n") = r.hd_n.str(), py::arg("hr_n") = r.hr_n.str(),
                        py::arg("hq_n") = r.hq_n.str(), py::arg("hd_n_minus_1") = r.hd_nm1.str(),
                        py::arg("exact_at_r") = r.exact_at_r, py::arg("exact_at_q") = r.exact_at_q,
                        py::arg("exact") = r.exact());
    });

    py::class_<Diagram1>(m, "Diagram")
        .def("__str__", [](const Diagram1& d) { return format_diagram1(d); })
        .def("is_closed", &Diagram1::is_closed);
    py::class_<Diagram0>(m, "MarkedCircles")
        .def("__str__", [](const Diagram0& d) { return format_diagram0(d); });

    m.def("parse_diagram", &parse_diagram1);
    m.def("parse_marked_circles", &parse_diagram0);
    m.def("validate_diagram", [](const Diagram1& d) { return validate(d).problems; });
    m.def("validate_marked_circles", [](const Diagram0& d) { return validate(d).problems; });
    m.def("coloring_count", [](const Diagram1& d, const FiniteQuandle& q) {
        return enumerate_colorings(d, q).size();
    });
    m.def("colorings", [](const Diagram1& d, const FiniteQuandle& q) {
        py::list out;
        for (const auto& c : enumerate_colorings(d, q)) {
            py::dict e;
            for (const auto& [edge, color] : c.edge_colors) e[py::str(edge)] = q.label(color);
            out.append(e);
        }
        return out;
    });
    m.def("extract_chain", [](const Diagram1& d, const FiniteQuandle& q,
                              const py::dict& a) -> py::tuple {
        auto assignments = dict_assignments(a);
        bool shadow = false;
        for (const auto& r : d.regions)
            if (assignments.count(r)) shadow = true;
        if (shadow) {
            ShadowColoring s = make_shadow_coloring(d, q, assignments);
            auto rep = check_shadow(s);
            if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
            return py::make_tuple(extract_chain(s), endpoint_chain(s));
        }
        Coloring c = make_coloring(d, q, assignments);
        auto rep = check_coloring(c);
        if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
        return py::make_tuple(extract_chain(c), py::none());
    });
    m.def("extract_chain0", [](const Diagram0& d, const FiniteQuandle& q, const py::dict& a) {
        ShadowColoring0 s = make_shadow_coloring(d, q, dict_assignments(a));
        auto rep = check_shadow(s);
        if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
        return extract_chain(s);
    });
    m.def("shadow_extend",
          [](const Diagram1& d, const FiniteQuandle& q, const py::dict& a,
             const std::string& region, const std::string& element) -> py::object {
              Coloring c = make_coloring(d, q, dict_assignments(a));
              auto rep = check_coloring(c);
              if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
              auto e = q.element_of(element);
              if (!e) throw std::invalid_argument("unknown element " + element);
              auto s = shadow_extend(c, region, *e);
              if (!s) return py::none();
              py::dict out;
              for (const auto& [r, color] : s->region_colors) out[py::str(r)] = q.label(color);
              return out;
          });
    m.def("realize_two_cycle",
          [](const FiniteQuandle& q, const Chain& c, const std::string& v) {
              Realized r = realize_two_cycle(q, c, parse_variant(v));
              return py::make_tuple(format_diagram1(*r.diagram), format_coloring(r.coloring));
          });
    m.def("presentation", [](const Diagram1& d) { return fundamental_presentation(d).str(); });
    m.def("hom_count", [](const Diagram1& d, const FiniteQuandle& q) {
        return count_homs(fundamental_presentation(d), q);
    });
}
