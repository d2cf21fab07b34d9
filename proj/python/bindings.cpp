#include "incr/avar.hpp"
#include "incr/engine.hpp"
#include "incr/errors.hpp"
#include "incr/memo.hpp"
#include "incr/oracle.hpp"
#include "incr/repl.hpp"
#include "incr/sheet.hpp"
#include "incr/value.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace incr;

namespace {

// value <-> python: numbers/bools/strings/None map to themselves, pairs map
// to 2-tuples, node ids pass through as NodeId. Python lists come in as
// proper list structure (chained pairs ending in None).
py::object to_py(const value& v) {
    if (v.is_nil()) return py::none();
    if (v.is_num()) return py::float_(v.as_num());
    if (v.is_bool()) return py::bool_(v.as_bool());
    if (v.is_sym()) return py::str(v.as_sym());
    if (v.is_node()) return py::cast(v.as_node());
    return py::make_tuple(to_py(v.car()), to_py(v.cdr()));
}

value from_py(py::handle h) {
    if (h.is_none()) return nil();
    if (py::isinstance<py::bool_>(h)) return boolean(h.cast<bool>());
    if (py::isinstance<py::int_>(h) || py::isinstance<py::float_>(h)) {
        return num(h.cast<double>());
    }
    if (py::isinstance<py::str>(h)) return sym(h.cast<std::string>());
    if (py::isinstance<node_id>(h)) return node_ref(h.cast<node_id>());
    if (py::isinstance<py::tuple>(h)) {
        const auto t = h.cast<py::tuple>();
        if (t.size() != 2) throw py::type_error("pairs must be 2-tuples");
        return cons(from_py(t[0]), from_py(t[1]));
    }
    if (py::isinstance<py::list>(h)) {
        value out = nil();
        const auto l = h.cast<py::list>();
        for (py::ssize_t i = l.size(); i > 0; --i) out = cons(from_py(l[i - 1]), out);
        return out;
    }
    throw py::type_error("cannot convert to a graph value: " +
                         std::string(py::str(py::type::handle_of(h))));
}

computation wrap_computation(py::function fn) {
    return [fn](engine&) { return from_py(fn()); };
}

std::vector<value> args_to_values(const py::args& args) {
    std::vector<value> out;
    out.reserve(args.size());
    for (py::handle h : args) out.push_back(from_py(h));
    return out;
}

// Wraps a python function as a memo_fn (child call gets unpacked arguments).
memo_fn wrap_memo_fn(py::function fn) {
    return [fn](std::span<const value> args) {
        py::tuple t(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) t[i] = to_py(args[i]);
        return from_py(fn(*t));
    };
}

py::list ids_to_list(const id_set& s) {
    py::list out;
    for (const node_id id : s) out.append(py::cast(id));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Incremental computation graph: thunks, refs, adaptive variables, "
              "and a spreadsheet built on them";

    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<usage_error>(m, "UsageError", PyExc_RuntimeError);
    py::register_exception<cycle_error>(m, "CycleError", PyExc_RuntimeError);
    py::register_exception<eval_error>(m, "EvalError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<node_id>(m, "NodeId")
        .def_readonly("engine_tag", &node_id::engine_tag)
        .def_readonly("index", &node_id::index)
        .def("__eq__", [](node_id a, py::handle b) {
            return py::isinstance<node_id>(b) && a == b.cast<node_id>();
        })
        .def("__hash__", [](node_id a) { return node_id_hash{}(a); })
        .def("__repr__", [](node_id a) {
            return "NodeId(" + std::to_string(a.engine_tag) + ", " +
                   std::to_string(a.index) + ")";
        });

    py::enum_<node_kind>(m, "NodeKind")
        .value("THUNK", node_kind::thunk)
        .value("REF", node_kind::ref);

    py::class_<engine>(m, "Engine")
        .def(py::init<>())
        .def("make_thunk",
             [](engine& e, py::function fn) { return e.make_thunk(wrap_computation(fn)); },
             py::arg("fn"), "Create a thunk whose body is a zero-argument callable.")
        .def("suspend",
             [](engine& e, py::function fn) { return e.suspend(wrap_computation(fn)); },
             py::arg("fn"))
        .def("make_ref", [](engine& e, py::handle v) { return e.make_ref(from_py(v)); },
             py::arg("value"))
        .def("ref_set",
             [](engine& e, node_id a, py::handle v) { e.ref_set(a, from_py(v)); },
             py::arg("ref"), py::arg("value"))
        .def("compute", [](engine& e, node_id a) { return to_py(e.compute(a)); })
        .def("force", [](engine& e, node_id a) { return to_py(e.force(a)); })
        .def("deep_force", [](engine& e, py::handle v) { return to_py(e.deep_force(from_py(v))); })
        .def("dirty", &engine::dirty)
        .def("add_edge", &engine::add_edge, py::arg("super"), py::arg("sub"))
        .def("del_edge", &engine::del_edge, py::arg("super"), py::arg("sub"))
        .def("kind_of", &engine::kind_of)
        .def("is_clean", &engine::is_clean)
        .def("subs", [](const engine& e, node_id a) { return ids_to_list(e.subs(a)); })
        .def("supers", [](const engine& e, node_id a) { return ids_to_list(e.supers(a)); })
        .def("cached_result",
             [](const engine& e, node_id a) -> py::object {
                 const auto r = e.cached_result(a);
                 return r ? to_py(*r) : py::none();
             })
        .def("adapting",
             [](const engine& e) -> py::object {
                 const auto a = e.adapting();
                 return a ? py::cast(*a) : py::none();
             })
        .def("node_count", &engine::node_count)
        .def("recompute_count", &engine::recompute_count)
        .def("recomputes_of", &engine::recomputes_of)
        .def("dirty_flip_count", &engine::dirty_flip_count);

    py::class_<avar>(m, "AVar")
        .def(py::init([](engine& e, py::function fn) {
                 return avar(e, wrap_computation(fn));
             }),
             py::arg("engine"), py::arg("fn"),
             "An adaptive variable holding a suspended expression.")
        .def("get", [](const avar& a, engine& e) { return to_py(a.get(e)); })
        .def("set", [](avar& a, engine& e, py::function fn) { a.set(e, wrap_computation(fn)); })
        .def("ref_node", &avar::ref_node);

    m.def("memoize", [](py::function fn) {
        auto f = memoize(wrap_memo_fn(std::move(fn)));
        return py::cpp_function([f](py::args args) {
            const auto vals = args_to_values(args);
            return to_py(f(std::span<const value>(vals.data(), vals.size())));
        });
    });

    m.def("memoize_to_node", [](py::object eng, py::function fn) {
        auto& e = eng.cast<engine&>();
        auto f = memoize_to_node(e, wrap_memo_fn(std::move(fn)));
        // eng rides in the closure to keep the engine alive.
        return py::cpp_function([f, eng](py::args args) {
            const auto vals = args_to_values(args);
            return f(std::span<const value>(vals.data(), vals.size()));
        });
    });

    m.def("memoize_in", [](py::object eng, py::function fn) {
        auto& e = eng.cast<engine&>();
        auto f = memoize_in(e, wrap_memo_fn(std::move(fn)));
        return py::cpp_function([f, eng](py::args args) {
            const auto vals = args_to_values(args);
            return to_py(f(std::span<const value>(vals.data(), vals.size())));
        });
    });

    py::class_<sheet>(m, "Sheet")
        .def(py::init<>())
        .def("cell_set",
             [](sheet& s, const std::string& name, const std::string& formula) {
                 s.cell_set(name, std::string_view(formula));
             },
             py::arg("name"), py::arg("formula"))
        .def("cell_get", &sheet::cell_get)
        .def("cells",
             [](const sheet& s) {
                 py::list out;
                 for (const auto& info : s.cells()) {
                     out.append(py::make_tuple(
                         info.name, info.val ? py::object(py::float_(*info.val))
                                             : py::object(py::none())));
                 }
                 return out;
             })
        .def("stats_take", &sheet::stats_take);

    m.def("run_script",
          [](sheet& s, const std::string& script) {
              std::istringstream in(script);
              std::ostringstream out;
              const auto res = run_repl(s, in, out);
              return py::make_tuple(out.str(), res.errors);
          },
          py::arg("sheet"), py::arg("script"),
          "Feed a newline-separated command script to a sheet; returns "
          "(output, error_count).");

    py::class_<formula_graph>(m, "FormulaGraph")
        .def(py::init<>())
        .def("set",
             [](formula_graph& g, const std::string& name, const std::string& formula) {
                 g.set(name, std::string_view(formula));
             })
        .def("eval", &formula_graph::eval);

    m.def("random_trace", &random_trace, py::arg("seed"), py::arg("n_cells"),
          py::arg("n_ops"));

    m.def("format_number", &format_number);
}
