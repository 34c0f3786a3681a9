#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <cstdio>

#include "mixnorm/harness.hpp"

namespace py = pybind11;
using namespace mixnorm;

namespace {

ExtReal to_ext(py::handle h) {
  if (py::isinstance<ExtReal>(h)) return h.cast<ExtReal>();
  if (py::isinstance<py::int_>(h)) {
    long long v = h.cast<long long>();
    return ExtReal(v);
  }
  if (py::isinstance<py::float_>(h)) {
    double v = h.cast<double>();
    if (std::isinf(v)) return ExtReal::inf();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return ExtReal::parse(buf);
  }
  return ExtReal::parse(h.cast<std::string>());
}

std::vector<ExtReal> to_ext_list(const py::sequence& seq) {
  std::vector<ExtReal> out;
  for (py::handle h : seq) out.push_back(to_ext(h));
  return out;
}

Spaces to_spaces(const py::sequence& seq) { return Spaces(to_ext_list(seq)); }
Exponents to_exps(const py::sequence& seq) { return Exponents(to_ext_list(seq)); }

// sigma comes in 1-based (or None for the identity), matching the CLI.
Perm to_perm(const py::object& sigma, std::size_t m) {
  if (sigma.is_none()) return Perm::identity(m);
  return Perm::from_one_based(sigma.cast<std::vector<std::size_t>>());
}

py::list ext_list_out(const std::vector<ExtReal>& v) {
  py::list out;
  for (const auto& e : v) out.append(e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "mixed-norm inequality toolkit for non-negative multilinear forms";

  py::class_<ExtReal>(mod, "ExtReal")
      .def(py::init([](py::handle h) { return to_ext(h); }))
      .def_static("inf", &ExtReal::inf)
      .def_property_readonly("is_inf", &ExtReal::is_inf)
      .def("__str__", &ExtReal::str)
      .def("__repr__", [](const ExtReal& e) { return "ExtReal('" + e.str() + "')"; })
      .def("__float__", &ExtReal::to_double)
      .def("__eq__", [](const ExtReal& a, py::handle b) { return a == to_ext(b); })
      .def("__lt__", [](const ExtReal& a, py::handle b) { return a < to_ext(b); })
      .def("__hash__", [](const ExtReal& e) { return py::hash(py::str(e.str())); });

  py::class_<NonNegTensor>(mod, "Tensor")
      .def(py::init<std::vector<std::size_t>, std::vector<double>>(),
           py::arg("shape"), py::arg("data"))
      .def_static("zeros", &NonNegTensor::zeros)
      .def_static("load", &NonNegTensor::load)
      .def_property_readonly("shape", &NonNegTensor::shape)
      .def_property_readonly("data", &NonNegTensor::data)
      .def_property_readonly("order", &NonNegTensor::order)
      .def("to_json", [](const NonNegTensor& a) { return a.to_json().dump(); })
      .def("__repr__", [](const NonNegTensor& a) {
        std::string s = "Tensor(shape=[";
        for (std::size_t i = 0; i < a.shape().size(); ++i)
          s += (i ? "," : "") + std::to_string(a.shape()[i]);
        return s + "])";
      });

  py::class_<NormEstimate> est(mod, "NormEstimate");
  est.def_readonly("value", &NormEstimate::value)
      .def_readonly("iterations", &NormEstimate::iterations)
      .def_readonly("restarts_used", &NormEstimate::restarts_used)
      .def_readonly("converged", &NormEstimate::converged)
      .def_readonly("witness", &NormEstimate::witness)
      .def_readonly("seed", &NormEstimate::seed)
      .def_readonly("objective_trace", &NormEstimate::objective_trace)
      .def_property_readonly("exact", [](const NormEstimate& e) {
        return e.kind == NormEstimate::Kind::exact;
      });

  py::class_<OracleResult>(mod, "OracleResult")
      .def_readonly("estimate", &OracleResult::estimate)
      .def_readonly("discretization_bound", &OracleResult::discretization_bound);

  mod.def("conjugate", [](py::handle p) { return conjugate(to_ext(p)); });
  mod.def("delta", [](const py::sequence& p) {
    auto v = to_ext_list(p);
    return delta(v);
  });
  mod.def("critical_exponents",
          [](const py::sequence& p, const py::object& sigma) {
            Spaces sp = to_spaces(p);
            return ext_list_out(critical_exponents(sp, to_perm(sigma, sp.size())).q);
          },
          py::arg("p"), py::arg("sigma") = py::none());
  mod.def("admissible",
          [](const py::sequence& p, const py::sequence& q, const py::object& sigma) {
            Spaces sp = to_spaces(p);
            auto res = admissible(sp, to_perm(sigma, sp.size()), to_exps(q));
            return py::make_tuple(res.ok, res.failing_k
                                              ? py::cast(*res.failing_k)
                                              : py::object(py::none()));
          },
          py::arg("p"), py::arg("q"), py::arg("sigma") = py::none());
  mod.def("i0_index", [](const py::sequence& p) -> py::object {
    auto r = i0_index(to_spaces(p));
    return r ? py::cast(*r) : py::object(py::none());
  });
  mod.def("reduced_spaces", [](const py::sequence& p) {
    return ext_list_out(reduced_spaces(to_spaces(p)).p);
  });

  mod.def("mixed_norm",
          [](const NonNegTensor& a, const py::sequence& q, const py::object& sigma) {
            Exponents eq = to_exps(q);
            return mixed_norm(a, {to_perm(sigma, eq.size()), std::move(eq)});
          },
          py::arg("a"), py::arg("q"), py::arg("sigma") = py::none());
  mod.def("contract",
          [](const NonNegTensor& a, std::size_t slot, const std::vector<double>& x) {
            return contract(a, slot, x);
          });
  mod.def("permute_axes",
          [](const NonNegTensor& a, const std::vector<std::size_t>& sigma) {
            return permute_axes(a, Perm::from_one_based(sigma));
          });
  mod.def("evaluate",
          [](const NonNegTensor& a, const std::vector<std::vector<double>>& w) {
            return evaluate(a, w);
          });

  mod.def("diagonal", &diagonal, py::arg("m"), py::arg("n"));
  mod.def("pinned_diagonal",
          [](std::size_t m, std::size_t n, std::size_t pin_count,
             const py::object& sigma) {
            return pinned_diagonal(m, n, pin_count, to_perm(sigma, m));
          },
          py::arg("m"), py::arg("n"), py::arg("pin_count"),
          py::arg("sigma") = py::none());
  mod.def("diagonal_norm_closed_form",
          [](std::size_t n, const py::sequence& p) {
            return diagonal_norm_closed_form(n, to_spaces(p));
          });
  mod.def("pinned_norm_closed_form",
          [](std::size_t n, const py::sequence& p, std::size_t pin_count,
             const py::object& sigma) {
            Spaces sp = to_spaces(p);
            return pinned_norm_closed_form(n, sp, pin_count,
                                           to_perm(sigma, sp.size()));
          },
          py::arg("n"), py::arg("p"), py::arg("pin_count"),
          py::arg("sigma") = py::none());
  mod.def("reduce", [](const NonNegTensor& d, const py::sequence& p) {
    auto [a, r] = reduce(d, to_spaces(p));
    return py::make_tuple(std::move(a), ext_list_out(r.p));
  });

  mod.def("alternating_ascent",
          [](const NonNegTensor& a, const py::sequence& p, int restarts,
             double tol, int max_iter, std::uint64_t seed) {
            return alternating_ascent(a, to_spaces(p),
                                      {restarts, tol, max_iter, seed});
          },
          py::arg("a"), py::arg("p"), py::arg("restarts") = 8,
          py::arg("tol") = 1e-10, py::arg("max_iter") = 1000,
          py::arg("seed") = 0);
  mod.def("grid_oracle",
          [](const NonNegTensor& a, const py::sequence& p, int resolution,
             std::size_t eval_cap) {
            return grid_oracle(a, to_spaces(p), resolution, eval_cap);
          },
          py::arg("a"), py::arg("p"), py::arg("resolution"),
          py::arg("eval_cap") = std::size_t{100'000'000});

  mod.def("sharpness_experiment",
          [](const py::sequence& p, const std::vector<std::size_t>& ns,
             const py::object& sigma) {
            Spaces sp = to_spaces(p);
            py::list out;
            for (const auto& row :
                 sharpness_experiment(sp, to_perm(sigma, sp.size()), ns))
              out.append(py::make_tuple(row.n, row.lhs, row.norm, row.ratio));
            return out;
          },
          py::arg("p"), py::arg("n"), py::arg("sigma") = py::none());
  mod.def("falsify",
          [](const py::sequence& p, const py::sequence& q,
             const std::vector<std::size_t>& ns, const py::object& sigma) {
            Spaces sp = to_spaces(p);
            auto res = falsify(sp, to_perm(sigma, sp.size()), to_exps(q), ns);
            py::list rows;
            for (const auto& row : res.rows)
              rows.append(py::make_tuple(row.n, row.lhs, row.norm, row.ratio));
            return py::make_tuple(res.failing_k, rows);
          },
          py::arg("p"), py::arg("q"), py::arg("n"), py::arg("sigma") = py::none());
  mod.def("verify_random",
          [](const py::sequence& p, const py::sequence& q, const py::object& sigma,
             int trials, std::size_t max_dim, std::uint64_t seed, int restarts,
             const std::string& tail) {
            Spaces sp = to_spaces(p);
            VerifyOptions opts;
            opts.trials = trials;
            opts.max_dim = max_dim;
            opts.seed = seed;
            opts.restarts = restarts;
            opts.tail = tail == "pareto" ? TailKind::pareto : TailKind::uniform;
            auto rep = verify_random(sp, to_perm(sigma, sp.size()), to_exps(q), opts);
            py::dict out;
            out["trials"] = rep.trials;
            out["holds"] = rep.holds;
            out["inconclusive"] = rep.inconclusive;
            out["violated"] = rep.violated;
            out["worst_ratio"] = rep.worst_ratio;
            return out;
          },
          py::arg("p"), py::arg("q"), py::arg("sigma") = py::none(),
          py::arg("trials") = 100, py::arg("max_dim") = 6, py::arg("seed") = 0,
          py::arg("restarts") = 8, py::arg("tail") = "uniform");
  mod.def("bayart_check", [](const py::sequence& p, py::handle rho) {
    return bayart_check(to_spaces(p), to_ext(rho));
  });
}
