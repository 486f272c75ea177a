#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumfree/json_io.hpp"

namespace py = pybind11;
using namespace sumfree;

namespace {

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

json py_to_json(const py::object& obj) {
    py::module_ pyjson = py::module_::import("json");
    std::string dumped = py::cast<std::string>(pyjson.attr("dumps")(obj));
    return json::parse(dumped);
}

Certificate cert_from_py(const py::dict& d) { return certificate_from_json(py_to_json(d)); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GF(2^n) zero-inverse-sum subspace toolkit";

    py::class_<FieldCtx>(m, "Field")
        .def(py::init<unsigned>(), py::arg("n"))
        .def(py::init([](unsigned n, const std::string& modulus_hex) {
                 return FieldCtx(n, BinPoly::from_hex(modulus_hex));
             }),
             py::arg("n"), py::arg("modulus_hex"))
        .def_property_readonly("n", &FieldCtx::degree)
        .def_property_readonly("modulus_hex", [](const FieldCtx& f) { return f.modulus().to_hex(); })
        .def("add", &FieldCtx::add)
        .def("mul", &FieldCtx::mul)
        .def("pow", &FieldCtx::pow)
        .def("inv", &FieldCtx::inv)
        .def("inv_euclid", &FieldCtx::inv_euclid)
        .def("frobenius", &FieldCtx::frobenius)
        .def("rel_trace", &FieldCtx::rel_trace)
        .def("normal_element", &FieldCtx::find_normal_element)
        .def("apply_sigma_poly",
             [](const FieldCtx& f, u64 g_bits, FieldElem x) {
                 return f.apply_sigma_poly(BinPoly::from_bits(g_bits), x);
             })
        .def("moore_det",
             [](const FieldCtx& f, const std::vector<FieldElem>& v) { return moore_det(f, v); })
        .def("inverse_sum",
             [](const FieldCtx& f, const std::vector<FieldElem>& v) { return inverse_sum(f, v); })
        .def("solve_first_var", [](const FieldCtx& f, const std::vector<FieldElem>& vp) {
            return solve_first_var(f, vp);
        });

    m.def("default_modulus_hex", [](unsigned n) { return default_modulus(n).to_hex(); });

    m.def("factor_xn_plus_1",
          [](unsigned n) { return json_to_py(factorization_to_json(factorize_xn_minus_1(n))); });

    m.def("poly_order", [](const std::string& hex) { return poly_order(BinPoly::from_hex(hex)); });

    m.def("table1", [](unsigned d_max) { return json_to_py(table1_to_json(table1(d_max))); });

    m.def("kset", [](unsigned n) { return json_to_py(kn_report_to_json(compute_Kn(n))); });

    m.def("c2", [](unsigned n) { return json_to_py(c2_to_json(n, cor_c2_enumerate(n))); });

    m.def("cc3", [](unsigned n) { return json_to_py(cc3_to_json(n, cor_cc3_enumerate(n))); });

    m.def(
        "witness",
        [](unsigned n, unsigned k, u64 seed, u64 budget) -> py::object {
            FieldCtx F(n);
            if (k >= 2 && n % k == 0)
                return json_to_py(certificate_to_json(witness_subfield(F, k)));
            for (auto& real : compute_Kn(n).realizations) {
                if (real.k == k)
                    return json_to_py(certificate_to_json(witness_from_factor(F, real.shaped)));
            }
            if (n % 2 == 0 && k >= 2 && k + 2 <= n) {
                if (auto c = witness_even_direct(F, k))
                    return json_to_py(certificate_to_json(*c));
            }
            if (auto c = witness_search_random(F, k, seed, budget))
                return json_to_py(certificate_to_json(*c));
            return py::none();
        },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0, py::arg("budget") = 20000);

    m.def("witness_exhaustive", [](unsigned n, unsigned k, u64 cap) -> py::object {
        FieldCtx F(n);
        auto r = witness_search_exhaustive(F, k, cap);
        py::dict out;
        out["enumerated"] = static_cast<u64>(r.enumerated);
        if (r.status == ExhaustiveStatus::Found) {
            out["result"] = "found";
            out["certificate"] = json_to_py(certificate_to_json(*r.cert));
        } else if (r.status == ExhaustiveStatus::SumFree) {
            out["result"] = "sum-free";
        } else {
            out["result"] = "over-cap";
        }
        return out;
    }, py::arg("n"), py::arg("k"), py::arg("cap") = (u64(1) << 28));

    m.def("verify", [](const py::dict& cert) { return verify_certificate(cert_from_py(cert)); });

    m.def(
        "classify",
        [](unsigned n, unsigned k, u64 budget, u64 seed) {
            return json_to_py(status_to_json(classify(n, k, budget, seed)));
        },
        py::arg("n"), py::arg("k"), py::arg("budget") = 2000, py::arg("seed") = 0);

    m.def("lang_weil", [](unsigned n, unsigned k) {
        auto lw = lang_weil_applicable(n, k);
        py::dict out;
        out["small"] = lw.small_k;
        out["large"] = lw.large_k;
        return out;
    });
}
