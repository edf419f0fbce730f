#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "angelesco/asymptotics.hpp"
#include "angelesco/jacobi.hpp"
#include "angelesco/type1.hpp"
#include "angelesco/type2.hpp"
#include "angelesco/verification.hpp"
#include "angelesco/zeros.hpp"

namespace py = pybind11;
using namespace angelesco;

namespace {

double to_double(const Real& x) { return x.convert_to<double>(); }

std::vector<std::pair<double, double>> poly_coeffs(const Poly& p) {
    std::vector<std::pair<double, double>> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(to_double(c.re), to_double(c.im));
    return out;
}

std::vector<std::string> poly_coeffs_str(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.re.str(precision()));
    return out;
}

StarWeight make_weight(int r, const std::string& beta) { return StarWeight(r, Real(beta)); }

std::vector<double> zeros_as_double(const ZeroSet& zs) {
    std::vector<double> out;
    out.reserve(zs.zeros.size());
    for (const auto& x : zs.zeros) out.push_back(to_double(x));
    return out;
}

py::dict report_to_dict(const CheckReport& rep) {
    py::dict d;
    d["check"] = rep.check;
    d["pass"] = rep.pass();
    d["max_residual"] = to_double(rep.max_residual());
    py::list items;
    for (const auto& i : rep.items) {
        py::dict it;
        it["name"] = i.name;
        it["residual"] = to_double(i.residual);
        it["tolerance"] = to_double(i.tolerance);
        it["pass"] = i.pass;
        it["skipped"] = i.skipped;
        items.append(it);
    }
    d["items"] = items;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Laguerre-Angelesco multiple orthogonal polynomials on the r-star";

    m.def("set_precision", &set_precision, py::arg("digits"),
          "Set the working precision in significant decimal digits (minimum 15).");
    m.def("precision", &precision, "Current working precision in decimal digits.");

    m.def(
        "kernel_coeffs",
        [](long n, int r, const std::string& beta) {
            return poly_coeffs(kernel_poly(n, make_weight(r, beta)));
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0",
        "Coefficients (re, im) of the degree-n kernel polynomial.");
    m.def(
        "kernel_coeffs_str",
        [](long n, int r, const std::string& beta) {
            return poly_coeffs_str(kernel_poly(n, make_weight(r, beta)));
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0",
        "Real kernel coefficients as full-precision decimal strings.");

    m.def(
        "type1_diagonal_coeffs",
        [](long n, int r, const std::string& beta) {
            std::vector<std::vector<std::pair<double, double>>> out;
            for (const auto& p : type1_diagonal(n, make_weight(r, beta)).polys)
                out.push_back(poly_coeffs(p));
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0");
    m.def(
        "type1_above_coeffs",
        [](long n, int k, int r, const std::string& beta) {
            std::vector<std::vector<std::pair<double, double>>> out;
            for (const auto& p : type1_above(n, k, make_weight(r, beta)).polys)
                out.push_back(poly_coeffs(p));
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("beta") = "0");
    m.def(
        "type1_below_coeffs",
        [](long n, int k, int r, const std::string& beta) {
            std::vector<std::vector<std::pair<double, double>>> out;
            for (const auto& p : type1_below(n, k, make_weight(r, beta)).polys)
                out.push_back(poly_coeffs(p));
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("beta") = "0");

    m.def(
        "type2_diagonal_coeffs",
        [](long n, int r, const std::string& beta) {
            return poly_coeffs(type2_diagonal(n, make_weight(r, beta)).poly);
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0");
    m.def(
        "type2_above_coeffs",
        [](long n, int k, int r, const std::string& beta) {
            return poly_coeffs(type2_above(n, k, make_weight(r, beta)).poly);
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("beta") = "0");

    m.def(
        "real_zeros",
        [](const std::string& family, long n, int r, const std::string& beta, bool rescale) {
            StarWeight w = make_weight(r, beta);
            ZeroSet zs = family == "type2" ? real_zeros_type2(n, w) : real_zeros_type1_kernel(n, w);
            if (rescale) zs = rescale_zeros(zs, n, r);
            return zeros_as_double(zs);
        },
        py::arg("family"), py::arg("n"), py::arg("r"), py::arg("beta") = "0",
        py::arg("rescale") = false, "family: 'p-kernel' or 'type2'.");
    m.def(
        "zero_bound", [](long n, int r) { return to_double(zero_bound(n, r)); }, py::arg("n"),
        py::arg("r"));

    m.def(
        "alpha", [](int r) { return to_double(alpha_r(r)); }, py::arg("r"),
        "Rescaling constant ((r+1)/r)^((r+1)/r).");
    m.def(
        "density_type1",
        [](double x, int r) { return to_double(density_type1(Real(x), r)); }, py::arg("x"),
        py::arg("r"));
    m.def(
        "density_type2_per_ray",
        [](double x, int r) { return to_double(density_type2_per_ray(Real(x), r)); }, py::arg("x"),
        py::arg("r"));
    m.def(
        "cdf_type1", [](double x, int r) { return to_double(cdf_type1(Real(x), r)); }, py::arg("x"),
        py::arg("r"));
    m.def(
        "ks_distance",
        [](const std::string& family, long n, int r, const std::string& beta) {
            StarWeight w = make_weight(r, beta);
            ZeroSet zs = family == "type2" ? real_zeros_type2(n, w) : real_zeros_type1_kernel(n, w);
            return to_double(ks_distance(rescale_zeros(zs, n, r), r));
        },
        py::arg("family"), py::arg("n"), py::arg("r"), py::arg("beta") = "0");
    m.def(
        "w_equation_residual",
        [](double theta, int r, const std::string& kind) {
            return to_double(w_equation_residual(
                Real(theta), r, kind == "type2" ? WEquationKind::type2 : WEquationKind::type1));
        },
        py::arg("theta"), py::arg("r"), py::arg("kind") = "type1");

    m.def(
        "jacobi_kernel_coeffs",
        [](long n, int r, const std::string& beta, const std::string& alpha) {
            return poly_coeffs(jacobi_kernel(n, JacobiParams(Real(alpha), make_weight(r, beta))));
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0", py::arg("alpha") = "100");
    m.def(
        "type1_limit_error",
        [](long n, int r, const std::string& beta, const std::string& alpha) {
            return to_double(type1_limit_error(n, make_weight(r, beta), Real(alpha)));
        },
        py::arg("n"), py::arg("r"), py::arg("beta") = "0", py::arg("alpha") = "1000");

    m.def(
        "verify",
        [](const std::string& check, long n, int r, const std::string& beta) {
            StarWeight w = make_weight(r, beta);
            CheckReport rep;
            if (check == "orthogonality")
                rep = verify_orthogonality(n, w);
            else if (check == "recurrence")
                rep = verify_recurrence(n, w);
            else if (check == "ode-type1")
                rep = verify_ode_type1(n, w);
            else if (check == "ode-type2")
                rep = verify_ode_type2(n, w);
            else if (check == "rodrigues")
                rep = verify_rodrigues(n, w);
            else if (check == "lowering-raising")
                rep = verify_lowering_raising(n, w);
            else if (check == "limit")
                rep = verify_limit(n, w);
            else if (check == "w-equation")
                rep = verify_w_equation(r);
            else
                throw std::invalid_argument("unknown check '" + check + "'");
            return report_to_dict(rep);
        },
        py::arg("check"), py::arg("n"), py::arg("r"), py::arg("beta") = "0");

#ifdef ANGELESCO_VERSION
    m.attr("__version__") = ANGELESCO_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
