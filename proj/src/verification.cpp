#include "angelesco/verification.hpp"

#include <algorithm>

#include "angelesco/asymptotics.hpp"
#include "angelesco/jacobi.hpp"
#include "angelesco/moments.hpp"
#include "angelesco/type1.hpp"
#include "angelesco/type2.hpp"

namespace angelesco {

namespace {

Real rel_residual(const Real& value, const Real& scale) {
    return scale > 0 ? Real(value / scale) : value;
}

CheckResult item(std::string name, Real residual, Real tolerance) {
    bool pass = residual <= tolerance;
    return CheckResult{std::move(name), std::move(residual), std::move(tolerance), pass, false};
}

CheckResult skipped_item(std::string name) {
    return CheckResult{std::move(name), Real(0), Real(0), true, true};
}

// Largest normalized residual of a "vanish everywhere, 1 at the end" suite.
Real type1_suite_residual(const std::vector<Residual>& rs) {
    Real worst(0);
    for (size_t i = 0; i < rs.size(); ++i) {
        Real dev = (i + 1 == rs.size()) ? abs(rs[i].value - Complex(Real(1)))
                                        : abs(rs[i].value);
        Real scale = std::max(rs[i].scale, Real(1));
        Real rel = rel_residual(dev, scale);
        if (rel > worst) worst = rel;
    }
    return worst;
}

Real type2_suite_residual(const std::vector<Type2ResidualEntry>& rs) {
    Real worst(0);
    for (const auto& e : rs) {
        Real rel = rel_residual(abs(e.res.value), e.res.scale);
        if (rel > worst) worst = rel;
    }
    return worst;
}

}  // namespace

CheckReport verify_orthogonality(long n, const StarWeight& w) {
    CheckReport rep{"orthogonality", {}};
    Real tol = rel_tol(10);

    {
        Poly p = kernel_poly(n, w);
        Real worst(0);
        for (long j = 1; j <= n; ++j) {
            Residual res = ray_integral(p, w.r * j - 1, 1, w);
            worst = std::max(worst, rel_residual(abs(res.value), res.scale));
        }
        rep.items.push_back(item("kernel orthogonality", worst, tol));

        Residual norm = ray_integral(p, w.r * n + w.r - 1, 1, w);
        Real expected = factorial_real(n) / pow(Real(w.r), n + 1);
        Real dev = abs(norm.value - Complex(expected)) / std::max(norm.scale, expected);
        rep.items.push_back(item("kernel normalization", dev, tol));
    }

    rep.items.push_back(item(
        "type1 diagonal",
        type1_suite_residual(type1_residuals(type1_diagonal(n, w).polys, w, w.r * (n + 1))), tol));
    for (int k = 1; k <= w.r; ++k)
        rep.items.push_back(item(
            "type1 above k=" + std::to_string(k),
            type1_suite_residual(type1_residuals(type1_above(n, k, w).polys, w, w.r * n + 1)),
            tol));
    if (w.r > 1 && n >= 1)
        for (int k = 1; k <= w.r; ++k)
            rep.items.push_back(item(
                "type1 below k=" + std::to_string(k),
                type1_suite_residual(type1_residuals(type1_below(n, k, w).polys, w, w.r * n - 1)),
                tol));

    {
        std::vector<long> degrees(static_cast<size_t>(w.r), n);
        rep.items.push_back(item(
            "type2 diagonal",
            type2_suite_residual(type2_residuals(type2_diagonal(n, w).poly, w, degrees)), tol));
        for (int k = 1; k <= w.r; ++k) {
            degrees[static_cast<size_t>(k - 1)] = n + 1;
            rep.items.push_back(item(
                "type2 above k=" + std::to_string(k),
                type2_suite_residual(type2_residuals(type2_above(n, k, w).poly, w, degrees)),
                tol));
            degrees[static_cast<size_t>(k - 1)] = n;
        }
    }
    return rep;
}

CheckReport verify_recurrence(long n, const StarWeight& w) {
    if (w.r < 2) throw std::domain_error("the recurrence check requires r > 1");
    if (n < 1) throw std::domain_error("the recurrence check requires n >= 1");
    CheckReport rep{"recurrence", {}};
    Real tol = rel_tol(10);

    // Scale of the largest constituent term, per ray.
    std::vector<Real> scales(static_cast<size_t>(w.r), Real(0));
    {
        Type1Vector D = type1_diagonal(n - 1, w);
        RecurrenceCoeffs rc = type1_recurrence_coeffs(n, 1, w);
        Real amax(0);
        for (const auto& a : rc.a) amax = std::max(amax, abs(a));
        Real bmax = abs(rc.b);
        Type1Vector B = type1_below(n, 1, w);
        for (int j = 0; j < w.r; ++j) {
            Real s = D.polys[static_cast<size_t>(j)].max_abs_coeff() * std::max(Real(1), bmax);
            s = std::max(s, B.polys[static_cast<size_t>(j)].max_abs_coeff());
            for (int l = 1; l <= w.r; ++l)
                s = std::max(s, amax * type1_above(n, l, w).polys[static_cast<size_t>(j)].max_abs_coeff());
            scales[static_cast<size_t>(j)] = s;
        }
    }
    Real worst1(0);
    for (int j = 1; j <= w.r; ++j)
        for (int k = 1; k <= w.r; ++k) {
            Poly res = type1_recurrence_residual(n, j, k, w);
            worst1 = std::max(worst1,
                              rel_residual(res.max_abs_coeff(), scales[static_cast<size_t>(j - 1)]));
        }
    rep.items.push_back(item("type1 nearest-neighbor", worst1, tol));

    Real worst2(0);
    Real scale2 = type2_above(n, 1, w).poly.max_abs_coeff();
    scale2 = std::max(scale2, type2_diagonal(n, w).poly.max_abs_coeff());
    for (int k = 1; k <= w.r; ++k) {
        Poly res = type2_recurrence_residual(n, k, w);
        worst2 = std::max(worst2, rel_residual(res.max_abs_coeff(), scale2));
    }
    rep.items.push_back(item("type2 nearest-neighbor", worst2, tol));
    return rep;
}

CheckReport verify_ode_type1(long n, const StarWeight& w) {
    CheckReport rep{"ode-type1", {}};
    Poly p = kernel_poly(n, w);
    std::vector<Real> c = type1_ode_coeffs(n, w.r);
    Real scale = p.derivative(w.r + 1).max_abs_coeff();
    scale = std::max(scale, p.derivative(w.r).max_abs_coeff() * abs(Real(w.beta + w.r)));
    for (int k = 0; k <= w.r; ++k)
        scale = std::max(scale, p.derivative(k).max_abs_coeff() * abs(c[static_cast<size_t>(k)]));
    Real res = rel_residual(type1_ode_residual(n, w).max_abs_coeff(), scale);
    rep.items.push_back(item("kernel differential equation", res, rel_tol(10)));
    return rep;
}

CheckReport verify_ode_type2(long n, const StarWeight& w) {
    if (!(w.beta > w.r - 2))
        throw std::domain_error("the type II differential equation requires beta > r-2");
    CheckReport rep{"ode-type2", {}};
    std::vector<Complex> samples{Complex(Real(37) / 100), Complex(Real(5) / 4),
                                 Complex(Real(2) / 5, Real(3) / 10)};
    Real res = type2_ode_residual(n, w, samples);
    rep.items.push_back(item("type2 differential equation", res, rel_tol(12)));
    return rep;
}

CheckReport verify_rodrigues(long n, const StarWeight& w) {
    CheckReport rep{"rodrigues", {}};
    Real tol = rel_tol(10);
    {
        Poly a = type2_diagonal(n, w).poly;
        Poly b = type2_rodrigues(n, w).poly;
        rep.items.push_back(
            item("diagonal", rel_residual((a - b).max_abs_coeff(), a.max_abs_coeff()), tol));
    }
    for (int k = 1; k <= w.r; ++k) {
        Poly a = type2_above(n, k, w).poly;
        Poly b = type2_above_rodrigues(n, k, w).poly;
        rep.items.push_back(item("above k=" + std::to_string(k),
                                 rel_residual((a - b).max_abs_coeff(), a.max_abs_coeff()), tol));
    }
    return rep;
}

CheckReport verify_lowering_raising(long n, const StarWeight& w) {
    CheckReport rep{"lowering-raising", {}};
    Real tol = rel_tol(10);

    if (n >= 1) {
        Poly p = kernel_poly(n, w);
        rep.items.push_back(item(
            "type1 lowering",
            rel_residual(type1_lowering_residual(n, w).max_abs_coeff(),
                         p.derivative().max_abs_coeff()),
            tol));
    } else {
        rep.items.push_back(skipped_item("type1 lowering (requires n >= 1)"));
    }

    {
        Real scale = weighted_derivative(WeightedForm{w.beta, kernel_poly(n, w)}, w).poly.max_abs_coeff();
        rep.items.push_back(item(
            "type1 raising", rel_residual(type1_raising_residual(n, w).max_abs_coeff(), scale), tol));
    }

    if (w.beta > 0) {
        Real scale =
            weighted_derivative(WeightedForm{w.beta, type2_diagonal(n, w).poly}, w).poly.max_abs_coeff();
        rep.items.push_back(item(
            "type2 raising", rel_residual(type2_raising_residual(n, w).max_abs_coeff(), scale), tol));
    } else {
        rep.items.push_back(skipped_item("type2 raising (requires beta > 0)"));
    }

    if (n >= w.r + 1) {
        Real scale = type2_diagonal(n, w).poly.derivative().max_abs_coeff();
        rep.items.push_back(item(
            "type2 lowering", rel_residual(type2_lowering_residual(n, w).max_abs_coeff(), scale),
            tol));
    } else {
        rep.items.push_back(skipped_item("type2 lowering (requires n >= r+1)"));
    }
    return rep;
}

CheckReport verify_limit(long n, const StarWeight& w) {
    CheckReport rep{"limit", {}};
    std::vector<Real> errors;
    for (int e = 2; e <= 5; ++e) errors.push_back(type1_limit_error(n, w, pow(Real(10), e)));

    bool monotone = true;
    for (size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1])) monotone = false;
    rep.items.push_back(CheckResult{"errors decrease along alpha = 1e2..1e5", errors.back(),
                                    errors.front(), monotone, false});

    // First-order rate: error * alpha settles; allow a factor-2 drift over
    // the last decade.
    Real p1 = errors[errors.size() - 2] * pow(Real(10), 4);
    Real p2 = errors.back() * pow(Real(10), 5);
    bool bounded = p2 <= 2 * p1 && p1 <= 2 * p2;
    rep.items.push_back(CheckResult{"error*alpha bounded", p2, 2 * p1, bounded, false});
    return rep;
}

CheckReport verify_w_equation(int r) {
    CheckReport rep{"w-equation", {}};
    Real tol = rel_tol(10);
    Real tmax = const_pi() / (r + 1);
    Real worst1(0), worst2(0);
    for (int i = 1; i <= 100; ++i) {
        Real theta = tmax * i / 101;
        worst1 = std::max(worst1, w_equation_residual(theta, r, WEquationKind::type1));
        worst2 = std::max(worst2, w_equation_residual(theta, r, WEquationKind::type2));
    }
    rep.items.push_back(item("type1 parametric solution", worst1, tol));
    rep.items.push_back(item("type2 parametric solution", worst2, tol));
    return rep;
}

}  // namespace angelesco
