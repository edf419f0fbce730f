#include <doctest.h>

#include "angelesco/jacobi.hpp"
#include "angelesco/type1.hpp"
#include "support/checks.hpp"
#include "support/quadrature.hpp"

using namespace angelesco;
using angelesco::testing::close;
using angelesco::testing::tanh_sinh;

TEST_CASE("jacobi kernel coefficients") {
    StarWeight w(2, Real("0.5"));
    JacobiParams jp(Real("2.5"), w);

    Poly p0 = jacobi_kernel(0, jp);
    Real expected0 = exp(log_gamma(jp.alpha + w.beta / 2 + 1) - log_gamma(jp.alpha + 1) -
                         log_gamma(w.beta / 2 + 1));
    CHECK(close(p0.coeff(0).re, expected0, rel_tol(8) * expected0));

    long n = 4;
    Poly p = jacobi_kernel(n, jp);
    CHECK(p.degree() == n);
    Real lead = exp(log_gamma(n + jp.alpha + (w.beta + n) / 2 + 1) - log_gamma(n + jp.alpha + 1) -
                    log_gamma((w.beta + n) / 2 + 1));
    CHECK(close(p.coeff(n).re, lead, rel_tol(8) * lead));
    for (long k = 0; k <= n; ++k) CHECK(p.coeff(k).im == 0);

    CHECK_THROWS_AS(JacobiParams(Real(-1), w), std::domain_error);
}

TEST_CASE("jacobi kernel orthogonality by quadrature at r = 1") {
    StarWeight w(1, Real("0.3"));
    JacobiParams jp(Real("2.5"), w);
    Poly p = jacobi_kernel(2, jp);
    for (long j = 1; j <= 2; ++j) {
        Real integral = tanh_sinh(
            [&](const Real& x) -> Real {
                return p.eval(Complex(x)).re * pow(x, Real(j - 1) + w.beta) *
                       pow(1 - x, jp.alpha);
            },
            Real(0), Real(1), Real("1e-18"));
        CHECK(abs(integral) <= Real("1e-12") * p.max_abs_coeff());
    }
}

TEST_CASE("limit towards the star kernel") {
    SUBCASE("errors shrink with alpha") {
        StarWeight w(2, Real("0.5"));
        Real e3 = type1_limit_error(5, w, Real(1000));
        Real e4 = type1_limit_error(5, w, Real(10000));
        CHECK(e4 < e3);
    }
    SUBCASE("first-order rate: error * alpha is stable") {
        StarWeight w(3, Real(0));
        Real p3 = type1_limit_error(4, w, Real(1000)) * 1000;
        Real p4 = type1_limit_error(4, w, Real(10000)) * 10000;
        Real p5 = type1_limit_error(4, w, Real(100000)) * 100000;
        CHECK(p4 <= 2 * p3);
        CHECK(p5 <= 2 * p4);
        CHECK(p3 <= 2 * p4);
    }
    SUBCASE("hand-computable r = 1, beta = 0, n = 1 instance") {
        StarWeight w(1, Real(0));
        // scaled jacobi kernel: x (alpha+2)/alpha - 1; target: x - 1;
        // error = 2/alpha exactly.
        Real err = type1_limit_error(1, w, Real(1000000));
        CHECK(err <= Real("1e-5"));
        CHECK(close(err * 1000000, Real(2), Real("1e-10")));
    }
    SUBCASE("monotone over a small grid") {
        for (int r : {1, 2, 3})
            for (const char* beta : {"-0.5", "0", "1"})
                for (long n : {1L, 4L, 8L}) {
                    StarWeight w(r, Real(beta));
                    Real prev;
                    bool first = true;
                    for (int e = 2; e <= 5; ++e) {
                        Real cur = type1_limit_error(n, w, pow(Real(10), e));
                        if (!first) CHECK(cur < prev);
                        prev = cur;
                        first = false;
                    }
                }
    }
}
