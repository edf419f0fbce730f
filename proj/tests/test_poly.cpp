#include <doctest.h>

#include "angelesco/poly.hpp"
#include "angelesco/type1.hpp"
#include "support/checks.hpp"

using namespace angelesco;
using angelesco::testing::check_zero_poly;

TEST_CASE("evaluation") {
    CHECK(Poly().eval(Complex(Real(3), Real(1))).is_zero());
    Poly xm1({Complex(Real(-1)), Complex(Real(1))});  // x - 1
    CHECK(xm1.eval(Complex(Real(1))).is_zero());

    // kernel_poly(1) with r = 1, beta = 0 is x - 1
    StarWeight w(1, Real(0));
    Poly p1 = kernel_poly(1, w);
    CHECK(abs(p1.eval(Complex(Real(1)))) <= rel_tol(5));
    CHECK((p1 - xm1).max_abs_coeff() <= rel_tol(5));
}

TEST_CASE("derivative") {
    CHECK(Poly::constant(Complex(Real(7))).derivative().is_zero());
    Poly x5 = Poly::monomial(5, Complex(Real(1)));
    Poly d = x5.derivative();
    CHECK(d.degree() == 4);
    CHECK(d.coeff(4) == Complex(Real(5)));

    // kernel' = n kernel(n-1; beta+1), coefficient-wise
    StarWeight w(3, Real("0.5"));
    Poly lhs = kernel_poly(5, w).derivative();
    Poly rhs = kernel_poly_shifted(4, Real("1.5"), 3) * Complex(Real(5));
    check_zero_poly(lhs - rhs, lhs.max_abs_coeff());
}

TEST_CASE("linear composition") {
    Poly p({Complex(Real(2)), Complex(Real(-1)), Complex(Real(4))});
    CHECK((p.compose_scaled(Complex(Real(1))) - p).max_abs_coeff() == 0);

    Poly x2 = Poly::monomial(2, Complex(Real(1)));
    Complex i = root_of_unity(4, 1);
    CHECK(x2.compose_scaled(i).coeff(2) == Complex(Real(-1)));

    // p(s x) evaluated at omega^{j-1} t equals p(t) for s = omega^{-j+1}
    StarWeight w(3, Real("0.25"));
    Poly pk = kernel_poly(4, w);
    Complex s = root_of_unity(3, -2);
    Complex t(Real("0.8"), Real("0.1"));
    Complex lhs = pk.compose_scaled(s).eval(root_of_unity(3, 2) * t);
    CHECK(abs(lhs - pk.eval(t)) <= rel_tol(5) * abs(pk.eval(t)));
}

TEST_CASE("round trip of scaling") {
    StarWeight w(4, Real(0));
    Poly p = kernel_poly(6, w);
    Complex s(Real("1.5"), Real("-0.25"));
    Poly back = p.compose_scaled(s).compose_scaled(Complex(Real(1)) / s);
    CHECK((back - p).max_abs_coeff() <= rel_tol(5) * p.max_abs_coeff());
}

TEST_CASE("weighted derivative basics") {
    StarWeight w(3, Real("0.5"));
    // One step from (c = beta+1, q = 1): poly = (beta+1) - r x^r.
    WeightedForm f{w.beta + 1, Poly::constant(Complex(Real(1)))};
    WeightedForm g = weighted_derivative(f, w);
    CHECK(g.exponent == w.beta);
    CHECK(g.poly.degree() == 3);
    CHECK(g.poly.coeff(0) == Complex(Real("1.5")));
    CHECK(g.poly.coeff(3) == Complex(Real(-3)));

    // Degree grows by exactly r per step.
    WeightedForm h = weighted_derivative(g, w);
    CHECK(h.poly.degree() == g.poly.degree() + 3);
}

TEST_CASE("weighted derivative is linear in the polynomial part") {
    StarWeight w(2, Real("0.75"));
    Poly q1 = kernel_poly(3, w);
    Poly q2 = kernel_poly(5, w);
    Real c("1.25");
    Poly lhs = weighted_derivative(WeightedForm{c, q1 + q2}, w).poly;
    Poly rhs = weighted_derivative(WeightedForm{c, q1}, w).poly +
               weighted_derivative(WeightedForm{c, q2}, w).poly;
    check_zero_poly(lhs - rhs, lhs.max_abs_coeff());
}

TEST_CASE("zero polynomial bookkeeping") {
    Poly z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    CHECK(z.shifted(3).is_zero());
    Poly p({Complex(Real(1)), Complex(Real(-1))});
    CHECK((p - p).is_zero());
    CHECK((p * Complex()).is_zero());
}
