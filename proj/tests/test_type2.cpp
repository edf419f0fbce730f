#include <doctest.h>

#include "angelesco/moments.hpp"
#include "angelesco/type2.hpp"
#include "support/checks.hpp"

using namespace angelesco;
using angelesco::testing::check_zero_poly;
using angelesco::testing::close;

namespace {

void check_type2_suite(const std::vector<Type2ResidualEntry>& rs) {
    Real tol = rel_tol(10);
    for (const auto& e : rs) CHECK(abs(e.res.value) <= tol * std::max(e.res.scale, Real(1)));
}

}  // namespace

TEST_CASE("explicit diagonal polynomial") {
    SUBCASE("n = 0 and n = 1 closed forms") {
        StarWeight w(3, Real("0.5"));
        CHECK(type2_diagonal(0, w).poly.degree() == 0);
        CHECK(type2_diagonal(0, w).poly.coeff(0) == Complex(Real(1)));

        Poly L1 = type2_diagonal(1, w).poly;
        CHECK(L1.degree() == 3);
        CHECK(L1.coeff(3) == Complex(Real(1)));
        CHECK(close(L1.coeff(0).re, -(w.beta + 1) / 3, rel_tol(8)));
        CHECK(L1.coeff(1).is_zero());
        CHECK(L1.coeff(2).is_zero());
    }
    SUBCASE("omega symmetry is structural: only powers divisible by r") {
        StarWeight w(4, Real("-0.5"));
        Poly L = type2_diagonal(5, w).poly;
        for (long k = 0; k <= L.degree(); ++k)
            if (k % 4 != 0) CHECK(L.coeff(k).is_zero());
        CHECK(L.coeff(20) == Complex(Real(1)));  // monic exactly
    }
    SUBCASE("orthogonality residuals at n = 6, r = 2, beta = 0") {
        StarWeight w(2, Real(0));
        std::vector<long> degrees{6, 6};
        check_type2_suite(type2_residuals(type2_diagonal(6, w).poly, w, degrees));
    }
}

TEST_CASE("derivative construction agrees with the explicit expansion") {
    for (int r : {1, 2, 3, 4}) {
        StarWeight w(r, Real("0.5"));
        for (long n : {0L, 1L, 5L, 8L}) {
            Poly a = type2_diagonal(n, w).poly;
            Poly b = type2_rodrigues(n, w).poly;
            CHECK((a - b).max_abs_coeff() <= rel_tol(10) * a.max_abs_coeff());
        }
    }
}

TEST_CASE("above-diagonal polynomials") {
    SUBCASE("n = 0 is the monic degree-one ray polynomial") {
        StarWeight w(3, Real("0.5"));
        for (int k = 1; k <= 3; ++k) {
            Poly L = type2_above(0, k, w).poly;
            CHECK(L.degree() == 1);
            Complex expected = -(root_of_unity(3, k - 1) *
                                 gamma_ratio((w.beta + 2) / 3, (w.beta + 1) / 3));
            CHECK(abs(L.coeff(0) - expected) <= rel_tol(8) * abs(expected));
            check_zero_poly(L - type2_degree_one(k, w.beta, 3), Real(1));
        }
    }
    SUBCASE("orthogonality with lopsided degrees at n = 3, r = 2, k = 2") {
        StarWeight w(2, Real("0.5"));
        std::vector<long> degrees{3, 4};
        check_type2_suite(type2_residuals(type2_above(3, 2, w).poly, w, degrees));
    }
    SUBCASE("derivative construction matches for n <= 6") {
        StarWeight w(2, Real("0.25"));
        for (long n : {0L, 2L, 6L})
            for (int k = 1; k <= 2; ++k) {
                Poly a = type2_above(n, k, w).poly;
                Poly b = type2_above_rodrigues(n, k, w).poly;
                CHECK((a - b).max_abs_coeff() <= rel_tol(10) * a.max_abs_coeff());
            }
    }
}

TEST_CASE("general multi-index solve agrees with the closed forms") {
    StarWeight w(2, Real("0.5"));
    check_zero_poly(type2_from_moments({3, 3}, w) - type2_diagonal(3, w).poly,
                    type2_diagonal(3, w).poly.max_abs_coeff());
    StarWeight w3(3, Real("0.25"));
    check_zero_poly(type2_from_moments({2, 3, 2}, w3) - type2_above(2, 2, w3).poly,
                    type2_above(2, 2, w3).poly.max_abs_coeff());
    CHECK(type2_from_moments({0, 0}, w).degree() == 0);
}

TEST_CASE("recurrence coefficient b") {
    SUBCASE("phase pattern b_k / b_1 = omega^{k-1}") {
        StarWeight w(4, Real(0));
        Complex b1 = type2_recurrence_coeff_b(3, 1, w);
        for (int k = 2; k <= 4; ++k)
            CHECK(abs(type2_recurrence_coeff_b(3, k, w) / b1 - root_of_unity(4, k - 1)) <=
                  rel_tol(8));
    }
    SUBCASE("n = 0 consistency with the degree-one polynomial") {
        StarWeight w(3, Real("0.5"));
        for (int k = 1; k <= 3; ++k) {
            Complex b = type2_recurrence_coeff_b(0, k, w);
            Complex c0 = type2_degree_one(k, w.beta, 3).coeff(0);
            CHECK(abs(b + c0) <= rel_tol(8) * abs(b));
        }
    }
    SUBCASE("b matches the value forced by the recurrence") {
        StarWeight w(3, Real(0));
        long n = 4;
        int k = 2;
        Poly L = type2_diagonal(n, w).poly;
        Poly R0 = L.shifted(1);
        R0 -= type2_above(n, k, w).poly;
        std::vector<long> indices(3, n);
        for (int l = 1; l <= 3; ++l) {
            indices[static_cast<size_t>(l - 1)] = n - 1;
            R0 -= type2_from_moments(indices, w) * type1_coeff_a(n, l, w);
            indices[static_cast<size_t>(l - 1)] = n;
        }
        // x L has no x^{rn} term, so the remainder at that power is b * L's top.
        Complex b_fit = R0.coeff(3 * n);
        CHECK(abs(b_fit - type2_recurrence_coeff_b(n, k, w)) <= rel_tol(8) * abs(b_fit));
        CHECK_THROWS_AS(type2_recurrence_coeff_b(2, 1, StarWeight(1, Real(0))), std::domain_error);
    }
}

TEST_CASE("type II nearest-neighbor recurrence residuals vanish") {
    {
        StarWeight w(2, Real(0));
        check_zero_poly(type2_recurrence_residual(2, 1, w),
                        type2_above(2, 1, w).poly.max_abs_coeff());
    }
    {
        StarWeight w(3, Real("0.5"));
        check_zero_poly(type2_recurrence_residual(3, 2, w),
                        type2_above(3, 2, w).poly.max_abs_coeff());
    }
}

TEST_CASE("lowering coefficients and identity") {
    SUBCASE("b_1 = n r and the r = 1 reduction") {
        CHECK(type2_lowering_coeffs(7, 3)[0] == 21);
        std::vector<Real> b1 = type2_lowering_coeffs(5, 1);
        REQUIRE(b1.size() == 1);
        CHECK(b1[0] == 5);
    }
    SUBCASE("hypothesis n >= r+1 is enforced") {
        CHECK_THROWS_AS(type2_lowering_coeffs(3, 3), std::domain_error);
    }
    SUBCASE("identity residual vanishes at n = 8, r = 3, beta = 0.5") {
        StarWeight w(3, Real("0.5"));
        Real scale = type2_diagonal(8, w).poly.derivative().max_abs_coeff();
        check_zero_poly(type2_lowering_residual(8, w), scale);
    }
    SUBCASE("r = 1 reduction lowers the classical monic Laguerre") {
        StarWeight w(1, Real("0.5"));
        Real scale = type2_diagonal(6, w).poly.derivative().max_abs_coeff();
        check_zero_poly(type2_lowering_residual(6, w), scale);
    }
}

TEST_CASE("raising identity for beta > 0") {
    for (const char* beta : {"0.5", "1.5"})
        for (long n : {0L, 3L, 7L}) {
            StarWeight w(2, Real(beta));
            Real scale =
                weighted_derivative(WeightedForm{w.beta, type2_diagonal(n, w).poly}, w).poly.max_abs_coeff();
            check_zero_poly(type2_raising_residual(n, w), scale);
        }
    CHECK_THROWS_AS(type2_raising_residual(3, StarWeight(2, Real("-0.5"))), std::domain_error);
}

TEST_CASE("differential equation") {
    SUBCASE("r = 1 reduces to the Laguerre coefficient c_0 = n") {
        std::vector<Real> c = type2_ode_coeffs(9, 1);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == 9);
    }
    SUBCASE("hypothesis beta > r-2 is enforced") {
        StarWeight w(3, Real("0.5"));
        CHECK_THROWS_AS(type2_ode_residual(4, w, {}), std::domain_error);
    }
    SUBCASE("residual at n = 5, r = 2, beta = 1") {
        StarWeight w(2, Real(1));
        std::vector<Complex> samples{Complex(Real(1) / 2), Complex(Real(2), Real(1))};
        CHECK(type2_ode_residual(5, w, samples) <= rel_tol(12));
    }
    SUBCASE("direct n = 1, r = 3 instance") {
        StarWeight w(3, Real(2));
        Poly L = type2_diagonal(1, w).poly;  // x^3 - (beta+1)/3 = x^3 - 1
        CHECK(close(L.coeff(0).re, Real(-1), rel_tol(8)));
        CHECK(type2_ode_residual(1, w, {Complex(Real("0.8"))}) <= rel_tol(12));
    }
}
