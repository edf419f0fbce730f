#include "angelesco/type1.hpp"

namespace angelesco {

DiagonalIndex DiagonalIndex::below(long n, int r, int k) {
    if (n < 1) throw std::domain_error("below-diagonal shift requires n >= 1");
    if (r <= 1) throw std::domain_error("below-diagonal shift requires r > 1");
    return {n, r, IndexShift{k, -1}};
}

Poly kernel_poly_shifted(long n, const Real& beta, int r) {
    if (n < 0) throw std::domain_error("kernel degree must be non-negative");
    if (r < 1) throw std::domain_error("kernel requires r >= 1");
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    Real binom(1);
    int sign = (n % 2 == 0) ? 1 : -1;
    for (long k = 0; k <= n; ++k) {
        c[static_cast<size_t>(k)] = Complex(Real(sign) * binom * reciprocal_gamma((beta + k) / r + 1));
        binom = binom * (n - k) / (k + 1);
        sign = -sign;
    }
    return Poly(std::move(c));
}

Poly kernel_poly(long n, const StarWeight& w) { return kernel_poly_shifted(n, w.beta, w.r); }

Real kernel_leading_coeff(long n, const Real& beta, int r) {
    return reciprocal_gamma((beta + n) / r + 1);
}

Real binomial_alternating_sum(long n, long m) {
    if (m < 0 || m > n) throw std::invalid_argument("binomial_alternating_sum requires 0 <= m <= n");
    Real acc(0);
    Real binom(1);
    int sign = (n % 2 == 0) ? 1 : -1;
    for (long k = 0; k <= n; ++k) {
        Real km = (m == 0) ? Real(1) : pow(Real(k), m);  // 0^0 = 1
        acc += Real(sign) * binom * km;
        binom = binom * (n - k) / (k + 1);
        sign = -sign;
    }
    return acc;
}

Type1Vector type1_diagonal(long n, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type1_diagonal requires n >= 0");
    Poly p = kernel_poly(n, w);
    Real scale = exp(n * log(Real(w.r)) - log_gamma(Real(n + 1)));
    std::vector<Poly> polys;
    polys.reserve(static_cast<size_t>(w.r));
    for (int j = 1; j <= w.r; ++j)
        polys.push_back(p.compose_scaled(root_of_unity(w.r, -(j - 1))) * Complex(scale));
    return Type1Vector{std::move(polys), DiagonalIndex::diagonal(n + 1, w.r), w.beta, precision()};
}

Type1Vector type1_above(long n, int k, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type1_above requires n >= 0");
    if (k < 1 || k > w.r) throw std::invalid_argument("shift direction k must be in 1..r");

    // Building blocks kernel(n; beta-m) / nu_n^{(beta-m)}, m = 0..r-1. Every
    // Gamma argument stays positive: (beta-m+j)/r + 1 >= (beta+1)/r > 0.
    std::vector<Poly> q;
    q.reserve(static_cast<size_t>(w.r));
    for (int m = 0; m < w.r; ++m) {
        Real nu_inv = exp(log_gamma((w.beta - m + n) / w.r + 1));
        q.push_back(kernel_poly_shifted(n, w.beta - m, w.r) * Complex(nu_inv));
    }

    Real tau = exp(log_gamma(Real(n + 1)) - n * log(Real(w.r)) + log_gamma((w.beta + n + 1) / w.r));
    Complex tau_inv(Real(1) / tau);

    // A_l = (1/tau) sum_m omega^{lm} q_m; for l != 0 the x^n coefficient is a
    // complete sum of r-th roots of unity and vanishes identically.
    std::vector<Poly> A;
    A.reserve(static_cast<size_t>(w.r));
    for (int l = 0; l < w.r; ++l) {
        Poly acc;
        for (int m = 0; m < w.r; ++m) acc += q[static_cast<size_t>(m)] * root_of_unity(w.r, static_cast<long>(l) * m);
        acc *= tau_inv;
        if (l != 0) acc.set_coeff(n, Complex());
        A.push_back(std::move(acc));
    }

    std::vector<Poly> polys;
    polys.reserve(static_cast<size_t>(w.r));
    Complex front = root_of_unity(w.r, -(k - 1));
    for (int j = 1; j <= w.r; ++j) {
        int l = ((j - k) % w.r + w.r) % w.r;
        polys.push_back(A[static_cast<size_t>(l)].compose_scaled(root_of_unity(w.r, -(j - 1))) * front);
    }
    return Type1Vector{std::move(polys), DiagonalIndex::above(n, w.r, k), w.beta, precision()};
}

Type1Vector type1_below(long n, int k, const StarWeight& w) {
    if (n < 1) throw std::domain_error("type1_below requires n >= 1");
    if (w.r <= 1) throw std::domain_error("type1_below is only defined for r > 1");
    if (k < 1 || k > w.r) throw std::invalid_argument("shift direction k must be in 1..r");

    Real gamma_norm =
        exp(log_gamma(Real(n)) - (n - 1) * log(Real(w.r)) - log_gamma((w.beta + n - 1) / w.r + 1));
    Complex inv_norm(Real(1) / gamma_norm);

    Poly p_beta_minus = kernel_poly_shifted(n - 1, w.beta - 1, w.r);
    Poly p_beta = kernel_poly(n - 1, w);
    Real nu_beta = kernel_leading_coeff(n - 1, w.beta, w.r);
    Real nu_beta_minus = kernel_leading_coeff(n - 1, w.beta - 1, w.r);

    std::vector<Poly> polys;
    polys.reserve(static_cast<size_t>(w.r));
    for (int j = 1; j <= w.r; ++j) {
        Complex s = root_of_unity(w.r, -(j - 1));
        Poly t = p_beta_minus.compose_scaled(s) * (root_of_unity(w.r, j - 1) * nu_beta);
        t -= p_beta.compose_scaled(s) * (root_of_unity(w.r, k - 1) * nu_beta_minus);
        t *= inv_norm;
        // At j = k the leading x^{n-1} term cancels exactly.
        if (j == k) t.set_coeff(n - 1, Complex());
        polys.push_back(std::move(t));
    }
    return Type1Vector{std::move(polys), DiagonalIndex::below(n, w.r, k), w.beta, precision()};
}

Complex type1_coeff_a(long n, int l, const StarWeight& w) {
    if (n < 1) throw std::domain_error("recurrence coefficient a requires n >= 1");
    if (l < 1 || l > w.r) throw std::invalid_argument("direction must be in 1..r");
    Real mag = Real(n) / (Real(w.r) * w.r) *
               gamma_ratio((n + w.beta + 1) / w.r, (n + w.beta - 1) / w.r + 1);
    return root_of_unity(w.r, 2L * (l - 1)) * mag;
}

Complex type1_coeff_b(long n, int k, const StarWeight& w) {
    if (w.r <= 1) throw std::domain_error("recurrence coefficient b is only defined for r > 1");
    if (n < 1) throw std::domain_error("recurrence coefficient b requires n >= 1");
    if (k < 1 || k > w.r) throw std::invalid_argument("direction must be in 1..r");
    Real mag = gamma_ratio((n + w.beta - 1) / w.r + 1, (n + w.beta - 2) / w.r + 1);
    return root_of_unity(w.r, k - 1) * mag;
}

RecurrenceCoeffs type1_recurrence_coeffs(long n, int k, const StarWeight& w) {
    RecurrenceCoeffs out;
    out.a.reserve(static_cast<size_t>(w.r));
    for (int l = 1; l <= w.r; ++l) out.a.push_back(type1_coeff_a(n, l, w));
    out.b = type1_coeff_b(n, k, w);
    return out;
}

Poly type1_recurrence_residual(long n, int j, int k, const StarWeight& w) {
    if (n < 1) throw std::domain_error("recurrence residual requires n >= 1");
    if (w.r < 2) throw std::domain_error("recurrence residual requires r >= 2");
    if (j < 1 || j > w.r || k < 1 || k > w.r)
        throw std::invalid_argument("ray and direction must be in 1..r");

    // type1_diagonal(n-1) carries the multi-index (n,...,n).
    Poly D = type1_diagonal(n - 1, w).polys[static_cast<size_t>(j - 1)];
    Poly R = D.shifted(1);
    R -= type1_below(n, k, w).polys[static_cast<size_t>(j - 1)];
    R -= D * type1_coeff_b(n, k, w);
    for (int l = 1; l <= w.r; ++l)
        R -= type1_above(n, l, w).polys[static_cast<size_t>(j - 1)] * type1_coeff_a(n, l, w);
    return R;
}

std::vector<Real> type1_ode_coeffs(long n, int r) {
    if (n < 0 || r < 1) throw std::domain_error("ode coefficients require n >= 0 and r >= 1");
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        int sign = ((r + 1 + k) % 2 == 0) ? 1 : -1;
        c.push_back(Real(sign) * binomial_real(r, k) * r * pochhammer(Real(n - r + 1), r - k));
    }
    return c;
}

Poly type1_ode_residual(long n, const StarWeight& w) {
    Poly p = kernel_poly(n, w);
    std::vector<Real> c = type1_ode_coeffs(n, w.r);
    Poly R = p.derivative(w.r + 1).shifted(1);
    R += p.derivative(w.r) * Complex(w.beta + w.r);
    for (int k = 0; k <= w.r; ++k)
        R += p.derivative(k).shifted(k) * Complex(c[static_cast<size_t>(k)]);
    return R;
}

Poly type1_lowering_residual(long n, const StarWeight& w) {
    if (n < 1) throw std::domain_error("lowering identity requires n >= 1");
    Poly lhs = kernel_poly(n, w).derivative();
    Poly rhs = kernel_poly_shifted(n - 1, w.beta + 1, w.r) * Complex(Real(n));
    return lhs - rhs;
}

Poly type1_raising_residual(long n, const StarWeight& w) {
    Poly lhs = weighted_derivative(WeightedForm{w.beta, kernel_poly(n, w)}, w).poly;
    Poly rhs;
    for (int k = 1; k <= w.r; ++k) {
        int sign = (k % 2 == 0) ? 1 : -1;
        Complex coeff(Real(sign) * binomial_real(w.r, k) * w.r);
        rhs += kernel_poly_shifted(n + k, w.beta - k, w.r).shifted(w.r - k) * coeff;
    }
    return lhs - rhs;
}

}  // namespace angelesco
