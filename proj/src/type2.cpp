#include "angelesco/type2.hpp"

namespace angelesco {

namespace {

// Construction of the explicit diagonal expansion loses roughly 0.7 digits
// per unit of n to cancellation in the alternating inner sums (measured
// across r <= 4), so large degrees get guard digits; the coefficients are
// rounded back to the run precision afterwards.
int construction_guard(long n) {
    return n > 25 ? precision() + static_cast<int>(0.7 * static_cast<double>(n)) + 20 : precision();
}

void enforce_monic(Poly& p, long expected_degree, const char* what) {
    if (p.degree() != expected_degree)
        throw std::logic_error(std::string(what) + ": unexpected degree");
    Complex lead = p.coeff(expected_degree);
    if (!(abs(lead - Complex(Real(1))) < Real("1e-5")))
        throw std::logic_error(std::string(what) + ": leading coefficient drifted from 1");
    p.set_coeff(expected_degree, Complex(Real(1)));
}

}  // namespace

std::vector<Real> type2_diagonal_tcoeffs_raw(long n, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type2 degree parameter must be non-negative");
    Real beta(w.beta, Real::default_precision());

    // (rk + beta + 1)_n for k = 0..n, by log-gamma differences: the raw
    // products overflow no range here but would cost n times more.
    std::vector<Real> poch(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        Real base = w.r * Real(k) + beta + 1;
        poch[static_cast<size_t>(k)] = exp(log_gamma(base + n) - log_gamma(base));
    }

    Real front = (n % 2 == 0 ? Real(1) : Real(-1)) / pow(Real(w.r), n);
    Real inv_factorial(1);
    std::vector<Real> t(static_cast<size_t>(n) + 1);
    for (long l = 0; l <= n; ++l) {
        if (l > 0) inv_factorial /= l;
        Real sum(0);
        Real binom(1);
        int sign = 1;
        for (long k = 0; k <= l; ++k) {
            sum += Real(sign) * binom * poch[static_cast<size_t>(k)];
            binom = binom * (l - k) / (k + 1);
            sign = -sign;
        }
        t[static_cast<size_t>(l)] = front * inv_factorial * sum;
    }
    return t;
}

std::vector<Real> type2_diagonal_tcoeffs(long n, const StarWeight& w) {
    PrecisionGuard guard(construction_guard(n));
    std::vector<Real> t = type2_diagonal_tcoeffs_raw(n, w);
    for (auto& v : t) v = round_to_precision(v);
    return t;
}

Type2Poly type2_diagonal(long n, const StarWeight& w) {
    std::vector<Real> t = type2_diagonal_tcoeffs(n, w);
    std::vector<Complex> c(static_cast<size_t>(n) * w.r + 1);
    for (long l = 0; l <= n; ++l) c[static_cast<size_t>(l * w.r)] = Complex(t[static_cast<size_t>(l)]);
    Poly p(std::move(c));
    enforce_monic(p, n * w.r, "type2_diagonal");
    return Type2Poly{std::move(p), DiagonalIndex::diagonal(n, w.r), w.beta, precision()};
}

Type2Poly type2_rodrigues(long n, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type2 degree parameter must be non-negative");
    WeightedForm f{w.beta + n, Poly::constant(Complex(Real(1)))};
    for (long i = 0; i < n; ++i) f = weighted_derivative(f, w);
    if (f.exponent != w.beta)
        throw std::logic_error("type2_rodrigues: terminal exponent mismatch");
    Complex scale((n % 2 == 0 ? Real(1) : Real(-1)) / pow(Real(w.r), n));
    Poly p = f.poly * scale;
    enforce_monic(p, n * w.r, "type2_rodrigues");
    return Type2Poly{std::move(p), DiagonalIndex::diagonal(n, w.r), w.beta, precision()};
}

Poly type2_degree_one(int k, const Real& beta, int r) {
    if (k < 1 || k > r) throw std::invalid_argument("ray index must be in 1..r");
    Complex c0 = -(root_of_unity(r, k - 1) * gamma_ratio((beta + 2) / r, (beta + 1) / r));
    return Poly({c0, Complex(Real(1))});
}

Type2Poly type2_above(long n, int k, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type2 degree parameter must be non-negative");
    if (k < 1 || k > w.r) throw std::invalid_argument("shift direction k must be in 1..r");
    StarWeight w_up(w.r, w.beta + 1);
    Poly p = type2_diagonal(n, w_up).poly.shifted(1);
    Complex c = root_of_unity(w.r, k - 1) * gamma_ratio((w.beta + n + 2) / w.r, (w.beta + n + 1) / w.r);
    p -= type2_diagonal(n, w).poly * c;
    enforce_monic(p, n * w.r + 1, "type2_above");
    return Type2Poly{std::move(p), DiagonalIndex::above(n, w.r, k), w.beta, precision()};
}

Type2Poly type2_above_rodrigues(long n, int k, const StarWeight& w) {
    if (n < 0) throw std::domain_error("type2 degree parameter must be non-negative");
    WeightedForm f{w.beta + n, type2_degree_one(k, w.beta + n, w.r)};
    for (long i = 0; i < n; ++i) f = weighted_derivative(f, w);
    if (f.exponent != w.beta)
        throw std::logic_error("type2_above_rodrigues: terminal exponent mismatch");
    Complex scale((n % 2 == 0 ? Real(1) : Real(-1)) / pow(Real(w.r), n));
    Poly p = f.poly * scale;
    enforce_monic(p, n * w.r + 1, "type2_above_rodrigues");
    return Type2Poly{std::move(p), DiagonalIndex::above(n, w.r, k), w.beta, precision()};
}

Complex type2_recurrence_coeff_b(long n, int k, const StarWeight& w) {
    if (w.r <= 1) throw std::domain_error("type II recurrence coefficient b requires r > 1");
    if (n < 0) throw std::domain_error("type2 degree parameter must be non-negative");
    if (k < 1 || k > w.r) throw std::invalid_argument("direction must be in 1..r");
    return root_of_unity(w.r, k - 1) *
           gamma_ratio((w.beta + n + 2) / w.r, (w.beta + n + 1) / w.r);
}

Poly type2_from_moments(const std::vector<long>& indices, const StarWeight& w) {
    if (static_cast<int>(indices.size()) != w.r)
        throw std::invalid_argument("one index entry per ray required");
    long d = 0;
    for (long nj : indices) {
        if (nj < 0) throw std::domain_error("multi-index entries must be non-negative");
        d += nj;
    }
    if (d == 0) return Poly::constant(Complex(Real(1)));

    // The moment matrix mixes Gamma values of very different sizes; solve
    // with guard digits and round the solution back. beta is re-materialized
    // at the working precision so the moments actually carry the guard.
    PrecisionGuard guard(precision() + 40);
    StarWeight wide(w.r, Real(w.beta, Real::default_precision()));
    MomentTable mom(wide, 2 * d);

    const size_t dim = static_cast<size_t>(d);
    std::vector<std::vector<Complex>> M(dim, std::vector<Complex>(dim));
    std::vector<Complex> rhs(dim);
    size_t row = 0;
    for (int j = 1; j <= w.r; ++j) {
        for (long k = 0; k < indices[static_cast<size_t>(j - 1)]; ++k, ++row) {
            for (long m = 0; m < d; ++m)
                M[row][static_cast<size_t>(m)] =
                    root_of_unity(w.r, static_cast<long>(j - 1) * (k + m + 1)) * mom(k + m);
            rhs[row] = -(root_of_unity(w.r, static_cast<long>(j - 1) * (k + d + 1)) * mom(k + d));
        }
    }

    // Gaussian elimination with partial pivoting.
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        Real best = norm(M[col][col]);
        for (size_t rr = col + 1; rr < dim; ++rr) {
            Real cand = norm(M[rr][col]);
            if (cand > best) {
                best = cand;
                piv = rr;
            }
        }
        if (best == 0) throw std::runtime_error("type2_from_moments: singular moment system");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (size_t rr = col + 1; rr < dim; ++rr) {
            if (M[rr][col].is_zero()) continue;
            Complex f = M[rr][col] / M[col][col];
            for (size_t cc = col; cc < dim; ++cc) M[rr][cc] -= f * M[col][cc];
            rhs[rr] -= f * rhs[col];
        }
    }
    std::vector<Complex> sol(dim);
    for (size_t rr = dim; rr-- > 0;) {
        Complex acc = rhs[rr];
        for (size_t cc = rr + 1; cc < dim; ++cc) acc -= M[rr][cc] * sol[cc];
        sol[rr] = acc / M[rr][rr];
    }

    std::vector<Complex> coeffs(dim + 1);
    for (size_t m = 0; m < dim; ++m)
        coeffs[m] = Complex(round_to_precision(sol[m].re), round_to_precision(sol[m].im));
    coeffs[dim] = Complex(Real(1));
    return Poly(std::move(coeffs));
}

Poly type2_recurrence_residual(long n, int k, const StarWeight& w) {
    if (n < 1) throw std::domain_error("type II recurrence residual requires n >= 1");
    if (w.r < 2) throw std::domain_error("type II recurrence residual requires r >= 2");
    if (k < 1 || k > w.r) throw std::invalid_argument("direction must be in 1..r");

    Poly L = type2_diagonal(n, w).poly;
    Poly R = L.shifted(1);
    R -= type2_above(n, k, w).poly;
    R -= L * type2_recurrence_coeff_b(n, k, w);
    std::vector<long> indices(static_cast<size_t>(w.r), n);
    for (int l = 1; l <= w.r; ++l) {
        indices[static_cast<size_t>(l - 1)] = n - 1;
        R -= type2_from_moments(indices, w) * type1_coeff_a(n, l, w);
        indices[static_cast<size_t>(l - 1)] = n;
    }
    return R;
}

std::vector<Real> type2_lowering_coeffs(long n, int r) {
    if (r < 1) throw std::domain_error("lowering coefficients require r >= 1");
    if (n < r + 1) throw std::domain_error("lowering identity is stated for n >= r+1");
    std::vector<Real> b;
    b.reserve(static_cast<size_t>(r));
    for (int k = 1; k <= r; ++k) {
        Real v = binomial_real(n, k) * pochhammer(Real(r - k + 1), k - 1) * pow(Real(r), 2 - k);
        b.push_back(k % 2 == 0 ? -v : v);
    }
    return b;
}

Poly type2_lowering_residual(long n, const StarWeight& w) {
    std::vector<Real> b = type2_lowering_coeffs(n, w.r);
    Poly R = type2_diagonal(n, w).poly.derivative();
    for (int k = 1; k <= w.r; ++k) {
        StarWeight wk(w.r, w.beta + k);
        R -= type2_diagonal(n - k, wk).poly.shifted(w.r - 1) * Complex(b[static_cast<size_t>(k - 1)]);
    }
    return R;
}

Poly type2_raising_residual(long n, const StarWeight& w) {
    if (!(w.beta > 0)) throw std::domain_error("type II raising identity requires beta > 0");
    Poly lhs = weighted_derivative(WeightedForm{w.beta, type2_diagonal(n, w).poly}, w).poly;
    StarWeight w_down(w.r, w.beta - 1);
    return lhs + type2_diagonal(n + 1, w_down).poly * Complex(Real(w.r));
}

std::vector<Real> type2_ode_coeffs(long n, int r) {
    if (n < 0 || r < 1) throw std::domain_error("ode coefficients require n >= 0 and r >= 1");
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k)
        c.push_back(binomial_real(r, k) * r *
                    (pochhammer(Real(n + k + 1), r - k) - pochhammer(Real(k + 1), r - k)));
    return c;
}

Real type2_ode_residual(long n, const StarWeight& w, const std::vector<Complex>& sample_points) {
    if (!(w.beta > w.r - 2))
        throw std::domain_error("type II differential equation requires beta > r-2");
    Poly y = type2_diagonal(n, w).poly;
    std::vector<Real> c = type2_ode_coeffs(n, w.r);

    WeightedForm f{w.beta + 1, y.derivative()};
    for (int i = 0; i < w.r; ++i) f = weighted_derivative(f, w);

    // After stripping x^{beta-r} e^{-x^r}, the identity reads
    //   x q1 + sum_k c_k x^r q2_k = 0.
    std::vector<Poly> terms;
    terms.push_back(f.poly.shifted(1));
    WeightedForm g{w.beta, y};
    for (int k = 0; k < w.r; ++k) {
        terms.push_back(g.poly.shifted(w.r) * Complex(c[static_cast<size_t>(k)]));
        g = weighted_derivative(g, w);
    }

    Poly R;
    Real scale(0);
    for (const auto& t : terms) {
        R += t;
        Real m = t.max_abs_coeff();
        if (m > scale) scale = m;
    }
    if (scale == 0) return Real(0);
    Real worst = R.max_abs_coeff() / scale;

    for (const auto& z : sample_points) {
        Complex acc;
        Real local(0);
        for (const auto& t : terms) {
            Complex v = t.eval(z);
            Real a = abs(v);
            if (a > local) local = a;
            acc += v;
        }
        if (local > 0) {
            Real pointwise = abs(acc) / local;
            if (pointwise > worst) worst = pointwise;
        }
    }
    return worst;
}

}  // namespace angelesco
