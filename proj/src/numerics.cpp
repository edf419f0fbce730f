#include "angelesco/numerics.hpp"

namespace angelesco {

namespace {
int g_precision = kDefaultPrecision;

struct PrecisionInit {
    PrecisionInit() { Real::default_precision(kDefaultPrecision); }
};
PrecisionInit g_precision_init;
}  // namespace

int precision() { return g_precision; }

void set_precision(int digits) {
    if (digits < kMinPrecision)
        throw std::domain_error("precision must be at least " + std::to_string(kMinPrecision) +
                                " digits, got " + std::to_string(digits));
    g_precision = digits;
    Real::default_precision(digits);
}

Real rel_tol(int margin) {
    return pow(Real(10), -(g_precision - margin));
}

const Real& const_pi() {
    // Recomputed when the ambient mpfr precision changes (run precision or a
    // PrecisionGuard scope); cached otherwise. Thread-local because the
    // ambient precision itself is per-thread.
    thread_local Real pi = acos(Real(-1));
    thread_local unsigned pi_precision = Real::default_precision();
    if (pi_precision != Real::default_precision()) {
        pi = acos(Real(-1));
        pi_precision = Real::default_precision();
    }
    return pi;
}

Complex polar(const Real& modulus, const Real& angle) {
    return {modulus * cos(angle), modulus * sin(angle)};
}

Real log_gamma(const Real& x) {
    if (x <= 0) throw std::domain_error("log_gamma requires a positive argument");
    return lgamma(x);
}

Real gamma_ratio(const Real& num, const Real& den) {
    return exp(log_gamma(num) - log_gamma(den));
}

Real reciprocal_gamma(const Real& x) {
    if (x > Real(0.5)) return exp(-lgamma(x));
    if (x <= 0 && x == floor(x)) return Real(0);  // pole of Gamma
    // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, with 1-x > 1/2.
    return sin(const_pi() * x) * exp(lgamma(1 - x)) / const_pi();
}

Real pochhammer(const Real& a, long m) {
    if (m < 0) throw std::invalid_argument("pochhammer order must be non-negative");
    Real acc(1);
    for (long i = 0; i < m; ++i) acc *= a + i;
    return acc;
}

Real factorial_real(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    Real acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Real binomial_real(long n, long k) {
    if (k < 0 || k > n) return Real(0);
    if (k > n - k) k = n - k;
    Real acc(1);
    for (long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

Complex root_of_unity(int r, long j) {
    if (r < 1) throw std::domain_error("root_of_unity requires r >= 1");
    long jm = j % r;
    if (jm < 0) jm += r;
    // Exact values on the axes keep downstream identities sharp.
    if (jm == 0) return {Real(1), Real(0)};
    if (2 * jm == r) return {Real(-1), Real(0)};
    if (4 * jm == r) return {Real(0), Real(1)};
    if (4 * jm == 3 * r) return {Real(0), Real(-1)};
    Real angle = 2 * const_pi() * jm / r;
    return polar(Real(1), angle);
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(g_precision) {
    if (digits > g_precision) Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real round_to_precision(const Real& x) {
    return Real(x, static_cast<unsigned>(g_precision));
}

}  // namespace angelesco
