#include "angelesco/jacobi.hpp"

#include "angelesco/type1.hpp"

namespace angelesco {

Poly jacobi_kernel(long n, const JacobiParams& jp) {
    if (n < 0) throw std::domain_error("kernel degree must be non-negative");
    const int r = jp.w.r;
    Real lg_front = log_gamma(jp.alpha + n + 1);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    Real binom(1);
    int sign = (n % 2 == 0) ? 1 : -1;
    for (long k = 0; k <= n; ++k) {
        Real s = (jp.w.beta + k) / r;
        Real mag = exp(log_gamma(n + jp.alpha + s + 1) - lg_front - log_gamma(s + 1));
        c[static_cast<size_t>(k)] = Complex(Real(sign) * binom * mag);
        binom = binom * (n - k) / (k + 1);
        sign = -sign;
    }
    return Poly(std::move(c));
}

Real type1_limit_error(long n, const StarWeight& w, const Real& alpha) {
    Poly jk = jacobi_kernel(n, JacobiParams(alpha, w));
    Poly target = kernel_poly(n, w);
    Real norm_target = target.max_abs_coeff();

    // alpha^{-beta/r} jk(alpha^{-1/r} x): coefficient k picks up the factor
    // alpha^{-(beta+k)/r}.
    Real worst(0);
    for (long k = 0; k <= n; ++k) {
        Real scaled = jk.coeff(k).re * pow(alpha, -(w.beta + k) / w.r);
        Real diff = abs(Real(scaled - target.coeff(k).re));
        if (diff > worst) worst = diff;
    }
    return worst / norm_target;
}

}  // namespace angelesco
