#pragma once

#include "angelesco/poly.hpp"
#include "angelesco/star_weight.hpp"

namespace angelesco {

/// Parameters of the Jacobi-star weight |x|^beta (1-x^r)^alpha on the unit
/// r-star; alpha, beta > -1.
struct JacobiParams {
    Real alpha;
    StarWeight w;

    JacobiParams(Real alpha_, StarWeight w_) : alpha(std::move(alpha_)), w(std::move(w_)) {
        if (!(alpha > -1)) throw std::domain_error("JacobiParams: alpha must be > -1");
    }
};

/// Kernel polynomial of the Jacobi family: coefficient of x^k is
///   binom(n,k) (-1)^{n-k} Gamma(n+alpha+(beta+k)/r+1)
///     / (Gamma(n+alpha+1) Gamma((beta+k)/r+1)).
/// Degree n, real coefficients.
Poly jacobi_kernel(long n, const JacobiParams& jp);

/// Coefficient-wise distance between alpha^{-beta/r} jacobi_kernel(n)
/// composed with the scale alpha^{-1/r} and kernel_poly(n), relative to the
/// sup coefficient norm of the latter. Decays like 1/alpha: the Laguerre
/// kernel is the alpha -> infinity limit of the Jacobi one.
Real type1_limit_error(long n, const StarWeight& w, const Real& alpha);

}  // namespace angelesco
