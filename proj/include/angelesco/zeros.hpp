#pragma once

#include <stdexcept>
#include <vector>

#include "angelesco/star_weight.hpp"

namespace angelesco {

/// Raised when a result cannot be certified at the requested precision; the
/// caller's remedy is to rerun with a higher run precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ZeroSource { type1_kernel, type2_diagonal };

/// Ascending positive real zeros of one polynomial. count == n_expected
/// always; `rescaled` marks division by alpha_r n^{1/r}.
struct ZeroSet {
    std::vector<Real> zeros;
    long n_expected = 0;
    bool rescaled = false;
    ZeroSource source = ZeroSource::type1_kernel;
    int precision = 0;
};

/// Right endpoint of the containment interval
///   [0, (r+1)^{1/r} ((r+1)/r)^{(r+1)/r} n^{1/r}]
/// holding all real zeros of both families (not tight; for r = 1 it gives 8n
/// where 4n would do).
Real zero_bound(long n, int r);

/// The n simple zeros of kernel_poly(n) in (0, zero_bound). Sign-scan with
/// grid doubling until exactly n sign changes appear, then bisection to
/// relative bracket width 10^{-P/2}. Evaluation runs with degree-scaled guard
/// digits internally (monomial-form cancellation grows linearly in n); the
/// reported zeros are rounded to the run precision.
ZeroSet real_zeros_type1_kernel(long n, const StarWeight& w);

/// The n simple positive real zeros of the diagonal type II polynomial,
/// located in the variable t = x^r (degree n instead of rn) and mapped back
/// through x = t^{1/r}. The full zero set on the star is {omega^j x_k}.
ZeroSet real_zeros_type2(long n, const StarWeight& w);

/// Divide every zero by alpha_r n^{1/r}; rejects a second application.
ZeroSet rescale_zeros(const ZeroSet& zs, long n, int r);

}  // namespace angelesco
