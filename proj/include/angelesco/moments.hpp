#pragma once

#include <vector>

#include "angelesco/poly.hpp"
#include "angelesco/star_weight.hpp"

namespace angelesco {

/// Moment of the weight along the positive ray:
///   integral over (0, inf) of x^{m+beta} e^{-x^r} dx = Gamma((beta+m+1)/r)/r.
/// Exact up to working precision; no quadrature anywhere in this module.
Real ray_moment(long m, const StarWeight& w);

/// Cached ray moments 0..max_m for one weight.
class MomentTable {
  public:
    MomentTable(const StarWeight& w, long max_m);
    const Real& operator()(long m) const;
    const StarWeight& weight() const { return w_; }

  private:
    StarWeight w_;
    std::vector<Real> moments_;
};

/// An analytically evaluated integral together with the magnitude of the
/// largest term that entered the sum. Quantities contracted to vanish are
/// compared against scale * 10^{-(P-10)}: the alternating sums behind these
/// integrals cancel, so absolute tolerances would be meaningless.
struct Residual {
    Complex value;
    Real scale;
};

/// Integral over ray j (1-based) of x^k q(x) |x|^beta e^{-x^r} dx as a finite
/// Gamma sum: substituting x = omega^{j-1} t gives
///   omega^{(j-1)(k+1)} sum_c q_c omega^{(j-1)c} ray_moment(k+c).
Residual ray_integral(const Poly& q, long k, int ray, const StarWeight& w);
Residual ray_integral(const Poly& q, long k, int ray, const MomentTable& moments);

/// Joint residuals of a type I vector: entry k is the sum over rays j of
/// ray_integral(A_j, k, j). Entries 0..total_degree-2 must vanish, entry
/// total_degree-1 must equal 1.
std::vector<Residual> type1_residuals(const std::vector<Poly>& A, const StarWeight& w,
                                      long total_degree);

struct Type2ResidualEntry {
    int ray;
    long k;
    Residual res;
};

/// Per-ray residuals of a type II polynomial: ray_integral(L, k, j) for each
/// ray j and 0 <= k <= degrees[j-1]-1; all entries must vanish.
std::vector<Type2ResidualEntry> type2_residuals(const Poly& L, const StarWeight& w,
                                                const std::vector<long>& degrees);

}  // namespace angelesco
