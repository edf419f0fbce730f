#pragma once

#include <optional>
#include <vector>

#include "angelesco/moments.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/star_weight.hpp"

namespace angelesco {

/// Shift of a diagonal multi-index by one unit vector: entry k (1-based)
/// moved up or down.
struct IndexShift {
    int k;
    int direction;  // +1 or -1
};

/// Multi-index (n,...,n) of r entries, optionally shifted to n +- e_k.
struct DiagonalIndex {
    long n;
    int r;
    std::optional<IndexShift> shift;

    static DiagonalIndex diagonal(long n, int r) { return {n, r, std::nullopt}; }
    static DiagonalIndex above(long n, int r, int k) { return {n, r, IndexShift{k, +1}}; }
    static DiagonalIndex below(long n, int r, int k);

    /// |n| = sum of the entries.
    long total() const { return n * r + (shift ? shift->direction : 0); }
};

/// Vector (A_1,...,A_r) of type I polynomials for one multi-index, entry j
/// living on ray j. Degrees: n-1 everywhere on the diagonal; the shifted
/// entry gains or loses one degree off the diagonal (and loses two at the
/// shifted ray below the diagonal, where the leading term cancels).
struct Type1Vector {
    std::vector<Poly> polys;
    DiagonalIndex index;
    Real beta;
    int precision;
};

/// Nearest-neighbor recurrence data at a diagonal multi-index: the r
/// coefficients a_l (equal modulus, arguments advancing by 2 * 2pi/r) and the
/// single b for the requested downward direction.
struct RecurrenceCoeffs {
    std::vector<Complex> a;
    Complex b;
};

/// Kernel polynomial of degree n: coefficient of x^k is
/// binom(n,k) (-1)^{n-k} / Gamma((beta+k)/r + 1). Real coefficients; leading
/// coefficient 1/Gamma((beta+n)/r + 1). Both type I constructions are built
/// from rotated and beta-shifted copies of it.
Poly kernel_poly(long n, const StarWeight& w);

/// Same formula with no restriction on beta: 1/Gamma is entire, so the
/// kernel is defined for every beta shift the operator identities produce
/// (including Gamma poles, where the coefficient is exactly 0).
Poly kernel_poly_shifted(long n, const Real& beta, int r);

/// Leading coefficient of kernel_poly, 1/Gamma((beta+n)/r + 1).
Real kernel_leading_coeff(long n, const Real& beta, int r);

/// sum_k binom(n,k) (-1)^{n-k} k^m: 0 for m < n, n! for m = n (0^0 = 1).
Real binomial_alternating_sum(long n, long m);

/// Type I vector on the diagonal (n+1,...,n+1):
///   A_j(x) = (r^n / n!) kernel_poly(n)(omega^{-j+1} x).
Type1Vector type1_diagonal(long n, const StarWeight& w);

/// Type I vector just above the diagonal, multi-index (n,...,n) + e_k.
Type1Vector type1_above(long n, int k, const StarWeight& w);

/// Type I vector just below the diagonal, multi-index (n,...,n) - e_k.
/// Requires n >= 1 and r > 1.
Type1Vector type1_below(long n, int k, const StarWeight& w);

/// Closed-form nearest-neighbor recurrence coefficients at (n,...,n):
///   a_l = (n/r^2) Gamma((n+beta+1)/r)/Gamma((n+beta-1)/r + 1) omega^{2(l-1)},
///   b   = Gamma((n+beta-1)/r + 1)/Gamma((n+beta-2)/r + 1) omega^{k-1}.
/// The b coefficient only exists for r > 1.
Complex type1_coeff_a(long n, int l, const StarWeight& w);
Complex type1_coeff_b(long n, int k, const StarWeight& w);
RecurrenceCoeffs type1_recurrence_coeffs(long n, int k, const StarWeight& w);

/// x A_{(n,..,n),j} - A_{(n,..,n)-e_k,j} - b A_{(n,..,n),j}
///   - sum_l a_l A_{(n,..,n)+e_l,j}, which must be the zero polynomial.
Poly type1_recurrence_residual(long n, int j, int k, const StarWeight& w);

/// Coefficients c_0..c_r of the order-(r+1) differential equation
///   x y^{(r+1)} + (beta+r) y^{(r)} + sum_k c_k x^k y^{(k)} = 0
/// satisfied by kernel_poly(n): c_k = (-1)^{r+1+k} binom(r,k) r (n-r+1)_{r-k}.
std::vector<Real> type1_ode_coeffs(long n, int r);

/// Formal residual of the differential equation above; zero polynomial.
Poly type1_ode_residual(long n, const StarWeight& w);

/// kernel' - n * kernel(n-1; beta+1); zero polynomial.
Poly type1_lowering_residual(long n, const StarWeight& w);

/// d/dx[x^beta e^{-x^r} kernel(n)] minus its expansion
/// x^{beta-1} e^{-x^r} sum_{k=1}^r (-1)^k binom(r,k) r x^{r-k} kernel(n+k; beta-k),
/// compared at the polynomial level; zero polynomial.
Poly type1_raising_residual(long n, const StarWeight& w);

}  // namespace angelesco
