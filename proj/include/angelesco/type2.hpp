#pragma once

#include <vector>

#include "angelesco/moments.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/type1.hpp"

namespace angelesco {

/// Monic type II polynomial for one (near-)diagonal multi-index. On the
/// diagonal only powers divisible by r occur, so L(omega x) = L(x) and the
/// zero set is r rotated copies of the positive real zeros.
struct Type2Poly {
    Poly poly;
    DiagonalIndex index;
    Real beta;
    int precision;
};

/// Diagonal polynomial of degree rn from the explicit expansion
///   L = ((-1)^n / r^n) sum_l (x^{rl}/l!) sum_k binom(l,k) (rk+beta+1)_n (-1)^k.
/// Monic, real coefficients, degree n in x^r.
Type2Poly type2_diagonal(long n, const StarWeight& w);

/// Coefficients of the same polynomial in the variable t = x^r (degree n).
std::vector<Real> type2_diagonal_tcoeffs(long n, const StarWeight& w);

/// Same, evaluated at the current working precision with no rounding and no
/// internal guard; callers that need guard digits set their own.
std::vector<Real> type2_diagonal_tcoeffs_raw(long n, const StarWeight& w);

/// Diagonal polynomial built instead by n weighted-derivative steps from
/// x^{beta+n} e^{-x^r}, scaled by (-1)^n/r^n; must agree with type2_diagonal
/// coefficient-wise.
Type2Poly type2_rodrigues(long n, const StarWeight& w);

/// Monic degree-1 polynomial orthogonal to constants on ray k for the
/// beta-indexed weight: x - Gamma((beta+2)/r)/Gamma((beta+1)/r) omega^{k-1}.
Poly type2_degree_one(int k, const Real& beta, int r);

/// Above-diagonal polynomial, multi-index (n,...,n) + e_k:
///   L_up = x L(beta+1) - Gamma((beta+n+2)/r)/Gamma((beta+n+1)/r) omega^{k-1} L(beta).
Type2Poly type2_above(long n, int k, const StarWeight& w);

/// The same polynomial from its derivative representation: n weighted steps
/// applied to x^{beta+n} e^{-x^r} type2_degree_one(k, beta+n).
Type2Poly type2_above_rodrigues(long n, int k, const StarWeight& w);

/// Recurrence coefficient b at a diagonal multi-index (r > 1 only):
///   b = Gamma((beta+n+2)/r)/Gamma((beta+n+1)/r) omega^{k-1}.
Complex type2_recurrence_coeff_b(long n, int k, const StarWeight& w);

/// Monic type II polynomial for an arbitrary multi-index, solved from its
/// defining orthogonality conditions against the analytic moments. Used for
/// the below-diagonal neighbors of the recurrence, which have no closed form.
Poly type2_from_moments(const std::vector<long>& indices, const StarWeight& w);

/// x L_(n,..,n) - L_(n,..,n)+e_k - b L_(n,..,n) - sum_l a_l L_(n,..,n)-e_l,
/// with the a_l shared with the type I recurrence; zero polynomial.
Poly type2_recurrence_residual(long n, int k, const StarWeight& w);

/// Coefficients b_1..b_r of the degree-lowering identity
///   L'_(n,..,n)(beta) = sum_k b_k x^{r-1} L_(n-k,..,n-k)(beta+k),
/// b_k = (-1)^{k+1} binom(n,k) (r-k+1)_{k-1} / r^{k-2}; stated for n >= r+1.
std::vector<Real> type2_lowering_coeffs(long n, int r);

/// Residual of the lowering identity above; zero polynomial.
Poly type2_lowering_residual(long n, const StarWeight& w);

/// Residual of the raising identity
///   d/dx[x^beta e^{-x^r} L_(n,..,n)(beta)] = -r x^{beta-1} e^{-x^r} L_(n+1,..,n+1)(beta-1),
/// compared at the polynomial level (beta > 0); zero polynomial.
Poly type2_raising_residual(long n, const StarWeight& w);

/// Scale-relative residual of the order-(r+1) differential equation
///   [x^{beta+1} e^{-x^r} y']^{(r)} + sum_{k<r} c_k x^k [x^beta e^{-x^r} y]^{(k)} = 0,
///   c_k = r binom(r,k) [(n+k+1)_{r-k} - (k+1)_{r-k}],
/// for y = L_(n,..,n)(beta). The weighted derivatives are expanded formally
/// and the common factor x^{beta-r} e^{-x^r} stripped, so the check is a
/// polynomial identity; the sample points add a pointwise spot check.
/// Requires beta > r-2.
Real type2_ode_residual(long n, const StarWeight& w, const std::vector<Complex>& sample_points);

std::vector<Real> type2_ode_coeffs(long n, int r);

}  // namespace angelesco
