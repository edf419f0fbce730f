#pragma once

#include <vector>

#include "angelesco/zeros.hpp"

namespace angelesco {

/// Rescaling constant ((r+1)/r)^{(r+1)/r}; the zeros of the degree-n objects
/// grow like alpha_r n^{1/r}. alpha_1 = 4 recovers the classical 4n.
Real alpha_r(int r);

/// One point of the parametrization of the limiting zero density:
///   xhat = (1/c_r) sin^{r+1}((r+1)theta) / (sin^r(r theta) sin theta),
///   rho  = sin((r+1)theta)/sin(r theta),
/// with c_r = (r+1)^{r+1}/r^r and 0 < theta < pi/(r+1).
struct ThetaPoint {
    Real theta;
    Real xhat;
    Real rho;
};

ThetaPoint theta_point(const Real& theta, int r);

/// xhat(theta) on (0, pi/(r+1)); decreasing from 1 to 0. Near theta = 0 the
/// 0/0 form is replaced by a fourth-order expansion of log xhat.
Real xhat_of_theta(const Real& theta, int r);

/// Inverse of xhat_of_theta on (0,1). The strict monotonicity it relies on
/// is verified once per (r, precision) on a 10^4-point grid; a violation
/// aborts with a diagnostic rather than returning a wrong branch.
Real theta_of_xhat(const Real& xhat, int r);

/// Limiting zero density u_r(x) = x^{r-1} w_r(x^r) on (0,1) for the rescaled
/// kernel zeros; integrates to 1. For r = 1 this is Marchenko-Pastur,
/// (2/pi) x^{-1/2} (1-x)^{1/2}.
Real density_type1(const Real& x, int r);

/// Per-ray limiting density of the type II real zeros: density_type1 / r
/// (same kernel; each of the r rays carries 1/r of the mass).
Real density_type2_per_ray(const Real& x, int r);

/// CDF of density_type1 on [0,1], integrated in the theta variable where the
/// integrand is smooth and bounded (the x = 0 singularity disappears).
Real cdf_type1(const Real& x, int r);

/// Kolmogorov-Smirnov distance between a rescaled zero set and the limiting
/// CDF: sup over sorted zeros of max(|k/n - F|, |(k-1)/n - F|). Both sources
/// compare against the same F: the per-ray type II density renormalizes to
/// the type I one.
Real ks_distance(const ZeroSet& zs, int r);

enum class WEquationKind { type1, type2 };

/// Residual of the algebraic W-equation at the parametric solution
/// W = rho e^{i theta}, relative to the largest term:
///   type1: W^{r+1} - r alpha_r^r xhat W + r alpha_r^r xhat = 0 with
///          rho = sin((r+1)theta)/sin(r theta),
///   type2: alpha_r^r W^{r+1} - r alpha_r^r z W^r + r^r z = 0 with
///          rho = r^{1-1/r} sin^{1/r}((r+1)theta) / (alpha_r sin^{1/r} theta)
///          and z = rho sin((r+1)theta)/(r sin(r theta)).
Real w_equation_residual(const Real& theta, int r, WEquationKind kind);

enum class DensityKind { type1, type2_per_ray };

struct DensityCurve {
    std::vector<std::pair<Real, Real>> samples;  // (x, u)
    DensityKind kind = DensityKind::type1;
    int r = 1;
    int precision = 0;
};

/// Sample the density on a uniform grid of midpoints (i+1/2)/grid, avoiding
/// the endpoints.
DensityCurve sample_density(int r, long grid, DensityKind kind);

}  // namespace angelesco
