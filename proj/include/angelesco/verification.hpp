#pragma once

#include <string>
#include <vector>

#include "angelesco/star_weight.hpp"

namespace angelesco {

struct CheckResult {
    std::string name;
    Real residual;
    Real tolerance;
    bool pass = false;
    bool skipped = false;
};

struct CheckReport {
    std::string check;
    std::vector<CheckResult> items;

    bool pass() const {
        for (const auto& i : items)
            if (!i.skipped && !i.pass) return false;
        return true;
    }
    Real max_residual() const {
        Real m(0);
        for (const auto& i : items)
            if (!i.skipped && i.residual > m) m = i.residual;
        return m;
    }
};

/// Orthogonality + normalization residual suites for the kernel, the three
/// type I constructions and the two type II constructions at one (n, r, beta).
CheckReport verify_orthogonality(long n, const StarWeight& w);

/// Nearest-neighbor recurrences of both types at (n, r, beta); r >= 2.
CheckReport verify_recurrence(long n, const StarWeight& w);

/// Order-(r+1) differential equation of the kernel, formally.
CheckReport verify_ode_type1(long n, const StarWeight& w);

/// Order-(r+1) differential equation of the diagonal type II polynomial;
/// requires beta > r-2.
CheckReport verify_ode_type2(long n, const StarWeight& w);

/// Derivative representation vs explicit expansion, diagonal and above.
CheckReport verify_rodrigues(long n, const StarWeight& w);

/// Degree lowering/raising identities of both families. Items outside their
/// stated hypotheses (type II raising needs beta > 0, type II lowering needs
/// n >= r+1) are reported as skipped.
CheckReport verify_lowering_raising(long n, const StarWeight& w);

/// Jacobi -> Laguerre kernel limit: errors decrease along
/// alpha = 10^2..10^5 and error*alpha stays bounded.
CheckReport verify_limit(long n, const StarWeight& w);

/// Parametric-solution residuals of both algebraic W-equations on a
/// 100-point theta grid.
CheckReport verify_w_equation(int r);

}  // namespace angelesco
