#include "angelesco/zeros.hpp"

#include <algorithm>
#include <functional>

#include "angelesco/type1.hpp"
#include "angelesco/type2.hpp"

namespace angelesco {

namespace {

Real rescale_factor(long n, int r) {
    Real rr(r);
    return pow((rr + 1) / rr, (rr + 1) / rr) * pow(Real(n), Real(1) / rr);
}

// Measured digits lost to monomial-form cancellation per unit of degree
// (worst case over the whole scan interval, with headroom).
double eval_loss_slope(int r) {
    switch (r) {
        case 1: return 0.45;
        case 2: return 0.72;
        case 3: return 0.92;
        case 4: return 1.05;
        default: return 1.20;
    }
}

Real eval_real(const std::vector<Real>& c, const Real& x) {
    Real acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct ScanFailure {};

// Uniform sign-scan with grid doubling until exactly n_roots sign changes
// appear, then bisection of each bracket. The grid fractions i/grid pass
// through `node`, so a caller can cluster nodes where the zeros cluster (the
// type II polynomial in t = x^r gets x-uniform nodes). Coefficients must
// already live at a working precision adequate for the degree.
std::vector<Real> isolate_roots(const std::vector<Real>& coeffs, long n_roots,
                                const Real& rel_width,
                                const std::function<Real(const Real&)>& node) {
    const long grid_cap = 1L << 22;
    long grid = std::max<long>(64, 4 * n_roots);
    const long max_bisection_steps = 4L * precision();  // depth cap in bits

    for (; grid <= grid_cap; grid *= 2) {
        std::vector<std::pair<Real, Real>> brackets;  // endpoints with opposite signs
        Real prev_x(0);
        int prev_sign = sign_of(coeffs.empty() ? Real(0) : coeffs.front());
        bool overcount = false;
        for (long i = 1; i <= grid; ++i) {
            Real x = node(Real(i) / grid);
            int s = sign_of(eval_real(coeffs, x));
            if (s != 0 && prev_sign != 0 && s != prev_sign) {
                brackets.emplace_back(prev_x, x);
                if (static_cast<long>(brackets.size()) > n_roots) {
                    overcount = true;
                    break;
                }
            }
            if (s != 0) {
                prev_sign = s;
                prev_x = x;
            }
        }
        if (overcount) throw ScanFailure{};  // noise flips: needs more digits
        if (static_cast<long>(brackets.size()) < n_roots) continue;

        std::vector<Real> roots;
        roots.reserve(static_cast<size_t>(n_roots));
        for (auto& [lo, hi] : brackets) {
            int lo_sign = sign_of(eval_real(coeffs, lo));
            if (lo_sign == 0) lo_sign = -sign_of(eval_real(coeffs, hi));
            long steps = 0;
            while (hi - lo > rel_width * hi) {
                if (++steps > max_bisection_steps) throw ScanFailure{};
                Real mid = (lo + hi) / 2;
                int s = sign_of(eval_real(coeffs, mid));
                if (s == 0) {
                    lo = mid;
                    hi = mid;
                    break;
                }
                (s == lo_sign ? lo : hi) = mid;
            }
            roots.push_back((lo + hi) / 2);
        }
        return roots;
    }
    throw ScanFailure{};
}

// Contract check: value at the located zero is small on the scale of the
// largest monomial term there.
void verify_roots(const std::vector<Real>& coeffs, const std::vector<Real>& roots,
                  const Real& rel_width) {
    for (const auto& x : roots) {
        Real scale(0);
        Real pw(1);
        for (const auto& c : coeffs) {
            Real t = abs(c) * pw;
            if (t > scale) scale = t;
            pw *= x;
        }
        if (!(abs(eval_real(coeffs, x)) <= rel_width * scale)) throw ScanFailure{};
    }
}

// Escalation wrapper around one isolate attempt. The builder runs with
// construct_extra digits on top of the evaluation precision (alternating-sum
// constructions lose their own digits before evaluation starts); the built
// coefficients are then rounded to the evaluation precision.
std::vector<Real> find_roots_guarded(long n, int eval_guard_digits, int construct_extra_digits,
                                     const std::function<std::vector<Real>()>& build_coeffs,
                                     const std::function<Real(const Real&)>& node) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        int digits = precision() / 2 + eval_guard_digits;
        for (int i = 0; i < attempt; ++i) digits += digits / 2;
        if (digits < precision()) digits = precision();
        try {
            std::vector<Real> coeffs;
            {
                PrecisionGuard guard(digits + construct_extra_digits);
                coeffs = build_coeffs();
            }
            PrecisionGuard guard(digits);
            for (auto& c : coeffs) c = Real(c, static_cast<unsigned>(digits));
            Real rel_width = pow(Real(10), -precision() / 2);
            std::vector<Real> roots = isolate_roots(coeffs, n, rel_width, node);
            verify_roots(coeffs, roots, rel_width);
            return roots;
        } catch (const ScanFailure&) {
            continue;
        }
    }
    throw PrecisionError("could not certify " + std::to_string(n) +
                         " sign changes; rerun with a higher precision");
}

}  // namespace

Real zero_bound(long n, int r) {
    if (n < 1 || r < 1) throw std::domain_error("zero_bound requires n >= 1 and r >= 1");
    return pow(Real(r + 1), Real(1) / r) * rescale_factor(n, r);
}

ZeroSet real_zeros_type1_kernel(long n, const StarWeight& w) {
    if (n < 1) throw std::domain_error("zero computation requires n >= 1");
    int eval_guard = static_cast<int>(eval_loss_slope(w.r) * static_cast<double>(n)) + 40;
    Real bound = zero_bound(n, w.r);
    std::vector<Real> roots = find_roots_guarded(
        n, eval_guard, 0,
        [&] {
            // beta re-materialized at the working precision: arithmetic
            // follows the widest operand, so a run-precision beta would
            // silently pin the whole construction at run precision.
            StarWeight wide(w.r, Real(w.beta, Real::default_precision()));
            Poly p = kernel_poly(n, wide);
            std::vector<Real> c;
            c.reserve(p.coeffs().size());
            for (const auto& z : p.coeffs()) c.push_back(z.re);
            return c;
        },
        [&](const Real& f) -> Real { return bound * f; });

    ZeroSet out;
    out.n_expected = n;
    out.source = ZeroSource::type1_kernel;
    out.precision = precision();
    out.zeros.reserve(roots.size());
    for (const auto& x : roots) out.zeros.push_back(round_to_precision(x));
    return out;
}

ZeroSet real_zeros_type2(long n, const StarWeight& w) {
    if (n < 1) throw std::domain_error("zero computation requires n >= 1");
    int eval_guard = static_cast<int>(0.55 * static_cast<double>(n)) + 40;
    int construct_extra = static_cast<int>(0.75 * static_cast<double>(n)) + 30;
    Real bound_x = zero_bound(n, w.r);
    // x-uniform scan nodes mapped through t = x^r: the smallest t-zeros sit
    // quadratically (r-fold) closer to 0 than the x-zeros, so a t-uniform
    // grid would need ~n^2 more points.
    std::vector<Real> roots_t = find_roots_guarded(
        n, eval_guard, construct_extra, [&] { return type2_diagonal_tcoeffs_raw(n, w); },
        [&](const Real& f) -> Real { return pow(bound_x * f, w.r); });

    ZeroSet out;
    out.n_expected = n;
    out.source = ZeroSource::type2_diagonal;
    out.precision = precision();
    out.zeros.reserve(roots_t.size());
    Real inv_r = Real(1) / w.r;
    for (const auto& t : roots_t) out.zeros.push_back(round_to_precision(pow(t, inv_r)));
    std::sort(out.zeros.begin(), out.zeros.end());
    return out;
}

ZeroSet rescale_zeros(const ZeroSet& zs, long n, int r) {
    if (zs.rescaled) throw std::logic_error("zero set is already rescaled");
    ZeroSet out = zs;
    Real f = rescale_factor(n, r);
    for (auto& x : out.zeros) x = round_to_precision(x / f);
    out.rescaled = true;
    return out;
}

}  // namespace angelesco
