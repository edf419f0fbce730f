#include "angelesco/asymptotics.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace angelesco {

namespace {

constexpr double kThetaSeriesGuard = 1e-4;

Real theta_max(int r) { return const_pi() / (r + 1); }

Real c_r(int r) { return pow(Real(r + 1), r + 1) / pow(Real(r), r); }

void check_r(int r) {
    if (r < 1) throw std::domain_error("r must be >= 1");
}

void check_theta(const Real& theta, int r) {
    if (!(theta > 0) || !(theta < theta_max(r)))
        throw std::domain_error("theta must lie in (0, pi/(r+1))");
}

// log xhat is the primitive: near theta = 0 the value of xhat squashes
// against 1, where representable absolute resolution would destroy the small
// exponent; the log form keeps full relative accuracy at both endpoints.
// Series branch: log xhat = -(r(r+1)/2) t^2 - (r(r+1)(r^2+r+1)/36) t^4 + O(t^6).
Real log_xhat(const Real& theta, int r) {
    if (theta < Real(kThetaSeriesGuard)) {
        Real t2 = theta * theta;
        Real a = Real(r) * (r + 1) / 2;
        Real b = Real(r) * (r + 1) * (Real(r) * r + r + 1) / 36;
        return -t2 * (a + b * t2);
    }
    Real A = sin((r + 1) * theta);
    if (!(A > 0))  // rounded past the upper endpoint
        return -std::numeric_limits<Real>::infinity();
    return Real(r + 1) * log(A) - Real(r) * log(sin(r * theta)) - log(sin(theta)) - log(c_r(r));
}

// w_r(xhat) * xhat = N/(pi D) with N = sin(theta) sin(r theta) sin((r+1)theta)
// and D = |sin((r+1)theta) e^{i theta} - sin(r theta)|^2. Near theta = 0:
// N/D = r(r+1) theta (1 - r(r+1) theta^2/3 + O(theta^4)).
Real density_ratio(const Real& theta, int r) {
    if (theta < Real(kThetaSeriesGuard)) {
        Real t2 = theta * theta;
        return Real(r) * (r + 1) * theta * (1 - Real(r) * (r + 1) * t2 / 3) / const_pi();
    }
    Real A = sin((r + 1) * theta);
    Real B = sin(r * theta);
    Real s = sin(theta);
    Real D = A * A + B * B - 2 * A * B * cos(theta);
    return s * B * A / (const_pi() * D);
}

// Monotonicity of xhat(theta) underpins the inversion; verified per
// (r, precision) on a 10^4-point grid before first use.
void ensure_parametrization_monotone(int r) {
    static std::mutex mutex;
    static std::set<std::pair<int, int>> verified;
    auto key = std::make_pair(r, precision());
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (verified.count(key)) return;
    }
    const long grid = 10000;
    Real tm = theta_max(r);
    Real prev = xhat_of_theta(tm / (grid + 1), r);
    for (long i = 2; i <= grid; ++i) {
        Real cur = xhat_of_theta(tm * i / (grid + 1), r);
        if (!(cur < prev))
            throw std::logic_error("xhat(theta) failed the monotonicity check for r = " +
                                   std::to_string(r) + "; inversion would be ill-posed");
        prev = cur;
    }
    std::lock_guard<std::mutex> lock(mutex);
    verified.insert(key);
}

// Adaptive Simpson on a smooth bounded integrand.
template <typename F>
Real simpson_recurse(const F& f, const Real& a, const Real& b, const Real& fa, const Real& fm,
                     const Real& fb, const Real& whole, const Real& tol, int depth) {
    Real m = (a + b) / 2;
    Real lm = (a + m) / 2, rm = (m + b) / 2;
    Real flm = f(lm), frm = f(rm);
    Real left = (m - a) / 6 * (fa + 4 * flm + fm);
    Real right = (b - m) / 6 * (fm + 4 * frm + fb);
    Real delta = left + right - whole;
    if (depth <= 0 || abs(delta) <= 15 * tol) return left + right + delta / 15;
    Real half_tol = tol / 2;
    return simpson_recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1);
}

template <typename F>
Real adaptive_simpson(const F& f, const Real& a, const Real& b, const Real& tol) {
    if (!(b > a)) return Real(0);
    Real fa = f(a), fb = f(b), fm = f((a + b) / 2);
    Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 26);
}

// CDF integrand in theta, cot-free so that both endpoints stay finite:
//   h = [r^2 cos(r t) sin t A + cos t A B - (r+1)^2 cos((r+1)t) sin t B] / (r pi D).
// Near theta = 0 the 0/0 form is replaced by the expansion
//   h = r (r+1)^2 theta^2 (1 - r(r+1) theta^2/3)(1 + (r^2+r+1) theta^2/9) / pi.
Real cdf_integrand(const Real& theta, int r) {
    if (theta < Real(kThetaSeriesGuard)) {
        Real t2 = theta * theta;
        return Real(r) * (r + 1) * (r + 1) * t2 * (1 - Real(r) * (r + 1) * t2 / 3) *
               (1 + (Real(r) * r + r + 1) * t2 / 9) / const_pi();
    }
    Real A = sin((r + 1) * theta);
    Real B = sin(r * theta);
    Real s = sin(theta);
    Real c = cos(theta);
    Real D = A * A + B * B - 2 * A * B * c;
    Real num = Real(r) * r * cos(r * theta) * s * A + c * A * B -
               Real(r + 1) * (r + 1) * cos((r + 1) * theta) * s * B;
    return num / (Real(r) * const_pi() * D);
}

Complex cpow(const Complex& z, int k) {
    Complex acc(Real(1));
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}

}  // namespace

Real alpha_r(int r) {
    check_r(r);
    Real rr(r);
    return pow((rr + 1) / rr, (rr + 1) / rr);
}

Real xhat_of_theta(const Real& theta, int r) {
    check_r(r);
    check_theta(theta, r);
    return exp(log_xhat(theta, r));
}

ThetaPoint theta_point(const Real& theta, int r) {
    check_r(r);
    check_theta(theta, r);
    return ThetaPoint{theta, xhat_of_theta(theta, r),
                      sin((r + 1) * theta) / sin(r * theta)};
}

Real theta_of_xhat(const Real& xhat, int r) {
    check_r(r);
    if (!(xhat > 0) || !(xhat < 1)) throw std::domain_error("xhat must lie in (0,1)");
    ensure_parametrization_monotone(r);

    Real target = log(xhat);
    Real lo(0), hi = theta_max(r);  // log xhat decreasing: g(lo+) = 0-, g(hi-) = -inf
    Real t = hi / 2;
    // A few bisection steps localize; Newton on g = log_xhat(theta) - target
    // finishes quadratically. g' = (r+1)^2 cot((r+1)t) - r^2 cot(rt) - cot t.
    auto g = [&](const Real& th) -> Real { return log_xhat(th, r) - target; };
    for (int i = 0; i < 12; ++i) {
        (g(t) > 0 ? lo : hi) = t;
        t = (lo + hi) / 2;
    }
    Real tol = pow(Real(10), -(precision() - 6));
    Real residual_floor = pow(Real(10), -(precision() - 10));
    for (int it = 0; it < 4 * precision(); ++it) {
        Real lx = log_xhat(t, r);
        Real gv = lx - target;
        // Residual at the working-precision noise floor of the log values:
        // theta is as sharp as the data allows.
        if (abs(gv) <= residual_floor * (abs(target) + abs(lx) + tol)) return t;
        (gv > 0 ? lo : hi) = t;
        Real gp;
        if (t < Real(kThetaSeriesGuard)) {
            Real a = Real(r) * (r + 1) / 2;
            Real b = Real(r) * (r + 1) * (Real(r) * r + r + 1) / 36;
            gp = -2 * a * t - 4 * b * t * t * t;
        } else {
            gp = Real(r + 1) * (r + 1) * cos((r + 1) * t) / sin((r + 1) * t) -
                 Real(r) * r * cos(r * t) / sin(r * t) - cos(t) / sin(t);
        }
        Real next = t - gv / gp;
        if (next == t) return t;  // Newton step below one ulp
        if (!(next > lo) || !(next < hi)) next = (lo + hi) / 2;  // safeguard
        Real change = abs(next - t);
        t = next;
        if (change <= tol * t) return t;
    }
    throw PrecisionError("theta_of_xhat did not converge; rerun with a higher precision");
}

Real density_type1(const Real& x, int r) {
    check_r(r);
    if (!(x > 0) || !(x < 1)) throw std::domain_error("density is defined on the open interval (0,1)");
    Real xhat = pow(x, r);
    Real theta = theta_of_xhat(xhat, r);
    // u_r(x) = x^{r-1} w_r(xhat) with w_r = density_ratio / xhat.
    return pow(x, r - 1) * density_ratio(theta, r) / xhat;
}

Real density_type2_per_ray(const Real& x, int r) { return density_type1(x, r) / r; }

Real cdf_type1(const Real& x, int r) {
    check_r(r);
    if (x <= 0) return Real(0);
    Real tol = pow(Real(10), -std::min(precision() - 20, 18));
    Real hi = theta_max(r);
    Real lo = (x >= 1) ? Real(0) : theta_of_xhat(pow(x, r), r);
    auto f = [&](const Real& th) { return cdf_integrand(th, r); };
    return adaptive_simpson(f, lo, hi, tol);
}

Real ks_distance(const ZeroSet& zs, int r) {
    check_r(r);
    if (!zs.rescaled) throw std::invalid_argument("ks_distance expects a rescaled zero set");
    std::vector<Real> xs = zs.zeros;
    std::sort(xs.begin(), xs.end());
    const long n = static_cast<long>(xs.size());
    if (n == 0) throw std::invalid_argument("ks_distance on an empty zero set");

    // One theta-sweep: theta(x_k) descends as x_k ascends, so F(x_k) grows
    // segment by segment instead of n full quadratures from scratch.
    Real tol = pow(Real(10), -std::min(precision() - 20, 18));
    auto f = [&](const Real& th) { return cdf_integrand(th, r); };
    Real prev_theta = theta_max(r);
    Real F(0);
    Real worst(0);
    for (long k = 1; k <= n; ++k) {
        const Real& x = xs[static_cast<size_t>(k - 1)];
        Real theta_k;
        if (x >= 1)
            theta_k = Real(0);
        else if (x <= 0)
            theta_k = prev_theta;
        else
            theta_k = theta_of_xhat(pow(x, r), r);
        if (theta_k > prev_theta) theta_k = prev_theta;  // ties from rounding
        F += adaptive_simpson(f, theta_k, prev_theta, tol);
        prev_theta = theta_k;
        Real d1 = abs(Real(k) / n - F);
        Real d2 = abs(Real(k - 1) / n - F);
        if (d1 > worst) worst = d1;
        if (d2 > worst) worst = d2;
    }
    return worst;
}

Real w_equation_residual(const Real& theta, int r, WEquationKind kind) {
    check_r(r);
    check_theta(theta, r);
    Real A = sin((r + 1) * theta);
    Real B = sin(r * theta);
    Real s = sin(theta);
    Real ar = pow(alpha_r(r), r);
    std::vector<Complex> terms;
    if (kind == WEquationKind::type1) {
        Real rho = A / B;
        Complex W = polar(rho, theta);
        Real xhat = xhat_of_theta(theta, r);
        terms = {cpow(W, r + 1), -(W * (Real(r) * ar * xhat)), Complex(Real(r) * ar * xhat)};
    } else {
        Real rho = pow(Real(r), 1 - Real(1) / r) * pow(A, Real(1) / r) / (alpha_r(r) * pow(s, Real(1) / r));
        Real z = rho * A / (Real(r) * B);
        Complex W = polar(rho, theta);
        terms = {cpow(W, r + 1) * ar, -(cpow(W, r) * (Real(r) * ar * z)),
                 Complex(pow(Real(r), r) * z)};
    }
    Complex acc;
    Real scale(0);
    for (const auto& t : terms) {
        acc += t;
        Real a = abs(t);
        if (a > scale) scale = a;
    }
    return scale > 0 ? abs(acc) / scale : Real(0);
}

DensityCurve sample_density(int r, long grid, DensityKind kind) {
    check_r(r);
    if (grid < 2) throw std::invalid_argument("density grid needs at least 2 points");
    DensityCurve out;
    out.kind = kind;
    out.r = r;
    out.precision = precision();
    out.samples.reserve(static_cast<size_t>(grid));
    for (long i = 0; i < grid; ++i) {
        Real x = (Real(i) + Real(1) / 2) / grid;
        Real u = kind == DensityKind::type1 ? density_type1(x, r) : density_type2_per_ray(x, r);
        out.samples.emplace_back(std::move(x), std::move(u));
    }
    return out;
}

}  // namespace angelesco
