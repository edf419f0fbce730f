#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace angelesco {

/// Arbitrary-precision real scalar. The working precision (significant
/// decimal digits) is a process-global run parameter, default 50, minimum 15.
using Real = boost::multiprecision::mpfr_float;

inline constexpr int kDefaultPrecision = 50;
inline constexpr int kMinPrecision = 15;

int precision();
void set_precision(int digits);

/// Scale-relative tolerance 10^{-(P - margin)} at the current precision P.
Real rel_tol(int margin);

const Real& const_pi();

/// Complex scalar over Real. Kept minimal on purpose: the library needs
/// arithmetic, conjugation, modulus/argument and polar construction, nothing
/// more, and std::complex is not specified for user-defined scalar types.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(int r) : re(r), im(0) {}              // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return sqrt(norm(z)); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    if (d == 0) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

Complex polar(const Real& modulus, const Real& angle);

/// ln Gamma(x) for x > 0 at the current precision; throws std::domain_error
/// for x <= 0.
Real log_gamma(const Real& x);

/// Gamma(num)/Gamma(den) for num, den > 0, assembled as exp of a log-gamma
/// difference so that huge intermediate Gamma values never materialize.
Real gamma_ratio(const Real& num, const Real& den);

/// The entire function 1/Gamma(x), valid for every real x. Used where a
/// parameter shift drives a Gamma argument to zero or below: at the poles of
/// Gamma the reciprocal is exactly 0, elsewhere the reflection formula
/// 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi applies.
Real reciprocal_gamma(const Real& x);

/// Rising factorial a(a+1)...(a+m-1); the empty product (m = 0) is 1.
Real pochhammer(const Real& a, long m);

Real factorial_real(long n);
Real binomial_real(long n, long k);

/// omega^j with omega = e^{2 pi i / r}; j is reduced mod r, exact values on
/// the axes.
Complex root_of_unity(int r, long j);

/// Raised-precision scope for internally cancellation-heavy computations.
/// Values created inside keep their (finer) precision after the scope ends;
/// callers round results back to the run precision where the contract needs
/// it.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    int saved_;
};

/// Round a value to the current run precision.
Real round_to_precision(const Real& x);

}  // namespace angelesco
