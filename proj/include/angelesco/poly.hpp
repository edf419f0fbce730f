#pragma once

#include <vector>

#include "angelesco/numerics.hpp"
#include "angelesco/star_weight.hpp"

namespace angelesco {

/// Dense complex polynomial, coefficient index = power of x. The highest
/// stored coefficient is nonzero; the zero polynomial stores nothing and has
/// degree -1. Degrees stay in the hundreds at most, so the dense form wins
/// over anything structured.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Complex& v) { return Poly(std::vector<Complex>{v}); }
    static Poly monomial(long power, const Complex& coeff);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Complex>& coeffs() const { return c_; }

    /// Coefficient of x^k, 0 outside the stored range.
    Complex coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return Complex();
        return c_[static_cast<size_t>(k)];
    }

    void set_coeff(long k, const Complex& v);

    /// Horner evaluation at the working precision.
    Complex eval(const Complex& z) const;

    /// Exact formal derivative of the given order.
    Poly derivative(long order = 1) const;

    /// q with q(x) = p(s x): coefficient k is multiplied by s^k.
    Poly compose_scaled(const Complex& s) const;

    /// x^k * p.
    Poly shifted(long k) const;

    Real max_abs_coeff() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Complex& s);

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Complex> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Complex& s);
Poly operator*(const Complex& s, Poly a);
Poly operator*(const Poly& a, const Poly& b);

/// The form x^c e^{-x^r} * poly(x); r comes from the StarWeight in context.
/// c > -1 is only required when the form is integrated over a ray, not here.
struct WeightedForm {
    Real exponent;
    Poly poly;
};

/// One derivative step: d/dx [x^c e^{-x^r} q] = x^{c-1} e^{-x^r} (c q + x q' - r x^r q).
/// The exponent drops by one and the polynomial degree grows by exactly r.
WeightedForm weighted_derivative(const WeightedForm& f, const StarWeight& w);

}  // namespace angelesco
