#include "angelesco/poly.hpp"

namespace angelesco {

Poly Poly::monomial(long power, const Complex& coeff) {
    if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
    if (coeff.is_zero()) return Poly();
    std::vector<Complex> c(static_cast<size_t>(power) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
}

void Poly::set_coeff(long k, const Complex& v) {
    if (k < 0) throw std::invalid_argument("coefficient index must be non-negative");
    if (k >= static_cast<long>(c_.size())) {
        if (v.is_zero()) return;
        c_.resize(static_cast<size_t>(k) + 1);
    }
    c_[static_cast<size_t>(k)] = v;
    trim();
}

Complex Poly::eval(const Complex& z) const {
    Complex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative(long order) const {
    if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
    Poly p = *this;
    for (long o = 0; o < order; ++o) {
        if (p.c_.empty()) return Poly();
        std::vector<Complex> d;
        d.reserve(p.c_.size() - 1);
        for (size_t k = 1; k < p.c_.size(); ++k) d.push_back(p.c_[k] * Real(static_cast<long>(k)));
        p = Poly(std::move(d));
    }
    return p;
}

Poly Poly::compose_scaled(const Complex& s) const {
    std::vector<Complex> out(c_.size());
    Complex pw(Real(1));
    for (size_t k = 0; k < c_.size(); ++k) {
        out[k] = c_[k] * pw;
        pw *= s;
    }
    return Poly(std::move(out));
}

Poly Poly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("shift must be non-negative");
    if (c_.empty()) return Poly();
    std::vector<Complex> out(c_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < c_.size(); ++i) out[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(out));
}

Real Poly::max_abs_coeff() const {
    Real m(0);
    for (const auto& v : c_) {
        Real a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Complex& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Complex& s) { return a *= s; }
Poly operator*(const Complex& s, Poly a) { return a *= s; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Complex> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(out));
}

WeightedForm weighted_derivative(const WeightedForm& f, const StarWeight& w) {
    const Poly& q = f.poly;
    Poly out = q * Complex(f.exponent);
    out += q.derivative().shifted(1);
    out -= q.shifted(w.r) * Complex(Real(w.r));
    return WeightedForm{f.exponent - 1, std::move(out)};
}

}  // namespace angelesco
