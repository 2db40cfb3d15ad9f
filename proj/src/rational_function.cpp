#include "kemeny/rational_function.hpp"

#include <ostream>

namespace kemeny {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    const Rational c0 = den_.coeff(0);
    const Rational scale = c0.is_zero() ? den_.leading().inverse() : c0.inverse();
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

Polynomial RationalFunction::as_polynomial() const {
    return num_.exact_div(den_);
}

Rational RationalFunction::eval(const Rational& x0) const {
    const Rational d = den_.eval(x0);
    if (d.is_zero()) throw PoleAtPoint("pole at x = " + x0.str());
    return num_.eval(x0) / d;
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

std::vector<Rational> RationalFunction::series(std::size_t n) const {
    const Rational d0 = den_.coeff(0);
    if (d0.is_zero()) throw PoleAtPoint("series expansion around a pole at 0");
    const Rational d0inv = d0.inverse();
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        Rational acc = num_.coeff(m);
        const std::size_t smax = std::min(m, static_cast<std::size_t>(den_.degree()));
        for (std::size_t s = 1; s <= smax; ++s) acc -= den_.coeff(s) * out[m - s];
        out.push_back(acc * d0inv);
    }
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace kemeny
