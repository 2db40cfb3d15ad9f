#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kemeny/rational.hpp"

namespace kemeny {

/// Dense univariate polynomial over Rational.
///
/// Coefficient i is the coefficient of x^i. Canonical form: no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector and
/// degree -1. Immutable in spirit.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {  // NOLINT: implicit, constants embed naturally
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(std::size_t power, const Rational& coeff = 1);

    /// degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    /// Coefficient of x^i; zero beyond the stored range.
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x0) const;
    Polynomial derivative(unsigned order = 1) const;

    /// Exact quotient; throws DivisionNotExact when the remainder is nonzero.
    Polynomial exact_div(const Polynomial& divisor) const;
    /// Euclidean division: returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    Polynomial scaled(const Rational& factor) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human-readable rendering, e.g. "1 - 5/6*x + 1/36*x^2".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd over Q[x]; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kemeny
