#pragma once

#include <string>
#include <vector>

#include "kemeny/polynomial.hpp"

namespace kemeny {

/// Reduced rational function num/den over Q[x].
///
/// Canonical form: gcd(num, den) = 1, and den is scaled so den(0) = 1 when
/// the constant term is nonzero, otherwise so its leading coefficient is 1.
/// The den(0) = 1 convention makes power-series coefficient extraction
/// (probabilities) a plain series division.
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{Rational(1)} {}
    RationalFunction(const Polynomial& p) : num_(p), den_{Rational(1)} {}  // NOLINT
    RationalFunction(const Rational& c) : num_(c), den_{Rational(1)} {}    // NOLINT
    RationalFunction(long c) : num_(Rational(c)), den_{Rational(1)} {}     // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// The underlying polynomial; requires is_polynomial().
    Polynomial as_polynomial() const;

    Rational eval(const Rational& x0) const;
    RationalFunction derivative() const;

    /// First n power-series coefficients around 0; requires den(0) != 0.
    std::vector<Rational> series(std::size_t n) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    // canonical form makes coefficient equality the right notion
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace kemeny
