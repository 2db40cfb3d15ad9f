#include "kemeny/polynomial.hpp"

#include <ostream>
#include <utility>

namespace kemeny {

Polynomial Polynomial::monomial(std::size_t power, const Rational& coeff) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
    Polynomial p = *this;
    for (unsigned k = 0; k < order; ++k) {
        if (p.c_.empty()) return {};
        std::vector<Rational> d;
        d.reserve(p.c_.size() - 1);
        for (std::size_t i = 1; i < p.c_.size(); ++i)
            d.push_back(p.c_[i] * Rational(static_cast<long>(i)));
        p = Polynomial(std::move(d));
    }
    return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int db = divisor.degree();
    const Rational lead_inv = divisor.leading().inverse();
    std::vector<Rational> quot;
    if (degree() >= db) quot.assign(static_cast<std::size_t>(degree() - db) + 1, Rational(0));
    for (int i = degree(); i >= db; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        const Rational q = top * lead_inv;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw DivisionNotExact("polynomial division left remainder " + r.str());
    return q;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor.is_zero()) return {};
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * factor);
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return Polynomial(std::move(c));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        (void)q;
        r0 = std::move(r1);
        // keep remainders monic so coefficient sizes stay tame
        r1 = r.is_zero() ? Polynomial{} : r.scaled(r.leading().inverse());
    }
    if (r0.is_zero()) return {};
    return r0.scaled(r0.leading().inverse());
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v.sign() < 0 ? " - " : " + ";
            if (v.sign() < 0) v = -v;
        }
        if (i == 0) {
            out += v.str();
        } else {
            if (v != Rational(1)) out += v.str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace kemeny
