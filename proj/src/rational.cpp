#include "kemeny/rational.hpp"

#include <cctype>
#include <ostream>

namespace kemeny {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // trim ASCII whitespace
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty rational literal");
    const auto last = s.find_last_not_of(" \t\r\n");
    s = s.substr(first, last - first + 1);

    std::string sign;
    if (s[0] == '+' || s[0] == '-') {
        if (s[0] == '-') sign = "-";
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("bad rational literal: '" + text + "'");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw ParseError("bad rational literal: '" + text + "'");
        mpz_class num(sign + p, 10), den(q, 10);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("bad rational literal: '" + text + "'");
        mpz_class num(sign + (ip.empty() ? "0" : ip) + fp, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    }
    if (!all_digits(s)) throw ParseError("bad rational literal: '" + text + "'");
    return Rational(mpq_class(mpz_class(sign + s, 10)));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (is_zero()) return "0";

    const bool neg = sign() < 0;
    mpz_class a = ::abs(v_.get_num());
    const mpz_class& b = v_.get_den();

    // exponent e with 10^e <= a/b < 10^{e+1}
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto pow10 = [](long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    // raise e while a/b >= 10^{e+1}
    for (;;) {
        mpz_class lhs = (e + 1 >= 0) ? a : a * pow10(-(e + 1));
        mpz_class rhs = (e + 1 >= 0) ? b * pow10(e + 1) : b;
        if (lhs >= rhs) ++e; else break;
    }
    // lower e while a/b < 10^e
    for (;;) {
        mpz_class lhs = (e >= 0) ? a : a * pow10(-e);
        mpz_class rhs = (e >= 0) ? b * pow10(e) : b;
        if (lhs < rhs) --e; else break;
    }

    // q = round_half_even(a/b * 10^{sig-1-e}), a sig_digits-digit integer
    const long k = sig_digits - 1 - e;
    mpz_class n0 = (k >= 0) ? a * pow10(k) : a;
    mpz_class d0 = (k >= 0) ? b : b * pow10(-k);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n0.get_mpz_t(), d0.get_mpz_t());
    const mpz_class twice = 2 * r;
    if (twice > d0 || (twice == d0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    if (q == pow10(sig_digits)) {  // rounded up across a power of ten
        q = pow10(sig_digits - 1);
        ++e;
    }

    std::string digits = q.get_str();
    std::string out;
    if (e >= sig_digits || e < -4) {
        out = digits.substr(0, 1);
        if (sig_digits > 1) out += "." + digits.substr(1);
        out += "e" + std::string(e >= 0 ? "+" : "-") + std::to_string(e >= 0 ? e : -e);
    } else if (e >= 0) {
        out = digits.substr(0, e + 1);
        if (e + 1 < sig_digits) out += "." + digits.substr(e + 1);
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace kemeny
