#include "kemeny/detcore.hpp"

namespace kemeny {

PolyMatrix id_minus_x_matrix(const RationalMatrix& m) {
    const std::size_t n = m.size();
    PolyMatrix a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c{Rational(i == j ? 1 : 0), -m[i][j]};
            a[i][j] = Polynomial(std::move(c));
        }
    return a;
}

Polynomial bareiss_det(PolyMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial(Rational(1));
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("bareiss_det needs a square matrix");

    // lift to integer coefficients: scale every entry by the lcm L of all
    // coefficient denominators, then divide the result by L^n at the end
    mpz_class lcm(1);
    for (const auto& row : a)
        for (const auto& p : row)
            for (const auto& c : p.coeffs()) {
                mpz_class d = c.den();
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            }
    const Rational scale{mpq_class(lcm)};
    if (lcm != 1)
        for (auto& row : a)
            for (auto& p : row) p = p.scaled(scale);

    int sign = 1;
    Polynomial prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return {};  // singular
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    if (sign < 0) det = -det;

    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
    return det.scaled(Rational{mpq_class(mpz_class(1), denom)});
}

Polynomial det_id_minus_xM(const Chain& c) { return bareiss_det(id_minus_x_matrix(c.matrix())); }

Polynomial det_id_minus_xM_leverrier(const Chain& c) {
    const std::size_t d = c.size();
    const RationalMatrix& m = c.matrix();

    auto mat_mul = [d](const RationalMatrix& x, const RationalMatrix& y) {
        RationalMatrix r(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                if (x[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    };
    auto trace = [d](const RationalMatrix& x) {
        Rational t(0);
        for (std::size_t i = 0; i < d; ++i) t += x[i][i];
        return t;
    };

    // char(t) = det(t*Id - M) = t^d + c_{d-1} t^{d-1} + ... + c_0
    std::vector<Rational> coef(d + 1, Rational(0));
    coef[d] = Rational(1);
    RationalMatrix ak = m;
    for (std::size_t k = 1; k <= d; ++k) {
        if (k > 1) {
            RationalMatrix shifted = ak;  // A_k = M (A_{k-1} + c_{d-k+1} Id)
            for (std::size_t i = 0; i < d; ++i) shifted[i][i] += coef[d - k + 1];
            ak = mat_mul(m, shifted);
        }
        coef[d - k] = -(trace(ak) / Rational(static_cast<long>(k)));
    }

    // det(Id - xM) = x^d char(1/x) = sum_k c_k x^{d-k}
    std::vector<Rational> out(d + 1, Rational(0));
    for (std::size_t k = 0; k <= d; ++k) out[d - k] = coef[k];
    return Polynomial(std::move(out));
}

std::vector<Polynomial> pi_polys(const Chain& c) {
    std::vector<Polynomial> out;
    out.reserve(c.size());
    for (std::size_t v = 0; v < c.size(); ++v)
        out.push_back(bareiss_det(id_minus_x_matrix(c.delete_state(v))));
    return out;
}

namespace {

Polynomial signed_cofactor(const PolyMatrix& a, std::size_t u, std::size_t v) {
    const std::size_t d = a.size();
    // Adj_{u,v} = (-1)^{u+v} * minor of A with row v and column u removed
    PolyMatrix minor;
    minor.reserve(d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (i == v) continue;
        std::vector<Polynomial> row;
        row.reserve(d - 1);
        for (std::size_t j = 0; j < d; ++j)
            if (j != u) row.push_back(a[i][j]);
        minor.push_back(std::move(row));
    }
    Polynomial det = bareiss_det(std::move(minor));
    return ((u + v) % 2 == 0) ? det : -det;
}

}  // namespace

PolyMatrix adjugate(const Chain& c) {
    const std::size_t d = c.size();
    const PolyMatrix a = id_minus_x_matrix(c.matrix());
    PolyMatrix adj(d, std::vector<Polynomial>(d));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) adj[u][v] = signed_cofactor(a, u, v);
    return adj;
}

Polynomial adjugate_entry(const Chain& c, std::size_t u, std::size_t v) {
    return signed_cofactor(id_minus_x_matrix(c.matrix()), u, v);
}

Polynomial k0_poly(const Chain& c) {
    const Polynomial det = det_id_minus_xM(c);
    // (1-x) divides det because 1 is an eigenvalue of any stochastic matrix;
    // exact_div throws DivisionNotExact if that invariant is ever broken
    return det.exact_div(Polynomial{Rational(1), Rational(-1)});
}

CharBundle CharBundle::compute(const Chain& c) {
    CharBundle b;
    b.det_poly = det_id_minus_xM(c);
    b.pi = pi_polys(c);
    b.k0 = b.det_poly.exact_div(Polynomial{Rational(1), Rational(-1)});
    b.Z = b.k0.eval(Rational(1));
    return b;
}

}  // namespace kemeny
