#include "kemeny/hitting.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace kemeny {

namespace {

// row vector * M, exact
std::vector<Rational> row_times_matrix(const std::vector<Rational>& row, const RationalMatrix& m) {
    const std::size_t d = m.size();
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t w = 0; w < d; ++w) {
        if (row[w].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) out[j] += row[w] * m[w][j];
    }
    return out;
}

// row u of M^p
std::vector<Rational> matrix_power_row(const Chain& c, std::size_t u, unsigned p) {
    std::vector<Rational> row(c.size(), Rational(0));
    row[u] = Rational(1);
    for (unsigned k = 0; k < p; ++k) row = row_times_matrix(row, c.matrix());
    return row;
}

// exact Gaussian elimination; A must be nonsingular
std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) throw Error("singular linear system");
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        const Rational inv = a[k][k].inverse();
        for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
        b[k] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const Rational f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

// shared precomputation for the GF family
struct Context {
    CharBundle bundle;
    PolyMatrix adj;

    explicit Context(const Chain& c) : bundle(CharBundle::compute(c)), adj(adjugate(c)) {}

    RationalFunction g0(std::size_t u, std::size_t v) const {
        if (u == v) return RationalFunction(1);
        return {adj[u][v], bundle.pi[v]};
    }
    RationalFunction g1(std::size_t u, std::size_t v) const {
        if (u != v) return g0(u, v);
        return RationalFunction(1) - RationalFunction(bundle.det_poly, bundle.pi[u]);
    }
    RationalFunction gt(const Chain& c, std::size_t u, std::size_t v, unsigned t) const {
        if (t == 0) return g0(u, v);
        if (t == 1) return g1(u, v);
        const auto row = matrix_power_row(c, u, t - 1);
        RationalFunction acc;
        for (std::size_t w = 0; w < c.size(); ++w) {
            if (row[w].is_zero()) continue;
            acc = acc + RationalFunction(row[w]) * g1(w, v);
        }
        return RationalFunction(Polynomial::monomial(t - 1)) * acc;
    }
};

std::string rational_list(const std::vector<Rational>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
    return s;
}

}  // namespace

std::vector<Rational> stationary(const Chain& c) {
    const CharBundle b = CharBundle::compute(c);
    std::vector<Rational> rho;
    rho.reserve(c.size());
    for (const auto& p : b.pi) rho.push_back(p.eval(Rational(1)) / b.Z);
    return rho;
}

HittingGF hitting_gf(const Chain& c, std::size_t u, std::size_t v, unsigned t) {
    if (u >= c.size() || v >= c.size()) throw UnknownState("state index out of range");
    if (t > kMaxShift)
        throw std::invalid_argument("shift t exceeds the supported maximum " +
                                    std::to_string(kMaxShift));
    const Polynomial pi_v = bareiss_det(id_minus_x_matrix(c.delete_state(v)));
    auto g0_entry = [&](std::size_t w) -> RationalFunction {
        if (w == v) return RationalFunction(1);
        return {adjugate_entry(c, w, v), pi_v};
    };
    if (t == 0) return {u, v, t, g0_entry(u)};

    const Polynomial det = det_id_minus_xM(c);
    auto g1_entry = [&](std::size_t w) -> RationalFunction {
        if (w != v) return g0_entry(w);
        return RationalFunction(1) - RationalFunction(det, pi_v);
    };
    if (t == 1) return {u, v, t, g1_entry(u)};

    const auto row = matrix_power_row(c, u, t - 1);
    RationalFunction acc;
    for (std::size_t w = 0; w < c.size(); ++w) {
        if (row[w].is_zero()) continue;
        acc = acc + RationalFunction(row[w]) * g1_entry(w);
    }
    return {u, v, t, RationalFunction(Polynomial::monomial(t - 1)) * acc};
}

RationalFunction hitting_gf_taboo(const Chain& c, std::size_t u, std::size_t v, unsigned t) {
    if (u >= c.size() || v >= c.size()) throw UnknownState("state index out of range");
    const std::size_t d = c.size();
    const PolyMatrix taboo = id_minus_x_matrix(c.zero_column(v));
    const Polynomial denom = bareiss_det(taboo);

    // y = (Id - xM^{*v})^{-1} (xM) e_v by Cramer over Q[x]
    std::vector<Polynomial> rhs(d);
    for (std::size_t w = 0; w < d; ++w)
        rhs[w] = Polynomial::monomial(1, c.at(w, v));
    std::vector<RationalFunction> y(d);
    for (std::size_t w = 0; w < d; ++w) {
        PolyMatrix replaced = taboo;
        for (std::size_t i = 0; i < d; ++i) replaced[i][w] = rhs[i];
        y[w] = RationalFunction(bareiss_det(std::move(replaced)), denom);
    }

    if (t == 0) return u == v ? RationalFunction(1) : y[u];
    if (t == 1) return y[u];
    const auto row = matrix_power_row(c, u, t - 1);
    RationalFunction acc;
    for (std::size_t w = 0; w < d; ++w) {
        if (row[w].is_zero()) continue;
        acc = acc + RationalFunction(row[w]) * y[w];
    }
    return RationalFunction(Polynomial::monomial(t - 1)) * acc;
}

RationalFunction return_gf(const Chain& c, std::size_t u) {
    if (u >= c.size()) throw UnknownState("state index out of range");
    const Polynomial det = det_id_minus_xM(c);
    const Polynomial pi_u = bareiss_det(id_minus_x_matrix(c.delete_state(u)));
    return RationalFunction(1) - RationalFunction(det, pi_u);
}

std::vector<Rational> hitting_distribution(const Chain& c, std::size_t u, std::size_t v,
                                           std::size_t m_max) {
    if (u >= c.size() || v >= c.size()) throw UnknownState("state index out of range");
    const std::size_t d = c.size();
    const Polynomial pi_v = bareiss_det(id_minus_x_matrix(c.delete_state(v)));
    const RationalFunction g0 =
        u == v ? RationalFunction(1) : RationalFunction(adjugate_entry(c, u, v), pi_v);

    const std::size_t base = std::min(m_max + 1, d);
    std::vector<Rational> p = g0.series(base);
    // beyond m = d-1 the law obeys the pi_v-coefficient recursion
    for (std::size_t m = base; m <= m_max; ++m) {
        Rational acc(0);
        for (std::size_t s = 1; s <= static_cast<std::size_t>(pi_v.degree()); ++s)
            if (s <= m) acc += pi_v.coeff(s) * p[m - s];
        p.push_back(-acc);
    }
    p.resize(m_max + 1, Rational(0));
    return p;
}

MomentTable factorial_moments(const Chain& c, unsigned k_max) {
    const std::size_t d = c.size();
    Context ctx(c);
    MomentTable table;
    table.k_max = k_max;
    table.values.assign(d, std::vector<std::vector<Rational>>(d));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            RationalFunction f = ctx.g1(u, v);
            auto& cell = table.values[u][v];
            cell.reserve(k_max + 1);
            for (unsigned k = 0; k <= k_max; ++k) {
                cell.push_back(f.eval(Rational(1)));
                if (k < k_max) f = f.derivative();
            }
        }
    return table;
}

std::vector<std::vector<Rational>> mean_hitting_times(const Chain& c) {
    const std::size_t d = c.size();
    std::vector<std::vector<Rational>> h(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t v = 0; v < d; ++v) {
        // (Id_{d-1} - M^{(v)}) g = 1 over the non-v states
        RationalMatrix a = c.delete_state(v);
        for (std::size_t i = 0; i < d - 1; ++i)
            for (std::size_t j = 0; j < d - 1; ++j)
                a[i][j] = Rational(i == j ? 1 : 0) - a[i][j];
        const std::vector<Rational> ones(d - 1, Rational(1));
        const std::vector<Rational> g = solve_linear(std::move(a), ones);

        std::size_t idx = 0;
        Rational from_v(1);
        for (std::size_t w = 0; w < d; ++w) {
            if (w == v) continue;
            h[w][v] = g[idx];
            from_v += c.at(v, w) * g[idx];
            ++idx;
        }
        h[v][v] = from_v;
    }
    return h;
}

KemenyResult kemeny(const Chain& c) {
    const std::size_t d = c.size();
    const CharBundle b = CharBundle::compute(c);
    const auto h = mean_hitting_times(c);

    std::vector<Rational> q1(d, Rational(0));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) q1[u] += h[u][v] * b.pi[v].eval(Rational(1));
    for (std::size_t u = 1; u < d; ++u)
        if (q1[u] != q1[0])
            throw ConstancyViolation("Q^{>=1}(u) differs across starting states: " +
                                     rational_list(q1));

    KemenyResult r;
    r.Q1 = q1[0];
    r.by_mean_hitting = q1[0] / b.Z;
    r.by_polynomial = Rational(static_cast<long>(d)) - b.k0.derivative().eval(Rational(1)) / b.Z;

    // numeric route: k0(x) = prod over nonzero lambda_i != 1 of (1 - x lambda_i),
    // so each root x_j contributes 1/(1 - 1/x_j); zero eigenvalues contribute 1 each
    const int m = b.k0.degree();
    double acc = 1.0 + static_cast<double>(static_cast<int>(d) - 1 - m);
    if (m > 0) {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
        const double lead = b.k0.coeff(static_cast<std::size_t>(m)).to_double();
        for (int i = 0; i < m; ++i) {
            if (i + 1 < m) companion(i + 1, i) = 1.0;
            companion(i, m - 1) = -b.k0.coeff(static_cast<std::size_t>(i)).to_double() / lead;
        }
        const Eigen::VectorXcd roots = companion.eigenvalues();
        std::complex<double> sum(0.0, 0.0);
        for (int i = 0; i < m; ++i) {
            const std::complex<double> lambda = 1.0 / roots(i);
            sum += 1.0 / (1.0 - lambda);
        }
        // conjugate pairs cancel the imaginary parts
        acc += sum.real();
    }
    r.by_eigenvalues = acc;
    return r;
}

Rational q_shift(const Chain& c, unsigned t) {
    const std::size_t d = c.size();
    const CharBundle b = CharBundle::compute(c);
    const auto h = mean_hitting_times(c);
    std::vector<Rational> pi1(d);
    for (std::size_t v = 0; v < d; ++v) pi1[v] = b.pi[v].eval(Rational(1));

    std::vector<Rational> q(d, Rational(0));
    for (std::size_t u = 0; u < d; ++u) {
        if (t == 0) {
            for (std::size_t v = 0; v < d; ++v)
                if (u != v) q[u] += h[u][v] * pi1[v];
        } else {
            const auto row = matrix_power_row(c, u, t - 1);
            for (std::size_t v = 0; v < d; ++v) {
                Rational e(static_cast<long>(t) - 1);
                for (std::size_t w = 0; w < d; ++w) e += row[w] * h[w][v];
                q[u] += e * pi1[v];
            }
        }
    }
    for (std::size_t u = 1; u < d; ++u)
        if (q[u] != q[0])
            throw ConstancyViolation("Q^{>=" + std::to_string(t) +
                                     "}(u) differs across starting states: " + rational_list(q));
    return q[0];
}

Rational mean_hitting_shifted(const Chain& c, std::size_t u, std::size_t v, unsigned t) {
    if (u >= c.size() || v >= c.size()) throw UnknownState("state index out of range");
    const auto h = mean_hitting_times(c);
    if (t == 0) return u == v ? Rational(0) : h[u][v];
    const auto row = matrix_power_row(c, u, t - 1);
    Rational e(static_cast<long>(t) - 1);
    for (std::size_t w = 0; w < c.size(); ++w) e += row[w] * h[w][v];
    return e;
}

std::vector<Rational> geometric_stop_law(const Chain& c, std::size_t u, const Rational& x0) {
    if (x0 <= Rational(0) || x0 >= Rational(1))
        throw std::invalid_argument("x0 must lie in (0,1)");
    Context ctx(c);
    const Rational det = ctx.bundle.det_poly.eval(x0);
    std::vector<Rational> law;
    law.reserve(c.size());
    for (std::size_t v = 0; v < c.size(); ++v)
        law.push_back((Rational(1) - x0) * ctx.adj[u][v].eval(x0) / det);
    return law;
}

std::vector<IdentityCheck> verify_identities(const Chain& c) {
    const std::size_t d = c.size();
    Context ctx(c);
    const CharBundle& b = ctx.bundle;
    const std::string* labels = c.states().data();

    std::vector<IdentityCheck> out;
    auto record = [&out](std::string name, bool pass, std::string witness = "") {
        out.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    };

    std::vector<std::vector<RationalFunction>> g0(d, std::vector<RationalFunction>(d));
    std::vector<std::vector<RationalFunction>> g1(d, std::vector<RationalFunction>(d));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            g0[u][v] = ctx.g0(u, v);
            g1[u][v] = ctx.g1(u, v);
        }

    // (a) K-constancy: sum_v G^{>=0}_{u,v} pi_v = k0 for every u
    {
        bool pass = true;
        std::string witness;
        for (std::size_t u = 0; u < d && pass; ++u) {
            RationalFunction sum;
            for (std::size_t v = 0; v < d; ++v) sum = sum + g0[u][v] * RationalFunction(b.pi[v]);
            if (sum != RationalFunction(b.k0)) {
                pass = false;
                witness = "u=" + labels[u] + ": " + sum.str() + " != " + b.k0.str();
            }
        }
        record("k_constancy", pass, witness);
    }

    // (b) shift law: sum_v G^{>=t}_{u,v} pi_v = x^t k0 for t = 1, 2
    {
        bool pass = true;
        std::string witness;
        for (unsigned t = 1; t <= 2 && pass; ++t) {
            const RationalFunction expect(Polynomial::monomial(t) * b.k0);
            for (std::size_t u = 0; u < d && pass; ++u) {
                RationalFunction sum;
                for (std::size_t v = 0; v < d; ++v)
                    sum = sum + ctx.gt(c, u, v, t) * RationalFunction(b.pi[v]);
                if (sum != expect) {
                    pass = false;
                    witness = "t=" + std::to_string(t) + ", u=" + labels[u];
                }
            }
        }
        record("shift_law_gf", pass, witness);
    }

    // (c) adjugate factorization: G^{>=0}_{u,v} pi_v = Adj_{u,v}
    {
        bool pass = true;
        std::string witness;
        for (std::size_t u = 0; u < d && pass; ++u)
            for (std::size_t v = 0; v < d && pass; ++v)
                if (g0[u][v] * RationalFunction(b.pi[v]) != RationalFunction(ctx.adj[u][v])) {
                    pass = false;
                    witness = "(u,v)=(" + labels[u] + "," + labels[v] + ")";
                }
        record("adjugate_factorization", pass, witness);
    }

    // (d) renewal split: Adj_{u,v}/det = G^{>=0}_{u,v} (Adj_{v,v}/det)
    {
        bool pass = true;
        std::string witness;
        for (std::size_t u = 0; u < d && pass; ++u)
            for (std::size_t v = 0; v < d && pass; ++v) {
                const RationalFunction lhs(ctx.adj[u][v], b.det_poly);
                const RationalFunction rhs = g0[u][v] * RationalFunction(ctx.adj[v][v], b.det_poly);
                if (lhs != rhs) {
                    pass = false;
                    witness = "(u,v)=(" + labels[u] + "," + labels[v] + ")";
                }
            }
        record("renewal_split", pass, witness);
    }

    // (e) Jacobi: x det' + sum_v G^{>=1}_{v,v} pi_v = 0
    {
        RationalFunction sum(Polynomial::monomial(1) * b.det_poly.derivative());
        for (std::size_t v = 0; v < d; ++v) sum = sum + g1[v][v] * RationalFunction(b.pi[v]);
        record("jacobi_derivative", sum.is_zero(), sum.str());
    }

    // (f) constancy sum: sum_v G^{>=0}_{u,v} / (1 - G^{>=1}_{v,v}) = 1/(1-x)
    {
        bool pass = true;
        std::string witness;
        const RationalFunction expect(Polynomial(Rational(1)),
                                      Polynomial{Rational(1), Rational(-1)});
        for (std::size_t u = 0; u < d && pass; ++u) {
            RationalFunction sum;
            for (std::size_t v = 0; v < d; ++v)
                sum = sum + g0[u][v] / (RationalFunction(1) - g1[v][v]);
            if (sum != expect) {
                pass = false;
                witness = "u=" + labels[u] + ": " + sum.str();
            }
        }
        record("constancy_sum", pass, witness);
    }

    // (g) return identity: 1 - G^{>=1}_{u,u} = det/pi_u
    {
        bool pass = true;
        std::string witness;
        for (std::size_t u = 0; u < d && pass; ++u)
            if (RationalFunction(1) - g1[u][u] != RationalFunction(b.det_poly, b.pi[u])) {
                pass = false;
                witness = "u=" + labels[u];
            }
        record("return_identity", pass, witness);
    }

    // (h) det''(1) = (1-d) Z - sum_v pi_v'(1)
    {
        const Rational lhs = b.det_poly.derivative(2).eval(Rational(1));
        Rational rhs = Rational(1 - static_cast<long>(d)) * b.Z;
        for (std::size_t v = 0; v < d; ++v) rhs -= b.pi[v].derivative().eval(Rational(1));
        record("second_derivative", lhs == rhs, lhs.str() + " != " + rhs.str());
    }

    // (i) Z/2 Var_u(tau_X^{>=1}) + sum_v E_u(tau_v^{>=1}) pi_v'(1) constant in u
    {
        const auto h = mean_hitting_times(c);
        const auto moments = factorial_moments(c, 2);
        std::vector<Rational> rho(d);
        for (std::size_t v = 0; v < d; ++v) rho[v] = b.pi[v].eval(Rational(1)) / b.Z;

        std::vector<Rational> combo(d, Rational(0));
        for (std::size_t u = 0; u < d; ++u) {
            Rational fac1(0), fac2(0), cross(0);
            for (std::size_t v = 0; v < d; ++v) {
                fac1 += rho[v] * moments.values[u][v][1];
                fac2 += rho[v] * moments.values[u][v][2];
                cross += h[u][v] * b.pi[v].derivative().eval(Rational(1));
            }
            const Rational var = fac2 + fac1 - fac1 * fac1;
            combo[u] = b.Z / Rational(2) * var + cross;
        }
        bool pass = true;
        for (std::size_t u = 1; u < d; ++u)
            if (combo[u] != combo[0]) pass = false;
        record("variance_combination", pass, rational_list(combo));
    }

    // (j) tilted-measure constancy at x0 in {1/4, 1/2, 3/4}
    {
        bool pass = true;
        std::string witness;
        for (const Rational& x0 : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            Rational first(0);
            for (std::size_t u = 0; u < d; ++u) {
                Rational sum(0);
                for (std::size_t v = 0; v < d; ++v)
                    sum += g0[u][v].eval(x0) * b.pi[v].eval(x0);
                if (u == 0) {
                    first = sum;
                } else if (sum != first) {
                    pass = false;
                    witness = "x0=" + x0.str() + ", u=" + labels[u];
                }
            }
        }
        record("tilted_constancy", pass, witness);
    }

    return out;
}

}  // namespace kemeny
