#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kemeny/chain.hpp"
#include "kemeny/detcore.hpp"
#include "kemeny/rational_function.hpp"

namespace kemeny {

/// Largest supported shift t for hitting_gf; beyond this, the shift law
/// K^{>=t}(x) = x^t K^{>=0}(x) makes larger t redundant anyway.
inline constexpr unsigned kMaxShift = 16;

/// Exact stationary distribution rho_v = pi_v(1)/Z.
std::vector<Rational> stationary(const Chain& c);

struct HittingGF {
    std::size_t u, v;
    unsigned t;
    RationalFunction gf;  // E_u(x^{tau_v^{>=t}})
};

/// Probability generating function of tau_v^{>=t} started at u, via the
/// adjugate route: G^{>=0}_{u,v} = Adj_{u,v}/pi_v, with the u=v return-time
/// correction for t>=1 and an exact (xM)^{t-1} push for t>=2.
HittingGF hitting_gf(const Chain& c, std::size_t u, std::size_t v, unsigned t);

/// Same quantity through the taboo matrix M^{*v}: Cramer solve of
/// (Id - xM^{*v}) y = xM e_v over Q[x]. Independent route, used as verifier.
RationalFunction hitting_gf_taboo(const Chain& c, std::size_t u, std::size_t v, unsigned t);

/// E_u(x^{tau_u^{>=1}}) = 1 - det(Id - xM)/pi_u(x).
RationalFunction return_gf(const Chain& c, std::size_t u);

/// P_u(tau_v^{>=0} = m) for m = 0..m_max. Base values up to m = d-1 come
/// from the series of Adj_{u,v}/pi_v; beyond that the d-term linear
/// recursion with coefficients pi_v^(s)(0)/s! takes over.
std::vector<Rational> hitting_distribution(const Chain& c, std::size_t u, std::size_t v,
                                           std::size_t m_max);

/// E_u[Fac_k(tau_v^{>=1})] for k = 0..k_max, exact.
struct MomentTable {
    unsigned k_max;
    // values[u][v][k]
    std::vector<std::vector<std::vector<Rational>>> values;
};
MomentTable factorial_moments(const Chain& c, unsigned k_max);

/// E_u(tau_v^{>=1}) for all (u,v), by exact linear solves of the
/// (Id_{d-1} - M^{(v)}) h = 1 systems.
std::vector<std::vector<Rational>> mean_hitting_times(const Chain& c);

struct KemenyResult {
    Rational by_mean_hitting;  // sum_v E_u(tau_v^{>=1}) rho_v, same for all u
    Rational by_polynomial;    // d - K^{>=0,(1)}(1)/Z
    double by_eigenvalues;     // 1 + sum 1/(1-lambda_i), numeric roots of k0
    Rational Q1;               // Z * constant
};

/// The Kemeny constant by three routes. The two exact routes must agree
/// exactly; the eigenvalue route within 1e-9*d. Throws ConstancyViolation
/// if the per-start values ever differ (would be an arithmetic bug).
KemenyResult kemeny(const Chain& c);

/// Q^{>=t}(u) = sum_v E_u(tau_v^{>=t}) pi_v; constant in u for each t.
Rational q_shift(const Chain& c, unsigned t);

/// E_u(tau_v^{>=t}), exact.
Rational mean_hitting_shifted(const Chain& c, std::size_t u, std::size_t v, unsigned t);

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string witness;  // empty on pass
};

/// Machine-checks the functional identities (a)-(j); every check is an exact
/// polynomial or rational-function equality (check (j) evaluates at rational
/// points). Failures come back as report entries, never exceptions.
std::vector<IdentityCheck> verify_identities(const Chain& c);

/// Exact law of the chain observed at an independent Geometric(1-x0) time:
/// P_u(C_Geo(x0) = v) = (1-x0) Adj_{u,v}(x0) / det(x0).
std::vector<Rational> geometric_stop_law(const Chain& c, std::size_t u, const Rational& x0);

}  // namespace kemeny
