#pragma once

#include <vector>

#include "kemeny/chain.hpp"
#include "kemeny/polynomial.hpp"

namespace kemeny {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Id_d - x*M as a polynomial matrix.
PolyMatrix id_minus_x_matrix(const RationalMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination. Entries are
/// lifted to a common-denominator integer-polynomial form first, which keeps
/// the intermediate coefficient arithmetic in Z.
Polynomial bareiss_det(PolyMatrix a);

/// det(Id_d - x*M), Bareiss route (primary).
Polynomial det_id_minus_xM(const Chain& c);

/// det(Id_d - x*M) via the Faddeev-LeVerrier trace recursion on M
/// (independent code path, used as the redundant verifier).
Polynomial det_id_minus_xM_leverrier(const Chain& c);

/// pi_v(x) = det(Id_{d-1} - x*M^{(v)}) for every state v.
std::vector<Polynomial> pi_polys(const Chain& c);

/// Adjugate of (Id_d - x*M): entry (u,v) is the signed (v,u) cofactor.
/// Satisfies Adj * (Id - xM) = det * Id; diagonal entry (v,v) = pi_v(x).
PolyMatrix adjugate(const Chain& c);

/// Single adjugate entry (u,v) of (Id_d - x*M), one signed cofactor.
Polynomial adjugate_entry(const Chain& c, std::size_t u, std::size_t v);

/// K^{>=0}(x) = det(Id - xM)/(1-x); the division is exact by stochasticity.
Polynomial k0_poly(const Chain& c);

/// det, pi family, k0 and Z = K^{>=0}(1) for one chain, computed together.
struct CharBundle {
    Polynomial det_poly;
    std::vector<Polynomial> pi;
    Polynomial k0;
    Rational Z;

    static CharBundle compute(const Chain& c);
};

}  // namespace kemeny
