#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kemeny/detcore.hpp"
#include "test_support.hpp"

using namespace kemeny;
using namespace kemeny::test;

namespace {

// independent long-division oracle for the k0 tests
Polynomial divide_by_one_minus_x(const Polynomial& p) {
    // p = (1-x) q  =>  q_i = p_i + q_{i-1}
    std::vector<Rational> q(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = p.coeff(i) + carry;
        carry = q[i];
    }
    return Polynomial(std::move(q));
}

}  // namespace

TEST_CASE("det(Id - xM) on the worked example") {
    CHECK(det_id_minus_xM(sec3_chain()) == sec3_det());
}

TEST_CASE("det(Id - xM) on the swap chain is 1 - x^2") {
    CHECK(det_id_minus_xM(swap_chain()) == poly({"1", "0", "-1"}));
}

TEST_CASE("det vanishes at 1 for every valid chain") {
    SplitMix64 rng(8);
    for (int i = 0; i < 12; ++i) {
        const Chain c = random_chain(rng, 2 + rng.next() % 6);
        CHECK(det_id_minus_xM(c).eval(Rational(1)).is_zero());
    }
}

TEST_CASE("Bareiss and Faddeev-LeVerrier agree exactly") {
    CHECK(det_id_minus_xM(sec3_chain()) == det_id_minus_xM_leverrier(sec3_chain()));
    CHECK(det_id_minus_xM(swap_chain()) == det_id_minus_xM_leverrier(swap_chain()));
    SplitMix64 rng(21);
    for (int i = 0; i < 15; ++i) {
        const Chain c = random_chain(rng, 2 + rng.next() % 6);
        CHECK(det_id_minus_xM(c) == det_id_minus_xM_leverrier(c));
    }
}

TEST_CASE("pi polynomials of the worked example") {
    const auto pi = pi_polys(sec3_chain());
    REQUIRE(pi.size() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(pi[v] == sec3_pi(v));
}

TEST_CASE("pi polynomials of the swap chain are constant 1") {
    const auto pi = pi_polys(swap_chain());
    CHECK(pi[0] == Polynomial(Rational(1)));
    CHECK(pi[1] == Polynomial(Rational(1)));
}

TEST_CASE("pi_v(0) = 1 and degree <= d-1 everywhere") {
    SplitMix64 rng(33);
    for (int i = 0; i < 10; ++i) {
        const Chain c = random_chain(rng, 2 + rng.next() % 6);
        for (const auto& p : pi_polys(c)) {
            CHECK(p.coeff(0) == Rational(1));
            CHECK(p.degree() <= static_cast<int>(c.size()) - 1);
        }
    }
}

TEST_CASE("adjugate of a 2x2 chain has the closed form") {
    const Chain c = lazy_chain();
    const auto adj = adjugate(c);
    // Adj [[a,b],[c,e]] = [[e,-b],[-c,a]] with entries of Id - xM
    CHECK(adj[0][0] == poly({"1", "-1/3"}));
    CHECK(adj[1][1] == poly({"1", "-3/4"}));
    CHECK(adj[0][1] == poly({"0", "1/4"}));
    CHECK(adj[1][0] == poly({"0", "2/3"}));
}

TEST_CASE("adjugate identity Adj * (Id - xM) = det * Id") {
    SplitMix64 rng(55);
    std::vector<Chain> chains{sec3_chain(), swap_chain(), lazy_chain()};
    for (int i = 0; i < 5; ++i) chains.push_back(random_chain(rng, 2 + rng.next() % 5));
    for (const Chain& c : chains) {
        const std::size_t d = c.size();
        const auto adj = adjugate(c);
        const auto a = id_minus_x_matrix(c.matrix());
        const Polynomial det = det_id_minus_xM(c);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Polynomial acc;
                for (std::size_t k = 0; k < d; ++k) acc = acc + adj[i][k] * a[k][j];
                CHECK(acc == (i == j ? det : Polynomial{}));
            }
        // diagonal entries are the pi polynomials, degrees bounded by d-1
        const auto pi = pi_polys(c);
        for (std::size_t v = 0; v < d; ++v) CHECK(adj[v][v] == pi[v]);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v)
                CHECK(adj[u][v].degree() <= static_cast<int>(d) - 1);
    }
}

TEST_CASE("adjugate entry (1,2) matches the printed generating function") {
    const auto adj = adjugate(sec3_chain());
    CHECK(RationalFunction(adj[0][1]) == sec3_g12() * RationalFunction(sec3_pi(1)));
}

TEST_CASE("k0 polynomial") {
    const Polynomial k0 = k0_poly(sec3_chain());
    CHECK(k0 == divide_by_one_minus_x(sec3_det()));
    CHECK(k0 == poly({"1", "-1/4", "5/72", "-5/216"}));
    CHECK(k0.eval(Rational(1)) == rat("43/54"));

    CHECK(k0_poly(swap_chain()) == poly({"1", "1"}));
    CHECK(k0_poly(swap_chain()).degree() == 1);
}

TEST_CASE("k0 properties on random chains") {
    SplitMix64 rng(66);
    for (int i = 0; i < 10; ++i) {
        const Chain c = random_chain(rng, 2 + rng.next() % 6);
        const auto b = CharBundle::compute(c);
        CHECK(b.det_poly.eval(Rational(1)).is_zero());
        CHECK(b.k0 * poly({"1", "-1"}) == b.det_poly);
        CHECK(b.k0.degree() <= static_cast<int>(c.size()) - 1);
        CHECK(b.Z > Rational(0));
        Rational z(0);
        for (const auto& p : b.pi) z += p.eval(Rational(1));
        CHECK(z == b.Z);
    }
}

TEST_CASE("positivity of pi_v on (0,1)") {
    std::vector<Chain> chains{sec3_chain(), swap_chain(), lazy_chain()};
    SplitMix64 rng(91);
    for (int i = 0; i < 5; ++i) chains.push_back(random_chain(rng, 2 + rng.next() % 6));
    for (const Chain& c : chains)
        for (const auto& p : pi_polys(c))
            for (long k = 1; k <= 9; ++k) CHECK(p.eval(Rational(k, 10)) > Rational(0));
}
