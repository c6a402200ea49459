#include "nsmac/polynomial.hpp"

#include <random>

#include "nsmac/cherednik.hpp"
#include "nsmac/fields.hpp"

#include "doctest.h"

using namespace nsmac;

namespace {

const QtField F;

using Poly = MacPolynomial<QtScalar>;

Poly xvar(int n, int i) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i) - 1] = 1;
    return Poly::monomial(n, Composition(e), QtScalar::one());
}

std::mt19937 rng(4417);

Poly random_homogeneous(int n, int deg, int terms) {
    // random exponent vectors of total degree deg
    std::uniform_int_distribution<int> coef(-4, 4);
    Poly p(n);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int d = 0; d < deg; ++d) e[static_cast<size_t>(rng() % n)]++;
        p.add_term(Composition(e), QtScalar::from_int(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("s_i action") {
    Poly x1 = xvar(3, 1), x2 = xvar(3, 2);
    CHECK(apply_si(x1, 1) == x2);
    Poly sym = x1 + x2;
    CHECK(apply_si(sym, 1) == sym);
    Poly p = Poly::monomial(3, Composition({1, 2, 0}), QtScalar::one());
    CHECK(apply_si(p, 1) == Poly::monomial(3, Composition({2, 1, 0}), QtScalar::one()));
}

TEST_CASE("T_i on monomials") {
    Poly x1 = xvar(2, 1), x2 = xvar(2, 2);
    CHECK(apply_Ti(x1, 1, F) == x2);
    // symmetric p has p T_i = t p
    Poly sym = x1 + x2;
    CHECK(apply_Ti(sym, 1, F) == sym.scaled(QtScalar::t()));
    // (t x_i - x_{i+1}) p0 with p0 symmetric gives p T_i = -p
    Poly p = x1.scaled(QtScalar::t()) - x2;
    CHECK(apply_Ti(p, 1, F) == -p);
    Poly p2 = Poly::monomial(2, Composition({2, 1}), QtScalar::one()) -
              Poly::monomial(2, Composition({1, 2}), QtScalar::one()).scaled(
                  QtScalar::t().inverse());
    // t x1 - x2 times x1 x2 / t: still of the (t x_i - x_{i+1}) p0 form
    CHECK(apply_Ti(p2, 1, F) == -p2);
}

TEST_CASE("T_i inverse") {
    Poly x1 = xvar(2, 1), x2 = xvar(2, 2);
    CHECK(apply_Ti_inv(x2, 1, F) == x1);
    Poly one = Poly::monomial(2, Composition({0, 0}), QtScalar::one());
    CHECK(apply_Ti_inv(one, 1, F) == one.scaled(QtScalar::t().inverse()));
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_homogeneous(3, 3, 4);
        for (int i = 1; i <= 2; ++i) {
            CHECK(apply_Ti_inv(apply_Ti(p, i, F), i, F) == p);
            CHECK(apply_Ti(apply_Ti_inv(p, i, F), i, F) == p);
        }
    }
}

TEST_CASE("shift operator") {
    Poly x1 = xvar(4, 1), x4 = xvar(4, 4), x3 = xvar(4, 3);
    CHECK(apply_shift(x1, F) == x4.scaled(QtScalar::q()));
    CHECK(apply_shift(x4, F) == x3);
    Poly c = Poly::monomial(4, Composition({0, 0, 0, 0}), QtScalar::from_int(7));
    CHECK(apply_shift(c, F) == c);
}

TEST_CASE("Hecke relations in the polynomial representation") {
    for (int n = 2; n <= 5; ++n) {
        for (int deg = 1; deg <= 4; ++deg) {
            Poly p = random_homogeneous(n, deg, 4);
            for (int i = 1; i < n; ++i) {
                // (T_i + 1)(T_i - t) = 0
                Poly q1 = apply_Ti(apply_Ti(p, i, F), i, F);
                Poly rel = q1 + apply_Ti(p, i, F).scaled(QtScalar::one() - QtScalar::t()) -
                           p.scaled(QtScalar::t());
                CHECK(rel.is_zero());
            }
            for (int i = 1; i + 1 < n; ++i) {
                Poly lhs = apply_Ti(apply_Ti(apply_Ti(p, i, F), i + 1, F), i, F);
                Poly rhs = apply_Ti(apply_Ti(apply_Ti(p, i + 1, F), i, F), i + 1, F);
                CHECK(lhs == rhs);
            }
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j) {
                    Poly lhs = apply_Ti(apply_Ti(p, i, F), j, F);
                    Poly rhs = apply_Ti(apply_Ti(p, j, F), i, F);
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("T_i preserves degree and introduces no new denominators") {
    for (int trial = 0; trial < 8; ++trial) {
        Poly p = random_homogeneous(4, 3, 5);
        if (p.is_zero()) continue;
        for (int i = 1; i <= 3; ++i) {
            Poly q1 = apply_Ti(p, i, F);
            CHECK(q1.homogeneous_degree() == p.homogeneous_degree());
            for (const auto& [key, c] : q1.terms()) CHECK(c.den().is_one());
            CHECK(apply_shift(p, F).homogeneous_degree() == p.homogeneous_degree());
        }
    }
}

TEST_CASE("operator word evaluation matches the direct composition") {
    for (int trial = 0; trial < 5; ++trial) {
        Poly p = random_homogeneous(3, 2, 3);
        for (int i = 1; i <= 3; ++i) {
            auto w = OperatorWord::cherednik_xi(i, 3);
            CHECK(w.apply(p, F) == apply_cherednik(p, i, F));
        }
    }
}

TEST_CASE("leading term follows the triangular order") {
    Poly p(4);
    p.add_term(Composition({0, 2, 0, 0}), QtScalar::one());
    p.add_term(Composition({1, 1, 0, 0}), QtScalar::one());
    p.add_term(Composition({0, 0, 2, 0}), QtScalar::one());
    CHECK(p.leading().first == Composition({0, 2, 0, 0}));
    p.add_term(Composition({2, 0, 0, 0}), QtScalar::one());
    CHECK(p.leading().first == Composition({2, 0, 0, 0}));
}
