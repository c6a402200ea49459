#include "nsmac/specialization.hpp"

#include <random>

#include "doctest.h"

using namespace nsmac;

namespace {

std::mt19937 rng(99102);

QtScalar random_qt() {
    std::uniform_int_distribution<int> de(0, 2), co(-3, 3);
    BivarPoly n, d;
    for (int i = 0; i < 3; ++i) n = n + BivarPoly::monomial(de(rng), de(rng), co(rng));
    d = BivarPoly::one() + BivarPoly::monomial(1 + de(rng), 1 + de(rng), 2);
    return QtScalar::fraction(n, d);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(CycloField(1).modulus() == std::vector<mpz_class>{-1, 1});       // x - 1
    CHECK(CycloField(2).modulus() == std::vector<mpz_class>{1, 1});        // x + 1
    CHECK(CycloField(4).modulus() == std::vector<mpz_class>{1, 0, 1});     // x^2 + 1
    CHECK(CycloField(6).modulus() == std::vector<mpz_class>{1, -1, 1});    // x^2 - x + 1
    CHECK(CycloField(12).degree() == 4);
}

TEST_CASE("cyclotomic arithmetic") {
    auto f = CycloField::get(6);
    CycloNum z = CycloNum::zeta_power(f, 1);
    CycloNum one(f, mpq_class(1));
    // zeta_6 satisfies z^2 = z - 1 and z^6 = 1
    CHECK(z * z == z - one);
    CycloNum p = one;
    for (int i = 0; i < 6; ++i) p = p * z;
    CHECK(p == one);
    CHECK(z * z.inverse() == one);
    CHECK(z.inverse() == CycloNum::zeta_power(f, -1));
    CHECK((z - z).is_zero());
}

TEST_CASE("specialization normalization") {
    Specialization s = Specialization::create(2, 4, 1);
    CHECK(s.g() == 2);
    CHECK(s.omega_order() == 2);
    CHECK(s.omega() == s.from_int(-1));  // omega = -1, the qt^2 = -1 curve
    CHECK(substitute(QtScalar::q() * QtScalar::t_pow(2), s) == s.from_int(-1));

    Specialization s2 = Specialization::create(1, 3, 0);  // g = 1, omega = 1
    CHECK(s2.omega_order() == 1);
    CHECK(s2.omega() == s2.one());
    CHECK(substitute(QtScalar::q() * QtScalar::t_pow(3), s2) == s2.one());

    // gcd(k, g) must be 1: for (30,12), g = 6, k = 3 shares a factor
    CHECK_THROWS_AS(Specialization::create(30, 12, 3), std::invalid_argument);
    CHECK_THROWS_AS(Specialization::create(30, 12, 2), std::invalid_argument);
    Specialization s3 = Specialization::create(30, 12, 1);
    CHECK(s3.g() == 6);
    CHECK(s3.omega_order() == 30);
    // k = 7 normalizes to k = 1 within [1, g)
    CHECK(Specialization::create(30, 12, 7).k() == 1);
    CHECK(Specialization::create(30, 12, 5).k() == 5);  // gcd(5,6) = 1, kept
}

TEST_CASE("vanishing exponents") {
    Specialization s = Specialization::create(2, 4, 1);
    CHECK(vanishing_exponent(2, 4, s) == 1);
    CHECK(vanishing_exponent(1, 2, s) == std::nullopt);
    CHECK(vanishing_exponent(0, 0, s) == 0);
    CHECK(vanishing_exponent(-2, -4, s) == -1);
    CHECK(vanishing_exponent(4, 8, s) == 2);
    CHECK(vanishing_exponent(4, 2, s) == std::nullopt);

    // q^a t^b maps to 1 exactly when (a,b) is an integer multiple of (m,n)
    for (int a = -4; a <= 4; ++a)
        for (int b = -8; b <= 8; ++b) {
            bool is_one = substitute(QtScalar::qt_monomial(a, b), s).is_one();
            CHECK(is_one == vanishing_exponent(a, b, s).has_value());
        }
}

TEST_CASE("substitution images") {
    Specialization s = Specialization::create(2, 4, 1);
    CHECK(substitute(QtScalar::t(), s) == s.u_power(1));
    CHECK(substitute(QtScalar::q(), s) == s.from_int(-1) * s.u_power(-2));

    // (1-t)/(1-qt^2) -> (1-u)/2
    QtScalar x = (QtScalar::one() - QtScalar::t()) /
                 (QtScalar::one() - QtScalar::q() * QtScalar::t_pow(2));
    SpecScalar expect = (s.one() - s.u_power(1)) / s.from_int(2);
    CHECK(substitute(x, s) == expect);
}

TEST_CASE("poles at the specialization") {
    Specialization s = Specialization::create(2, 4, 1);
    QtScalar bad = QtScalar::one() /
                   (QtScalar::one() - QtScalar::q_pow(2) * QtScalar::t_pow(4));
    CHECK_THROWS_AS(substitute(bad, s), PoleError);
    try {
        substitute(bad, s);
    } catch (const PoleError& e) {
        CHECK(e.classified_form);  // denominator is exactly 1 - q^{2p} t^{4p}
    }

    // an unclassified vanishing denominator: 1/(1+qt^2)
    QtScalar bad2 = QtScalar::one() /
                    (QtScalar::one() + QtScalar::q() * QtScalar::t_pow(2));
    try {
        substitute(bad2, s);
        CHECK(false);
    } catch (const PoleError& e) {
        CHECK_FALSE(e.classified_form);
    }

    // numerator cancellation: (1-t)(1-q^2t^4)/(1-q^2t^4) stays finite
    QtScalar fine = QtScalar::fraction(
        (BivarPoly::one() - BivarPoly::t()) * BivarPoly::one_minus_qt(2, 4),
        BivarPoly::one_minus_qt(2, 4));
    CHECK(substitute(fine, s) == s.one() - s.u_power(1));
}

TEST_CASE("substitute is a ring homomorphism on pole-free values") {
    Specialization s = Specialization::create(2, 4, 1);
    int done = 0;
    while (done < 30) {
        QtScalar a = random_qt(), b = random_qt();
        try {
            SpecScalar sa = substitute(a, s), sb = substitute(b, s);
            CHECK(substitute(a * b, s) == sa * sb);
            CHECK(substitute(a + b, s) == sa + sb);
            ++done;
        } catch (const PoleError&) {
            continue;  // resample
        }
    }
}

TEST_CASE("spec scalar field ops") {
    Specialization s = Specialization::create(2, 4, 1);
    SpecScalar u = s.u_power(1);
    SpecScalar a = (s.one() + u) / (s.from_int(2) - u);
    CHECK(a * a.inverse() == s.one());
    CHECK((a - a).is_zero());
    CHECK(a + s.zero() == a);
    SpecScalar b = u.pow(3) / (s.one() - u);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(s.u_power(-2) * s.u_power(2) == s.one());
}

TEST_CASE("qt_image matches substitute on monomials") {
    for (auto [m, n, k] : {std::tuple{2, 4, 1L}, {1, 3, 0L}, {30, 12, 1L}, {4, 6, 1L}}) {
        Specialization s = Specialization::create(m, n, k);
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                CHECK(substitute(QtScalar::qt_monomial(a, b), s) == s.qt_image(a, b));
    }
}
