#include "nsmac/qt_scalar.hpp"

#include <stdexcept>

namespace nsmac {

namespace {
void int_normalize(BivarPoly& n, BivarPoly& d) {
    if (n.is_zero()) {
        d = BivarPoly::one();
        return;
    }
    mpz_class cn = n.content(), cd = d.content(), g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        n = n.divexact_int(g);
        d = d.divexact_int(g);
    }
    if (d.glex_leading_coeff() < 0) {
        n = -n;
        d = -d;
    }
}
}  // namespace

QtScalar QtScalar::make_reduced(BivarPoly n, BivarPoly d, bool poly_coprime) {
    if (d.is_zero()) throw std::invalid_argument("division by zero in Q(q,t)");
    if (n.is_zero()) return QtScalar();
    if (!poly_coprime && !d.is_one()) {
        BivarPoly g = bivar_gcd(n, d);
        if (!g.is_one()) {
            n = *exact_divide(n, g);
            d = *exact_divide(d, g);
        }
    }
    int_normalize(n, d);
    return QtScalar(std::move(n), std::move(d));
}

QtScalar QtScalar::from_poly(const BivarPoly& p) {
    BivarPoly n = p, d = BivarPoly::one();
    int_normalize(n, d);
    return QtScalar(std::move(n), std::move(d));
}

QtScalar QtScalar::fraction(const BivarPoly& num, const BivarPoly& den) {
    return make_reduced(num, den, false);
}

QtScalar QtScalar::fraction_coprime(const BivarPoly& num, const BivarPoly& den) {
    return make_reduced(num, den, true);
}

QtScalar QtScalar::q_pow(int e) { return qt_monomial(e, 0); }
QtScalar QtScalar::t_pow(int e) { return qt_monomial(0, e); }

QtScalar QtScalar::qt_monomial(int a, int b) {
    BivarPoly n = BivarPoly::monomial(a > 0 ? a : 0, b > 0 ? b : 0, 1);
    BivarPoly d = BivarPoly::monomial(a < 0 ? -a : 0, b < 0 ? -b : 0, 1);
    return QtScalar(std::move(n), std::move(d));
}

QtScalar QtScalar::operator-() const {
    if (is_zero()) return *this;
    return QtScalar(-num_, den_);
}

QtScalar QtScalar::operator+(const QtScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BivarPoly g = bivar_gcd(den_, o.den_);
    if (g.is_one()) {
        BivarPoly n = num_ * o.den_ + o.num_ * den_;
        return make_reduced(std::move(n), den_ * o.den_, true);
    }
    BivarPoly da = *exact_divide(den_, g), db = *exact_divide(o.den_, g);
    BivarPoly tnum = num_ * db + o.num_ * da;
    if (tnum.is_zero()) return QtScalar();
    BivarPoly h = bivar_gcd(tnum, g);
    if (!h.is_one()) {
        tnum = *exact_divide(tnum, h);
        g = *exact_divide(g, h);
    }
    return make_reduced(std::move(tnum), da * g * db, true);
}

QtScalar QtScalar::operator-(const QtScalar& o) const { return *this + (-o); }

QtScalar QtScalar::operator*(const QtScalar& o) const {
    if (is_zero() || o.is_zero()) return QtScalar();
    BivarPoly an = num_, ad = den_, bn = o.num_, bd = o.den_;
    BivarPoly g1 = bivar_gcd(an, bd);
    if (!g1.is_one()) {
        an = *exact_divide(an, g1);
        bd = *exact_divide(bd, g1);
    }
    BivarPoly g2 = bivar_gcd(bn, ad);
    if (!g2.is_one()) {
        bn = *exact_divide(bn, g2);
        ad = *exact_divide(ad, g2);
    }
    return make_reduced(an * bn, ad * bd, true);
}

QtScalar QtScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero in Q(q,t)");
    BivarPoly n = den_, d = num_;
    int_normalize(n, d);
    return QtScalar(std::move(n), std::move(d));
}

QtScalar QtScalar::operator/(const QtScalar& o) const { return *this * o.inverse(); }

QtScalar QtScalar::pow(int e) const {
    if (e == 0) return one();
    QtScalar base = e > 0 ? *this : inverse();
    int k = e > 0 ? e : -e;
    QtScalar r = one();
    while (k) {
        if (k & 1) r *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

QtScalar QtScalar::subs_t_inverse() const {
    auto [n, dn] = num_.swap_t_inverse();
    auto [d, dd] = den_.swap_t_inverse();
    if (dd >= dn) return make_reduced(n.mul_monomial(0, dd - dn), d, false);
    return make_reduced(n, d.mul_monomial(0, dn - dd), false);
}

std::string QtScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace nsmac
