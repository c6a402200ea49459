#ifndef NSMAC_QT_SCALAR_HPP
#define NSMAC_QT_SCALAR_HPP

#include <string>

#include "nsmac/bivar_poly.hpp"

namespace nsmac {

// Element of Q(q,t) as a reduced fraction of integer polynomials.  Canonical
// form: denominator nonzero with positive glex leading coefficient, the
// polynomial gcd of the two sides is trivial, and no integer factor is shared
// by both contents.  Equality is structural.
class QtScalar {
public:
    QtScalar() : num_(), den_(BivarPoly::one()) {}

    static QtScalar zero() { return QtScalar(); }
    static QtScalar one() { return from_poly(BivarPoly::one()); }
    static QtScalar from_int(long v) { return from_poly(BivarPoly::constant(mpz_class(v))); }
    static QtScalar from_poly(const BivarPoly& p);
    static QtScalar fraction(const BivarPoly& num, const BivarPoly& den);
    // Caller guarantees the polynomial gcd is trivial; skips the gcd pass.
    static QtScalar fraction_coprime(const BivarPoly& num, const BivarPoly& den);
    static QtScalar q() { return from_poly(BivarPoly::q()); }
    static QtScalar t() { return from_poly(BivarPoly::t()); }
    static QtScalar q_pow(int e);
    static QtScalar t_pow(int e);  // negative exponents produce fractions
    // q^a t^b as a monomial fraction, either exponent sign.
    static QtScalar qt_monomial(int a, int b);

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QtScalar operator-() const;
    QtScalar operator+(const QtScalar& o) const;
    QtScalar operator-(const QtScalar& o) const;
    QtScalar operator*(const QtScalar& o) const;
    QtScalar operator/(const QtScalar& o) const;
    QtScalar& operator+=(const QtScalar& o) { return *this = *this + o; }
    QtScalar& operator-=(const QtScalar& o) { return *this = *this - o; }
    QtScalar& operator*=(const QtScalar& o) { return *this = *this * o; }
    QtScalar& operator/=(const QtScalar& o) { return *this = *this / o; }
    QtScalar inverse() const;
    QtScalar pow(int e) const;

    bool operator==(const QtScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QtScalar& o) const { return !(*this == o); }

    QtScalar subs_t_inverse() const;  // t -> 1/t

    std::string to_string() const;

private:
    BivarPoly num_, den_;
    QtScalar(BivarPoly n, BivarPoly d) : num_(std::move(n)), den_(std::move(d)) {}
    static QtScalar make_reduced(BivarPoly n, BivarPoly d, bool poly_coprime);
};

}  // namespace nsmac

#endif
