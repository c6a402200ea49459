#ifndef NSMAC_SPECIALIZATION_HPP
#define NSMAC_SPECIALIZATION_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmac/cyclotomic.hpp"
#include "nsmac/qt_scalar.hpp"

namespace nsmac {

class SpecScalar;

// The parameter curve (q,t) = (omega u^{-n/g}, u^{m/g}) with g = gcd(m,n) and
// omega = exp(2 pi i k / m), gcd(k,g) = 1.  k is normalized into [1,g) when
// g > 1; for g = 1 the only component is omega = 1 (k = 0).
class Specialization {
public:
    static Specialization create(int m, int n, long k);

    int m() const { return m_; }
    int n() const { return n_; }
    int g() const { return g_; }
    long k() const { return k_; }
    int omega_order() const { return field_->order(); }  // M = m / gcd(k, m)
    const std::shared_ptr<const CycloField>& field() const { return field_; }

    SpecScalar zero() const;
    SpecScalar one() const;
    SpecScalar from_int(long v) const;
    SpecScalar omega() const;
    SpecScalar u_power(long e) const;
    SpecScalar q_image() const;
    SpecScalar t_image() const;
    SpecScalar qt_image(long a, long b) const;  // image of q^a t^b

    std::string to_string() const;

private:
    Specialization(int m, int n, long k, std::shared_ptr<const CycloField> f)
        : m_(m), n_(n), g_(0), k_(k), field_(std::move(f)) {}
    int m_, n_, g_;
    long k_;
    std::shared_ptr<const CycloField> field_;
};

// p with (a,b) = (pm, pn), i.e. the factor 1 - q^a t^b vanishes on the curve.
std::optional<long> vanishing_exponent(long a, long b, const Specialization& spec);

// Raised by substitute when a reduced denominator maps to zero on the curve.
// classified marks denominators that still carry a 1 - q^{pm} t^{pn} factor.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& msg, std::string residual, bool classified)
        : std::runtime_error(msg), residual_denominator(std::move(residual)),
          classified_form(classified) {}
    std::string residual_denominator;
    bool classified_form;
};

// Element of Q(zeta_M)(u): a reduced fraction of dense u-polynomials over the
// cyclotomic field, denominator monic.
class SpecScalar {
public:
    using UPoly = std::vector<CycloNum>;  // coeffs[i] multiplies u^i

    SpecScalar() = default;  // unattached; assign before use

    static SpecScalar zero(std::shared_ptr<const CycloField> f);
    static SpecScalar from_cyclo(const CycloNum& c);
    static SpecScalar fraction(std::shared_ptr<const CycloField> f, UPoly num, UPoly den);

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    SpecScalar operator-() const;
    SpecScalar operator+(const SpecScalar& o) const;
    SpecScalar operator-(const SpecScalar& o) const;
    SpecScalar operator*(const SpecScalar& o) const;
    SpecScalar operator/(const SpecScalar& o) const;
    SpecScalar& operator+=(const SpecScalar& o) { return *this = *this + o; }
    SpecScalar& operator-=(const SpecScalar& o) { return *this = *this - o; }
    SpecScalar& operator*=(const SpecScalar& o) { return *this = *this * o; }
    SpecScalar& operator/=(const SpecScalar& o) { return *this = *this / o; }
    SpecScalar inverse() const;
    SpecScalar pow(int e) const;

    bool operator==(const SpecScalar& o) const;
    bool operator!=(const SpecScalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::shared_ptr<const CycloField> field_;
    UPoly num_, den_;
    static SpecScalar make_reduced(std::shared_ptr<const CycloField> f, UPoly n, UPoly d);
};

// Image of x under the curve map; applies the binomial cancellation loop when
// the reduced denominator vanishes, then raises PoleError if it still does.
SpecScalar substitute(const QtScalar& x, const Specialization& spec);

}  // namespace nsmac

#endif
