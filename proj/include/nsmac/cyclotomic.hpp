#ifndef NSMAC_CYCLOTOMIC_HPP
#define NSMAC_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace nsmac {

// Q[x]/Phi_M(x).  Phi_M is computed by the recursive division of x^M - 1 by
// the cyclotomic polynomials of the proper divisors.
class CycloField {
public:
    explicit CycloField(int order);

    int order() const { return order_; }                 // M
    int degree() const { return static_cast<int>(phi_.size()) - 1; }  // phi(M)
    const std::vector<mpz_class>& modulus() const { return phi_; }

    static std::shared_ptr<const CycloField> get(int order);

private:
    int order_;
    std::vector<mpz_class> phi_;  // monic, phi_[i] multiplies x^i
};

// Element of Q(zeta_M), a rational-coefficient vector reduced mod Phi_M.
class CycloNum {
public:
    CycloNum() = default;  // unattached zero; usable only via operations with attached values
    explicit CycloNum(std::shared_ptr<const CycloField> field);  // zero of the field
    CycloNum(std::shared_ptr<const CycloField> field, const mpq_class& rational);

    static CycloNum zeta_power(std::shared_ptr<const CycloField> field, long e);

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    bool is_zero() const;
    bool is_rational() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator*(const mpq_class& r) const;
    CycloNum inverse() const;
    CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<mpq_class> c_;  // length = field degree
    void require_same_field(const CycloNum& o) const;
};

}  // namespace nsmac

#endif
