#ifndef NSMAC_BIVAR_POLY_HPP
#define NSMAC_BIVAR_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace nsmac {

// Sparse element of Z[q,t].  Exponents are nonnegative; negative powers live
// one level up, in the fraction field.
class BivarPoly {
public:
    // (t-degree, q-degree) lex key so the t-major view needed by the gcd is
    // just an ordered walk.
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, mpz_class>;

    BivarPoly() = default;
    static BivarPoly zero() { return BivarPoly(); }
    static BivarPoly one() { return monomial(0, 0, 1); }
    static BivarPoly q(int e = 1) { return monomial(e, 0, 1); }
    static BivarPoly t(int e = 1) { return monomial(0, e, 1); }
    static BivarPoly constant(const mpz_class& c) { return monomial(0, 0, c); }
    static BivarPoly monomial(int qe, int te, const mpz_class& c);
    // 1 - q^a t^b (a, b >= 0, not both 0)
    static BivarPoly one_minus_qt(int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int deg_q() const;
    int deg_t() const;
    int total_degree() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const mpz_class& c) const;
    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return terms_ != o.terms_; }

    // gcd of all integer coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    BivarPoly divexact_int(const mpz_class& c) const;

    // Leading coefficient under graded lex (total degree, then q-degree).
    const mpz_class& glex_leading_coeff() const;

    BivarPoly mul_monomial(int qe, int te) const;

    // p(q, 1/t) written as poly / t^shift with shift = deg_t.
    std::pair<BivarPoly, int> swap_t_inverse() const;

    std::string to_string() const;  // for diagnostics

private:
    TermMap terms_;
    void add_term(int qe, int te, const mpz_class& c);
    friend std::optional<BivarPoly> exact_divide(const BivarPoly&, const BivarPoly&);
    friend BivarPoly bivar_gcd(const BivarPoly&, const BivarPoly&);
};

// Exact quotient if divisor | dividend, nullopt otherwise.
std::optional<BivarPoly> exact_divide(const BivarPoly& dividend, const BivarPoly& divisor);

// Primitive-part/content split with a subresultant PRS in t over Z[q];
// result is normalized with positive glex leading coefficient.
BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b);

// Certificate that gcd(a, binom) is constant, for a divisor binom whose
// t-content (or q-content when it is t-free) is trivial, e.g. 1 - q^a t^b or
// t^b - q^a.  Works by a univariate gcd at q = 2 (resp. t = 2); a true result
// is proof, a false result only means the full gcd must run.
bool binomial_gcd_is_trivial(const BivarPoly& a, const BivarPoly& binom);

}  // namespace nsmac

#endif
