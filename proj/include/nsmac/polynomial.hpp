#ifndef NSMAC_POLYNOMIAL_HPP
#define NSMAC_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <stdexcept>

#include "nsmac/combinat.hpp"

namespace nsmac {

// Key order refining the triangular order: higher degree first, then sorted
// rearrangement by descending lex, then the composition itself by descending
// lex.  The map's first key is therefore the leading exponent.
struct MonomialOrder {
    bool operator()(const Composition& a, const Composition& b) const {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa > sb;
        auto pa = a.sorted_desc(), pb = b.sorted_desc();
        if (pa != pb) return pa > pb;
        return a.entries() > b.entries();
    }
};

// Sparse polynomial in x_1..x_N with exponent keys.  No zero coefficients are
// stored; all keys share the ambient N.
template <class Scalar>
class MacPolynomial {
public:
    using TermMap = std::map<Composition, Scalar, MonomialOrder>;

    MacPolynomial() = default;
    explicit MacPolynomial(int n) : n_(n) {}

    static MacPolynomial monomial(int n, const Composition& alpha, Scalar coeff) {
        MacPolynomial p(n);
        p.add_term(alpha, std::move(coeff));
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Composition& alpha, Scalar coeff) {
        if (coeff.is_zero()) return;
        if (alpha.n() != n_) throw std::invalid_argument("exponent length mismatch");
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            terms_.emplace(alpha, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Scalar* coeff(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? nullptr : &it->second;
    }

    // leading term in the triangular-compatible order
    const std::pair<const Composition, Scalar>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [a, c] : terms_) {
            if (!d) d = a.size();
            else if (*d != a.size()) return std::nullopt;
        }
        return d;
    }

    MacPolynomial operator-() const {
        MacPolynomial r(n_);
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }
    MacPolynomial operator+(const MacPolynomial& o) const {
        MacPolynomial r = *this;
        for (const auto& [a, c] : o.terms_) r.add_term(a, c);
        return r;
    }
    MacPolynomial operator-(const MacPolynomial& o) const { return *this + (-o); }
    MacPolynomial scaled(const Scalar& s) const {
        MacPolynomial r(n_);
        if (s.is_zero()) return r;
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, c * s);
        return r;
    }

    bool operator==(const MacPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MacPolynomial& o) const { return !(*this == o); }

private:
    int n_ = 0;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Operator actions.  All are right actions, matching the convention p T_i.

template <class Scalar>
MacPolynomial<Scalar> apply_si(const MacPolynomial<Scalar>& p, int i) {
    if (i < 1 || i >= p.n()) throw std::out_of_range("s_i index out of range");
    MacPolynomial<Scalar> r(p.n());
    for (const auto& [a, c] : p.terms()) r.add_term(a.swapped(i), c);
    return r;
}

// p T_i = (1-t) x_{i+1} (p - p s_i)/(x_i - x_{i+1}) + t p s_i, expanded
// monomial by monomial through the geometric-sum form of the divided
// difference, so the division is structural.
template <class Field>
MacPolynomial<typename Field::Scalar> apply_Ti(
    const MacPolynomial<typename Field::Scalar>& p, int i, const Field& F) {
    if (i < 1 || i >= p.n()) throw std::out_of_range("T_i index out of range");
    using Scalar = typename Field::Scalar;
    const Scalar t = F.t();
    const Scalar one_minus_t = F.one() - t;
    MacPolynomial<Scalar> r(p.n());
    for (const auto& [alpha, c] : p.terms()) {
        const int a = alpha.at(i), b = alpha.at(i + 1);
        if (a == b) {
            r.add_term(alpha, c * t);
            continue;
        }
        std::vector<int> e = alpha.entries();
        auto set_pair = [&](int ei, int ei1) {
            e[static_cast<size_t>(i) - 1] = ei;
            e[static_cast<size_t>(i)] = ei1;
            return Composition(e);
        };
        if (a > b) {
            r.add_term(set_pair(b, a), c);
            const Scalar fill = c * one_minus_t;
            for (int u = 0; u <= a - b - 2; ++u)
                r.add_term(set_pair(a - 1 - u, b + 1 + u), fill);
        } else {
            r.add_term(set_pair(b, a), c * t);
            const Scalar fill = c * one_minus_t;
            r.add_term(alpha, -fill);
            for (int u = 0; u <= b - a - 2; ++u)
                r.add_term(set_pair(b - 1 - u, a + 1 + u), -fill);
        }
    }
    return r;
}

// T_i^{-1} = (1/t)(T_i + 1 - t)
template <class Field>
MacPolynomial<typename Field::Scalar> apply_Ti_inv(
    const MacPolynomial<typename Field::Scalar>& p, int i, const Field& F) {
    auto r = apply_Ti(p, i, F) + p.scaled(F.one() - F.t());
    return r.scaled(F.t().inverse());
}

// p pi = p(q x_N, x_1, ..., x_{N-1}): exponents rotate left, the coefficient
// picks up q^{alpha_1}.
template <class Field>
MacPolynomial<typename Field::Scalar> apply_shift(
    const MacPolynomial<typename Field::Scalar>& p, const Field& F) {
    using Scalar = typename Field::Scalar;
    MacPolynomial<Scalar> r(p.n());
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e(alpha.entries().begin() + 1, alpha.entries().end());
        e.push_back(alpha.at(1));
        r.add_term(Composition(e), c * F.q_pow(alpha.at(1)));
    }
    return r;
}

template <class Scalar>
MacPolynomial<Scalar> multiply_by_x(const MacPolynomial<Scalar>& p, int i) {
    if (i < 1 || i > p.n()) throw std::out_of_range("x_i index out of range");
    MacPolynomial<Scalar> r(p.n());
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e = alpha.entries();
        e[static_cast<size_t>(i) - 1]++;
        r.add_term(Composition(e), c);
    }
    return r;
}

// exact division by x_N; a key with exponent 0 there is an invariant breach
template <class Scalar>
MacPolynomial<Scalar> divide_by_xn(const MacPolynomial<Scalar>& p) {
    MacPolynomial<Scalar> r(p.n());
    for (const auto& [alpha, c] : p.terms()) {
        std::vector<int> e = alpha.entries();
        if (e.back() == 0)
            throw std::logic_error("division by x_N is not exact");
        e.back()--;
        r.add_term(Composition(e), c);
    }
    return r;
}

}  // namespace nsmac

#endif
