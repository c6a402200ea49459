#ifndef NSMAC_MACDONALD_HPP
#define NSMAC_MACDONALD_HPP

#include <map>
#include <memory>

#include "nsmac/cherednik.hpp"
#include "nsmac/combinat.hpp"
#include "nsmac/polynomial.hpp"
#include "nsmac/qt_scalar.hpp"

namespace nsmac {

// zeta_alpha(i) = q^{alpha_i} t^{N - r_alpha(i)}, stored as exponent pairs.
class SpectralVector {
public:
    explicit SpectralVector(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {}

    int n() const { return static_cast<int>(exps_.size()); }
    std::pair<int, int> exponents(int i) const { return exps_.at(static_cast<size_t>(i) - 1); }
    const std::vector<std::pair<int, int>>& all() const { return exps_; }

    template <class Field>
    typename Field::Scalar value(int i, const Field& F) const {
        auto [a, b] = exponents(i);
        return F.q_pow(a) * F.t_pow(b);
    }

private:
    std::vector<std::pair<int, int>> exps_;
};

SpectralVector spectral_vector(const Composition& alpha);

// rho_i = zeta(i+1)/zeta(i) as (q,t) exponents
std::pair<int, int> rho_exponents(const Composition& alpha, int i);

// Yang-Baxter-graph construction over Q(q,t).  Raising steps use
// M_{alpha.Phi} = x_N (M_alpha pi); transposition steps use the
// M_{alpha s_i} = M_alpha T_i + (1-t)/(1-rho_i) M_alpha relation.  Every
// freshly built polynomial is checked against its spectral vector before it
// is released, and its leading term against the replayed q^* t^* scalar.
class MacdonaldBuilder {
public:
    struct Limits {
        int degree_cap = 40;
        int n_cap = 10;
    };

    MacdonaldBuilder();
    explicit MacdonaldBuilder(Limits limits);
    ~MacdonaldBuilder();
    MacdonaldBuilder(const MacdonaldBuilder&) = delete;
    MacdonaldBuilder& operator=(const MacdonaldBuilder&) = delete;

    const MacPolynomial<QtScalar>& build(const Composition& alpha);

    // (j, j') with leading coefficient q^j t^{j'}, from replaying the path
    static std::pair<int, int> leading_exponents(const Composition& alpha);

private:
    Limits limits_;
    std::map<Composition, MacPolynomial<QtScalar>> reduced_;
    struct State;  // factored-denominator working form
    std::map<Composition, std::unique_ptr<State>> states_;
    const State& build_state(const Composition& alpha);
};

MacPolynomial<QtScalar> build_macdonald(const Composition& alpha);

template <class Scalar>
MacPolynomial<Scalar> monic_normalize(const MacPolynomial<Scalar>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().second.inverse());
}

// M_{alpha s_i} from M_alpha when alpha_i < alpha_{i+1}
template <class Field>
MacPolynomial<typename Field::Scalar> macdonald_step(
    const MacPolynomial<typename Field::Scalar>& m, const Composition& alpha, int i,
    const Field& F) {
    if (i < 1 || i >= alpha.n()) throw std::out_of_range("step index out of range");
    if (!(alpha.at(i) < alpha.at(i + 1)))
        throw std::invalid_argument("macdonald_step requires alpha_i < alpha_{i+1}");
    auto [dq, dt] = rho_exponents(alpha, i);
    auto rho = F.q_pow(dq) * F.t_pow(dt);
    auto denom = F.one() - rho;
    if (denom.is_zero())
        throw std::domain_error("macdonald_step: rho_i = 1 in the working field");
    return apply_Ti(m, i, F) + m.scaled((F.one() - F.t()) / denom);
}

// M_{alpha s_i} T_i = (1-rho t)(t-rho)/(1-rho)^2 M_alpha + rho(1-t)/(1-rho) M_{alpha s_i}
template <class Field>
bool macdonald_step_companion_holds(const MacPolynomial<typename Field::Scalar>& m_alpha,
                                    const MacPolynomial<typename Field::Scalar>& m_swapped,
                                    const Composition& alpha, int i, const Field& F) {
    auto [dq, dt] = rho_exponents(alpha, i);
    auto rho = F.q_pow(dq) * F.t_pow(dt);
    auto one = F.one(), t = F.t();
    auto d = one - rho;
    auto lhs = apply_Ti(m_swapped, i, F);
    auto rhs = m_alpha.scaled((one - rho * t) * (t - rho) / (d * d)) +
               m_swapped.scaled(rho * (one - t) / d);
    return lhs == rhs;
}

// alpha_i = alpha_{i+1} forces M T_i = t M
template <class Field>
bool macdonald_equal_case_holds(const MacPolynomial<typename Field::Scalar>& m, int i,
                                const Field& F) {
    return apply_Ti(m, i, F) == m.scaled(F.t());
}

// M xi_i = zeta_alpha(i) M for every i
template <class Field>
bool eigen_relation_holds(const MacPolynomial<typename Field::Scalar>& m,
                          const Composition& alpha, const Field& F) {
    SpectralVector zeta = spectral_vector(alpha);
    for (int i = 1; i <= alpha.n(); ++i)
        if (apply_cherednik(m, i, F) != m.scaled(zeta.value(i, F))) return false;
    return true;
}

}  // namespace nsmac

#endif
