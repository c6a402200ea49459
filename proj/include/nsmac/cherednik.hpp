#ifndef NSMAC_CHEREDNIK_HPP
#define NSMAC_CHEREDNIK_HPP

#include <variant>
#include <vector>

#include "nsmac/fields.hpp"
#include "nsmac/polynomial.hpp"

namespace nsmac {

// xi_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} pi T_{N-1} ... T_i, applied on the
// right: leftmost factor first.
template <class Field>
MacPolynomial<typename Field::Scalar> apply_cherednik(
    const MacPolynomial<typename Field::Scalar>& p, int i, const Field& F) {
    const int n = p.n();
    if (i < 1 || i > n) throw std::out_of_range("xi_i index out of range");
    auto r = p;
    for (int j = i - 1; j >= 1; --j) r = apply_Ti_inv(r, j, F);
    r = apply_shift(r, F);
    for (int j = n - 1; j >= i; --j) r = apply_Ti(r, j, F);
    return r.scaled(F.t_pow(i - 1));
}

// D_N = (1/x_N)(1 - xi_N), D_i = (1/t) T_i D_{i+1} T_i; degree drops by one.
template <class Field>
MacPolynomial<typename Field::Scalar> apply_dunkl(
    const MacPolynomial<typename Field::Scalar>& p, int i, const Field& F) {
    const int n = p.n();
    if (i < 1 || i > n) throw std::out_of_range("D_i index out of range");
    if (i == n) return divide_by_xn(p - apply_cherednik(p, n, F));
    auto r = apply_Ti(p, i, F);
    r = apply_dunkl(r, i + 1, F);
    r = apply_Ti(r, i, F);
    return r.scaled(F.t().inverse());
}

// phi_N = 1, phi_i = (1/t) T_i phi_{i+1} T_i
template <class Field>
MacPolynomial<typename Field::Scalar> apply_jucys_poly(
    const MacPolynomial<typename Field::Scalar>& p, int i, const Field& F) {
    const int n = p.n();
    if (i < 1 || i > n) throw std::out_of_range("phi_i index out of range");
    if (i == n) return p;
    auto r = apply_Ti(p, i, F);
    r = apply_jucys_poly(r, i + 1, F);
    r = apply_Ti(r, i, F);
    return r.scaled(F.t().inverse());
}

// A right-operator word over the atoms the polynomial representation uses.
// Evaluation applies atoms left to right.
struct OpTi { int i; };
struct OpTiInv { int i; };
struct OpPi {};
struct OpMulX { int i; };
struct OpScalarQT { int qe, te; };  // multiply by q^qe t^te

using OpAtom = std::variant<OpTi, OpTiInv, OpPi, OpMulX, OpScalarQT>;

class OperatorWord {
public:
    OperatorWord() = default;

    OperatorWord& Ti(int i) { return push(OpTi{i}); }
    OperatorWord& Ti_inv(int i) { return push(OpTiInv{i}); }
    OperatorWord& pi() { return push(OpPi{}); }
    OperatorWord& mul_x(int i) { return push(OpMulX{i}); }
    OperatorWord& scalar_qt(int qe, int te) { return push(OpScalarQT{qe, te}); }

    static OperatorWord cherednik_xi(int i, int n) {
        OperatorWord w;
        for (int j = i - 1; j >= 1; --j) w.Ti_inv(j);
        w.pi();
        for (int j = n - 1; j >= i; --j) w.Ti(j);
        w.scalar_qt(0, i - 1);
        return w;
    }

    const std::vector<OpAtom>& atoms() const { return atoms_; }

    template <class Field>
    MacPolynomial<typename Field::Scalar> apply(
        MacPolynomial<typename Field::Scalar> p, const Field& F) const {
        for (const auto& atom : atoms_) {
            p = std::visit(
                [&](const auto& a) -> MacPolynomial<typename Field::Scalar> {
                    using T = std::decay_t<decltype(a)>;
                    if constexpr (std::is_same_v<T, OpTi>) return apply_Ti(p, a.i, F);
                    else if constexpr (std::is_same_v<T, OpTiInv>) return apply_Ti_inv(p, a.i, F);
                    else if constexpr (std::is_same_v<T, OpPi>) return apply_shift(p, F);
                    else if constexpr (std::is_same_v<T, OpMulX>) return multiply_by_x(p, a.i);
                    else return p.scaled(F.q_pow(a.qe) * F.t_pow(a.te));
                },
                atom);
        }
        return p;
    }

private:
    std::vector<OpAtom> atoms_;
    OperatorWord& push(OpAtom a) {
        atoms_.push_back(a);
        return *this;
    }
};

}  // namespace nsmac

#endif
