#include "nsmac/specialization.hpp"

#include <algorithm>
#include <numeric>

namespace nsmac {

namespace {

using UPoly = SpecScalar::UPoly;

void up_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool up_is_zero(const UPoly& p) { return p.empty(); }

int up_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

// first nonzero coefficient index (u-valuation); -1 for zero
int up_valuation(const UPoly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool up_is_monomial(const UPoly& p) {
    return !p.empty() && up_valuation(p) == up_deg(p);
}

UPoly up_add(const UPoly& a, const UPoly& b, const std::shared_ptr<const CycloField>& f) {
    UPoly r(std::max(a.size(), b.size()), CycloNum(f));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    up_trim(r);
    return r;
}

UPoly up_neg(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b, const std::shared_ptr<const CycloField>& f) {
    if (up_is_zero(a) || up_is_zero(b)) return {};
    UPoly r(a.size() + b.size() - 1, CycloNum(f));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    up_trim(r);
    return r;
}

UPoly up_scale(const UPoly& a, const CycloNum& c) {
    UPoly r = a;
    for (auto& x : r) x = x * c;
    up_trim(r);
    return r;
}

UPoly up_shift(const UPoly& a, int k, const std::shared_ptr<const CycloField>& f) {
    if (up_is_zero(a)) return {};
    UPoly r(a.size() + static_cast<size_t>(k), CycloNum(f));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

// remainder of a by b (b nonzero), monic-normalized division over the field
UPoly up_rem(UPoly a, const UPoly& b, const std::shared_ptr<const CycloField>& f) {
    CycloNum lb_inv = b.back().inverse();
    while (!up_is_zero(a) && a.size() >= b.size()) {
        CycloNum c = a.back() * lb_inv;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
        up_trim(a);
    }
    return a;
}

UPoly up_divexact(UPoly a, const UPoly& b, const std::shared_ptr<const CycloField>& f) {
    if (up_is_zero(a)) return {};
    CycloNum lb_inv = b.back().inverse();
    UPoly q(a.size() - b.size() + 1, CycloNum(f));
    while (!up_is_zero(a) && a.size() >= b.size()) {
        CycloNum c = a.back() * lb_inv;
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
        up_trim(a);
    }
    if (!up_is_zero(a)) throw std::logic_error("up_divexact: not divisible");
    up_trim(q);
    return q;
}

UPoly up_gcd(UPoly a, UPoly b, const std::shared_ptr<const CycloField>& f) {
    // monic gcd; fast paths for monomials keep the hot loops cheap
    if (up_is_zero(a)) return b;
    if (up_is_zero(b)) return a;
    auto monomial_gcd = [&](const UPoly& x, const UPoly& y) {
        int v = std::min(up_valuation(x), up_valuation(y));
        UPoly g(static_cast<size_t>(v) + 1, CycloNum(f));
        g[static_cast<size_t>(v)] = CycloNum(f, mpq_class(1));
        return g;
    };
    if (up_is_monomial(a) || up_is_monomial(b)) return monomial_gcd(a, b);
    while (!up_is_zero(b)) {
        UPoly r = up_rem(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return up_scale(a, a.back().inverse());  // monic
}

}  // namespace

Specialization Specialization::create(int m, int n, long k) {
    if (m < 1) throw std::invalid_argument("specialization requires m >= 1");
    if (n < 2) throw std::invalid_argument("specialization requires n >= 2");
    int g = std::gcd(m, n);
    long kn = ((k % g) + g) % g;  // normalize into [0, g)
    if (std::gcd(kn, static_cast<long>(g)) != 1 && !(g == 1 && kn == 0))
        throw std::invalid_argument("specialization requires gcd(k, g) = 1");
    if (g > 1 && kn == 0)
        throw std::invalid_argument("specialization requires gcd(k, g) = 1");
    long kg = std::gcd(kn, static_cast<long>(m));
    int order = kn == 0 ? 1 : static_cast<int>(m / kg);
    Specialization s(m, n, kn, CycloField::get(order));
    s.g_ = g;
    return s;
}

SpecScalar Specialization::zero() const { return SpecScalar::zero(field_); }

SpecScalar Specialization::one() const { return from_int(1); }

SpecScalar Specialization::from_int(long v) const {
    return SpecScalar::from_cyclo(CycloNum(field_, mpq_class(v)));
}

SpecScalar Specialization::omega() const {
    // omega = exp(2 pi i k/m) = zeta_M^{k / gcd(k,m)}
    if (k_ == 0) return one();
    long kg = std::gcd(k_, static_cast<long>(m_));
    return SpecScalar::from_cyclo(CycloNum::zeta_power(field_, k_ / kg));
}

SpecScalar Specialization::u_power(long e) const {
    UPoly num{CycloNum(field_, mpq_class(1))}, den{CycloNum(field_, mpq_class(1))};
    if (e >= 0)
        num = up_shift(num, static_cast<int>(e), field_);
    else
        den = up_shift(den, static_cast<int>(-e), field_);
    return SpecScalar::fraction(field_, std::move(num), std::move(den));
}

SpecScalar Specialization::q_image() const { return qt_image(1, 0); }

SpecScalar Specialization::t_image() const { return qt_image(0, 1); }

SpecScalar Specialization::qt_image(long a, long b) const {
    // q^a t^b |-> omega^a u^{(b m - a n)/g}
    long e = b * (m_ / g_) - a * (n_ / g_);
    SpecScalar om = k_ == 0 ? one()
                            : SpecScalar::from_cyclo(CycloNum::zeta_power(
                                  field_, a * (k_ / std::gcd(k_, static_cast<long>(m_)))));
    return om * u_power(e);
}

std::string Specialization::to_string() const {
    return "(m=" + std::to_string(m_) + ",n=" + std::to_string(n_) +
           ",k=" + std::to_string(k_) + ",g=" + std::to_string(g_) +
           ",M=" + std::to_string(omega_order()) + ")";
}

std::optional<long> vanishing_exponent(long a, long b, const Specialization& spec) {
    if (a * spec.n() != b * spec.m()) return std::nullopt;
    if (a % spec.m() != 0) return std::nullopt;
    long p = a / spec.m();
    if (b != p * spec.n()) return std::nullopt;
    return p;
}

SpecScalar SpecScalar::zero(std::shared_ptr<const CycloField> f) {
    SpecScalar s;
    s.field_ = std::move(f);
    s.den_ = {CycloNum(s.field_, mpq_class(1))};
    return s;
}

SpecScalar SpecScalar::from_cyclo(const CycloNum& c) {
    SpecScalar s = zero(c.field());
    if (!c.is_zero()) s.num_ = {c};
    return s;
}

SpecScalar SpecScalar::fraction(std::shared_ptr<const CycloField> f, UPoly num, UPoly den) {
    return make_reduced(std::move(f), std::move(num), std::move(den));
}

SpecScalar SpecScalar::make_reduced(std::shared_ptr<const CycloField> f, UPoly n, UPoly d) {
    up_trim(n);
    up_trim(d);
    if (up_is_zero(d)) throw std::invalid_argument("division by zero in Q(zeta)(u)");
    if (up_is_zero(n)) return zero(std::move(f));
    UPoly g = up_gcd(n, d, f);
    if (up_deg(g) >= 1) {
        n = up_divexact(std::move(n), g, f);
        d = up_divexact(std::move(d), g, f);
    }
    // monic denominator
    if (!(d.size() == 1 && d[0] == CycloNum(f, mpq_class(1)))) {
        CycloNum lead_inv = d.back().inverse();
        n = up_scale(n, lead_inv);
        d = up_scale(d, lead_inv);
    }
    SpecScalar s;
    s.field_ = std::move(f);
    s.num_ = std::move(n);
    s.den_ = std::move(d);
    return s;
}

bool SpecScalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0] == den_[0];
}

SpecScalar SpecScalar::operator-() const {
    SpecScalar r = *this;
    r.num_ = up_neg(r.num_);
    return r;
}

SpecScalar SpecScalar::operator+(const SpecScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_)
        return make_reduced(field_, up_add(num_, o.num_, field_), den_);
    UPoly n = up_add(up_mul(num_, o.den_, field_), up_mul(o.num_, den_, field_), field_);
    return make_reduced(field_, std::move(n), up_mul(den_, o.den_, field_));
}

SpecScalar SpecScalar::operator-(const SpecScalar& o) const { return *this + (-o); }

SpecScalar SpecScalar::operator*(const SpecScalar& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return make_reduced(field_, up_mul(num_, o.num_, field_),
                        up_mul(den_, o.den_, field_));
}

SpecScalar SpecScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero in Q(zeta)(u)");
    return make_reduced(field_, den_, num_);
}

SpecScalar SpecScalar::operator/(const SpecScalar& o) const { return *this * o.inverse(); }

SpecScalar SpecScalar::pow(int e) const {
    SpecScalar r = from_cyclo(CycloNum(field_, mpq_class(1)));
    if (e == 0) return r;
    SpecScalar base = e > 0 ? *this : inverse();
    int k = e > 0 ? e : -e;
    while (k) {
        if (k & 1) r *= base;
        if (k >>= 1) base *= base;
    }
    return r;
}

bool SpecScalar::operator==(const SpecScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string SpecScalar::to_string() const {
    auto poly_str = [](const UPoly& p) {
        if (p.empty()) return std::string("0");
        std::string s;
        bool first = true;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            if (!first) s += " + ";
            first = false;
            s += p[i].to_string();
            if (i) s += "u^" + std::to_string(i);
        }
        return s;
    };
    if (den_.size() == 1 && den_[0] == CycloNum(field_, mpq_class(1)))
        return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

namespace {

// image of an integer (q,t)-polynomial: a u-Laurent polynomial, returned as
// (UPoly, shift) meaning poly * u^{-shift}
std::pair<UPoly, long> substitute_poly(const BivarPoly& p, const Specialization& spec) {
    const auto& f = spec.field();
    long min_e = 0, max_e = 0;
    bool first = true;
    const int mg = spec.m() / spec.g(), ng = spec.n() / spec.g();
    for (const auto& [key, c] : p.terms()) {
        long e = static_cast<long>(key.first) * mg - static_cast<long>(key.second) * ng;
        if (first || e < min_e) min_e = e;
        if (first || e > max_e) max_e = e;
        first = false;
    }
    if (first) return {{}, 0};
    UPoly out(static_cast<size_t>(max_e - min_e) + 1, CycloNum(f));
    long kdiv = spec.k() == 0 ? 0 : spec.k() / std::gcd(spec.k(), static_cast<long>(spec.m()));
    for (const auto& [key, c] : p.terms()) {
        auto [te, qe] = key;
        long e = static_cast<long>(te) * mg - static_cast<long>(qe) * ng;
        CycloNum w = spec.k() == 0 ? CycloNum(f, mpq_class(1))
                                   : CycloNum::zeta_power(f, qe * kdiv);
        out[static_cast<size_t>(e - min_e)] =
            out[static_cast<size_t>(e - min_e)] + w * mpq_class(c);
    }
    up_trim(out);
    return {std::move(out), -min_e};
}

}  // namespace

SpecScalar substitute(const QtScalar& x, const Specialization& spec) {
    if (x.is_zero()) return spec.zero();
    BivarPoly num = x.num(), den = x.den();
    auto den_img = substitute_poly(den, spec);
    if (up_is_zero(den_img.first)) {
        // cancellation loop: strip 1 - q^{pm} t^{pn} factors shared by both
        // sides, as long as both divisions are exact
        const int maxdeg = std::max(den.total_degree(), 1);
        bool progressed = true;
        while (progressed && up_is_zero(den_img.first)) {
            progressed = false;
            for (int p = 1; p * (spec.m() + spec.n()) <= maxdeg; ++p) {
                BivarPoly factor = BivarPoly::one_minus_qt(p * spec.m(), p * spec.n());
                auto dq = exact_divide(den, factor);
                if (!dq) continue;
                auto nq = exact_divide(num, factor);
                if (!nq) continue;
                den = *dq;
                num = *nq;
                progressed = true;
                den_img = substitute_poly(den, spec);
                break;
            }
        }
        if (up_is_zero(den_img.first)) {
            bool classified = false;
            for (int p = 1; p * (spec.m() + spec.n()) <= maxdeg && !classified; ++p)
                if (exact_divide(den, BivarPoly::one_minus_qt(p * spec.m(), p * spec.n())))
                    classified = true;
            throw PoleError("pole at the specialization: denominator " + den.to_string() +
                                " vanishes on the curve " + spec.to_string(),
                            den.to_string(), classified);
        }
    }
    auto num_img = substitute_poly(num, spec);
    // value = num_img * u^{-s1} / (den_img * u^{-s2})
    long shift = num_img.second - den_img.second;
    UPoly n = std::move(num_img.first), d = std::move(den_img.first);
    if (shift > 0)
        d = up_shift(d, static_cast<int>(shift), spec.field());
    else if (shift < 0)
        n = up_shift(n, static_cast<int>(-shift), spec.field());
    return SpecScalar::fraction(spec.field(), std::move(n), std::move(d));
}

}  // namespace nsmac
