#include "nsmac/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace nsmac {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z, used as the coefficient ring of the
// t-major view during gcd computations.

using IntPoly = std::vector<mpz_class>;  // coeffs[i] multiplies q^i

void ip_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool ip_is_zero(const IntPoly& p) { return p.empty(); }

int ip_deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly ip_const(const mpz_class& c) { return c == 0 ? IntPoly{} : IntPoly{c}; }

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ip_trim(r);
    return r;
}

IntPoly ip_neg(const IntPoly& a) {
    IntPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) { return ip_add(a, ip_neg(b)); }

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (ip_is_zero(a) || ip_is_zero(b)) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ip_trim(r);
    return r;
}

mpz_class ip_content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly ip_divexact_int(const IntPoly& p, const mpz_class& d) {
    IntPoly r = p;
    for (auto& c : r) {
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rr != 0) throw std::logic_error("ip_divexact_int: not divisible");
        c = qq;
    }
    return r;
}

// Exact division in Z[q]; nullopt when not divisible.
std::optional<IntPoly> ip_exact_divide(IntPoly a, const IntPoly& b) {
    if (ip_is_zero(b)) throw std::invalid_argument("division by zero polynomial");
    if (ip_is_zero(a)) return IntPoly{};
    if (ip_deg(a) < ip_deg(b)) return std::nullopt;
    IntPoly quot(a.size() - b.size() + 1, 0);
    for (int i = ip_deg(a) - ip_deg(b); i >= 0; --i) {
        size_t top = b.size() - 1 + static_cast<size_t>(i);
        if (top >= a.size() || a[top] == 0) continue;
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), a[top].get_mpz_t(),
                    b.back().get_mpz_t());
        if (rr != 0) return std::nullopt;
        quot[static_cast<size_t>(i)] = qq;
        for (size_t j = 0; j < b.size(); ++j) a[static_cast<size_t>(i) + j] -= qq * b[j];
        ip_trim(a);
    }
    if (!ip_is_zero(a)) return std::nullopt;
    ip_trim(quot);
    return quot;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, exactly that
// power even when eliminations skip degrees.
IntPoly ip_prem(IntPoly a, const IntPoly& b) {
    int db = ip_deg(b);
    const mpz_class& lb = b.back();
    int scale = ip_deg(a) - db + 1;
    while (!ip_is_zero(a) && ip_deg(a) >= db) {
        int da = ip_deg(a);
        mpz_class la = a.back();
        IntPoly next(a.size(), 0);
        // next = lb*a - la*q^(da-db)*b
        for (size_t i = 0; i < a.size(); ++i) next[i] = lb * a[i];
        for (size_t j = 0; j < b.size(); ++j)
            next[static_cast<size_t>(da - db) + j] -= la * b[j];
        ip_trim(next);
        a = std::move(next);
        --scale;
    }
    for (; scale > 0; --scale)
        for (auto& c : a) c *= lb;
    return a;
}

IntPoly ip_primitive(const IntPoly& p, mpz_class* content_out = nullptr) {
    if (ip_is_zero(p)) {
        if (content_out) *content_out = 0;
        return p;
    }
    mpz_class c = ip_content(p);
    if (p.back() < 0) c = -c;  // positive leading coefficient
    if (content_out) *content_out = c;
    return ip_divexact_int(p, c);
}

IntPoly ip_sign_normalized(IntPoly p) {
    if (!p.empty() && p.back() < 0) p = ip_neg(p);
    return p;
}

IntPoly ip_gcd(IntPoly a, IntPoly b) {
    if (ip_is_zero(a)) return ip_sign_normalized(std::move(b));
    if (ip_is_zero(b)) return ip_sign_normalized(std::move(a));
    mpz_class ca, cb;
    a = ip_primitive(a, &ca);
    b = ip_primitive(b, &cb);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (ip_deg(a) < ip_deg(b)) std::swap(a, b);
    // subresultant PRS over Z
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = ip_deg(a) - ip_deg(b);
        IntPoly r = ip_prem(a, b);
        if (ip_is_zero(r)) break;
        if (ip_deg(r) == 0) {
            b = ip_const(mpz_class(1));
            break;
        }
        a = b;
        mpz_class divisor = g;
        for (int k = 0; k < delta; ++k) divisor *= h;
        b = ip_divexact_int(r, divisor);
        g = a.back();
        // h = h^(1-delta) g^delta
        if (delta > 0) {
            mpz_class num = 1;
            for (int k = 0; k < delta; ++k) num *= g;
            mpz_class den = 1;
            for (int k = 0; k < delta - 1; ++k) den *= h;
            mpz_class qq, rr;
            mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rr != 0) throw std::logic_error("ip_gcd: subresultant bookkeeping");
            h = qq;
        }
    }
    IntPoly pp = ip_primitive(b);
    IntPoly result = pp;
    for (auto& x : result) x *= c;
    ip_trim(result);
    return result;
}

// ---------------------------------------------------------------------------
// t-major view: univariate in t with Z[q] coefficients.

using TPoly = std::vector<IntPoly>;  // coeffs[i] multiplies t^i

void tp_trim(TPoly& p) {
    while (!p.empty() && ip_is_zero(p.back())) p.pop_back();
}

bool tp_is_zero(const TPoly& p) { return p.empty(); }

int tp_deg(const TPoly& p) { return static_cast<int>(p.size()) - 1; }

TPoly tp_mul_ip(const TPoly& p, const IntPoly& c) {
    TPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = ip_mul(p[i], c);
    tp_trim(r);
    return r;
}

TPoly tp_divexact_ip(const TPoly& p, const IntPoly& c) {
    TPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (ip_is_zero(p[i])) continue;
        auto q = ip_exact_divide(p[i], c);
        if (!q) throw std::logic_error("tp_divexact_ip: not divisible");
        r[i] = *q;
    }
    tp_trim(r);
    return r;
}

IntPoly tp_content(const TPoly& p) {
    IntPoly g;
    for (const auto& c : p)
        if (!ip_is_zero(c)) g = ip_gcd(g, c);
    return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, coefficients in Z[q]; same exact
// normalization as ip_prem.
TPoly tp_prem(TPoly a, const TPoly& b) {
    int db = tp_deg(b);
    const IntPoly& lb = b.back();
    int scale = tp_deg(a) - db + 1;
    while (!tp_is_zero(a) && tp_deg(a) >= db) {
        int da = tp_deg(a);
        IntPoly la = a.back();
        TPoly next(a.size());
        for (size_t i = 0; i < a.size(); ++i) next[i] = ip_mul(lb, a[i]);
        for (size_t j = 0; j < b.size(); ++j) {
            size_t idx = static_cast<size_t>(da - db) + j;
            next[idx] = ip_sub(next[idx], ip_mul(la, b[j]));
        }
        tp_trim(next);
        a = std::move(next);
        --scale;
    }
    for (; scale > 0; --scale)
        for (auto& c : a) c = ip_mul(c, lb);
    return a;
}

TPoly tp_primitive(const TPoly& p) {
    if (tp_is_zero(p)) return p;
    IntPoly c = tp_content(p);
    return tp_divexact_ip(p, c);
}

TPoly tp_gcd_primitive(TPoly a, TPoly b) {
    // both inputs primitive (content 1 in Z[q]); returns a primitive gcd
    if (tp_is_zero(a)) return b;
    if (tp_is_zero(b)) return a;
    if (tp_deg(a) < tp_deg(b)) std::swap(a, b);
    IntPoly g = ip_const(mpz_class(1)), h = ip_const(mpz_class(1));
    while (true) {
        int delta = tp_deg(a) - tp_deg(b);
        TPoly r = tp_prem(a, b);
        if (tp_is_zero(r)) break;
        if (tp_deg(r) == 0) return {ip_const(mpz_class(1))};
        a = b;
        IntPoly divisor = g;
        for (int k = 0; k < delta; ++k) divisor = ip_mul(divisor, h);
        b = tp_divexact_ip(r, divisor);
        g = a.back();
        if (delta > 0) {
            IntPoly num = ip_const(mpz_class(1));
            for (int k = 0; k < delta; ++k) num = ip_mul(num, g);
            IntPoly den = ip_const(mpz_class(1));
            for (int k = 0; k < delta - 1; ++k) den = ip_mul(den, h);
            auto q = ip_exact_divide(num, den);
            if (!q) throw std::logic_error("tp_gcd: subresultant bookkeeping");
            h = *q;
        }
    }
    return tp_primitive(b);
}

TPoly to_tpoly(const BivarPoly& p) {
    TPoly r(static_cast<size_t>(p.deg_t()) + 1);
    if (p.is_zero()) return {};
    for (const auto& [key, c] : p.terms()) {
        auto [te, qe] = key;
        auto& ip = r[static_cast<size_t>(te)];
        if (ip_deg(ip) < qe) ip.resize(static_cast<size_t>(qe) + 1, 0);
        ip[static_cast<size_t>(qe)] = c;
    }
    tp_trim(r);
    return r;
}

BivarPoly from_tpoly(const TPoly& p) {
    BivarPoly r;
    for (size_t te = 0; te < p.size(); ++te)
        for (size_t qe = 0; qe < p[te].size(); ++qe)
            if (p[te][qe] != 0)
                r = r + BivarPoly::monomial(static_cast<int>(qe), static_cast<int>(te),
                                            p[te][qe]);
    return r;
}

}  // namespace

BivarPoly BivarPoly::monomial(int qe, int te, const mpz_class& c) {
    if (qe < 0 || te < 0) throw std::invalid_argument("negative exponent in polynomial");
    BivarPoly p;
    if (c != 0) p.terms_[{te, qe}] = c;
    return p;
}

BivarPoly BivarPoly::one_minus_qt(int a, int b) {
    if (a == 0 && b == 0) throw std::invalid_argument("one_minus_qt: zero exponents");
    return one() - monomial(a, b, 1);
}

bool BivarPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

int BivarPoly::deg_q() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

int BivarPoly::deg_t() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

void BivarPoly::add_term(int qe, int te, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find({te, qe});
    if (it == terms_.end()) {
        terms_.emplace(Key{te, qe}, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.second, key.first, c);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.second, key.first, -c);
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.second + k2.second, k1.first + k2.first, c1 * c2);
    return r;
}

BivarPoly BivarPoly::operator*(const mpz_class& c) const {
    if (c == 0) return {};
    BivarPoly r = *this;
    for (auto& [key, x] : r.terms_) x *= c;
    return r;
}

mpz_class BivarPoly::content() const {
    mpz_class g = 0;
    for (const auto& [key, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BivarPoly BivarPoly::divexact_int(const mpz_class& d) const {
    if (d == 0) throw std::invalid_argument("divexact_int by zero");
    BivarPoly r = *this;
    for (auto& [key, c] : r.terms_) {
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rr != 0) throw std::logic_error("divexact_int: not divisible");
        c = qq;
    }
    return r;
}

const mpz_class& BivarPoly::glex_leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("glex_leading_coeff of zero");
    const mpz_class* best = nullptr;
    int bd = -1, bq = -1;
    for (const auto& [key, c] : terms_) {
        int d = key.first + key.second;
        if (d > bd || (d == bd && key.second > bq)) {
            bd = d;
            bq = key.second;
            best = &c;
        }
    }
    return *best;
}

BivarPoly BivarPoly::mul_monomial(int qe, int te) const {
    BivarPoly r;
    for (const auto& [key, c] : terms_) r.terms_[{key.first + te, key.second + qe}] = c;
    return r;
}

std::pair<BivarPoly, int> BivarPoly::swap_t_inverse() const {
    int d = std::max(deg_t(), 0);
    BivarPoly r;
    for (const auto& [key, c] : terms_) r.terms_[{d - key.first, key.second}] = c;
    return {r, d};
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        first = false;
        mpz_class a = abs(c);
        bool unit = (a == 1) && (key.first || key.second);
        if (!unit) s += a.get_str();
        if (key.second) s += "q" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
        if (key.first) s += "t" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    }
    return s;
}

std::optional<BivarPoly> exact_divide(const BivarPoly& dividend, const BivarPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("exact_divide by zero");
    if (dividend.is_zero()) return BivarPoly::zero();
    BivarPoly rem = dividend;
    BivarPoly quot;
    const auto& dlead = *divisor.terms_.rbegin();  // (te,qe)-lex leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        int te = rlead.first.first - dlead.first.first;
        int qe = rlead.first.second - dlead.first.second;
        if (te < 0 || qe < 0) return std::nullopt;
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), rlead.second.get_mpz_t(),
                    dlead.second.get_mpz_t());
        if (rr != 0) return std::nullopt;
        BivarPoly term = BivarPoly::monomial(qe, te, qq);
        quot = quot + term;
        rem = rem - divisor * term;
    }
    return quot;
}

namespace {

constexpr uint64_t kCertPrime = 2305843009213693951ull;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % kCertPrime);
}

uint64_t mpz_mod_prime(const mpz_class& c) {
    static const mpz_class p = (mpz_class(1) << 61) - 1;
    mpz_class r = c % p;
    if (r < 0) r += p;
    return static_cast<uint64_t>(r.get_ui());  // unsigned long is 64-bit here
}

}  // namespace

bool binomial_gcd_is_trivial(const BivarPoly& a, const BivarPoly& binom) {
    if (a.is_zero() || binom.is_zero()) return false;
    const bool keep_t = binom.deg_t() > 0;  // evaluate the other variable at 2
    auto evaluate = [keep_t](const BivarPoly& p) {
        std::vector<uint64_t> out;
        for (const auto& [key, c] : p.terms()) {
            auto [te, qe] = key;
            int deg = keep_t ? te : qe;
            int off = keep_t ? qe : te;
            if (static_cast<int>(out.size()) <= deg)
                out.resize(static_cast<size_t>(deg) + 1, 0);
            uint64_t scale = 1;
            for (int j = 0; j < off; ++j) scale = mulmod(scale, 2);
            uint64_t cv = mpz_mod_prime(c);
            out[static_cast<size_t>(deg)] =
                (out[static_cast<size_t>(deg)] + mulmod(cv, scale)) % kCertPrime;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint64_t> ea = evaluate(a), eb = evaluate(binom);
    if (ea.empty() || eb.empty()) return false;
    // Euclid mod the prime; a degree-0 gcd certifies a trivial gcd over Q for
    // divisors of binomials, whose factors carry unit-times-power leading
    // coefficients
    auto inv = [](uint64_t x) {
        uint64_t r = 1, b = x, e = kCertPrime - 2;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    while (!eb.empty()) {
        // ea mod eb
        uint64_t lead_inv = inv(eb.back());
        while (ea.size() >= eb.size() && !ea.empty()) {
            uint64_t c = mulmod(ea.back(), lead_inv);
            size_t off = ea.size() - eb.size();
            for (size_t j = 0; j < eb.size(); ++j) {
                uint64_t sub = mulmod(c, eb[j]);
                ea[off + j] = (ea[off + j] + kCertPrime - sub) % kCertPrime;
            }
            while (!ea.empty() && ea.back() == 0) ea.pop_back();
        }
        std::swap(ea, eb);
    }
    return ea.size() == 1;
}

BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b) {
    auto normalize = [](BivarPoly p) {
        if (!p.is_zero() && p.glex_leading_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    TPoly ta = to_tpoly(a), tb = to_tpoly(b);
    IntPoly ca = tp_content(ta), cb = tp_content(tb);
    TPoly pa = tp_divexact_ip(ta, ca), pb = tp_divexact_ip(tb, cb);
    IntPoly cg = ip_gcd(ca, cb);
    TPoly pg = tp_gcd_primitive(pa, pb);
    return normalize(from_tpoly(tp_mul_ip(pg, cg)));
}

}  // namespace nsmac
