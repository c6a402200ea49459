#include "nsmac/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nsmac {

namespace {

using ZP = std::vector<mpz_class>;

void zp_trim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials with monic divisor.
ZP zp_div_monic(ZP a, const ZP& b) {
    ZP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class c = a.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        zp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
    zp_trim(q);
    return q;
}

ZP cyclotomic_poly(int m) {
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    ZP p(static_cast<size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        p = zp_div_monic(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

}  // namespace

CycloField::CycloField(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    phi_ = cyclotomic_poly(order);
}

std::shared_ptr<const CycloField> CycloField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const CycloField>(order);
    cache.emplace(order, f);
    return f;
}

CycloNum::CycloNum(std::shared_ptr<const CycloField> field)
    : field_(std::move(field)), c_(static_cast<size_t>(field_->degree()), mpq_class(0)) {}

CycloNum::CycloNum(std::shared_ptr<const CycloField> field, const mpq_class& rational)
    : CycloNum(std::move(field)) {
    c_[0] = rational;
    c_[0].canonicalize();
}

CycloNum CycloNum::zeta_power(std::shared_ptr<const CycloField> field, long e) {
    const int m = field->order();
    long r = e % m;
    if (r < 0) r += m;
    // reduce x^r mod Phi_M
    std::vector<mpq_class> work(static_cast<size_t>(r) + 1, mpq_class(0));
    work[static_cast<size_t>(r)] = 1;
    const auto& phi = field->modulus();
    const size_t d = phi.size() - 1;
    for (size_t i = work.size(); i-- > d;) {
        mpq_class c = work[i];
        if (c == 0) continue;
        work[i] = 0;
        for (size_t j = 0; j < d; ++j) work[i - d + j] -= c * mpq_class(phi[j]);
    }
    CycloNum out(field);
    for (size_t j = 0; j < d && j < work.size(); ++j) {
        out.c_[j] = work[j];
        out.c_[j].canonicalize();
    }
    return out;
}

void CycloNum::require_same_field(const CycloNum& o) const {
    if (!field_ || !o.field_ || field_->order() != o.field_->order())
        throw std::invalid_argument("cyclotomic field mismatch");
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    require_same_field(o);
    CycloNum r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    require_same_field(o);
    const size_t d = c_.size();
    std::vector<mpq_class> prod(2 * d, mpq_class(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const auto& phi = field_->modulus();
    for (size_t i = prod.size(); i-- > d;) {
        mpq_class c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < d; ++j) prod[i - d + j] -= c * mpq_class(phi[j]);
    }
    CycloNum r(field_);
    for (size_t i = 0; i < d; ++i) {
        r.c_[i] = prod[i];
        r.c_[i].canonicalize();
    }
    return r;
}

CycloNum CycloNum::operator*(const mpq_class& x) const {
    CycloNum r = *this;
    for (auto& c : r.c_) c *= x;
    return r;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero cyclotomic number");
    // extended Euclid in Q[x] against Phi_M, which is irreducible over Q
    using QP = std::vector<mpq_class>;
    auto trim = [](QP& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QP r0, r1 = QP(c_.begin(), c_.end());
    for (const auto& z : field_->modulus()) r0.emplace_back(z);
    trim(r1);
    QP s0{}, s1{mpq_class(1)};  // coefficients of the inverse candidate
    while (true) {
        trim(r1);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: modulus not coprime");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2
        QP q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
        QP rem = r0;
        while (rem.size() >= r1.size()) {
            mpq_class c = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            q[off] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
            trim(rem);
            if (rem.empty()) break;
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        QP qs1(q.size() + s1.size(), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        trim(qs1);
        QP s2(std::max(s0.size(), qs1.size()), mpq_class(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    mpq_class inv_c = 1 / r1[0];
    CycloNum out(field_);
    for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) {
        out.c_[i] = s1[i] * inv_c;
        out.c_[i].canonicalize();
    }
    return out;
}

bool CycloNum::operator==(const CycloNum& o) const {
    require_same_field(o);
    return c_ == o.c_;
}

std::string CycloNum::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].get_str();
    }
    return s + "]";
}

}  // namespace nsmac
