#include "nsmac/macdonald.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace nsmac {

SpectralVector spectral_vector(const Composition& alpha) {
    RankFunction r = rank_function(alpha);
    std::vector<std::pair<int, int>> exps;
    exps.reserve(static_cast<size_t>(alpha.n()));
    for (int i = 1; i <= alpha.n(); ++i)
        exps.emplace_back(alpha.at(i), alpha.n() - r.at(i));
    return SpectralVector(std::move(exps));
}

std::pair<int, int> rho_exponents(const Composition& alpha, int i) {
    if (i < 1 || i >= alpha.n()) throw std::out_of_range("rho index out of range");
    RankFunction r = rank_function(alpha);
    return {alpha.at(i + 1) - alpha.at(i), r.at(i) - r.at(i + 1)};
}

namespace {

// denominator factor for a transposition step with rho = q^dq t^dt:
// dt >= 0: 1 - q^dq t^dt, numerator multiplier (1-t)
// dt <  0: t^{-dt} - q^dq, numerator multiplier (1-t) t^{-dt}
using FactorTag = std::pair<int, int>;

const BivarPoly& step_factor(const FactorTag& tag) {
    static std::map<FactorTag, BivarPoly> cache;
    auto it = cache.find(tag);
    if (it != cache.end()) return it->second;
    auto [dq, dt] = tag;
    BivarPoly f = dt >= 0 ? BivarPoly::one_minus_qt(dq, dt)
                          : BivarPoly::t(-dt) - BivarPoly::q(dq);
    return cache.emplace(tag, std::move(f)).first->second;
}

BivarPoly step_multiplier(int dt) {
    BivarPoly m = BivarPoly::one() - BivarPoly::t();
    if (dt < 0) m = m.mul_monomial(0, -dt);
    return m;
}

// Necessary condition for step_factor(tag) | p: collapse monomials along the
// weight vector that kills the binomial; every bucket sum must vanish.  Keeps
// failed strip attempts linear in the term count.
bool bucket_filter_divisible(const BivarPoly& p, const FactorTag& tag) {
    long wq, wt;
    if (tag.second >= 0) {
        wq = tag.second;
        wt = -tag.first;
    } else {
        wq = -tag.second;
        wt = tag.first;
    }
    std::vector<std::pair<long, const mpz_class*>> entries;
    entries.reserve(static_cast<size_t>(p.num_terms()));
    for (const auto& [key, c] : p.terms())
        entries.emplace_back(
            static_cast<long>(key.second) * wq + static_cast<long>(key.first) * wt, &c);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t i = 0;
    mpz_class sum;
    while (i < entries.size()) {
        sum = *entries[i].second;
        size_t j = i + 1;
        while (j < entries.size() && entries[j].first == entries[i].first)
            sum += *entries[j++].second;
        if (sum != 0) return false;
        i = j;
    }
    return true;
}

// Working coefficient for the graph walk: an integer polynomial over a
// multiset of step-factor binomials.  Division never happens; denominators
// only accumulate as tags and disappear again through exact-division
// stripping, which keeps numerators close to their reduced size.
struct StepScalar {
    BivarPoly num;
    std::map<FactorTag, int> den;

    bool is_zero() const { return num.is_zero(); }

    void strip() {
        if (num.is_zero()) {
            den.clear();
            return;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = den.begin(); it != den.end();) {
                BivarPoly f = step_factor(it->first);
                bool divided = false;
                while (it->second > 0) {
                    if (!bucket_filter_divisible(num, it->first)) break;
                    auto q = exact_divide(num, f);
                    if (!q) break;
                    num = std::move(*q);
                    --it->second;
                    divided = true;
                }
                progress = progress || divided;
                it = it->second == 0 ? den.erase(it) : std::next(it);
            }
        }
    }

    StepScalar operator-() const { return {-num, den}; }

    StepScalar operator+(const StepScalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den == o.den) {
            StepScalar r{num + o.num, den};
            if (r.num.is_zero()) r.den.clear();
            return r;  // stripping waits for the next denominator change
        }
        StepScalar r;
        BivarPoly a = num, b = o.num;
        // union multiset; each side picks up the factors it lacks
        for (const auto& [tag, mult] : den) {
            auto it = o.den.find(tag);
            int other = it == o.den.end() ? 0 : it->second;
            r.den[tag] = std::max(mult, other);
            BivarPoly f = step_factor(tag);
            for (int j = other; j < mult; ++j) b = b * f;
        }
        for (const auto& [tag, mult] : o.den) {
            auto it = den.find(tag);
            int have = it == den.end() ? 0 : it->second;
            if (mult > have) {
                r.den[tag] = mult;
                BivarPoly f = step_factor(tag);
                for (int j = have; j < mult; ++j) a = a * f;
            }
        }
        r.num = a + b;
        r.strip();
        return r;
    }

    StepScalar& operator+=(const StepScalar& o) { return *this = *this + o; }

    StepScalar operator-(const StepScalar& o) const { return *this + (-o); }

    StepScalar operator*(const StepScalar& o) const {
        if (is_zero()) return *this;
        if (o.is_zero()) return o;
        StepScalar r{num * o.num, den};
        for (const auto& [tag, mult] : o.den) r.den[tag] += mult;
        // a monomial multiplier cannot change divisibility by the factors
        if (!(o.den.empty() && o.num.num_terms() == 1)) r.strip();
        return r;
    }

    // value equality via cross multiplication over the missing factors
    bool operator==(const StepScalar& o) const {
        BivarPoly a = num, b = o.num;
        for (const auto& [tag, mult] : o.den) {
            auto it = den.find(tag);
            int have = it == den.end() ? 0 : it->second;
            BivarPoly f = step_factor(tag);
            for (int j = have; j < mult; ++j) a = a * f;
        }
        for (const auto& [tag, mult] : den) {
            auto it = o.den.find(tag);
            int have = it == o.den.end() ? 0 : it->second;
            BivarPoly f = step_factor(tag);
            for (int j = have; j < mult; ++j) b = b * f;
        }
        return a == b;
    }
    bool operator!=(const StepScalar& o) const { return !(*this == o); }
};

struct StepField {
    using Scalar = StepScalar;
    StepScalar zero() const { return {BivarPoly::zero(), {}}; }
    StepScalar one() const { return {BivarPoly::one(), {}}; }
    StepScalar from_int(long v) const { return {BivarPoly::constant(mpz_class(v)), {}}; }
    StepScalar q() const { return {BivarPoly::q(), {}}; }
    StepScalar t() const { return {BivarPoly::t(), {}}; }
    StepScalar q_pow(int e) const {
        if (e < 0) throw std::logic_error("negative q power in graph walk");
        return {BivarPoly::q(e), {}};
    }
    StepScalar t_pow(int e) const {
        if (e < 0) throw std::logic_error("negative t power in graph walk");
        return {BivarPoly::t(e), {}};
    }
};

using StepPoly = MacPolynomial<StepScalar>;

}  // namespace

struct MacdonaldBuilder::State {
    StepPoly poly;
};

namespace {

// integer-coefficient field for per-class word application
struct PolyField {
    using Scalar = BivarPoly;
    BivarPoly zero() const { return BivarPoly::zero(); }
    BivarPoly one() const { return BivarPoly::one(); }
    BivarPoly from_int(long v) const { return BivarPoly::constant(mpz_class(v)); }
    BivarPoly q() const { return BivarPoly::q(); }
    BivarPoly t() const { return BivarPoly::t(); }
    BivarPoly q_pow(int e) const {
        if (e < 0) throw std::logic_error("negative q power in integer form");
        return BivarPoly::q(e);
    }
    BivarPoly t_pow(int e) const {
        if (e < 0) throw std::logic_error("negative t power in integer form");
        return BivarPoly::t(e);
    }
};

// Spectral check without division: the t^{i-1} prefactor of xi_i cancels the
// (1/t)^{i-1} of the inverse generators, leaving (T_j + 1 - t) words.  The
// polynomial is split into classes of equal denominator multiset; each class
// runs the word over plain integer coefficients, and the residuals
// word(P_k) - zeta P_k recombine through tagged fractions only once per
// coefficient at the very end.
bool factored_eigen_ok(const StepPoly& p, const Composition& alpha) {
    const PolyField F;
    const int n = alpha.n();
    const BivarPoly one_minus_t = BivarPoly::one() - BivarPoly::t();
    RankFunction r = rank_function(alpha);

    std::map<std::map<FactorTag, int>, MacPolynomial<BivarPoly>> classes;
    for (const auto& [key, c] : p.terms()) {
        auto it = classes.find(c.den);
        if (it == classes.end())
            it = classes.emplace(c.den, MacPolynomial<BivarPoly>(p.n())).first;
        it->second.add_term(key, c.num);
    }

    for (int i = 1; i <= n; ++i) {
        const BivarPoly zeta = BivarPoly::monomial(alpha.at(i), n - r.at(i), 1);
        std::map<Composition, StepScalar, MonomialOrder> acc;
        for (const auto& [den, part] : classes) {
            auto lhs = part;
            for (int j = i - 1; j >= 1; --j)
                lhs = apply_Ti(lhs, j, F) + lhs.scaled(one_minus_t);
            lhs = apply_shift(lhs, F);
            for (int j = n - 1; j >= i; --j) lhs = apply_Ti(lhs, j, F);
            auto residual = lhs - part.scaled(zeta);
            for (const auto& [key, num] : residual.terms()) {
                StepScalar contrib{num, den};
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, std::move(contrib));
                else
                    it->second += contrib;
            }
        }
        for (const auto& [key, v] : acc)
            if (!v.is_zero()) return false;
    }
    return true;
}

MacPolynomial<QtScalar> reduce_state(const StepPoly& p) {
    MacPolynomial<QtScalar> out(p.n());
    // coefficients mostly share denominators; cache the expanded products of
    // the untouched tails
    std::map<std::map<FactorTag, int>, BivarPoly> product_cache;
    auto expanded = [&](const std::map<FactorTag, int>& tags) -> const BivarPoly& {
        auto it = product_cache.find(tags);
        if (it != product_cache.end()) return it->second;
        BivarPoly d = BivarPoly::one();
        for (const auto& [tag, mult] : tags)
            for (int j = 0; j < mult; ++j) d = d * step_factor(tag);
        return product_cache.emplace(tags, std::move(d)).first->second;
    };
    for (const auto& [key, c] : p.terms()) {
        BivarPoly num = c.num;
        std::map<FactorTag, int> untouched;
        BivarPoly extra = BivarPoly::one();
        bool any_extra = false;
        for (const auto& [tag, mult] : c.den) {
            const BivarPoly& f0 = step_factor(tag);
            int clean = 0;
            for (int j = 0; j < mult; ++j) {
                if (binomial_gcd_is_trivial(num, f0)) {
                    clean += mult - j;  // no sharing possible for later copies either
                    break;
                }
                BivarPoly g = bivar_gcd(num, f0);
                if (g.is_one()) {
                    ++clean;
                    continue;
                }
                num = *exact_divide(num, g);
                BivarPoly f = *exact_divide(f0, g);
                if (!f.is_one()) {
                    extra = extra * f;
                    any_extra = true;
                }
            }
            if (clean > 0) untouched[tag] = clean;
        }
        BivarPoly den = expanded(untouched);
        if (any_extra) den = den * extra;
        out.add_term(key, QtScalar::fraction_coprime(num, den));
    }
    return out;
}

}  // namespace

MacdonaldBuilder::MacdonaldBuilder() = default;
MacdonaldBuilder::MacdonaldBuilder(Limits limits) : limits_(limits) {}
MacdonaldBuilder::~MacdonaldBuilder() = default;

const MacdonaldBuilder::State& MacdonaldBuilder::build_state(const Composition& alpha) {
    auto it = states_.find(alpha);
    if (it != states_.end()) return *it->second;

    const int n = alpha.n();
    const StepField F;
    State st;
    if (alpha.size() == 0) {
        st.poly = StepPoly::monomial(n, alpha, F.one());
    } else if (alpha.is_weakly_increasing()) {
        // strip the affine step: alpha = beta.Phi with beta = (a_N - 1, a_1, ...)
        std::vector<int> b;
        b.push_back(alpha.at(n) - 1);
        for (int i = 1; i < n; ++i) b.push_back(alpha.at(i));
        const State& prev = build_state(Composition(b));
        st.poly = multiply_by_x(apply_shift(prev.poly, F), n);
    } else {
        Composition inc(alpha.sorted_asc());
        st.poly = build_state(inc).poly;
        std::vector<int> cur = inc.entries();
        for (int p = 1; p <= n; ++p) {
            // leftmost occurrence of alpha_p in the still-sorted suffix
            int j = p;
            while (cur[static_cast<size_t>(j) - 1] != alpha.at(p)) ++j;
            for (int i = j - 1; i >= p; --i) {
                Composition gamma(cur);
                auto [dq, dt] = rho_exponents(gamma, i);
                StepScalar c{step_multiplier(dt), {{FactorTag{dq, dt}, 1}}};
                st.poly = apply_Ti(st.poly, i, F) + st.poly.scaled(c);
                std::swap(cur[static_cast<size_t>(i) - 1], cur[static_cast<size_t>(i)]);
            }
        }
    }
    return *states_.emplace(alpha, std::make_unique<State>(std::move(st))).first->second;
}

const MacPolynomial<QtScalar>& MacdonaldBuilder::build(const Composition& alpha) {
    auto it = reduced_.find(alpha);
    if (it != reduced_.end()) return it->second;
    if (alpha.size() > limits_.degree_cap || alpha.n() > limits_.n_cap)
        throw std::invalid_argument("macdonald build: degree cap exceeded");

    auto T0 = std::chrono::steady_clock::now();
    const State& st = build_state(alpha);
    auto T1 = std::chrono::steady_clock::now();
    if (!factored_eigen_ok(st.poly, alpha))
        throw std::logic_error("macdonald build: spectral post-check failed");
    auto T2 = std::chrono::steady_clock::now();
    MacPolynomial<QtScalar> m = reduce_state(st.poly);
    auto T3 = std::chrono::steady_clock::now();
    if (getenv("NSMAC_TIMING"))
        fprintf(stderr, "[build %s] state %ld ms, eigen %ld ms, reduce %ld ms\n",
                alpha.to_string().c_str(),
                std::chrono::duration_cast<std::chrono::milliseconds>(T1-T0).count(),
                std::chrono::duration_cast<std::chrono::milliseconds>(T2-T1).count(),
                std::chrono::duration_cast<std::chrono::milliseconds>(T3-T2).count());

    // leading-term shape: q^j t^j' x^alpha plus triangular tail
    auto [jq, jt] = leading_exponents(alpha);
    if (!(m.leading().first == alpha) ||
        m.leading().second != QtScalar::qt_monomial(jq, jt))
        throw std::logic_error("macdonald build: leading term mismatch");
    for (const auto& [key, c] : m.terms())
        if (key != alpha && !dominance_tri(alpha, key))
            throw std::logic_error("macdonald build: triangularity violated");

    return reduced_.emplace(alpha, std::move(m)).first->second;
}

std::pair<int, int> MacdonaldBuilder::leading_exponents(const Composition& alpha) {
    if (alpha.size() == 0) return {0, 0};
    const int n = alpha.n();
    if (alpha.is_weakly_increasing()) {
        std::vector<int> b;
        b.push_back(alpha.at(n) - 1);
        for (int i = 1; i < n; ++i) b.push_back(alpha.at(i));
        auto [jq, jt] = leading_exponents(Composition(b));
        return {jq + alpha.at(n) - 1, jt};
    }
    auto [jq, jt] = leading_exponents(Composition(alpha.sorted_asc()));
    std::vector<int> cur = alpha.sorted_asc();
    int swaps = 0;
    for (int p = 1; p <= n; ++p) {
        int j = p;
        while (cur[static_cast<size_t>(j) - 1] != alpha.at(p)) ++j;
        for (int i = j - 1; i >= p; --i) {
            std::swap(cur[static_cast<size_t>(i) - 1], cur[static_cast<size_t>(i)]);
            ++swaps;
        }
    }
    return {jq, jt + swaps};
}

MacPolynomial<QtScalar> build_macdonald(const Composition& alpha) {
    MacdonaldBuilder builder;
    return builder.build(alpha);
}

}  // namespace nsmac
