#include "nsmac/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nsmac {

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
}

Composition Composition::parse(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty composition text");
    return Composition(out);
}

int Composition::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Composition::length() const {
    for (int i = n(); i >= 1; --i)
        if (at(i) > 0) return i;
    return 0;
}

bool Composition::is_weakly_decreasing() const {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<int>());
}

bool Composition::is_weakly_increasing() const {
    return std::is_sorted(entries_.begin(), entries_.end());
}

Composition Composition::padded(int n) const {
    if (n < this->n()) throw std::invalid_argument("padding cannot shorten a composition");
    std::vector<int> e = entries_;
    e.resize(static_cast<size_t>(n), 0);
    return Composition(e);
}

Composition Composition::swapped(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("swap index out of range");
    std::vector<int> e = entries_;
    std::swap(e[static_cast<size_t>(i) - 1], e[static_cast<size_t>(i)]);
    return Composition(e);
}

std::vector<int> Composition::sorted_desc() const {
    std::vector<int> e = entries_;
    std::sort(e.begin(), e.end(), std::greater<int>());
    return e;
}

std::vector<int> Composition::sorted_asc() const {
    std::vector<int> e = entries_;
    std::sort(e.begin(), e.end());
    return e;
}

std::string Composition::to_string() const {
    std::string s;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition part index");
    return i <= num_parts() ? parts_[static_cast<size_t>(i) - 1] : 0;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Partition::as_composition(int n) const {
    if (n < num_parts()) throw std::invalid_argument("ambient length too small for partition");
    std::vector<int> e = parts_;
    e.resize(static_cast<size_t>(n), 0);
    return Composition(e);
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s.empty() ? std::string("0") : s;
}

RankFunction::RankFunction(std::vector<int> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("rank function must be a permutation of 1..N");
        seen[static_cast<size_t>(v)] = 1;
    }
}

bool RankFunction::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (at(i) != i) return false;
    return true;
}

RankFunction rank_function(const Composition& a) {
    const int n = a.n();
    std::vector<int> r(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int greater = 0, equal_before = 0;
        for (int k = 1; k <= n; ++k) {
            if (a.at(k) > a.at(i)) ++greater;
            if (k <= i && a.at(k) == a.at(i)) ++equal_before;
        }
        r[static_cast<size_t>(i) - 1] = greater + equal_before;
    }
    return RankFunction(r);
}

bool dominance_succ(const Composition& a, const Composition& b) {
    if (a.n() != b.n() || a.size() != b.size())
        throw std::invalid_argument("dominance_succ: size mismatch");
    if (a == b) return false;
    int pa = 0, pb = 0;
    for (int i = 1; i <= a.n(); ++i) {
        pa += a.at(i);
        pb += b.at(i);
        if (pa < pb) return false;
    }
    return true;
}

namespace {
// Prefix-sum comparison on raw vectors of equal length and equal sum.
bool prefix_dominates_strict(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return false;
    int pa = 0, pb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
    }
    return true;
}
}  // namespace

bool dominance_tri(const Composition& a, const Composition& b) {
    if (a.n() != b.n()) return false;
    if (a.size() != b.size()) return false;
    if (a == b) return false;
    const std::vector<int> ap = a.sorted_desc(), bp = b.sorted_desc();
    if (ap == bp) return prefix_dominates_strict(a.entries(), b.entries());
    return prefix_dominates_strict(ap, bp);
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.num_parts())
        throw std::invalid_argument("tableau rows do not match shape");
    const int n = shape_.size();
    pos_.assign(static_cast<size_t>(n), {0, 0});
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int r = 1; r <= shape_.num_parts(); ++r) {
        const auto& row = rows_[static_cast<size_t>(r) - 1];
        if (static_cast<int>(row.size()) != shape_.part(r))
            throw std::invalid_argument("tableau row length mismatch");
        for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
            int e = row[static_cast<size_t>(c) - 1];
            if (e < 1 || e > n || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            seen[static_cast<size_t>(e)] = 1;
            pos_[static_cast<size_t>(e) - 1] = {r, c};
            if (c > 1 && row[static_cast<size_t>(c) - 2] <= e)
                throw std::invalid_argument("tableau rows must strictly decrease");
        }
    }
    kind_ = TableauKind::RSYT;
    for (int r = 2; r <= shape_.num_parts() && kind_ == TableauKind::RSYT; ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            if (entry_at(r - 1, c) <= entry_at(r, c)) {
                kind_ = TableauKind::ReverseRowOrdered;
                break;
            }
}

int Tableau::entry_at(int row, int col) const {
    if (row < 1 || row > shape_.num_parts() || col < 1 || col > shape_.part(row))
        throw std::out_of_range("tableau coordinates outside shape");
    return rows_[static_cast<size_t>(row) - 1][static_cast<size_t>(col) - 1];
}

Tableau Tableau::exchanged(int i) const {
    if (i < 1 || i >= num_entries()) throw std::out_of_range("exchange index out of range");
    auto rows = rows_;
    auto [r1, c1] = pos_[static_cast<size_t>(i) - 1];
    auto [r2, c2] = pos_[static_cast<size_t>(i)];
    rows[static_cast<size_t>(r1) - 1][static_cast<size_t>(c1) - 1] = i + 1;
    rows[static_cast<size_t>(r2) - 1][static_cast<size_t>(c2) - 1] = i;
    return Tableau(shape_, rows);  // validates row order
}

std::string Tableau::to_string() const {
    std::string s;
    for (int r = shape_.num_parts(); r >= 1; --r) {
        for (size_t c = 0; c < rows_[static_cast<size_t>(r) - 1].size(); ++c) {
            if (c) s += ' ';
            s += std::to_string(rows_[static_cast<size_t>(r) - 1][c]);
        }
        if (r > 1) s += '\n';
    }
    return s;
}

std::vector<int> content_vector(const Tableau& s) {
    std::vector<int> ct(static_cast<size_t>(s.num_entries()));
    for (int e = 1; e <= s.num_entries(); ++e)
        ct[static_cast<size_t>(e) - 1] = s.col_of(e) - s.row_of(e);
    return ct;
}

int inversions(const Tableau& s) {
    int inv = 0;
    for (int i = 1; i <= s.num_entries(); ++i)
        for (int j = i + 1; j <= s.num_entries(); ++j)
            if (s.row_of(i) < s.row_of(j)) ++inv;
    return inv;
}

std::pair<Tableau, Tableau> extremal_tableaux(const Partition& shape) {
    const int n = shape.size();
    const int nrows = shape.num_parts();
    std::vector<std::vector<int>> rows0(static_cast<size_t>(nrows)),
        rows1(static_cast<size_t>(nrows));
    for (int r = 1; r <= nrows; ++r) {
        rows0[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(shape.part(r)));
        rows1[static_cast<size_t>(r) - 1].resize(static_cast<size_t>(shape.part(r)));
    }
    int v = n;
    for (int c = 1; c <= shape.part(1); ++c)
        for (int r = 1; r <= nrows && shape.part(r) >= c; ++r)
            rows0[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = v--;
    v = n;
    for (int r = 1; r <= nrows; ++r)
        for (int c = 1; c <= shape.part(r); ++c)
            rows1[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = v--;
    return {Tableau(shape, rows0), Tableau(shape, rows1)};
}

bool step_is_legal(const Tableau& s, int i) {
    if (i < 1 || i >= s.num_entries()) return false;
    return s.row_of(i) < s.row_of(i + 1) && s.col_of(i) > s.col_of(i + 1);
}

Tableau step(const Tableau& s, int i) {
    if (!step_is_legal(s, i))
        throw std::invalid_argument("illegal step at i=" + std::to_string(i));
    return s.exchanged(i);
}

int hook_length_count_check(const Partition& shape) {
    // n! / prod(hooks), for cross-checking enumeration counts at small sizes.
    const int n = shape.size();
    long long num = 1;
    std::vector<long long> hooks;
    std::vector<int> colh(static_cast<size_t>(shape.part(1)), 0);
    for (int r = shape.num_parts(); r >= 1; --r)
        for (int c = 1; c <= shape.part(r); ++c) colh[static_cast<size_t>(c) - 1]++;
    for (int r = 1; r <= shape.num_parts(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            int arm = shape.part(r) - c;
            int leg = 0;
            for (int rr = r + 1; rr <= shape.num_parts() && shape.part(rr) >= c; ++rr) ++leg;
            hooks.push_back(arm + leg + 1);
        }
    long long den = 1;
    for (long long h : hooks) den *= h;
    for (int k = 2; k <= n; ++k) num *= k;
    return static_cast<int>(num / den);
}

namespace {
void enumerate_rec(const Partition& shape, std::vector<std::vector<int>>& rows,
                   std::vector<int>& colfill, int value, int n,
                   std::vector<Tableau>& out) {
    // Entries are placed from n down to 1; value v may go at the end of any
    // row whose length is below the shape and whose column support allows it.
    if (value == 0) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 1; r <= shape.num_parts(); ++r) {
        int c = static_cast<int>(rows[static_cast<size_t>(r) - 1].size()) + 1;
        if (c > shape.part(r)) continue;
        if (colfill[static_cast<size_t>(c) - 1] != r - 1) continue;  // cell below not yet filled
        rows[static_cast<size_t>(r) - 1].push_back(value);
        colfill[static_cast<size_t>(c) - 1] = r;
        enumerate_rec(shape, rows, colfill, value - 1, n, out);
        rows[static_cast<size_t>(r) - 1].pop_back();
        colfill[static_cast<size_t>(c) - 1] = r - 1;
    }
}
}  // namespace

std::vector<Tableau> enumerate_rsyt(const Partition& shape, int cell_cap) {
    if (shape.size() > cell_cap)
        throw std::invalid_argument("enumerate_rsyt: shape exceeds the cell cap");
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.num_parts()));
    std::vector<int> colfill(static_cast<size_t>(std::max(shape.part(1), 1)), 0);
    std::vector<Tableau> out;
    enumerate_rec(shape, rows, colfill, shape.size(), shape.size(), out);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        int ia = inversions(a), ib = inversions(b);
        if (ia != ib) return ia > ib;
        return a.rows() < b.rows();  // bottom-to-top row reading word
    });
    return out;
}

}  // namespace nsmac
