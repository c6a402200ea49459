#ifndef NSMAC_COMBINAT_HPP
#define NSMAC_COMBINAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsmac {

// Compositions are fixed-length vectors of nonnegative integers; trailing
// zeros are significant and equality requires equal ambient length N.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    static Composition parse(const std::string& csv);  // "2,0,0,0"

    int n() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_.at(static_cast<size_t>(i) - 1); }  // 1-based
    const std::vector<int>& entries() const { return entries_; }

    int size() const;                    // |alpha|
    int length() const;                  // l(alpha): index of last nonzero entry
    bool is_weakly_decreasing() const;
    bool is_weakly_increasing() const;

    Composition padded(int n) const;     // adjoin trailing zeros up to length n
    Composition swapped(int i) const;    // alpha s_i, 1 <= i <= N-1
    std::vector<int> sorted_desc() const;
    std::vector<int> sorted_asc() const;

    bool operator==(const Composition& o) const { return entries_ == o.entries_; }
    bool operator!=(const Composition& o) const { return entries_ != o.entries_; }
    bool operator<(const Composition& o) const { return entries_ < o.entries_; }

    std::string to_string() const;       // comma-separated

private:
    std::vector<int> entries_;
};

// Weakly decreasing; stored with trailing zeros dropped unless an ambient
// length is requested explicitly.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int num_parts() const { return static_cast<int>(parts_.size()); }  // l(tau)
    int part(int i) const;               // 1-based, 0 beyond the last part
    const std::vector<int>& parts() const { return parts_; }
    int size() const;                    // |tau|

    Composition as_composition(int n) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// r_alpha(i) = #{k : alpha_k > alpha_i} + #{k <= i : alpha_k = alpha_i};
// always a permutation of 1..N, and the identity exactly on partitions.
class RankFunction {
public:
    RankFunction() = default;
    explicit RankFunction(std::vector<int> values);

    int n() const { return static_cast<int>(values_.size()); }
    int at(int i) const { return values_.at(static_cast<size_t>(i) - 1); }
    const std::vector<int>& values() const { return values_; }

    bool is_identity() const;
    bool operator==(const RankFunction& o) const { return values_ == o.values_; }

private:
    std::vector<int> values_;
};

enum class TableauKind { RSYT, ReverseRowOrdered };

// Fillings of a Ferrers diagram in French convention: rows counted from the
// bottom, columns from the left.  RSYT entries decrease along rows and up
// columns; reverse row-ordered fillings only require decreasing rows.
class Tableau {
public:
    Tableau() = default;
    // rows[r-1] lists row r left to right, bottom row first.
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int num_entries() const { return shape_.size(); }
    TableauKind kind() const { return kind_; }

    int row_of(int entry) const { return pos_.at(static_cast<size_t>(entry) - 1).first; }
    int col_of(int entry) const { return pos_.at(static_cast<size_t>(entry) - 1).second; }
    int entry_at(int row, int col) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool is_rsyt() const { return kind_ == TableauKind::RSYT; }

    // Exchanges entries i and i+1 unconditionally; fails if the result is not
    // reverse row-ordered.
    Tableau exchanged(int i) const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return rows_ != o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> pos_;  // entry -> (row, col)
    TableauKind kind_ = TableauKind::RSYT;
};

RankFunction rank_function(const Composition& a);

// The two orders: succ is the prefix-sum order on equal-size compositions,
// tri refines it through the sorted rearrangements.  Both are strict.
bool dominance_succ(const Composition& a, const Composition& b);
bool dominance_tri(const Composition& a, const Composition& b);

// All RSYT of the shape, ordered by descending inv and then by the
// bottom-to-top row reading word.  Guarded by a cell cap.
std::vector<Tableau> enumerate_rsyt(const Partition& shape, int cell_cap = 20);

std::vector<int> content_vector(const Tableau& s);  // index i-1 holds CT[i]
int inversions(const Tableau& s);

// (S0, S1): column-by-column and row-by-row fills with N, N-1, ..., 1.
std::pair<Tableau, Tableau> extremal_tableaux(const Partition& shape);

// S^(i): exchange i and i+1 under row_S[i] < row_S[i+1], col_S[i] > col_S[i+1].
Tableau step(const Tableau& s, int i);
bool step_is_legal(const Tableau& s, int i);

int hook_length_count_check(const Partition& shape);  // #SYT via hook lengths

}  // namespace nsmac

#endif
