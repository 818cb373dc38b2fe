#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "heffter/errors.hpp"

namespace heffter {

using Entry = std::int64_t;

/// Entries are bounded well inside int64 so that line sums of up to n
/// entries never overflow.
inline constexpr Entry kMaxEntryMagnitude = Entry{1} << 40;

/// Canonical residue of v in [0, m).
constexpr Entry residue(Entry v, Entry m) {
    Entry r = v % m;
    return r < 0 ? r + m : r;
}

constexpr int wrap(long long i, int n) {
    return static_cast<int>(residue(i, n));
}

constexpr long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Cell {
    int row = 0;
    int col = 0;

    constexpr Cell reduced(int n) const { return {wrap(row, n), wrap(col, n)}; }
    constexpr auto operator<=>(const Cell&) const = default;
};

/// Diagonal index of a cell: D_d holds the cells (i + d, i).
constexpr int diagonal_of(Cell c, int n) { return wrap(c.row - c.col, n); }

/// n x n partially filled array of nonzero integers.  Indices are reduced
/// mod n on every access.
class SparseSquareArray {
public:
    explicit SparseSquareArray(int n) : n_(n) {
        if (n <= 0) throw ParameterError("array side must be positive");
    }

    int n() const { return n_; }
    std::size_t filled() const { return entries_.size(); }
    const std::map<Cell, Entry>& entries() const { return entries_; }

    bool contains(Cell c) const { return entries_.contains(c.reduced(n_)); }

    std::optional<Entry> at(Cell c) const {
        auto it = entries_.find(c.reduced(n_));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// Value of a filled cell; throws on an empty one.
    Entry value(Cell c) const {
        auto it = entries_.find(c.reduced(n_));
        if (it == entries_.end()) throw ParameterError("cell is empty");
        return it->second;
    }

    /// Stored value or 0 for an empty cell.
    Entry value_or_zero(Cell c) const { return at(c).value_or(0); }

    void set(Cell c, Entry v) {
        check_value(v);
        entries_[c.reduced(n_)] = v;
    }

    /// Inserts into an empty cell; returns false (and leaves the array
    /// unchanged) when the cell is already filled.
    bool try_insert(Cell c, Entry v) {
        check_value(v);
        return entries_.emplace(c.reduced(n_), v).second;
    }

    void erase(Cell c) { entries_.erase(c.reduced(n_)); }

    /// Filled cells of row r, left to right.
    std::vector<Cell> row_cells(int r) const {
        r = wrap(r, n_);
        std::vector<Cell> out;
        for (auto it = entries_.lower_bound({r, 0}); it != entries_.end() && it->first.row == r; ++it)
            out.push_back(it->first);
        return out;
    }

    /// Filled cells of column c, top to bottom.
    std::vector<Cell> col_cells(int c) const {
        c = wrap(c, n_);
        std::vector<Cell> out;
        for (int r = 0; r < n_; ++r)
            if (entries_.contains({r, c})) out.push_back({r, c});
        return out;
    }

    SparseSquareArray transposed() const {
        SparseSquareArray t(n_);
        for (const auto& [c, v] : entries_) t.entries_.emplace(Cell{c.col, c.row}, v);
        return t;
    }

    SparseSquareArray negated() const {
        SparseSquareArray t(n_);
        for (const auto& [c, v] : entries_) t.entries_.emplace(c, -v);
        return t;
    }

    /// Sorted absolute values of all entries.
    std::vector<Entry> support() const {
        std::vector<Entry> s;
        s.reserve(entries_.size());
        for (const auto& [c, v] : entries_) s.push_back(v < 0 ? -v : v);
        std::sort(s.begin(), s.end());
        return s;
    }

    bool operator==(const SparseSquareArray&) const = default;

private:
    static void check_value(Entry v) {
        if (v == 0) throw ParameterError("array entries must be nonzero");
        if (v > kMaxEntryMagnitude || v < -kMaxEntryMagnitude)
            throw ParameterError("array entry magnitude out of range");
    }

    int n_;
    std::map<Cell, Entry> entries_;
};

/// The n cells (i + d, i) of diagonal D_d, in order of column index.
inline std::vector<Cell> diagonal_cells(int n, int d) {
    if (n <= 0 || d < 0 || d >= n) throw ParameterError("diagonal index out of range");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cells.push_back({wrap(i + d, n), i});
    return cells;
}

/// A set of occupied diagonals g(1) < ... < g(k) and their cyclic gaps.
/// gaps[0] is the wrap gap g(1) - g(k) mod n; gaps[h] = g(h+1) - g(h).
struct DiagonalSet {
    int n = 0;
    std::vector<int> indices;
    std::vector<int> gaps;
};

inline DiagonalSet gaps_of(int n, std::vector<int> indices) {
    if (n <= 0) throw ParameterError("array side must be positive");
    if (indices.empty()) throw ParameterError("diagonal list is empty");
    for (std::size_t h = 0; h < indices.size(); ++h) {
        if (indices[h] < 0 || indices[h] >= n) throw ParameterError("diagonal index out of range");
        if (h > 0 && indices[h] <= indices[h - 1])
            throw ParameterError("diagonal indices must be strictly increasing");
    }
    DiagonalSet ds{n, std::move(indices), {}};
    const auto k = ds.indices.size();
    ds.gaps.resize(k);
    ds.gaps[0] = wrap(ds.indices[0] - ds.indices[k - 1], n);
    for (std::size_t h = 1; h < k; ++h) ds.gaps[h] = ds.indices[h] - ds.indices[h - 1];
    return ds;
}

/// Occupied diagonals of an array whose filled cells are a union of
/// complete diagonals; nullopt when some diagonal is only partly filled.
inline std::optional<std::vector<int>> occupied_diagonals(const SparseSquareArray& a) {
    const int n = a.n();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& [c, v] : a.entries()) ++count[static_cast<std::size_t>(diagonal_of(c, n))];
    std::vector<int> out;
    for (int d = 0; d < n; ++d) {
        if (count[static_cast<std::size_t>(d)] == n) out.push_back(d);
        else if (count[static_cast<std::size_t>(d)] != 0) return std::nullopt;
    }
    return out;
}

enum class LineKind { Row, Col };

struct LineRef {
    LineKind kind = LineKind::Row;
    int index = 0;

    std::string label() const {
        return std::string(kind == LineKind::Row ? "row " : "column ") + std::to_string(index);
    }
    auto operator<=>(const LineRef&) const = default;
};

inline std::vector<Cell> line_cells(const SparseSquareArray& a, LineRef line) {
    return line.kind == LineKind::Row ? a.row_cells(line.index) : a.col_cells(line.index);
}

/// Running sums of a line's entries along an ordering, as residues.
struct PartialSumProfile {
    LineRef line;
    std::vector<Entry> sums;
    Entry modulus = 1;

    /// Positions (i < j) of the first repeated residue, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_repeat() const {
        std::map<Entry, std::size_t> seen;
        for (std::size_t j = 0; j < sums.size(); ++j) {
            auto [it, fresh] = seen.emplace(sums[j], j);
            if (!fresh) return std::pair{it->second, j};
        }
        return std::nullopt;
    }

    bool distinct() const { return !first_repeat().has_value(); }
};

inline PartialSumProfile partial_sums(const SparseSquareArray& a, LineRef line,
                                      std::span<const Cell> order, Entry modulus) {
    if (modulus <= 0) throw ParameterError("modulus must be positive");
    auto expected = line_cells(a, line);
    std::vector<Cell> given;
    given.reserve(order.size());
    for (Cell c : order) {
        Cell r = c.reduced(a.n());
        bool on_line = line.kind == LineKind::Row ? r.row == wrap(line.index, a.n())
                                                  : r.col == wrap(line.index, a.n());
        if (!on_line || !a.contains(r))
            throw ParameterError("ordering of " + line.label() + " visits a cell that is not a filled cell of the line");
        given.push_back(r);
    }
    std::sort(given.begin(), given.end());
    if (given != expected)
        throw ParameterError("ordering of " + line.label() + " is not a permutation of its filled cells");

    PartialSumProfile prof{line, {}, modulus};
    prof.sums.reserve(order.size());
    Entry acc = 0;
    for (Cell c : order) {
        acc = residue(acc + a.value(c), modulus);
        prof.sums.push_back(acc);
    }
    return prof;
}

}  // namespace heffter
