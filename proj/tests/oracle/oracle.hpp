#pragma once

// Slow reference implementations for differential tests.  Nothing here
// calls into the library's search or verification code; the library types
// appear only at the boundary so results can be handed to the checks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "heffter/core.hpp"
#include "heffter/errors.hpp"

namespace oracle {

struct SearchBudget {
    std::uint64_t node_limit = 50'000'000;
    double time_limit = 30.0;  ///< seconds
};

/// All-pairs comparison of the prefix sums mod M.
inline bool naive_distinct_partial_sums(const std::vector<long long>& entries, long long modulus) {
    std::vector<long long> sums;
    long long acc = 0;
    for (long long e : entries) {
        acc = ((acc + e) % modulus + modulus) % modulus;
        sums.push_back(acc);
    }
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i + 1; j < sums.size(); ++j)
            if (sums[i] == sums[j]) return false;
    return true;
}

/// Cycle type (descending) of x -> b(a(x)).
inline std::vector<std::size_t> naive_compose_cycles(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = a.size();
    std::vector<int> c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = b[static_cast<std::size_t>(a[x])];
    std::vector<bool> done(n, false);
    std::vector<std::size_t> lengths;
    for (std::size_t s = 0; s < n; ++s) {
        if (done[s]) continue;
        std::size_t len = 0;
        for (std::size_t x = s; !done[x]; x = static_cast<std::size_t>(c[x])) {
            done[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

/// Row and column successor maps of an ordering scheme as index
/// permutations over the filled cells in storage order.
template <class Scheme>
std::pair<std::vector<int>, std::vector<int>> scheme_permutations(const heffter::SparseSquareArray& a,
                                                                  const Scheme& s) {
    std::map<heffter::Cell, int> id;
    for (const auto& [c, v] : a.entries()) id.emplace(c, static_cast<int>(id.size()));
    std::vector<int> row(id.size()), col(id.size());
    auto fill = [&](const auto& orders, std::vector<int>& out) {
        for (const auto& o : orders)
            for (std::size_t j = 0; j < o.size(); ++j)
                out[static_cast<std::size_t>(id.at(o[j]))] = id.at(o[(j + 1) % o.size()]);
    };
    fill(s.row_orders, row);
    fill(s.col_orders, col);
    return {row, col};
}

namespace detail {

class HeffterSearch {
public:
    HeffterSearch(int n, int k, SearchBudget budget)
        : n_(n), k_(k), m_(2LL * n * k + 1), budget_(budget), grid_(n, std::vector<long long>(n, 0)),
          filled_(n, std::vector<bool>(n, false)), used_(static_cast<std::size_t>(n * k + 1), false),
          start_(std::chrono::steady_clock::now()) {}

    std::optional<std::vector<std::vector<long long>>> run() {
        if (choose_pattern(0)) return grid_;
        return std::nullopt;
    }

private:
    void tick() {
        if (++nodes_ > budget_.node_limit) throw heffter::BudgetExceeded("oracle node budget exhausted");
        if ((nodes_ & 0xfff) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > budget_.time_limit) throw heffter::BudgetExceeded("oracle time budget exhausted");
        }
    }

    // Rows pick k columns each; then the signed values are placed.
    bool choose_pattern(int row) {
        if (row == n_) {
            for (int c = 0; c < n_; ++c) {
                int cnt = 0;
                for (int r = 0; r < n_; ++r) cnt += filled_[r][c];
                if (cnt != k_) return false;
            }
            cells_.clear();
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c)
                    if (filled_[r][c]) cells_.push_back({r, c});
            return place(0);
        }
        std::vector<bool> pick(static_cast<std::size_t>(n_), false);
        std::fill(pick.begin(), pick.begin() + k_, true);
        do {
            tick();
            for (int c = 0; c < n_; ++c) filled_[row][c] = pick[static_cast<std::size_t>(c)];
            if (choose_pattern(row + 1)) return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        for (int c = 0; c < n_; ++c) filled_[row][c] = false;
        return false;
    }

    bool line_done_ok(int r, int c) {
        // Row r is complete when no filled cell to the right of c remains.
        bool row_last = true, col_last = true;
        for (int j = c + 1; j < n_; ++j) row_last = row_last && !filled_[r][j];
        for (int i = r + 1; i < n_; ++i) col_last = col_last && !filled_[i][c];
        if (row_last) {
            long long s = 0;
            for (int j = 0; j < n_; ++j) s += grid_[r][j];
            if (s % m_ != 0) return false;
        }
        if (col_last) {
            long long s = 0;
            for (int i = 0; i < n_; ++i) s += grid_[i][c];
            if (s % m_ != 0) return false;
        }
        return true;
    }

    bool place(std::size_t idx) {
        if (idx == cells_.size()) return true;
        auto [r, c] = cells_[idx];
        for (int x = 1; x <= n_ * k_; ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            for (int sign : {1, -1}) {
                tick();
                grid_[r][c] = sign * x;
                used_[static_cast<std::size_t>(x)] = true;
                if (line_done_ok(r, c) && place(idx + 1)) return true;
                used_[static_cast<std::size_t>(x)] = false;
                grid_[r][c] = 0;
            }
        }
        return false;
    }

    int n_, k_;
    long long m_;
    SearchBudget budget_;
    std::vector<std::vector<long long>> grid_;
    std::vector<std::vector<bool>> filled_;
    std::vector<bool> used_;
    std::vector<std::pair<int, int>> cells_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Exhaustive search for an H(n; k), 3 <= k <= n <= 5.  Returns nullopt only
/// after the whole space was searched; throws BudgetExceeded otherwise.
inline std::optional<heffter::SparseSquareArray> brute_force_heffter(int n, int k, SearchBudget budget = {}) {
    if (k < 3 || k > n || n > 5) throw heffter::ParameterError("oracle search needs 3 <= k <= n <= 5");
    auto grid = detail::HeffterSearch(n, k, budget).run();
    if (!grid) return std::nullopt;
    heffter::SparseSquareArray a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if ((*grid)[r][c] != 0) a.set({r, c}, (*grid)[r][c]);
    return a;
}

}  // namespace oracle
