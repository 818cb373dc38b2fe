#pragma once

// Line-by-line identities and bounds satisfied by support-shifted arrays,
// phrased in terms of diagonal-indexed prefix sums.  For row a, d_x is the
// entry of diagonal D_x in that row (cell (a, a-x)); for column a it is the
// entry at (a+x, a).  Missing cells count as 0.

#include <functional>
#include <string>
#include <vector>

#include "heffter/core.hpp"
#include "heffter/params.hpp"
#include "heffter/verify.hpp"

namespace heffter {

inline Entry row_diag(const SparseSquareArray& a, int row, int x) { return a.value_or_zero({row, row - x}); }
inline Entry col_diag(const SparseSquareArray& a, int col, int x) { return a.value_or_zero({col + x, col}); }

inline Entry row_prefix(const SparseSquareArray& a, int row, int x) {
    Entry s = 0;
    for (int i = 0; i <= x; ++i) s += row_diag(a, row, i);
    return s;
}

inline Entry col_prefix(const SparseSquareArray& a, int col, int x) {
    Entry s = 0;
    for (int i = 0; i <= x; ++i) s += col_diag(a, col, i);
    return s;
}

namespace detail {

// Accumulates one named check; the first failing line is kept as detail.
class LineCheck {
public:
    explicit LineCheck(std::string name) : name_(std::move(name)) {}
    void expect(bool ok, const std::function<std::string()>& what) {
        if (!ok && detail_.empty()) detail_ = what();
    }
    void emit(VerificationReport& rep) const { rep.add(name_, detail_.empty(), detail_); }

private:
    std::string name_;
    std::string detail_;
};

inline std::string at_line(const char* kind, int a, const char* what, int idx) {
    return std::string(kind) + " " + std::to_string(a) + ", " + what + "=" + std::to_string(idx);
}

}  // namespace detail

/// Coupled-diagonal sums: in every row d_{2i}+d_{2i+1} = 1,
/// d_{2p+2j+1}+d_{2p+2j+2} = -1, d_{2p}+d_{2p+alpha} = -1; in columns
/// a != 0 the negatives; in column 0 the values 2n-1, -2n+1, -2n+1.
inline VerificationReport check_pair_sums(const SparseSquareArray& a, const Params& prm) {
    VerificationReport rep;
    const int n = prm.n, p = prm.p, al = prm.alpha;
    const Entry wide = 2 * Entry{n} - 1;
    detail::LineCheck rows("pair_sums_rows"), cols("pair_sums_columns"), col0("pair_sums_column0");
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < p; ++i)
            rows.expect(row_diag(a, r, 2 * i) + row_diag(a, r, 2 * i + 1) == 1,
                        [&] { return detail::at_line("row", r, "i", i); });
        for (int j = 0; j + 1 < p; ++j)
            rows.expect(row_diag(a, r, 2 * p + 2 * j + 1) + row_diag(a, r, 2 * p + 2 * j + 2) == -1,
                        [&] { return detail::at_line("row", r, "j", j); });
        rows.expect(row_diag(a, r, 2 * p) + row_diag(a, r, 2 * p + al) == -1,
                    [&] { return detail::at_line("row", r, "alpha", al); });
    }
    for (int c = 0; c < n; ++c) {
        auto& chk = c == 0 ? col0 : cols;
        const Entry s_i = c == 0 ? wide : -1, s_j = c == 0 ? -wide : 1, s_a = c == 0 ? -wide : 1;
        for (int i = 0; i < p; ++i)
            chk.expect(col_diag(a, c, 2 * i) + col_diag(a, c, 2 * i + 1) == s_i,
                       [&] { return detail::at_line("column", c, "i", i); });
        for (int j = 0; j + 1 < p; ++j)
            chk.expect(col_diag(a, c, 2 * p + 2 * j + 1) + col_diag(a, c, 2 * p + 2 * j + 2) == s_j,
                       [&] { return detail::at_line("column", c, "j", j); });
        chk.expect(col_diag(a, c, 2 * p) + col_diag(a, c, 2 * p + al) == s_a,
                   [&] { return detail::at_line("column", c, "alpha", al); });
    }
    rows.emit(rep);
    cols.emit(rep);
    col0.emit(rep);
    return rep;
}

/// Prefix sums of a permuted array agree with the identity-map array at
/// x = 2i+1, 2p+2j+2, 2p and 2p+alpha on every row and column.
inline VerificationReport check_identity_agreement(const SparseSquareArray& permuted,
                                                   const SparseSquareArray& identity, const Params& prm) {
    VerificationReport rep;
    const int p = prm.p;
    std::vector<int> xs;
    for (int i = 0; i < p; ++i) xs.push_back(2 * i + 1);
    for (int j = 0; j + 1 < p; ++j) xs.push_back(2 * p + 2 * j + 2);
    xs.push_back(2 * p);
    xs.push_back(2 * p + prm.alpha);
    detail::LineCheck chk("identity_prefix_agreement");
    for (int a = 0; a < prm.n; ++a)
        for (int x : xs) {
            chk.expect(row_prefix(permuted, a, x) == row_prefix(identity, a, x),
                       [&] { return detail::at_line("row", a, "x", x); });
            chk.expect(col_prefix(permuted, a, x) == col_prefix(identity, a, x),
                       [&] { return detail::at_line("column", a, "x", x); });
        }
    chk.emit(rep);
    return rep;
}

/// Bounds on the prefix sums that the map permutation can move:
///   rows:        (4p+g)n > S(2i) >= gn+2
///   columns a>0: (4p+g)n > S(2i) >= gn+2-i > 0
///   rows:        0 > -n > S(2p+2j+1) > S(2p) + (g+1)n
///   columns a>0: S(2p-1) > S(2p+2j+1) > S(2p) + (g+2)n > S(2p) + p
///   rows:        -(4p+g)n < S(2p) = d_{2p} + p < -(4p+g-2)n + p - 1,
///                S(4p-2) = d_{2p} + 1
///   columns a>0: -(4p+g)n - p <= S(2p) = d_{2p} - p <= -(4p+g-2)n - p - 2
inline VerificationReport check_shifted_bounds(const SparseSquareArray& a, const Params& prm) {
    VerificationReport rep;
    const Entry n = prm.n, p = prm.p, g = prm.gamma;
    const int ni = prm.n, pi = prm.p;
    detail::LineCheck even_rows("even_prefix_range_rows"), even_cols("even_prefix_range_columns"),
        odd_rows("odd_j_prefix_range_rows"), odd_cols("odd_j_prefix_range_columns"),
        mid_rows("middle_prefix_bounds_rows"), mid_cols("middle_prefix_bounds_columns");
    for (int r = 0; r < ni; ++r) {
        for (int i = 0; i < pi; ++i) {
            Entry s = row_prefix(a, r, 2 * i);
            even_rows.expect((4 * p + g) * n > s && s >= g * n + 2, [&] { return detail::at_line("row", r, "i", i); });
        }
        const Entry s2p = row_prefix(a, r, 2 * pi);
        for (int j = 0; j + 1 < pi; ++j) {
            Entry s = row_prefix(a, r, 2 * pi + 2 * j + 1);
            odd_rows.expect(-n > s && s > s2p + (g + 1) * n, [&] { return detail::at_line("row", r, "j", j); });
        }
        const Entry d2p = row_diag(a, r, 2 * pi);
        mid_rows.expect(-(4 * p + g) * n < s2p && s2p == d2p + p && s2p < -(4 * p + g - 2) * n + p - 1 &&
                            row_prefix(a, r, 4 * pi - 2) == d2p + 1,
                        [&] { return "row " + std::to_string(r); });
    }
    for (int c = 1; c < ni; ++c) {
        for (int i = 0; i < pi; ++i) {
            Entry s = col_prefix(a, c, 2 * i);
            even_cols.expect((4 * p + g) * n > s && s >= g * n + 2 - i && g * n + 2 - i > 0,
                             [&] { return detail::at_line("column", c, "i", i); });
        }
        const Entry s2p = col_prefix(a, c, 2 * pi);
        const Entry s2pm1 = col_prefix(a, c, 2 * pi - 1);
        for (int j = 0; j + 1 < pi; ++j) {
            Entry s = col_prefix(a, c, 2 * pi + 2 * j + 1);
            odd_cols.expect(s2pm1 > s && s > s2p + (g + 2) * n && s2p + (g + 2) * n > s2p + p,
                            [&] { return detail::at_line("column", c, "j", j); });
        }
        const Entry d2p = col_diag(a, c, 2 * pi);
        mid_cols.expect(-(4 * p + g) * n - p <= s2p && s2p == d2p - p && s2p <= -(4 * p + g - 2) * n - p - 2,
                        [&] { return "column " + std::to_string(c); });
    }
    for (auto* chk : {&even_rows, &even_cols, &odd_rows, &odd_cols, &mid_rows, &mid_cols}) chk->emit(rep);
    return rep;
}

/// Monotone chains of the identity-map array (nonzero columns only):
///   rows:    S(4p-2) < S(4p-4) < ... < S(2p) < -(4p+g-3)n < 0
///            0 < S(1) < S(3) < ... < S(2p-1) < gn
///   columns: -(4p+g+1)n < S(2p) < S(2p+2) < ... < S(4p-2) < S(2p)+p < -n
///            -n < S(2p-1) < ... < S(3) < S(1) < 0
inline VerificationReport check_identity_chains(const SparseSquareArray& a, const Params& prm) {
    VerificationReport rep;
    const Entry n = prm.n, p = prm.p, g = prm.gamma;
    const int ni = prm.n, pi = prm.p;
    detail::LineCheck rows("identity_chains_rows"), cols("identity_chains_columns");
    for (int r = 0; r < ni; ++r) {
        bool ok = true;
        for (int x = 4 * pi - 2; x > 2 * pi; x -= 2) ok = ok && row_prefix(a, r, x) < row_prefix(a, r, x - 2);
        ok = ok && row_prefix(a, r, 2 * pi) < -(4 * p + g - 3) * n;
        ok = ok && 0 < row_prefix(a, r, 1);
        for (int x = 1; x + 2 <= 2 * pi - 1; x += 2) ok = ok && row_prefix(a, r, x) < row_prefix(a, r, x + 2);
        ok = ok && row_prefix(a, r, 2 * pi - 1) < g * n;
        rows.expect(ok, [&] { return "row " + std::to_string(r); });
    }
    for (int c = 1; c < ni; ++c) {
        bool ok = -(4 * p + g + 1) * n < col_prefix(a, c, 2 * pi);
        for (int x = 2 * pi; x + 2 <= 4 * pi - 2; x += 2) ok = ok && col_prefix(a, c, x) < col_prefix(a, c, x + 2);
        const Entry top = col_prefix(a, c, 2 * pi) + p;
        ok = ok && col_prefix(a, c, 4 * pi - 2) < top && top < -n;
        ok = ok && -n < col_prefix(a, c, 2 * pi - 1);
        for (int x = 2 * pi - 1; x - 2 >= 1; x -= 2) ok = ok && col_prefix(a, c, x) < col_prefix(a, c, x - 2);
        ok = ok && col_prefix(a, c, 1) < 0;
        cols.expect(ok, [&] { return "column " + std::to_string(c); });
    }
    rows.emit(rep);
    cols.emit(rep);
    return rep;
}

}  // namespace heffter
