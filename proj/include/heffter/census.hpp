#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heffter/construct.hpp"
#include "heffter/core.hpp"
#include "heffter/parallel.hpp"
#include "heffter/params.hpp"

namespace heffter {

using MapPair = std::pair<std::vector<int>, std::vector<int>>;

/// Largest p whose map pairs are enumerated; p = 8 already has about
/// 3.6 million candidate pairs.
inline constexpr int kMaxEnumeratedP = 8;

/// Every (f_I, f_J) usable in the merged array, in lexicographic order.
inline std::vector<MapPair> enumerate_maps(int p) {
    if (p < 1) throw ParameterError("p must be positive");
    if (p > kMaxEnumeratedP) throw GuardrailError("map enumeration is limited to p <= " + std::to_string(kMaxEnumeratedP));
    std::vector<MapPair> out;
    auto fi = identity_map(p);
    do {
        if (fi[0] != 0) break;
        auto fj = identity_map(p - 1);
        do {
            if (!merged_maps_problem(p, fi, fj)) out.emplace_back(fi, fj);
        } while (std::next_permutation(fj.begin(), fj.end()));
    } while (std::next_permutation(fi.begin(), fi.end()));
    return out;
}

/// D(m) = (m-1)(D(m-1) + D(m-2)), D(0) = 1, D(1) = 0.  Exact for m <= 20.
inline std::uint64_t derangements(int m) {
    if (m < 0) throw ParameterError("derangements need m >= 0");
    if (m > 20) throw ParameterError("D(m) overflows 64 bits for m > 20");
    std::uint64_t a = 1, b = 0;  // D(0), D(1)
    if (m == 0) return a;
    for (int i = 2; i <= m; ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(i - 1) * (a + b);
        a = b;
        b = c;
    }
    return b;
}

/// (n-2) D(p-2)^2.  D is undefined below 0, so p < 2 gives 0.
inline std::uint64_t derangement_bound(int n, int p) {
    if (p < 2) return 0;
    const std::uint64_t d = derangements(p - 2);
    const auto lim = std::numeric_limits<std::uint64_t>::max();
    if (d != 0 && d > lim / d) throw ParameterError("bound overflows 64 bits");
    const std::uint64_t d2 = d * d;
    const auto m = static_cast<std::uint64_t>(std::max(n - 2, 0));
    if (d2 != 0 && m > lim / d2) throw ParameterError("bound overflows 64 bits");
    return m * d2;
}

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool operator==(const Rational&) const = default;
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// distinct / (n k) in lowest terms.
inline Rational embedding_lower_bound(std::uint64_t distinct, int n, int k) {
    if (n <= 0 || k <= 0) throw ParameterError("n and k must be positive");
    const std::uint64_t den = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k);
    const std::uint64_t g = std::gcd(distinct, den);
    return distinct == 0 ? Rational{0, 1} : Rational{distinct / g, den / g};
}

/// b = witness(a): transpose if asked, then negate if asked, then move
/// cell (i, j) to (row_perm[i], col_perm[j]).
struct EquivalenceWitness {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    bool negate = false;
    bool transpose = false;

    SparseSquareArray apply(const SparseSquareArray& a) const {
        const int n = a.n();
        if (!is_bijection(row_perm, n) || !is_bijection(col_perm, n))
            throw ParameterError("witness permutations must be bijections on [n]");
        SparseSquareArray t = transpose ? a.transposed() : a;
        if (negate) t = t.negated();
        SparseSquareArray out(n);
        for (const auto& [c, v] : t.entries())
            out.set({row_perm[static_cast<std::size_t>(c.row)], col_perm[static_cast<std::size_t>(c.col)]}, v);
        return out;
    }
};

namespace detail {

// Finds row/column permutations sending t onto b exactly.  Rows of t are
// matched in order against rows of b with the same sorted value list;
// columns are fixed as soon as a filled cell forces them.
class PermutationMatcher {
public:
    PermutationMatcher(const SparseSquareArray& t, const SparseSquareArray& b)
        : t_(t), b_(b), n_(t.n()), rho_(n_, -1), tau_(n_, -1), row_used_(n_, 0), col_used_(n_, 0) {
        for (int i = 0; i < n_; ++i) {
            t_rows_.push_back(t.row_cells(i));
            b_rows_.push_back(b.row_cells(i));
            t_rsig_.push_back(row_signature(t, t_rows_.back()));
            b_rsig_.push_back(row_signature(b, b_rows_.back()));
            t_csig_.push_back(row_signature(t, t.col_cells(i)));
            b_csig_.push_back(row_signature(b, b.col_cells(i)));
        }
    }

    std::optional<std::pair<std::vector<int>, std::vector<int>>> run() {
        if (t_.filled() != b_.filled()) return std::nullopt;
        auto ts = t_rsig_, bs = b_rsig_;
        std::sort(ts.begin(), ts.end());
        std::sort(bs.begin(), bs.end());
        if (ts != bs) return std::nullopt;
        if (!match_row(0)) return std::nullopt;
        // Columns never touched by a filled cell take the unused targets.
        int next = 0;
        for (int j = 0; j < n_; ++j) {
            if (tau_[static_cast<std::size_t>(j)] >= 0) continue;
            while (col_used_[static_cast<std::size_t>(next)]) ++next;
            tau_[static_cast<std::size_t>(j)] = next;
            col_used_[static_cast<std::size_t>(next)] = 1;
        }
        return std::pair{rho_, tau_};
    }

private:
    static std::vector<Entry> row_signature(const SparseSquareArray& a, const std::vector<Cell>& cells) {
        std::vector<Entry> s;
        for (Cell c : cells) s.push_back(a.value(c));
        std::sort(s.begin(), s.end());
        return s;
    }

    bool match_row(int i) {
        if (i == n_) return true;
        for (int r = 0; r < n_; ++r) {
            if (row_used_[static_cast<std::size_t>(r)] ||
                t_rsig_[static_cast<std::size_t>(i)] != b_rsig_[static_cast<std::size_t>(r)])
                continue;
            row_used_[static_cast<std::size_t>(r)] = 1;
            rho_[static_cast<std::size_t>(i)] = r;
            if (match_cell(i, r, 0)) return true;
            row_used_[static_cast<std::size_t>(r)] = 0;
        }
        rho_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    bool match_cell(int i, int r, std::size_t idx) {
        const auto& cells = t_rows_[static_cast<std::size_t>(i)];
        if (idx == cells.size()) return match_row(i + 1);
        const Cell c = cells[idx];
        const Entry v = t_.value(c);
        const auto j = static_cast<std::size_t>(c.col);
        if (tau_[j] >= 0) {
            return b_.at({r, tau_[j]}) == v && match_cell(i, r, idx + 1);
        }
        for (Cell d : b_rows_[static_cast<std::size_t>(r)]) {
            const auto col = static_cast<std::size_t>(d.col);
            if (col_used_[col] || b_.value(d) != v || t_csig_[j] != b_csig_[col]) continue;
            tau_[j] = d.col;
            col_used_[col] = 1;
            if (match_cell(i, r, idx + 1)) return true;
            tau_[j] = -1;
            col_used_[col] = 0;
        }
        return false;
    }

    const SparseSquareArray& t_;
    const SparseSquareArray& b_;
    int n_;
    std::vector<std::vector<Cell>> t_rows_, b_rows_;
    std::vector<std::vector<Entry>> t_rsig_, b_rsig_, t_csig_, b_csig_;
    std::vector<int> rho_, tau_;
    std::vector<char> row_used_, col_used_;
};

}  // namespace detail

/// A witness taking a to b, or nullopt when none exists.
inline std::optional<EquivalenceWitness> equivalent(const SparseSquareArray& a, const SparseSquareArray& b) {
    if (a.n() != b.n()) throw ParameterError("arrays must have the same side");
    for (bool negate : {false, true})
        for (bool transpose : {false, true}) {
            SparseSquareArray t = transpose ? a.transposed() : a;
            if (negate) t = t.negated();
            if (auto perms = detail::PermutationMatcher(t, b).run())
                return EquivalenceWitness{perms->first, perms->second, negate, transpose};
        }
    return std::nullopt;
}

struct CensusRow {
    std::vector<int> f_I;
    std::vector<int> f_J;
    int shift = 0;
    bool verified = false;
    int class_id = -1;  ///< -1 when the array could not be built
};

struct CensusReport {
    int n = 0, p = 0, alpha = 0;
    std::uint64_t generated = 0;  ///< arrays built and verified
    std::uint64_t distinct = 0;
    /// Shifts passing the exclusion constraint, minimised over map pairs.
    int valid_shifts = 0;
    std::uint64_t bound_paper = 0;
    Rational embedding_bound;
    /// Equivalent pairs found among arrays with different (maps, shift).
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    std::vector<CensusRow> rows;
};

struct CensusOptions {
    /// Use only the first max_pairs map pairs of enumerate_maps.
    std::optional<std::size_t> max_pairs;
    std::uint64_t ladder_seed = kDefaultLadderSeed;
};

/// Builds and verifies the merged array for every map pair and every valid
/// shift of one three-diagonal array, then counts equivalence classes.
inline CensusReport run_census(int n, int p, const CensusOptions& opt = {}) {
    auto maps = enumerate_maps(p);
    if (opt.max_pairs && *opt.max_pairs < maps.size()) maps.resize(*opt.max_pairs);

    CensusReport rep;
    rep.n = n;
    rep.p = p;
    // This validates (n, p) and fixes alpha and the searched L.
    rep.alpha = construct_full(n, p, {std::nullopt, maps.front().first, maps.front().second, std::nullopt,
                                      opt.ladder_seed})
                    .params.alpha;
    const auto L0 = build_three_diagonal(n, 2 * p + rep.alpha - 3, opt.ladder_seed);

    struct Job {
        std::size_t map;
        int shift;
    };
    std::vector<Job> jobs;
    rep.valid_shifts = n;
    for (std::size_t m = 0; m < maps.size(); ++m) {
        Params prm{n, p, 3, rep.alpha, maps[m].first, maps[m].second};
        const auto excluded = exclusion_values(prm);
        int valid = 0;
        for (int t = 0; t < n; ++t)
            if (!violates_exclusion(shift_three_diagonal(L0, t), excluded)) {
                jobs.push_back({m, t});
                ++valid;
            }
        rep.valid_shifts = std::min(rep.valid_shifts, valid);
    }

    std::vector<std::optional<SparseSquareArray>> arrays(jobs.size());
    rep.rows.resize(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& [m, t] = jobs[i];
        auto& row = rep.rows[i];
        row.f_I = maps[m].first;
        row.f_J = maps[m].second;
        row.shift = t;
        try {
            auto fc = construct_full(n, p, {rep.alpha, row.f_I, row.f_J, t, opt.ladder_seed});
            row.verified = true;
            arrays[i] = std::move(fc.array);
        } catch (const VerificationError&) {
            row.verified = false;
        }
    });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < arrays.size(); ++i)
        for (std::size_t j = i + 1; j < arrays.size(); ++j)
            if (arrays[i] && arrays[j]) pairs.emplace_back(i, j);
    std::vector<char> same(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t q) {
        same[q] = equivalent(*arrays[pairs[q].first], *arrays[pairs[q].second]).has_value();
    });

    std::vector<std::size_t> parent(arrays.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t q = 0; q < pairs.size(); ++q) {
        if (!same[q]) continue;
        rep.collisions.push_back(pairs[q]);
        auto a = find(pairs[q].first), b = find(pairs[q].second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, int> ids;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        if (!arrays[i]) continue;
        ++rep.generated;
        auto root = find(i);
        auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
        rep.rows[i].class_id = it->second;
    }
    rep.distinct = ids.size();
    rep.bound_paper = derangement_bound(n, p);
    rep.embedding_bound = embedding_lower_bound(rep.distinct, n, 4 * p + 3);
    return rep;
}

}  // namespace heffter
