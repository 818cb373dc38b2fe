#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "heffter/core.hpp"
#include "heffter/params.hpp"
#include "heffter/verify.hpp"

namespace heffter {

/// The support-shifted array: 4p diagonals D_{2i}, D_{2i+1} (i in [p]),
/// D_{2p}, D_{2p+1+2j}, D_{2p+2+2j} (j in [p-1]) and D_{2p+alpha}, with
/// support {gamma n + 1, ..., (4p+gamma) n}.  Identity maps give the
/// unpermuted array.
inline SparseSquareArray build_support_shifted(const Params& prm) {
    if (auto why = shifted_params_problem(prm)) throw ParameterError(*why);
    const Entry n = prm.n, p = prm.p, g = prm.gamma, a = prm.alpha;
    SparseSquareArray out(prm.n);
    auto put = [&](Entry r, Entry c, Entry v) {
        Cell cell{wrap(r, prm.n), wrap(c, prm.n)};
        if (!out.try_insert(cell, v))
            throw CollisionError("two entry families meet in cell " + detail::cell_str(cell));
    };
    for (Entry x = 0; x < n; ++x) {
        for (Entry i = 0; i < p; ++i) {
            const Entry fi = prm.f_I[static_cast<std::size_t>(i)];
            put(2 * i - x, -x, (g + 2) * n + 4 * fi * n - 2 * x);
            put(2 * i + 1 + x, x, -g * n - 4 * fi * n - 1 - 2 * x);
        }
        put(2 * p - a * x, -a * x, -(4 * p + g) * n + 2 * x);
        for (Entry j = 0; j + 1 < p; ++j) {
            const Entry fj = prm.f_J[static_cast<std::size_t>(j)];
            put(2 * p + 1 + 2 * j - x, -x, (4 * p + g - 6) * n - 4 * fj * n + 1 + 2 * x);
            put(2 * p + 2 + 2 * j + x, x, -(4 * p + g - 4) * n + 4 * fj * n + 2 * x);
        }
        put(2 * p + a + a * x, a * x, (4 * p + g - 2) * n + 1 + 2 * x);
    }
    return out;
}

/// Least alpha in [2p+2, n-2-2p] with gcd(n, alpha) = gcd(n, alpha-2p-1)
/// = gcd(n, n-1-alpha-2p) = 1, by direct scan.
inline std::optional<int> find_alpha(int n, int p) {
    if (p <= 0) throw ParameterError("p must be positive");
    if (n % 4 != 1 || n <= 4 * p + 3) throw ParameterError("find_alpha needs n = 1 (mod 4) and n > 4p+3");
    for (int alpha = 2 * p + 2; alpha <= n - 2 - 2 * p; ++alpha)
        if (alpha_admissible(n, p, alpha)) return alpha;
    return std::nullopt;
}

/// Human-readable reason no alpha exists.
inline std::string alpha_absence_reason(int n, int p) {
    if (n % 3 == 0 && p % 3 != 1)
        return "no admissible alpha: n = 0 (mod 3) and p != 1 (mod 3) (n=" + std::to_string(n) +
               ", p=" + std::to_string(p) + ")";
    return "no admissible alpha in [2p+2, n-2-2p] for n=" + std::to_string(n) + ", p=" + std::to_string(p);
}

/// An H(n;3) on D_beta, D_{beta+2}, D_{beta+4}: D_{beta+2} carries
/// {1..n} up to sign, D_beta positive and D_{beta+4} negative with joint
/// support {n+1..3n}.  Column c holds P(c) at (c+beta, c), Q(c) at
/// (c+beta+2, c) and N(c) at (c+beta+4, c).
struct ThreeDiagonalArray {
    SparseSquareArray base;
    int beta = 0;
    int shift = 0;

    int n() const { return base.n(); }
    Entry positive(int c) const { return base.value({c + beta, c}); }
    Entry middle(int c) const { return base.value({c + beta + 2, c}); }
    Entry negative(int c) const { return base.value({c + beta + 4, c}); }
};

/// Checks every three-diagonal property; returns a failure description.
inline std::optional<std::string> three_diagonal_problem(const ThreeDiagonalArray& L) {
    const int n = L.n();
    auto dias = occupied_diagonals(L.base);
    std::vector<int> want{wrap(L.beta, n), wrap(L.beta + 2, n), wrap(L.beta + 4, n)};
    std::sort(want.begin(), want.end());
    if (!dias || *dias != want) return "filled cells are not exactly D_beta, D_beta+2, D_beta+4";
    std::vector<Entry> mid, outer;
    for (int c = 0; c < n; ++c) {
        if (L.positive(c) <= 0) return "D_beta entry not positive in column " + std::to_string(c);
        if (L.negative(c) >= 0) return "D_beta+4 entry not negative in column " + std::to_string(c);
        mid.push_back(std::abs(L.middle(c)));
        outer.push_back(L.positive(c));
        outer.push_back(-L.negative(c));
    }
    std::sort(mid.begin(), mid.end());
    std::sort(outer.begin(), outer.end());
    for (int i = 0; i < n; ++i)
        if (mid[static_cast<std::size_t>(i)] != i + 1) return "support of D_beta+2 is not {1..n}";
    for (int i = 0; i < 2 * n; ++i)
        if (outer[static_cast<std::size_t>(i)] != n + 1 + i) return "support of D_beta u D_beta+4 is not {n+1..3n}";
    for (int i = 0; i < n; ++i) {
        Entry rs = 0, cs = 0;
        for (Cell c : L.base.row_cells(i)) rs += L.base.value(c);
        for (Cell c : L.base.col_cells(i)) cs += L.base.value(c);
        if (rs != 0) return "row " + std::to_string(i) + " does not sum to 0";
        if (cs != 0) return "column " + std::to_string(i) + " does not sum to 0";
    }
    return std::nullopt;
}

namespace detail {

// Row and column zero sums force P(c) - N(c-2) = 4n+1 for every column,
// so the positive diagonal is a choice of one element from each pair
// {v, 4n+1-v} and everything else follows from it.  Writing
// s = 2P - (4n+1) and stepping columns by 2 (c = 2m mod n), the search is
// for a cyclic sequence s_0..s_{n-1} of signed odd numbers with
// {|s_m|} = {1, 3, ..., 2n-1} and {|s_m + s_{m+1}| / 2} = {1, ..., n}.
//
// Taking s_m = (-1)^m (2 y_m - 1) reduces this to a path y_0..y_{n-1}
// through 1..n whose steps |y_m - y_{m+1}| are 1..n-1 (a graceful
// permutation) with y_0 + y_{n-1} = n + 1, which closes the cycle with
// half-sum n.  The path search takes the largest unused step first and
// restarts from the next endpoint pair when a start runs over budget.
class GracefulPathSearch {
public:
    static constexpr long long kNodesPerStart = 200'000;

    GracefulPathSearch(int n, std::uint64_t seed) : n_(n) {
        const int m = (n - 1) / 4;
        starts_.push_back(m + 1);
        for (int a = 1; 2 * a < n + 1; ++a)
            if (a != m + 1) starts_.push_back(a);
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            std::shuffle(starts_.begin(), starts_.end(), rng);
        }
    }

    std::vector<int> run() {
        const auto un = static_cast<std::size_t>(n_);
        for (int a : starts_) {
            end_ = n_ + 1 - a;
            used_.assign(un + 1, 0);
            step_used_.assign(un, 0);
            path_.assign(1, a);
            used_[static_cast<std::size_t>(a)] = 1;
            nodes_ = 0;
            if (descend()) {
                path_.push_back(end_);
                std::vector<int> s(un);
                for (std::size_t i = 0; i < un; ++i) s[i] = (i % 2 ? -1 : 1) * (2 * path_[i] - 1);
                return s;
            }
        }
        throw SearchExhausted("three-diagonal search exhausted every start for n = " + std::to_string(n_));
    }

private:
    bool descend() {
        if (++nodes_ > kNodesPerStart) return false;
        const int last = path_.back();
        if (static_cast<int>(path_.size()) == n_ - 1) {
            const int d = std::abs(end_ - last);
            return d >= 1 && !step_used_[static_cast<std::size_t>(d)];
        }
        for (int d = n_ - 1; d >= 1; --d) {
            if (step_used_[static_cast<std::size_t>(d)]) continue;
            for (int v : {last + d, last - d}) {
                if (v < 1 || v > n_ || v == end_ || used_[static_cast<std::size_t>(v)]) continue;
                used_[static_cast<std::size_t>(v)] = 1;
                step_used_[static_cast<std::size_t>(d)] = 1;
                path_.push_back(v);
                if (descend()) return true;
                path_.pop_back();
                used_[static_cast<std::size_t>(v)] = 0;
                step_used_[static_cast<std::size_t>(d)] = 0;
                if (nodes_ > kNodesPerStart) return false;
            }
        }
        return false;
    }

    int n_;
    int end_ = 0;
    std::vector<int> starts_;
    std::vector<int> path_;
    std::vector<char> used_, step_used_;
    long long nodes_ = 0;
};

inline std::vector<Entry> positive_diagonal(int n, std::uint64_t seed) {
    static std::mutex mu;
    static std::map<std::pair<int, std::uint64_t>, std::vector<Entry>> cache;
    std::lock_guard lock(mu);
    auto key = std::pair{n, seed};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto s = GracefulPathSearch(n, seed).run();
    std::vector<Entry> P(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;  // inverse of 2 mod n
    for (int c = 0; c < n; ++c)
        P[static_cast<std::size_t>(c)] = (s[static_cast<std::size_t>(wrap(Entry{c} * half, n))] + 4 * Entry{n} + 1) / 2;
    cache.emplace(key, P);
    return P;
}

}  // namespace detail

/// Seed 0 keeps the canonical start order; other seeds shuffle it.
inline constexpr std::uint64_t kDefaultLadderSeed = 0;

/// Searches for a three-diagonal H(n;3) anchored at beta.  Deterministic
/// for a given seed; results are cached per (n, seed).
inline ThreeDiagonalArray build_three_diagonal(int n, int beta, std::uint64_t seed = kDefaultLadderSeed) {
    if (n % 4 != 1 || n < 5) throw ParameterError("three-diagonal arrays need n = 1 (mod 4), n >= 5");
    if (beta < 0 || beta > n - 5) throw ParameterError("need 0 <= beta <= n-5");
    const auto P = detail::positive_diagonal(n, seed);
    ThreeDiagonalArray L{SparseSquareArray(n), beta, 0};
    const Entry pair_sum = 4 * Entry{n} + 1;
    for (int c = 0; c < n; ++c) {
        const Entry pos = P[static_cast<std::size_t>(c)];
        const Entry neg = -(pair_sum - P[static_cast<std::size_t>(wrap(c + 2, n))]);
        L.base.set({c + beta, c}, pos);
        L.base.set({c + beta + 2, c}, -(pos + neg));
        L.base.set({c + beta + 4, c}, neg);
    }
    if (auto why = three_diagonal_problem(L)) throw SearchExhausted("three-diagonal search returned an invalid array: " + *why);
    return L;
}

/// M(i, j) = L(i + t, j + t).
inline ThreeDiagonalArray shift_three_diagonal(const ThreeDiagonalArray& L, int t) {
    const int n = L.n();
    ThreeDiagonalArray out{SparseSquareArray(n), L.beta, wrap(L.shift + t, n)};
    for (const auto& [c, v] : L.base.entries()) out.base.set({c.row - t, c.col - t}, v);
    return out;
}

/// Values that may not appear as L(beta, 0) or -L(beta+4, 0).  The
/// identity-map array additionally excludes 2n - (2p+1)/3 when integral.
inline std::vector<Entry> exclusion_values(const Params& prm) {
    std::vector<Entry> v{2 * Entry{prm.n} - 1};
    if (prm.identity_maps() && (2 * prm.p + 1) % 3 == 0) {
        Entry extra = 2 * Entry{prm.n} - (2 * prm.p + 1) / 3;
        if (extra != v[0]) v.push_back(extra);
    }
    return v;
}

inline bool violates_exclusion(const ThreeDiagonalArray& L, const std::vector<Entry>& excluded) {
    const Entry top = L.positive(0), bottom = -L.negative(0);
    return std::any_of(excluded.begin(), excluded.end(),
                       [&](Entry e) { return e == top || e == bottom; });
}

/// B'(i,j) = L(i,j) on diagonals 2p+alpha-3, 2p+alpha-1, 2p+alpha+1 and
/// A'(i,j) elsewhere.
inline SparseSquareArray merge(const SparseSquareArray& aprime, const ThreeDiagonalArray& L,
                               const Params& prm) {
    if (auto why = merged_params_problem(prm)) throw ParameterError(*why);
    const int n = prm.n;
    if (aprime.n() != n || L.n() != n) throw ParameterError("array sides differ");
    if (L.beta != prm.beta()) throw ParameterError("three-diagonal array is not anchored at 2p+alpha-3");

    std::vector<int> want_a;
    for (int d = 0; d <= 4 * prm.p - 2; ++d) want_a.push_back(d);
    want_a.push_back(2 * prm.p + prm.alpha);
    auto got_a = occupied_diagonals(aprime);
    if (!got_a || *got_a != want_a) throw ParameterError("shifted array does not occupy D_0..D_{4p-2}, D_{2p+alpha}");
    if (auto why = three_diagonal_problem(L)) throw ParameterError("three-diagonal array invalid: " + *why);
    if (violates_exclusion(L, exclusion_values(prm)))
        throw ExclusionViolation("shift " + std::to_string(L.shift) +
                                 " puts an excluded value at L(beta,0) or -L(beta+4,0)");

    const int b = prm.beta();
    SparseSquareArray out(n);
    for (const auto& [c, v] : aprime.entries()) {
        int d = diagonal_of(c, n);
        if (d != b && d != b + 2 && d != b + 4) out.set(c, v);
    }
    for (const auto& [c, v] : L.base.entries()) out.set(c, v);
    return out;
}

struct FullConstruction {
    Params params;
    SparseSquareArray array;
    OrderingScheme scheme;
    int shift = 0;
    std::vector<int> rejected_shifts;
    VerificationReport report;

    Provenance provenance() const { return {params.p, params.gamma, params.alpha, params.f_I, params.f_J, shift}; }
};

namespace detail {

// Lexicographically least bijection on [size] with allowed(position, value)
// at every position; plain backtracking, smallest value first.
template <class Allowed>
std::optional<std::vector<int>> least_bijection(int size, Allowed allowed) {
    std::vector<int> f(static_cast<std::size_t>(size));
    std::vector<char> used(static_cast<std::size_t>(size), 0);
    auto place = [&](auto&& self, int pos) -> bool {
        if (pos == size) return true;
        for (int v = 0; v < size; ++v) {
            if (used[static_cast<std::size_t>(v)] || !allowed(pos, v)) continue;
            used[static_cast<std::size_t>(v)] = 1;
            f[static_cast<std::size_t>(pos)] = v;
            if (self(self, pos + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;
    return f;
}

}  // namespace detail

/// First (f_I, f_J) in lexicographic order meeting the merged-array map
/// constraints.  The constraints on f_I and f_J are independent, so this is
/// the least valid f_I paired with the least valid f_J.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> first_valid_maps(int p) {
    auto fi = detail::least_bijection(p, [p](int i, int v) { return (i == 0) == (v == 0) && 2 * v != 2 * p - i + 1; });
    auto fj = detail::least_bijection(p - 1, [p](int j, int v) { return 4 * v != p - j - 4 && 2 * v != p - j - 4; });
    if (!fi || !fj || merged_maps_problem(p, *fi, *fj)) return std::nullopt;
    return std::pair{*fi, *fj};
}

struct FullOptions {
    std::optional<int> alpha;
    std::optional<std::vector<int>> f_I, f_J;
    std::optional<int> shift;
    std::uint64_t ladder_seed = kDefaultLadderSeed;
};

/// alpha -> A' (gamma = 3) -> L -> shift -> merge -> orderings, then the
/// full verification suite.  Without an explicit shift, shifts 0, 1, ...
/// are tried until the exclusion constraint holds.
inline FullConstruction construct_full(int n, int p, const FullOptions& opt = {}) {
    if (p <= 0) throw ParameterError("p must be positive");
    if (n % 4 != 1) throw ParameterError("need n = 1 (mod 4)");
    if (n <= 4 * p + 3) throw ParameterError("need n > 4p+3");

    int alpha = 0;
    if (opt.alpha) {
        if (!alpha_admissible(n, p, *opt.alpha)) throw ParameterError("alpha " + std::to_string(*opt.alpha) + " is not admissible");
        alpha = *opt.alpha;
    } else {
        auto a = find_alpha(n, p);
        if (!a) throw ParameterError(alpha_absence_reason(n, p));
        alpha = *a;
    }

    Params prm{n, p, 3, alpha, {}, {}};
    auto def = first_valid_maps(p);
    if (!def && !(opt.f_I && opt.f_J))
        throw ParameterError("no (f_I, f_J) satisfies the merged-array constraints");
    prm.f_I = opt.f_I ? *opt.f_I : def->first;
    prm.f_J = opt.f_J ? *opt.f_J : def->second;
    if (auto why = merged_params_problem(prm)) throw ParameterError(*why);

    auto aprime = build_support_shifted(prm);
    auto L0 = build_three_diagonal(n, prm.beta(), opt.ladder_seed);
    const auto excluded = exclusion_values(prm);

    FullConstruction out{prm, SparseSquareArray(n), {}, 0, {}, {}};
    std::optional<ThreeDiagonalArray> L;
    if (opt.shift) {
        if (*opt.shift < 0 || *opt.shift >= n) throw ParameterError("shift must lie in [0, n)");
        auto cand = shift_three_diagonal(L0, *opt.shift);
        if (violates_exclusion(cand, excluded))
            throw ExclusionViolation("shift " + std::to_string(*opt.shift) + " violates the exclusion constraint");
        L = std::move(cand);
    } else {
        for (int t = 0; t < n && !L; ++t) {
            auto cand = shift_three_diagonal(L0, t);
            if (violates_exclusion(cand, excluded)) out.rejected_shifts.push_back(t);
            else L = std::move(cand);
        }
        if (!L) throw SearchExhausted("no valid shift of the three-diagonal array");
    }
    out.shift = L->shift;
    out.array = merge(aprime, *L, prm);
    out.scheme = natural_orderings(out.array);
    out.report = verify_full(out.array, prm.k(), prm.full_modulus(), out.scheme);
    if (!out.report.passed()) {
        const auto* f = out.report.first_failure();
        throw VerificationError("constructed array failed " + f->name + ": " + f->detail);
    }
    return out;
}

}  // namespace heffter
