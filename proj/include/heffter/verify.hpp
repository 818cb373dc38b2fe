#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/core.hpp"

namespace heffter {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    /// Informational checks are reported but do not affect passed().
    bool required = true;
};

/// Named verdicts, one per requested check, in the order they were run.
struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = {}, bool required = true) {
        checks.push_back({std::move(name), ok, std::move(detail), required});
    }

    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed || !c.required; });
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (c.required && !c.passed) return &c;
        return nullptr;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS " : (c.required ? "FAIL " : "NOTE ")) << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << '\n';
        }
        return os.str();
    }
};

/// Per-line cyclic orderings of the filled cells.
struct OrderingScheme {
    std::vector<std::vector<Cell>> row_orders;
    std::vector<std::vector<Cell>> col_orders;
    std::set<int> reversed_rows;
};

/// Rows left to right and columns top to bottom, no reversals.
inline OrderingScheme left_to_right_orderings(const SparseSquareArray& a) {
    OrderingScheme s;
    for (int r = 0; r < a.n(); ++r) s.row_orders.push_back(a.row_cells(r));
    for (int c = 0; c < a.n(); ++c) s.col_orders.push_back(a.col_cells(c));
    return s;
}

/// The compatible scheme for diagonal layouts: columns top to bottom,
/// rows 0..n-2 left to right, row n-1 right to left.
inline OrderingScheme natural_orderings(const SparseSquareArray& a) {
    OrderingScheme s = left_to_right_orderings(a);
    const int last = a.n() - 1;
    std::reverse(s.row_orders[static_cast<std::size_t>(last)].begin(),
                 s.row_orders[static_cast<std::size_t>(last)].end());
    s.reversed_rows.insert(last);
    return s;
}

namespace detail {

inline std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline Entry line_sum(const SparseSquareArray& a, const std::vector<Cell>& cells) {
    Entry s = 0;
    for (Cell c : cells) s += a.value(c);
    return s;
}

}  // namespace detail

/// Heffter axioms: k filled cells per line, zero line sums mod M, and
/// support {1, ..., nk} with exactly one of +-x for each x.  Whether sums
/// vanish over Z is reported as an informational "integer_sums" check.
inline VerificationReport check_heffter(const SparseSquareArray& a, int k, Entry modulus) {
    VerificationReport rep;
    const int n = a.n();

    std::string bad_fill;
    for (int i = 0; i < n && bad_fill.empty(); ++i) {
        auto rc = a.row_cells(i).size();
        auto cc = a.col_cells(i).size();
        if (rc != static_cast<std::size_t>(k))
            bad_fill = "row " + std::to_string(i) + " has " + std::to_string(rc) + " filled cells";
        else if (cc != static_cast<std::size_t>(k))
            bad_fill = "column " + std::to_string(i) + " has " + std::to_string(cc) + " filled cells";
    }
    rep.add("fill_count", bad_fill.empty(), bad_fill);

    std::string bad_mod, bad_int;
    for (int kind = 0; kind < 2; ++kind) {
        for (int i = 0; i < n; ++i) {
            LineRef line{kind == 0 ? LineKind::Row : LineKind::Col, i};
            Entry s = detail::line_sum(a, line_cells(a, line));
            if (bad_mod.empty() && residue(s, modulus) != 0)
                bad_mod = line.label() + " sums to " + std::to_string(s);
            if (bad_int.empty() && s != 0) bad_int = line.label() + " sums to " + std::to_string(s);
        }
    }
    rep.add("zero_sums_mod", bad_mod.empty(), bad_mod);
    rep.add("integer_sums", bad_int.empty(), bad_int, false);

    const Entry nk = Entry{n} * k;
    auto sup = a.support();
    std::string bad_sup;
    if (static_cast<Entry>(sup.size()) != nk) {
        bad_sup = std::to_string(sup.size()) + " entries, expected " + std::to_string(nk);
    } else {
        for (std::size_t i = 0; i < sup.size(); ++i) {
            if (sup[i] != static_cast<Entry>(i) + 1) {
                bad_sup = "support misses " + std::to_string(i + 1);
                break;
            }
        }
    }
    rep.add("support", bad_sup.empty(), bad_sup);
    return rep;
}

/// Simplicity of every line under `scheme`, one verdict per line.
inline VerificationReport check_simple(const SparseSquareArray& a, const OrderingScheme& scheme,
                                       Entry modulus) {
    VerificationReport rep;
    auto run = [&](LineKind kind, const std::vector<std::vector<Cell>>& orders) {
        for (std::size_t i = 0; i < orders.size(); ++i) {
            LineRef line{kind, static_cast<int>(i)};
            auto prof = partial_sums(a, line, orders[i], modulus);
            auto rep_at = prof.first_repeat();
            std::string detail;
            if (rep_at)
                detail = "positions " + std::to_string(rep_at->first) + " and " +
                         std::to_string(rep_at->second) + " share residue " +
                         std::to_string(prof.sums[rep_at->first]);
            rep.add("simple " + line.label(), !rep_at, detail);
        }
    };
    if (scheme.row_orders.size() != static_cast<std::size_t>(a.n()) ||
        scheme.col_orders.size() != static_cast<std::size_t>(a.n()))
        throw ParameterError("ordering scheme does not cover every line");
    run(LineKind::Row, scheme.row_orders);
    run(LineKind::Col, scheme.col_orders);
    return rep;
}

/// Natural (left-to-right, top-to-bottom) orders simple on every line.
inline bool is_globally_simple(const SparseSquareArray& a, Entry modulus) {
    return check_simple(a, left_to_right_orderings(a), modulus).passed();
}

/// Cycle decomposition of Omega_r o Omega_c on the filled cells.
struct CellCycle {
    std::vector<std::vector<Cell>> cycles;
    std::vector<std::size_t> lengths;  ///< descending

    std::size_t total() const {
        std::size_t t = 0;
        for (auto l : lengths) t += l;
        return t;
    }
};

/// Builds the row-successor and column-successor permutations on cells
/// (each line's order read cyclically) and decomposes their composition,
/// applying the row step first: x -> Omega_c(Omega_r(x)).
inline CellCycle compose_cycle(const SparseSquareArray& a, const OrderingScheme& scheme) {
    const auto& entries = a.entries();
    std::map<Cell, std::size_t> id;
    std::vector<Cell> cells;
    for (const auto& [c, v] : entries) {
        id.emplace(c, cells.size());
        cells.push_back(c);
    }
    const std::size_t none = cells.size();
    std::vector<std::size_t> step_row(cells.size(), none), step_col(cells.size(), none);

    auto fill = [&](const std::vector<std::vector<Cell>>& orders, std::vector<std::size_t>& step,
                    LineKind kind) {
        if (orders.size() != static_cast<std::size_t>(a.n()))
            throw ParameterError("ordering scheme does not cover every line");
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const auto& ord = orders[i];
            auto expect = line_cells(a, {kind, static_cast<int>(i)});
            auto sorted = ord;
            for (auto& c : sorted) c = c.reduced(a.n());
            std::sort(sorted.begin(), sorted.end());
            if (sorted != expect)
                throw ParameterError("ordering of " + LineRef{kind, static_cast<int>(i)}.label() +
                                     " is not a permutation of its filled cells");
            for (std::size_t j = 0; j < ord.size(); ++j)
                step[id.at(ord[j].reduced(a.n()))] = id.at(ord[(j + 1) % ord.size()].reduced(a.n()));
        }
    };
    fill(scheme.row_orders, step_row, LineKind::Row);
    fill(scheme.col_orders, step_col, LineKind::Col);

    CellCycle out;
    std::vector<char> seen(cells.size(), 0);
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Cell> cyc;
        for (std::size_t x = s; !seen[x]; x = step_col[step_row[x]]) {
            seen[x] = 1;
            cyc.push_back(cells[x]);
        }
        out.lengths.push_back(cyc.size());
        out.cycles.push_back(std::move(cyc));
    }
    std::sort(out.lengths.rbegin(), out.lengths.rend());
    return out;
}

inline bool check_compatible(const CellCycle& cycle, std::size_t total_cells) {
    return cycle.lengths.size() == 1 && cycle.lengths[0] == total_cells;
}

/// Every cyclic gap between occupied diagonals coprime to n.
inline bool check_gap_criterion(int n, const DiagonalSet& diagonals) {
    return std::all_of(diagonals.gaps.begin(), diagonals.gaps.end(),
                       [n](int s) { return gcd_ll(n, s) == 1; });
}

/// Necessary parity pattern for compatible orderings of an H(m,n;s,t):
/// all odd; or m odd, n even, s even; or m even, n odd, t even.
inline bool check_parity_necessary(long long m, long long n, long long s, long long t) {
    if (m * s != n * t) throw ParameterError("parity condition needs ms = nt");
    auto odd = [](long long v) { return (v & 1) != 0; };
    return (odd(m) && odd(n) && odd(s) && odd(t)) || (odd(m) && !odd(n) && !odd(s)) ||
           (!odd(m) && odd(n) && !odd(t));
}

/// Properties P1-P4 of a support-shifted array: 4p filled cells per line,
/// support {gamma n + 1, ..., (4p+gamma) n}, zero sums over Z, and natural
/// partial sums distinct mod 2(4p+gamma)n+1.
inline VerificationReport check_support_shifted(const SparseSquareArray& a, int n, int p, int gamma) {
    VerificationReport rep;
    if (a.n() != n) {
        rep.add("side", false, "array side " + std::to_string(a.n()) + " != " + std::to_string(n));
        return rep;
    }
    const int fill = 4 * p;
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i) {
        if (a.row_cells(i).size() != static_cast<std::size_t>(fill)) bad = "row " + std::to_string(i);
        else if (a.col_cells(i).size() != static_cast<std::size_t>(fill)) bad = "column " + std::to_string(i);
    }
    rep.add("P1_fill", bad.empty(), bad.empty() ? "" : bad + " does not have 4p filled cells");

    auto sup = a.support();
    const Entry lo = Entry{gamma} * n + 1;
    const Entry count = Entry{fill} * n;
    bad.clear();
    if (static_cast<Entry>(sup.size()) != count) bad = std::to_string(sup.size()) + " entries";
    else
        for (std::size_t i = 0; i < sup.size() && bad.empty(); ++i)
            if (sup[i] != lo + static_cast<Entry>(i)) bad = "support misses " + std::to_string(lo + static_cast<Entry>(i));
    rep.add("P2_support", bad.empty(), bad);

    bad.clear();
    for (int kind = 0; kind < 2 && bad.empty(); ++kind)
        for (int i = 0; i < n && bad.empty(); ++i) {
            LineRef line{kind == 0 ? LineKind::Row : LineKind::Col, i};
            Entry s = detail::line_sum(a, line_cells(a, line));
            if (s != 0) bad = line.label() + " sums to " + std::to_string(s);
        }
    rep.add("P3_zero_sums", bad.empty(), bad);

    auto simple = check_simple(a, left_to_right_orderings(a), 2 * Entry{fill + gamma} * n + 1);
    const auto* f = simple.first_failure();
    rep.add("P4_distinct_partial_sums", f == nullptr, f ? f->name + ": " + f->detail : "");
    return rep;
}

/// Full suite for a merged array: Heffter axioms, global simplicity,
/// simplicity under `scheme`, and compatibility of `scheme`.
inline VerificationReport verify_full(const SparseSquareArray& a, int k, Entry modulus,
                                      const OrderingScheme& scheme) {
    VerificationReport rep = check_heffter(a, k, modulus);
    auto gs = check_simple(a, left_to_right_orderings(a), modulus);
    const auto* f = gs.first_failure();
    rep.add("globally_simple", f == nullptr, f ? f->name + ": " + f->detail : "");
    auto sc = check_simple(a, scheme, modulus);
    f = sc.first_failure();
    rep.add("scheme_simple", f == nullptr, f ? f->name + ": " + f->detail : "");
    auto cyc = compose_cycle(a, scheme);
    std::string lens;
    for (std::size_t i = 0; i < cyc.lengths.size() && i < 8; ++i)
        lens += (i ? "," : "") + std::to_string(cyc.lengths[i]);
    if (cyc.lengths.size() > 8) lens += ",...";
    rep.add("compatible", check_compatible(cyc, a.filled()),
            std::to_string(cyc.lengths.size()) + " cycle(s), lengths " + lens);
    return rep;
}

}  // namespace heffter
