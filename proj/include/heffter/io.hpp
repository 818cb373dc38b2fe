#pragma once

// Text formats.
//
// Array document (one record per line, '#' starts a comment):
//
//   heffter-array 1
//   n 9
//   k 7
//   modulus 127
//   provenance p=1 gamma=3 alpha=4 fI=0 fJ=- shift=0    (optional)
//   cells 63
//   0 0 12                                              (row col value)
//   ...
//   end
//
// Cells are written sorted by (row, col).  Map lists are comma separated,
// '-' for an empty list.
//
// Faces file: one face per line, "B v0,v1,..." or "W v0,v1,...".
//
// Census CSV: header "fI,fJ,shift,verified,class_id"; map images inside a
// field are separated by spaces.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/census.hpp"
#include "heffter/core.hpp"
#include "heffter/embed.hpp"
#include "heffter/params.hpp"

namespace heffter {

struct ArrayDocument {
    int n = 0;
    int k = 0;
    Entry modulus = 0;
    SparseSquareArray array{1};
    std::optional<Provenance> provenance;

    bool operator==(const ArrayDocument&) const = default;
};

inline std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

namespace detail {

[[noreturn]] inline void parse_fail(int line, const std::string& why) {
    throw ParseError("line " + std::to_string(line) + ": " + why);
}

inline long long parse_int(const std::string& s, int line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        parse_fail(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) parse_fail(line, "expected an integer, got '" + s + "'");
    return v;
}

inline std::vector<int> parse_list(const std::string& s, char sep, int line) {
    std::vector<int> out;
    if (s == "-" || s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(static_cast<int>(parse_int(item, line)));
    return out;
}

// Next line with comments stripped and content present.
inline bool next_record(std::istream& in, int& lineno, std::vector<std::string>& words) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        words.clear();
        for (std::string w; ls >> w;) words.push_back(w);
        if (!words.empty()) return true;
    }
    return false;
}

}  // namespace detail

inline void write_array(std::ostream& os, const ArrayDocument& doc) {
    os << "heffter-array 1\n";
    os << "n " << doc.n << "\nk " << doc.k << "\nmodulus " << doc.modulus << "\n";
    if (doc.provenance) {
        const auto& pv = *doc.provenance;
        auto list = [](const std::vector<int>& v) { return v.empty() ? std::string("-") : join_ints(v, ','); };
        os << "provenance p=" << pv.p << " gamma=" << pv.gamma << " alpha=" << pv.alpha << " fI=" << list(pv.f_I)
           << " fJ=" << list(pv.f_J) << " shift=" << pv.shift << "\n";
    }
    os << "cells " << doc.array.filled() << "\n";
    for (const auto& [c, v] : doc.array.entries()) os << c.row << ' ' << c.col << ' ' << v << '\n';
    os << "end\n";
}

inline std::string serialize_array(const ArrayDocument& doc) {
    std::ostringstream os;
    write_array(os, doc);
    return os.str();
}

inline ArrayDocument read_array(std::istream& in) {
    int line = 0;
    std::vector<std::string> w;
    auto expect = [&](const char* key, std::size_t words) {
        if (!detail::next_record(in, line, w)) detail::parse_fail(line, std::string("missing '") + key + "'");
        if (w[0] != key || w.size() != words) detail::parse_fail(line, std::string("expected '") + key + "' record");
    };
    expect("heffter-array", 2);
    if (w[1] != "1") detail::parse_fail(line, "unsupported format version " + w[1]);

    ArrayDocument doc;
    expect("n", 2);
    doc.n = static_cast<int>(detail::parse_int(w[1], line));
    if (doc.n <= 0) detail::parse_fail(line, "n must be positive");
    expect("k", 2);
    doc.k = static_cast<int>(detail::parse_int(w[1], line));
    expect("modulus", 2);
    doc.modulus = detail::parse_int(w[1], line);
    if (doc.modulus <= 0) detail::parse_fail(line, "modulus must be positive");

    if (!detail::next_record(in, line, w)) detail::parse_fail(line, "missing 'cells'");
    if (w[0] == "provenance") {
        Provenance pv;
        bool seen[6] = {};
        for (std::size_t i = 1; i < w.size(); ++i) {
            auto eq = w[i].find('=');
            if (eq == std::string::npos) detail::parse_fail(line, "provenance field '" + w[i] + "' lacks '='");
            const std::string key = w[i].substr(0, eq), val = w[i].substr(eq + 1);
            int slot = -1;
            if (key == "p") pv.p = static_cast<int>(detail::parse_int(val, line)), slot = 0;
            else if (key == "gamma") pv.gamma = static_cast<int>(detail::parse_int(val, line)), slot = 1;
            else if (key == "alpha") pv.alpha = static_cast<int>(detail::parse_int(val, line)), slot = 2;
            else if (key == "fI") pv.f_I = detail::parse_list(val, ',', line), slot = 3;
            else if (key == "fJ") pv.f_J = detail::parse_list(val, ',', line), slot = 4;
            else if (key == "shift") pv.shift = static_cast<int>(detail::parse_int(val, line)), slot = 5;
            else detail::parse_fail(line, "unknown provenance field '" + key + "'");
            if (seen[slot]) detail::parse_fail(line, "duplicate provenance field '" + key + "'");
            seen[slot] = true;
        }
        for (bool s : seen)
            if (!s) detail::parse_fail(line, "provenance needs p, gamma, alpha, fI, fJ and shift");
        doc.provenance = std::move(pv);
        if (!detail::next_record(in, line, w)) detail::parse_fail(line, "missing 'cells'");
    }
    if (w[0] != "cells" || w.size() != 2) detail::parse_fail(line, "expected 'cells' record");
    const long long count = detail::parse_int(w[1], line);
    if (count < 0) detail::parse_fail(line, "cell count must be non-negative");

    doc.array = SparseSquareArray(doc.n);
    std::optional<Cell> prev;
    for (long long i = 0; i < count; ++i) {
        if (!detail::next_record(in, line, w)) detail::parse_fail(line, "document ends before all cells were read");
        if (w.size() != 3) detail::parse_fail(line, "a cell record is 'row col value'");
        const long long r = detail::parse_int(w[0], line), c = detail::parse_int(w[1], line);
        const long long v = detail::parse_int(w[2], line);
        if (r < 0 || r >= doc.n || c < 0 || c >= doc.n) detail::parse_fail(line, "cell index outside [0, n)");
        Cell cell{static_cast<int>(r), static_cast<int>(c)};
        if (prev && !(*prev < cell)) detail::parse_fail(line, "cells must be strictly sorted by (row, col)");
        prev = cell;
        try {
            doc.array.set(cell, v);
        } catch (const ParameterError& e) {
            detail::parse_fail(line, e.what());
        }
    }
    if (!detail::next_record(in, line, w) || w.size() != 1 || w[0] != "end") detail::parse_fail(line, "expected 'end'");
    if (detail::next_record(in, line, w)) detail::parse_fail(line, "content after 'end'");
    return doc;
}

inline ArrayDocument parse_array(const std::string& text) {
    std::istringstream is(text);
    return read_array(is);
}

inline void write_faces(std::ostream& os, const Embedding& emb) {
    for (const auto* set : {&emb.black, &emb.white})
        for (const auto& f : *set) {
            os << colour_code(f.colour) << ' ';
            for (std::size_t i = 0; i < f.vertices.size(); ++i) os << (i ? "," : "") << f.vertices[i];
            os << '\n';
        }
}

inline std::vector<Face> read_faces(std::istream& in) {
    std::vector<Face> out;
    int line = 0;
    std::vector<std::string> w;
    while (detail::next_record(in, line, w)) {
        if (w.size() != 2 || (w[0] != "B" && w[0] != "W")) detail::parse_fail(line, "a face record is 'B|W v0,v1,...'");
        Face f{w[0] == "B" ? Colour::Black : Colour::White, {}};
        for (int v : detail::parse_list(w[1], ',', line)) f.vertices.push_back(v);
        out.push_back(std::move(f));
    }
    return out;
}

inline void write_census_csv(std::ostream& os, const CensusReport& rep) {
    os << "fI,fJ,shift,verified,class_id\n";
    for (const auto& r : rep.rows)
        os << join_ints(r.f_I, ' ') << ',' << join_ints(r.f_J, ' ') << ',' << r.shift << ','
           << (r.verified ? "true" : "false") << ',' << r.class_id << '\n';
}

}  // namespace heffter
