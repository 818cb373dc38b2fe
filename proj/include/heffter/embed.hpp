#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "heffter/core.hpp"
#include "heffter/params.hpp"
#include "heffter/parallel.hpp"
#include "heffter/verify.hpp"

namespace heffter {

enum class Colour { Black, White };

inline char colour_code(Colour c) { return c == Colour::Black ? 'B' : 'W'; }

struct Face {
    Colour colour = Colour::Black;
    std::vector<Entry> vertices;

    /// Vertex list rotated to start at its minimum, read in whichever
    /// direction gives the smaller second vertex.  Used for identity only.
    std::vector<Entry> canonical() const {
        std::vector<Entry> v = vertices;
        if (v.empty()) return v;
        auto best = v;
        for (int dir = 0; dir < 2; ++dir) {
            std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
            if (v < best) best = v;
            std::reverse(v.begin(), v.end());
        }
        return best;
    }

    bool operator==(const Face&) const = default;
};

struct Embedding {
    Entry modulus = 0;
    std::vector<Face> black;
    std::vector<Face> white;
    std::optional<Provenance> provenance;
};

struct SurfaceCertificate {
    bool edge_cover_ok = false;
    bool vertex_links_single_cycle = false;
    bool orientable = false;
    long long V = 0, E = 0, F = 0;
    long long genus = 0;
    /// First failure found, empty when all three checks hold.
    std::string problem;

    long long euler_characteristic() const { return V - E + F; }
    bool ok() const { return edge_cover_ok && vertex_links_single_cycle && orientable; }
};

inline constexpr Entry kMaxDeskModulus = 20000;

/// One black face per row and one white face per column.  Black faces are
/// the running sums (0, a1, a1+a2, ...) of the ordered row entries; white
/// faces use the negated column entries (0, -b1, -b1-b2, ...), which is
/// the realization whose vertex links close into single umbrellas.
inline std::vector<Face> base_faces(const SparseSquareArray& a, const OrderingScheme& scheme, Entry modulus) {
    auto simple = check_simple(a, scheme, modulus);
    if (const auto* f = simple.first_failure())
        throw ParameterError("cannot build faces: " + f->name + " is not simple (" + f->detail + ")");
    std::vector<Face> out;
    auto emit = [&](const std::vector<Cell>& order, Colour colour, Entry sign, const std::string& label) {
        Face face{colour, {}};
        Entry acc = 0;
        for (Cell c : order) {
            face.vertices.push_back(acc);
            acc = residue(acc + sign * a.value(c), modulus);
        }
        if (acc != 0) throw ParameterError("cannot build faces: " + label + " does not sum to 0 mod M");
        out.push_back(std::move(face));
    };
    for (int r = 0; r < a.n(); ++r)
        emit(scheme.row_orders[static_cast<std::size_t>(r)], Colour::Black, 1, "row " + std::to_string(r));
    for (int c = 0; c < a.n(); ++c)
        emit(scheme.col_orders[static_cast<std::size_t>(c)], Colour::White, -1, "column " + std::to_string(c));
    return out;
}

/// All translates x + C for x in Z_M.  Faces of translate x of base face b
/// sit at index b*M + x within their colour.
inline Embedding develop(const std::vector<Face>& base, Entry modulus, bool force_large = false) {
    if (modulus <= 0) throw ParameterError("modulus must be positive");
    if (modulus > kMaxDeskModulus && !force_large)
        throw GuardrailError("modulus " + std::to_string(modulus) + " exceeds " + std::to_string(kMaxDeskModulus) +
                             "; pass the force flag to develop anyway");
    Embedding emb;
    emb.modulus = modulus;
    std::vector<const Face*> black, white;
    for (const auto& f : base) (f.colour == Colour::Black ? black : white).push_back(&f);
    auto grow = [&](const std::vector<const Face*>& src, std::vector<Face>& dst) {
        const auto M = static_cast<std::size_t>(modulus);
        dst.assign(src.size() * M, Face{});
        parallel_for(M, [&](std::size_t x) {
            for (std::size_t b = 0; b < src.size(); ++b) {
                Face& f = dst[b * M + x];
                f.colour = src[b]->colour;
                f.vertices.reserve(src[b]->vertices.size());
                for (Entry v : src[b]->vertices) f.vertices.push_back(residue(v + static_cast<Entry>(x), modulus));
            }
        });
    };
    grow(black, emb.black);
    grow(white, emb.white);
    return emb;
}

namespace detail {

inline std::uint64_t edge_key(Entry u, Entry v, Entry modulus) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(modulus) + static_cast<std::uint64_t>(v);
}

inline std::string edge_str(std::uint64_t key, Entry modulus) {
    const auto m = static_cast<std::uint64_t>(modulus);
    return "{" + std::to_string(key / m) + "," + std::to_string(key % m) + "}";
}

// Every edge on exactly one face of this colour and every pair covered.
inline std::string colour_cover_problem(const std::vector<Face>& faces, Entry modulus, const char* colour) {
    std::vector<std::uint64_t> keys;
    for (const auto& f : faces) {
        const auto k = f.vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            Entry u = f.vertices[i], v = f.vertices[(i + 1) % k];
            if (u < 0 || u >= modulus || v < 0 || v >= modulus)
                return std::string(colour) + " face has a vertex outside Z_M";
            if (u == v) return std::string(colour) + " face repeats vertex " + std::to_string(u);
            keys.push_back(edge_key(u, v, modulus));
        }
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i] == keys[i - 1])
            return "edge " + edge_str(keys[i], modulus) + " lies on two " + colour + " faces";
    const auto E = static_cast<std::size_t>(modulus) * static_cast<std::size_t>(modulus - 1) / 2;
    if (keys.size() != E)
        return std::string(colour) + " faces cover " + std::to_string(keys.size()) + " of " + std::to_string(E) + " edges";
    return {};
}

// Each vertex's corners (prev, next) must chain into one cycle through all
// of its neighbours.
inline std::string link_problem(const std::vector<const Face*>& faces, Entry modulus) {
    const auto M = static_cast<std::size_t>(modulus);
    std::vector<std::size_t> start(M + 1, 0);
    for (const Face* f : faces)
        for (Entry v : f->vertices) ++start[static_cast<std::size_t>(v) + 1];
    for (std::size_t v = 0; v < M; ++v) start[v + 1] += start[v];
    std::vector<std::pair<Entry, Entry>> corners(start[M]);
    auto fill = start;
    for (const Face* f : faces) {
        const auto k = f->vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            Entry v = f->vertices[i];
            corners[fill[static_cast<std::size_t>(v)]++] = {f->vertices[(i + k - 1) % k], f->vertices[(i + 1) % k]};
        }
    }
    std::vector<std::array<Entry, 2>> adj(M);
    std::vector<int> deg(M, 0);
    for (std::size_t v = 0; v < M; ++v) {
        const std::size_t lo = start[v], hi = start[v + 1];
        if (hi == lo) return "vertex " + std::to_string(v) + " lies on no face";
        for (std::size_t i = lo; i < hi; ++i) {
            for (auto [a, b] : {corners[i], std::pair{corners[i].second, corners[i].first}}) {
                auto& d = deg[static_cast<std::size_t>(a)];
                if (d == 2) return "vertex " + std::to_string(v) + ": neighbour " + std::to_string(a) + " lies on more than two corners";
                adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(d++)] = b;
            }
        }
        std::string bad;
        for (std::size_t i = lo; i < hi && bad.empty(); ++i)
            for (Entry a : {corners[i].first, corners[i].second})
                if (deg[static_cast<std::size_t>(a)] != 2)
                    bad = "vertex " + std::to_string(v) + ": link is not closed at neighbour " + std::to_string(a);
        if (bad.empty()) {
            // Walk the link starting from the first corner.
            std::size_t steps = 1;
            Entry first = corners[lo].first, prev = first, cur = corners[lo].second;
            while (cur != first) {
                const auto& nb = adj[static_cast<std::size_t>(cur)];
                Entry nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
                ++steps;
                if (steps > hi - lo) break;
            }
            if (steps != hi - lo)
                bad = "vertex " + std::to_string(v) + ": link splits into more than one cycle (pseudosurface)";
        }
        for (std::size_t i = lo; i < hi; ++i) {
            deg[static_cast<std::size_t>(corners[i].first)] = 0;
            deg[static_cast<std::size_t>(corners[i].second)] = 0;
        }
        if (!bad.empty()) return bad;
    }
    return {};
}

// Breadth-first propagation of face orientations so that every edge is
// traversed in opposite directions by its two faces.
inline std::string orientation_problem(const std::vector<const Face*>& faces, Entry modulus) {
    struct Use {
        std::uint64_t key;
        std::uint32_t face;
        std::int8_t dir;  // +1 when traversed from the smaller vertex
    };
    std::vector<Use> uses;
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) {
        const auto& vs = faces[fi]->vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Entry u = vs[i], v = vs[(i + 1) % vs.size()];
            uses.push_back({edge_key(u, v, modulus), fi, static_cast<std::int8_t>(u < v ? 1 : -1)});
        }
    }
    std::sort(uses.begin(), uses.end(), [](const Use& a, const Use& b) {
        return a.key != b.key ? a.key < b.key : a.face < b.face;
    });
    struct Adj {
        std::uint32_t other;
        std::int8_t sign;  // required orient(other) = sign * orient(this)
        std::uint64_t key;
    };
    std::vector<std::vector<Adj>> adj(faces.size());
    for (std::size_t i = 0; i < uses.size();) {
        std::size_t j = i;
        while (j < uses.size() && uses[j].key == uses[i].key) ++j;
        if (j - i != 2) return "edge " + edge_str(uses[i].key, modulus) + " lies on " + std::to_string(j - i) + " faces";
        const Use &a = uses[i], &b = uses[i + 1];
        auto sign = static_cast<std::int8_t>(-a.dir * b.dir);
        adj[a.face].push_back({b.face, sign, a.key});
        adj[b.face].push_back({a.face, sign, a.key});
        i = j;
    }
    std::vector<std::int8_t> orient(faces.size(), 0);
    for (std::uint32_t s = 0; s < faces.size(); ++s) {
        if (orient[s]) continue;
        orient[s] = 1;
        std::queue<std::uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            auto f = q.front();
            q.pop();
            for (const auto& e : adj[f]) {
                auto want = static_cast<std::int8_t>(e.sign * orient[f]);
                if (!orient[e.other]) {
                    orient[e.other] = want;
                    q.push(e.other);
                } else if (orient[e.other] != want) {
                    return "orientation conflict at edge " + edge_str(e.key, modulus);
                }
            }
        }
    }
    return {};
}

}  // namespace detail

inline SurfaceCertificate verify_surface(const Embedding& emb) {
    SurfaceCertificate cert;
    const Entry M = emb.modulus;
    if (M < 3) {
        cert.problem = "modulus must be at least 3";
        return cert;
    }
    std::vector<const Face*> all;
    all.reserve(emb.black.size() + emb.white.size());
    for (const auto& f : emb.black) all.push_back(&f);
    for (const auto& f : emb.white) all.push_back(&f);

    cert.V = M;
    cert.E = M * (M - 1) / 2;
    cert.F = static_cast<long long>(all.size());
    cert.genus = (2 - cert.euler_characteristic()) / 2;

    auto note = [&](const std::string& why) {
        if (cert.problem.empty()) cert.problem = why;
    };
    std::string b = detail::colour_cover_problem(emb.black, M, "black");
    std::string w = detail::colour_cover_problem(emb.white, M, "white");
    cert.edge_cover_ok = b.empty() && w.empty();
    note(b.empty() ? w : b);
    if (!cert.edge_cover_ok) return cert;

    std::string links = detail::link_problem(all, M);
    cert.vertex_links_single_cycle = links.empty();
    note(links);

    std::string orient = detail::orientation_problem(all, M);
    cert.orientable = orient.empty();
    note(orient);
    return cert;
}

}  // namespace heffter
