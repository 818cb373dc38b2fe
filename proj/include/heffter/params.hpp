#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heffter/core.hpp"

namespace heffter {

/// True iff `f` is a permutation of {0, ..., size-1}.
inline bool is_bijection(std::span<const int> f, int size) {
    if (static_cast<int>(f.size()) != size) return false;
    std::vector<char> hit(static_cast<std::size_t>(size), 0);
    for (int v : f) {
        if (v < 0 || v >= size || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline std::vector<int> identity_map(int size) {
    std::vector<int> f(static_cast<std::size_t>(std::max(size, 0)));
    std::iota(f.begin(), f.end(), 0);
    return f;
}

/// Construction symbols shared by the shifted array, the three-diagonal
/// array and the merged array.
struct Params {
    int n = 0;
    int p = 0;
    int gamma = 3;
    int alpha = 0;
    std::vector<int> f_I;  ///< bijection on [p]
    std::vector<int> f_J;  ///< bijection on [p-1]

    static Params with_identity_maps(int n, int p, int gamma, int alpha) {
        return {n, p, gamma, alpha, identity_map(p), identity_map(p - 1)};
    }

    int k() const { return 4 * p + 3; }
    /// Anchor diagonal of the three-diagonal array inside the merged array.
    int beta() const { return 2 * p + alpha - 3; }
    Entry shifted_modulus() const { return 2 * Entry{4 * p + gamma} * n + 1; }
    Entry full_modulus() const { return 2 * Entry{n} * k() + 1; }
    bool identity_maps() const { return f_I == identity_map(p) && f_J == identity_map(p - 1); }
};

/// Where an array came from: construction symbols plus the shift of the
/// three-diagonal array.
struct Provenance {
    int p = 0;
    int gamma = 3;
    int alpha = 0;
    std::vector<int> f_I;
    std::vector<int> f_J;
    int shift = 0;

    bool operator==(const Provenance&) const = default;
};

/// Reason the shifted construction rejects these parameters, or nullopt.
inline std::optional<std::string> shifted_params_problem(const Params& prm) {
    if (prm.p <= 0) return "p must be positive";
    if (prm.gamma <= 0) return "gamma must be positive";
    if (prm.n < 4 * prm.p) return "need n >= 4p";
    if (prm.alpha < 2 * prm.p - 1 || prm.alpha > prm.n - 2 * prm.p - 1)
        return "need 2p-1 <= alpha <= n-2p-1";
    if (gcd_ll(prm.n, prm.alpha) != 1) return "need gcd(n, alpha) = 1";
    if (!is_bijection(prm.f_I, prm.p)) return "f_I must be a bijection on [p]";
    if (!is_bijection(prm.f_J, prm.p - 1)) return "f_J must be a bijection on [p-1]";
    return std::nullopt;
}

/// The gcd window an alpha must satisfy for the merged array to be both
/// globally simple and compatible.
inline bool alpha_admissible(int n, int p, int alpha) {
    return alpha >= 2 * p + 2 && alpha <= n - 2 - 2 * p && gcd_ll(n, alpha) == 1 &&
           gcd_ll(n, alpha - 2 * p - 1) == 1 && gcd_ll(n, n - 1 - alpha - 2 * p) == 1;
}

/// Why (f_I, f_J) cannot be used in the merged array, or nullopt.
/// f_J is kept away from both (p-j-4)/4 and (p-j-4)/2.
inline std::optional<std::string> merged_maps_problem(int p, std::span<const int> f_I,
                                                      std::span<const int> f_J) {
    if (!is_bijection(f_I, p)) return "f_I must be a bijection on [p]";
    if (!is_bijection(f_J, p - 1)) return "f_J must be a bijection on [p-1]";
    if (f_I[0] != 0) return "f_I(0) must be 0";
    for (int i = 0; i < p; ++i)
        if (2 * f_I[static_cast<std::size_t>(i)] == 2 * p - i + 1)
            return "f_I(" + std::to_string(i) + ") must differ from (2p-i+1)/2";
    for (int j = 0; j < p - 1; ++j) {
        const int v = f_J[static_cast<std::size_t>(j)];
        if (4 * v == p - j - 4) return "f_J(" + std::to_string(j) + ") must differ from (p-j-4)/4";
        if (2 * v == p - j - 4) return "f_J(" + std::to_string(j) + ") must differ from (p-j-4)/2";
    }
    return std::nullopt;
}

inline std::optional<std::string> merged_params_problem(const Params& prm) {
    if (prm.p <= 0) return "p must be positive";
    if (prm.n % 4 != 1) return "need n = 1 (mod 4)";
    if (prm.n <= 4 * prm.p + 3) return "need n > 4p+3";
    if (prm.gamma != 3) return "merged arrays use gamma = 3";
    if (!alpha_admissible(prm.n, prm.p, prm.alpha))
        return "alpha must satisfy 2p+2 <= alpha <= n-2-2p and gcd(n,alpha) = gcd(n,alpha-2p-1) = "
               "gcd(n,n-1-alpha-2p) = 1";
    return merged_maps_problem(prm.p, prm.f_I, prm.f_J);
}

}  // namespace heffter
