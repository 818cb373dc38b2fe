#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "heffter/params.hpp"

namespace testing_support {

inline std::vector<int> random_bijection(int size, std::mt19937_64& rng) {
    auto f = heffter::identity_map(size);
    std::shuffle(f.begin(), f.end(), rng);
    return f;
}

/// (n, p, gamma, alpha) grid shared by the shifted-array property tests.
struct ShiftedCase {
    int n, p, gamma, alpha;
};

inline std::vector<ShiftedCase> shifted_grid(std::vector<int> ps, std::vector<int> gammas) {
    std::vector<ShiftedCase> out;
    for (int n = 12; n <= 25; ++n)
        for (int p : ps) {
            if (4 * p > n) continue;
            for (int g : gammas)
                for (int a = 2 * p - 1; a <= n - 2 * p - 1; ++a)
                    if (std::gcd(n, a) == 1) out.push_back({n, p, g, a});
        }
    return out;
}

}  // namespace testing_support
