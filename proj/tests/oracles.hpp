#pragma once

// Test-only oracles: plain subset enumeration, independent of the library's
// backtracking and greedy search paths.

#include <optional>
#include <vector>

namespace oracles {

// Advances a size-k index combination in lexicographic order; false when done.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline bool order_isomorphic(const std::vector<int>& host, const std::vector<int>& chosen,
                             const std::vector<int>& pattern) {
    const int k = static_cast<int>(pattern.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const bool host_less = host[chosen[a]] < host[chosen[b]];
            const bool host_greater = host[chosen[a]] > host[chosen[b]];
            if (pattern[a] < pattern[b] ? !host_less : !host_greater) return false;
        }
    }
    return true;
}

// First order-isomorphic embedding over all C(n,k) index subsets in
// lexicographic order; 1-based indices.
inline std::optional<std::vector<int>> brute_force_embedding(const std::vector<int>& host,
                                                             const std::vector<int>& pattern) {
    const int n = static_cast<int>(host.size());
    const int k = static_cast<int>(pattern.size());
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;
    std::vector<int> chosen(k);
    for (int i = 0; i < k; ++i) chosen[i] = i;
    do {
        if (order_isomorphic(host, chosen, pattern)) {
            std::vector<int> out;
            for (int i : chosen) out.push_back(i + 1);
            return out;
        }
    } while (next_combination(chosen, n));
    return std::nullopt;
}

// Lexicographically least exact-value match, by the same subset sweep.
inline std::optional<std::vector<int>> brute_force_exact_least(const std::vector<int>& host,
                                                               const std::vector<int>& s) {
    const int n = static_cast<int>(host.size());
    const int k = static_cast<int>(s.size());
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;
    std::vector<int> chosen(k);
    for (int i = 0; i < k; ++i) chosen[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < k && match; ++i) match = host[chosen[i]] == s[i];
        if (match) {
            std::vector<int> out;
            for (int i : chosen) out.push_back(i + 1);
            return out;
        }
    } while (next_combination(chosen, n));
    return std::nullopt;
}

}  // namespace oracles
