#include "superpat/containment.hpp"

#include <algorithm>
#include <stdexcept>

namespace superpat {

namespace {

IndexSet to_one_based(const std::vector<int>& zero_based) {
    std::vector<int> out;
    out.reserve(zero_based.size());
    for (int i : zero_based) out.push_back(i + 1);
    return IndexSet(std::move(out));
}

}  // namespace

PatternQuery::PatternQuery(std::vector<int> pattern) : pattern_(std::move(pattern)) {
    const int k = static_cast<int>(pattern_.size());
    below_.assign(k, -1);
    above_.assign(k, -1);
    for (int t = 0; t < k; ++t) {
        for (int s = 0; s < t; ++s) {
            if (pattern_[s] == pattern_[t])
                throw std::invalid_argument("pattern query: entries must be distinct");
            if (pattern_[s] < pattern_[t]) {
                if (below_[t] < 0 || pattern_[s] > pattern_[below_[t]]) below_[t] = s;
            } else {
                if (above_[t] < 0 || pattern_[s] < pattern_[above_[t]]) above_[t] = s;
            }
        }
    }
}

std::optional<std::vector<int>> PatternQuery::find_in(std::span<const int> host) const {
    const int n = static_cast<int>(host.size());
    const int k = static_cast<int>(pattern_.size());
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;

    // Depth-first over pattern positions, candidates tried in increasing
    // host order, so the first complete match is lexicographically least.
    std::vector<int> chosen(k, 0);
    int t = 0;
    int i = 0;
    while (true) {
        bool descended = false;
        const int limit = n - (k - t);  // leave room for the remaining entries
        const bool has_lo = below_[t] >= 0;
        const bool has_hi = above_[t] >= 0;
        const int lo = has_lo ? host[chosen[below_[t]]] : 0;
        const int hi = has_hi ? host[chosen[above_[t]]] : 0;
        for (; i <= limit; ++i) {
            const int v = host[i];
            if (has_lo && v <= lo) continue;
            if (has_hi && v >= hi) continue;
            chosen[t] = i;
            if (t + 1 == k) return chosen;
            ++t;
            i = chosen[t - 1] + 1;
            descended = true;
            break;
        }
        if (descended) continue;
        if (t == 0) return std::nullopt;
        --t;
        i = chosen[t] + 1;
    }
}

std::optional<Witness> contains_pattern(const Permutation& pi, const Permutation& sigma) {
    auto hit = find_order_isomorphic(pi.entries(), sigma);
    if (!hit) return std::nullopt;
    return Witness{0, std::move(*hit)};
}

std::optional<IndexSet> find_order_isomorphic(std::span<const int> host, const Permutation& sigma) {
    PatternQuery query(sigma.entries());
    auto hit = query.find_in(host);
    if (!hit) return std::nullopt;
    return to_one_based(*hit);
}

std::optional<Witness> contains_circular(const Permutation& pi, const Permutation& sigma) {
    for (int r = 0; r < sigma.size(); ++r) {
        auto hit = find_order_isomorphic(pi.entries(), rotate(sigma, r));
        if (hit) return Witness{r, std::move(*hit)};
    }
    return std::nullopt;
}

std::optional<IndexSet> exact_subsequence(const Word& w, const std::vector<int>& s) {
    const auto& letters = w.letters();
    std::vector<int> indices;
    indices.reserve(s.size());
    size_t i = 0;
    for (int want : s) {
        while (i < letters.size() && letters[i] != want) ++i;
        if (i == letters.size()) return std::nullopt;
        indices.push_back(static_cast<int>(i) + 1);
        ++i;
    }
    return IndexSet(std::move(indices));
}

std::optional<WordWitness> exact_cyclic_subsequence(const Word& w, const std::vector<int>& s,
                                                    CyclicSemantics semantics) {
    if (s.empty()) return WordWitness{0, 0, IndexSet{}};
    const int k = static_cast<int>(s.size());
    for (int r = 0; r < k; ++r) {
        const std::vector<int> pattern = rotated(s, r);
        if (semantics == CyclicSemantics::pattern_rotation) {
            if (auto hit = exact_subsequence(w, pattern)) return WordWitness{r, 0, std::move(*hit)};
        } else {
            for (int t = 0; t < w.size(); ++t) {
                Word host(rotated(w.letters(), t), w.width());
                if (auto hit = exact_subsequence(host, pattern))
                    return WordWitness{r, t, std::move(*hit)};
            }
        }
    }
    return std::nullopt;
}

bool validate_witness(const Permutation& pi, const Permutation& sigma, const Witness& w) {
    if (w.indices.size() != sigma.size()) return false;
    if (w.rotation < 0 || w.rotation >= sigma.size()) return false;
    std::vector<int> values;
    try {
        values = restrict_to(pi, w.indices);
    } catch (const std::out_of_range&) {
        return false;
    }
    return pattern_of(values) == rotate(sigma, w.rotation);
}

bool validate_word_witness(const Word& w, const std::vector<int>& s, const WordWitness& wit) {
    if (s.empty()) return wit.indices.empty();
    if (wit.pattern_rotation < 0 || wit.pattern_rotation >= static_cast<int>(s.size())) return false;
    if (wit.word_rotation < 0 || wit.word_rotation >= w.size()) return false;
    const std::vector<int> host = rotated(w.letters(), wit.word_rotation);
    const std::vector<int> pattern = rotated(s, wit.pattern_rotation);
    if (wit.indices.size() != static_cast<int>(pattern.size())) return false;
    for (size_t t = 0; t < pattern.size(); ++t) {
        const int pos = wit.indices.indices()[t];
        if (pos > static_cast<int>(host.size())) return false;
        if (host[pos - 1] != pattern[t]) return false;
    }
    return true;
}

}  // namespace superpat
