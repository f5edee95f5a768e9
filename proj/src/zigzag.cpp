#include "superpat/zigzag.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "superpat/containment.hpp"

namespace superpat {

namespace {

void require_scoreable(const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("score: empty input");
    for (int v : s) {
        if (v < 1) throw std::invalid_argument("score: values must be positive");
    }
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("score: values must be distinct");
}

// Position of value v within run j over [q], or -1 when v is not in it.
int position_in_run(int j, int q, int v) {
    const bool odd_run = (j % 2 == 1);
    if (odd_run) {
        if (v % 2 == 0 || v > q) return -1;
        return (v - 1) / 2;  // 1,3,5,... ascending
    }
    if (v % 2 == 1 || v > q) return -1;
    const int even_count = q / 2;
    return even_count - v / 2;  // q or q-1 down to 2
}

}  // namespace

Word zigzag_run(int j, int q) {
    if (j < 1) throw std::invalid_argument("zigzag run: j must be >= 1");
    if (q < 2) throw std::invalid_argument("zigzag run: q must be >= 2");
    std::vector<int> letters;
    if (j % 2 == 1) {
        for (int v = 1; v <= q; v += 2) letters.push_back(v);
    } else {
        for (int v = q - (q % 2 == 1 ? 1 : 0); v >= 2; v -= 2) letters.push_back(v);
    }
    return Word(std::move(letters), q);
}

Word zigzag_word(const ZigzagSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("zigzag word: m must be >= 1");
    if (spec.q < 2) throw std::invalid_argument("zigzag word: q must be >= 2");
    std::vector<int> letters;
    for (int j = 1; j <= spec.m; ++j) {
        const auto run = zigzag_run(j, spec.q).letters();
        letters.insert(letters.end(), run.begin(), run.end());
    }
    return Word(std::move(letters), spec.q);
}

Word zigzag_word(int m, int q) { return zigzag_word(ZigzagSpec{m, q}); }

Permutation break_ties(const Word& w) {
    const auto& letters = w.letters();
    if (letters.empty()) throw std::invalid_argument("break_ties: empty word");
    const int n = static_cast<int>(letters.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Levels bottom-up, right to left within a level.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (letters[a] != letters[b]) return letters[a] < letters[b];
        return a > b;
    });
    std::vector<int> ranks(n);
    for (int j = 0; j < n; ++j) ranks[order[j]] = j + 1;
    return Permutation(std::move(ranks));
}

int parity_sign(int x) {
    if (x < 1) throw std::invalid_argument("parity_sign: x must be >= 1");
    return x % 2 == 0 ? 1 : -1;
}

int local_cost(int x, int y) {
    const int px = parity_sign(x);
    const int py = parity_sign(y);
    const int delta = (x == y) ? 1 : 0;
    const int same_parity = (px * py + 1) / 2;
    const int sgn = (x > y) - (x < y);
    return delta - same_parity * sgn * px;
}

int initial_cost(int x) { return (1 + parity_sign(x)) / 2; }

const char* to_string(ScoreKind kind) {
    switch (kind) {
        case ScoreKind::linear: return "linear";
        case ScoreKind::circular: return "circular";
        case ScoreKind::shifted: return "shifted";
    }
    return "?";
}

ScoreReport score(const std::vector<int>& s) {
    require_scoreable(s);
    ScoreReport report;
    report.kind = ScoreKind::linear;
    report.initial = initial_cost(s.front());
    int total = *report.initial;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        const int c = local_cost(s[i], s[i + 1]);
        report.steps.push_back({s[i], s[i + 1], c});
        total += c;
    }
    report.total = total;
    return report;
}

ScoreReport score(const Permutation& sigma) { return score(sigma.entries()); }

ScoreReport circular_score(const std::vector<int>& s) {
    require_scoreable(s);
    ScoreReport report;
    report.kind = ScoreKind::circular;
    int total = 0;
    const int k = static_cast<int>(s.size());
    if (k >= 2) {
        for (int i = 0; i < k; ++i) {
            const int x = s[i];
            const int y = s[(i + 1) % k];
            const int c = local_cost(x, y);
            report.steps.push_back({x, y, c});
            total += c;
        }
    }
    report.total = total;
    return report;
}

ScoreReport circular_score(const Permutation& sigma) { return circular_score(sigma.entries()); }

ScoreReport shifted_score(const std::vector<int>& s) {
    require_scoreable(s);
    ScoreReport report;
    report.kind = ScoreKind::shifted;
    report.initial = (1 - parity_sign(s.front())) / 2;
    int total = *report.initial;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        const int c = local_cost(s[i], s[i + 1]);
        report.steps.push_back({s[i], s[i + 1], c});
        total += c;
    }
    report.total = total;
    return report;
}

ScoreReport shifted_score(const Permutation& sigma) { return shifted_score(sigma.entries()); }

std::vector<int> greedy_place(const std::vector<int>& s, int q) {
    if (q < 2) throw std::invalid_argument("greedy_place: q must be >= 2");
    for (int v : s) {
        if (v < 1) throw std::invalid_argument("greedy_place: values must be positive");
        if (v > q) throw std::invalid_argument("greedy_place: value exceeds alphabet width");
    }
    std::vector<int> runs;
    runs.reserve(s.size());
    int run = 1;
    int pos = -1;  // position of the previous element within `run`
    for (int v : s) {
        int p = position_in_run(run, q, v);
        if (p < 0 || p <= pos) {
            // advance to the earliest later run containing v
            ++run;
            while ((p = position_in_run(run, q, v)) < 0) ++run;
        }
        pos = p;
        runs.push_back(run);
    }
    return runs;
}

int min_runs(const std::vector<int>& s) {
    require_scoreable(s);
    int q = 2;
    for (int v : s) q = std::max(q, v + 2);
    const int cap = 2 * static_cast<int>(s.size()) + 2;
    for (int m = 1; m <= cap; ++m) {
        if (exact_subsequence(zigzag_word(m, q), s)) return m;
    }
    throw std::logic_error("min_runs: no embedding within the run cap");
}

}  // namespace superpat
