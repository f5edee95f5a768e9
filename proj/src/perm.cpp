#include "superpat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superpat {

namespace {

void print_joined(std::ostream& os, const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty input");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1) throw std::invalid_argument("permutation: entries must be positive");
        if (v > n) throw std::invalid_argument("permutation: entry " + std::to_string(v) +
                                               " exceeds length " + std::to_string(n));
        if (seen[v]) throw std::invalid_argument("permutation: duplicate entry " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("identity: n must be >= 1");
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

int Permutation::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("permutation: position out of range");
    return entries_[pos - 1];
}

Word::Word(std::vector<int> letters, int q) : letters_(std::move(letters)), q_(q) {
    if (q_ < 1) throw std::invalid_argument("word: alphabet width must be >= 1");
    for (int v : letters_) {
        if (v < 1 || v > q_)
            throw std::invalid_argument("word: letter " + std::to_string(v) +
                                        " outside alphabet [" + std::to_string(q_) + "]");
    }
}

Word Word::from_letters(std::vector<int> letters) {
    int q = 1;
    for (int v : letters) q = std::max(q, v);
    return Word(std::move(letters), q);
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1) throw std::invalid_argument("index set: positions are 1-based");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw std::invalid_argument("index set: positions must be strictly increasing");
    }
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    print_joined(os, p.entries());
    return os;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    print_joined(os, w.letters());
    return os;
}

std::ostream& operator<<(std::ostream& os, const IndexSet& ix) {
    print_joined(os, ix.indices());
    return os;
}

Permutation rotate(const Permutation& sigma, int r) {
    const int n = sigma.size();
    if (r < 0 || r >= n) throw std::out_of_range("rotate: need 0 <= r < n");
    return Permutation(rotated(sigma.entries(), r));
}

std::vector<int> rotated(const std::vector<int>& s, int r) {
    if (s.empty()) return {};
    const int n = static_cast<int>(s.size());
    if (r < 0 || r >= n) throw std::out_of_range("rotated: need 0 <= r < n");
    std::vector<int> out;
    out.reserve(s.size());
    out.insert(out.end(), s.begin() + r, s.end());
    out.insert(out.end(), s.begin(), s.begin() + r);
    return out;
}

std::pair<Permutation, int> canonical_rotation(const Permutation& sigma) {
    const int n = sigma.size();
    for (int i = 0; i < n; ++i) {
        if (sigma.entries()[i] == n) return {rotate(sigma, i), i};
    }
    throw std::logic_error("canonical_rotation: maximum entry not found");
}

std::vector<int> lift(const std::vector<int>& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(v + 1);
    return out;
}

std::vector<int> lift(const Permutation& sigma) { return lift(sigma.entries()); }

Permutation pattern_of(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) throw std::invalid_argument("pattern_of: empty input");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s[a] < s[b]; });
    for (int i = 1; i < n; ++i) {
        if (s[order[i]] == s[order[i - 1]])
            throw std::invalid_argument("pattern_of: entries must be pairwise distinct");
    }
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[order[i]] = i + 1;
    return Permutation(std::move(ranks));
}

std::vector<int> restrict_to(const Permutation& pi, const IndexSet& J) {
    std::vector<int> out;
    out.reserve(J.indices().size());
    for (int pos : J.indices()) {
        if (pos > pi.size()) throw std::out_of_range("restrict_to: index exceeds host length");
        out.push_back(pi.entries()[pos - 1]);
    }
    return out;
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
    std::vector<int> out = pi.entries();
    out.reserve(pi.size() + sigma.size());
    for (int v : sigma.entries()) out.push_back(v + pi.size());
    return Permutation(std::move(out));
}

LayerDecomposition layer_decomposition(const Permutation& sigma) {
    // A layered permutation is forced block by block: the first entry names
    // the size of the first (decreasing) layer, and so on with an offset.
    const auto& e = sigma.entries();
    const int n = sigma.size();
    LayerDecomposition result;
    int start = 0;
    while (start < n) {
        const int len = e[start] - start;
        if (len < 1 || start + len > n) return {false, {}};
        for (int i = 0; i < len; ++i) {
            if (e[start + i] != start + len - i) return {false, {}};
        }
        result.layers.push_back(len);
        start += len;
    }
    result.layered = true;
    return result;
}

bool is_layered(const Permutation& sigma) { return layer_decomposition(sigma).layered; }

std::vector<std::pair<int, int>> distant_inverse_descents(const Permutation& sigma) {
    const auto& e = sigma.entries();
    const int n = sigma.size();
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 2; k < n; ++k) {
            if (e[j] == e[k] + 1) pairs.emplace_back(j + 1, k + 1);
        }
    }
    return pairs;
}

std::vector<int> parse_int_line(const std::string& line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::vector<int> values;
    std::string token;
    while (in >> token) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
        if (v < 1) throw std::invalid_argument("values must be positive: '" + token + "'");
        values.push_back(v);
    }
    return values;
}

std::string format_ints(const std::vector<int>& values) {
    std::ostringstream out;
    print_joined(out, values);
    return out.str();
}

}  // namespace superpat
