#include "superpat/constructions.hpp"

#include <stdexcept>

namespace superpat {

const char* to_string(Method method) {
    switch (method) {
        case Method::ev_linear: return "ev-linear";
        case Method::circ_from_linear: return "circ-from-linear";
        case Method::zzc_odd: return "zzc-odd";
    }
    return "?";
}

ConstructionResult ev_linear_superpattern(int n) {
    if (n < 2) throw std::invalid_argument("ev_linear_superpattern: n must be >= 2");
    std::vector<int> letters = zigzag_word(n, n).letters();
    if (n % 2 == 0) letters.push_back(1);
    Word word(std::move(letters), n);
    Permutation zeta = break_ties(word);
    const int length = zeta.size();
    return ConstructionResult{std::move(zeta), std::move(word), Method::ev_linear, n, length};
}

ConstructionResult circular_from_linear(const Permutation& pi, int claimed_k) {
    std::vector<int> entries;
    entries.reserve(pi.size() + 1);
    entries.push_back(pi.size() + 1);
    entries.insert(entries.end(), pi.entries().begin(), pi.entries().end());
    Permutation gamma(std::move(entries));
    const int length = gamma.size();
    return ConstructionResult{std::move(gamma), std::nullopt, Method::circ_from_linear, claimed_k,
                              length};
}

Word zzc_word(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("zzc_word: k must be odd and >= 5");
    std::vector<int> letters = zigzag_word(k - 1, k - 1).letters();
    letters.push_back(1);
    const size_t n = letters.size();
    if (letters[n - 2] != 2 || letters[n - 1] != 1)
        throw std::logic_error("zzc_word: tail is not (2,1)");
    letters[n - 2] = k;
    letters[n - 1] = k - 1;
    return Word(std::move(letters), k);
}

ConstructionResult zzc_permutation(int k) {
    Word word = zzc_word(k);
    Permutation gamma = break_ties(word);
    const int length = gamma.size();
    return ConstructionResult{std::move(gamma), std::move(word), Method::zzc_odd, k, length};
}

BoundsReport bounds(int k) {
    if (k < 2) throw std::invalid_argument("bounds: k must be >= 2");
    const long long kk = k;
    BoundsReport report;
    report.k = k;
    if (k % 2 == 1) report.word_alphabet = (kk - 1) * (kk + 1) / 2;
    report.table_permutation = (kk * kk + 1 + 1) / 2 + 1;  // ceil((k^2+1)/2) + 1
    report.remark = (kk * kk - 2 * kk + 4 + 1) / 2;        // ceil((k^2-2k+4)/2)
    if (k % 2 == 1 && k >= 5) report.zzc_length = (kk - 1) * (kk - 1) / 2 + 1;
    return report;
}

}  // namespace superpat
