#pragma once

#include <optional>
#include <vector>

#include "superpat/perm.hpp"
#include "superpat/zigzag.hpp"

namespace superpat {

enum class Method { ev_linear, circ_from_linear, zzc_odd };

const char* to_string(Method method);

struct ConstructionResult {
    Permutation permutation;
    std::optional<Word> source_word;
    Method method = Method::ev_linear;
    int claimed_k = 0;
    int length = 0;  // == permutation.size()
};

/// Linear n-superpattern via break-ties: zz(n,n) for odd n, zz(n,n) with
/// the letter 1 appended for even n. Length ceil((n^2+1)/2).
ConstructionResult ev_linear_superpattern(int n);

/// Prepends L+1 to pi. When pi is a (k-1)-superpattern the result is a
/// circular k-superpattern of length L+1; this builder does not verify
/// that precondition (callers compose it with verification explicitly).
ConstructionResult circular_from_linear(const Permutation& pi, int claimed_k = 0);

/// The modified zigzag word for odd k >= 5: zz(k-1,k-1) with 1 appended,
/// whose final letters (2,1) are replaced by (k,k-1). Length (k-1)^2/2 + 1.
Word zzc_word(int k);

/// break_ties(zzc_word(k)): the candidate odd circular k-superpattern.
ConstructionResult zzc_permutation(int k);

/// The explicit length bounds side by side; the table and remark formulas
/// disagree in general, so all are reported without adjudicating.
struct BoundsReport {
    int k = 0;
    std::optional<long long> word_alphabet;  // (k-1)(k+1)/2, odd k
    long long table_permutation = 0;         // ceil((k^2+1)/2) + 1
    long long remark = 0;                    // ceil((k^2-2k+4)/2)
    std::optional<long long> zzc_length;     // (k-1)^2/2 + 1, odd k >= 5
};

BoundsReport bounds(int k);

}  // namespace superpat
