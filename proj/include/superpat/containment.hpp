#pragma once

#include <optional>
#include <span>
#include <vector>

#include "superpat/perm.hpp"

namespace superpat {

/// Certifies a (possibly rotated) pattern occurrence inside a host.
/// `rotation` is the left rotation applied to the pattern (0 for plain
/// linear checks); `indices` are 1-based positions into the host.
struct Witness {
    int rotation = 0;
    IndexSet indices;

    bool operator==(const Witness&) const = default;
};

/// Witness for exact cyclic subsequence matches in words. Under the default
/// pattern-rotation semantics `word_rotation` is always 0; under the
/// word-cyclic semantics `indices` point into the left-rotated word.
struct WordWitness {
    int pattern_rotation = 0;
    int word_rotation = 0;
    IndexSet indices;

    bool operator==(const WordWitness&) const = default;
};

enum class CyclicSemantics {
    pattern_rotation,  // rotate the pattern, host read linearly
    word_cyclic,       // additionally start anywhere in the host, wrapping at most once
};

/// A pattern compiled for repeated order-isomorphic searches.
///
/// Each pattern position keeps the tightest earlier positions bounding its
/// admissible host-value window from below and above; the backtracking
/// search tests candidates in O(1) against that window. Host entries may
/// repeat (words); since pattern entries are distinct, the strict window
/// excludes reusing equal host values.
class PatternQuery {
public:
    explicit PatternQuery(std::vector<int> pattern);

    /// Leftmost (lexicographically smallest) embedding as 0-based host
    /// indices, or nullopt.
    std::optional<std::vector<int>> find_in(std::span<const int> host) const;

    const std::vector<int>& pattern() const { return pattern_; }

private:
    std::vector<int> pattern_;
    std::vector<int> below_;  // index of the prior position bounding from below, -1 if none
    std::vector<int> above_;  // likewise from above
};

/// Order-isomorphic containment of sigma in pi. The witness, when present,
/// is the lexicographically smallest index set.
std::optional<Witness> contains_pattern(const Permutation& pi, const Permutation& sigma);

/// Order-isomorphic containment of a permutation pattern in an arbitrary
/// integer sequence (hosts with repeated values allowed).
std::optional<IndexSet> find_order_isomorphic(std::span<const int> host, const Permutation& sigma);

/// Circular containment: some rotation of sigma occurs in pi as an
/// order-isomorphic subsequence. The smallest rotation wins; absence is a
/// value, not an error.
std::optional<Witness> contains_circular(const Permutation& pi, const Permutation& sigma);

/// Exact-value subsequence matching; the greedy leftmost match is complete
/// and is the lexicographically least witness.
std::optional<IndexSet> exact_subsequence(const Word& w, const std::vector<int>& s);

/// Exact subsequence up to rotation of s (default), optionally also up to
/// rotation of the word. Smallest pattern rotation first, then smallest
/// word rotation.
std::optional<WordWitness> exact_cyclic_subsequence(
    const Word& w, const std::vector<int>& s,
    CyclicSemantics semantics = CyclicSemantics::pattern_rotation);

/// Re-validates a witness against its host and pattern from first
/// principles, independently of how it was found.
bool validate_witness(const Permutation& pi, const Permutation& sigma, const Witness& w);
bool validate_word_witness(const Word& w, const std::vector<int>& s, const WordWitness& wit);

}  // namespace superpat
