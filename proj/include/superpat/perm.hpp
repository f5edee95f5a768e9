#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace superpat {

/// A permutation of {1,...,n} in one-line notation, n >= 1.
///
/// Immutable after construction. Positions are 1-based wherever they are
/// exposed (accessors, index sets, reports); the raw entry vector is the
/// usual 0-based container.
class Permutation {
public:
    /// Validates that `entries` is a bijection on [n]. Rejects empty input,
    /// duplicates, gaps and non-positive values.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }

    /// 1-based entry access, written pi(i) in the usual notation.
    int at(int pos) const;

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

/// A finite word over the alphabet [q]; repeated letters allowed.
class Word {
public:
    Word(std::vector<int> letters, int q);

    /// Infers the alphabet width as the maximum letter.
    static Word from_letters(std::vector<int> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    int width() const { return q_; }
    const std::vector<int>& letters() const { return letters_; }

    bool operator==(const Word&) const = default;

private:
    std::vector<int> letters_;
    int q_ = 0;
};

/// A strictly increasing sequence of 1-based positions into some host
/// sequence. The host length is validated at the point of use.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);

    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<int> indices_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const IndexSet& ix);

/// rho_r: cyclic left shift by r positions, 0 <= r < n.
Permutation rotate(const Permutation& sigma, int r);

/// Left rotation of a plain sequence (words, lifted sequences).
std::vector<int> rotated(const std::vector<int>& s, int r);

/// The unique rotation of sigma whose first entry is n, and the amount r
/// such that rotate(sigma, r) equals it.
std::pair<Permutation, int> canonical_rotation(const Permutation& sigma);

/// Adds 1 to every entry. The result is a plain sequence, not a
/// Permutation: a lifted permutation is no longer a bijection on [n].
std::vector<int> lift(const std::vector<int>& s);
std::vector<int> lift(const Permutation& sigma);

/// Standardization: the unique permutation order-isomorphic to a sequence
/// of pairwise distinct integers (the i-th smallest value becomes i).
Permutation pattern_of(const std::vector<int>& s);

/// pi restricted to the positions in J, order preserved.
std::vector<int> restrict_to(const Permutation& pi, const IndexSet& J);

/// Direct sum: sigma appended to pi with all entries shifted above pi's.
Permutation direct_sum(const Permutation& pi, const Permutation& sigma);

struct LayerDecomposition {
    bool layered = false;
    std::vector<int> layers;  // lengths, only meaningful when layered
};

/// Decides whether sigma is a direct sum of decreasing permutations and
/// reports the (unique) layer lengths when it is.
LayerDecomposition layer_decomposition(const Permutation& sigma);

bool is_layered(const Permutation& sigma);

/// All pairs of 1-based positions (j, k) with j < k, k >= j + 2 and
/// sigma(j) == sigma(k) + 1, in lexicographic order.
///
/// Example: (2,6,4,5,1,3) has exactly the pairs (1,5), (2,4), (3,6).
/// Note that e.g. positions (3,5) hold the values 4 and 1, which are not
/// consecutive and so do not qualify. A permutation has no such pair if
/// and only if it is layered.
std::vector<std::pair<int, int>> distant_inverse_descents(const Permutation& sigma);

/// Parses a line of space- or comma-separated positive integers.
/// Rejects anything else; an empty/blank line yields an empty vector.
std::vector<int> parse_int_line(const std::string& line);

/// Space-separated rendering, the external one-object-per-line format.
std::string format_ints(const std::vector<int>& values);

}  // namespace superpat
