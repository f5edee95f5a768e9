#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superpat/perm.hpp"

namespace superpat {

/// Parameters of a zigzag word: m runs over the alphabet [q].
struct ZigzagSpec {
    int m = 1;  // number of runs, >= 1
    int q = 2;  // alphabet width, >= 2
};

/// The j-th run: odd j lists the odd values of [q] ascending, even j the
/// even values of [q] descending.
Word zigzag_run(int j, int q);

/// zz(m,q): concatenation of runs 1..m.
Word zigzag_word(const ZigzagSpec& spec);
Word zigzag_word(int m, int q);

/// Converts a word to a permutation by ranking its points bottom level
/// first, right to left within a level.
Permutation break_ties(const Word& w);

/// +1 for even x, -1 for odd x.
int parity_sign(int x);

/// Cost of placing y after x in a zigzag word, one less than the number of
/// runs advanced: -1 same run, 0 next run, +1 two runs on.
int local_cost(int x, int y);

/// Runs skipped before the first element can be placed: 0 for odd x
/// (run 1 accepts it), 1 for even x.
int initial_cost(int x);

enum class ScoreKind { linear, circular, shifted };

struct ScoreStep {
    int x = 0;
    int y = 0;
    int cost = 0;

    bool operator==(const ScoreStep&) const = default;
};

struct ScoreReport {
    ScoreKind kind = ScoreKind::linear;
    std::vector<ScoreStep> steps;
    std::optional<int> initial;  // absent for circular scores
    int total = 0;
};

const char* to_string(ScoreKind kind);

/// Linear score: initial cost plus the local costs of consecutive pairs.
/// Equals the minimum zigzag runs containing s, minus its length.
ScoreReport score(const std::vector<int>& s);
ScoreReport score(const Permutation& sigma);

/// Sum of local costs around the cycle, wrap pair included; no initial
/// term. Invariant under rotation. A singleton cycle has no adjacent
/// pairs, so its circular score is 0.
ScoreReport circular_score(const std::vector<int>& s);
ScoreReport circular_score(const Permutation& sigma);

/// Score after shifting the placement one run: the pair costs with the
/// initial term flipped to (1 - p)/2.
ScoreReport shifted_score(const std::vector<int>& s);
ScoreReport shifted_score(const Permutation& sigma);

/// Greedy leftmost placement of s into the unbounded zigzag word over [q];
/// returns the 1-based run index of each element. Serves as the score
/// oracle: the last run index equals len(s) + score(s).total.
std::vector<int> greedy_place(const std::vector<int>& s, int q);

/// Smallest m such that s occurs exactly in zz(m, max(s)+2), found by
/// incremental search.
int min_runs(const std::vector<int>& s);

}  // namespace superpat
