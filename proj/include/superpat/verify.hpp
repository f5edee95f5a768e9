#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "superpat/containment.hpp"
#include "superpat/perm.hpp"

namespace superpat {

enum class Mode { linear, circular };

const char* to_string(Mode mode);

long long factorial(int n);

/// Lexicographic rank <-> permutation of [n] (factorial number system).
Permutation unrank_permutation(int n, long long rank);

/// All k! permutations of [k] in lexicographic order. Guardrail: 1 <= k <= 9.
std::vector<Permutation> enumerate_patterns(int k);
void for_each_pattern(int k, const std::function<void(const Permutation&)>& fn);

/// One canonical representative per cyclic equivalence class (the rotation
/// whose first entry is k), lexicographic; exactly (k-1)! of them.
std::vector<Permutation> enumerate_cyclic_classes(int k);

struct VerifyOptions {
    int workers = 0;  // 0 = auto
    bool collect_witnesses = true;
};

struct VerificationReport {
    Permutation host;
    int k = 0;
    Mode mode = Mode::linear;
    long long total_patterns = 0;
    std::optional<long long> total_classes;  // circular mode only
    std::vector<Permutation> failures;       // patterns / class reps with no witness
    // (pattern, witness) in enumeration order; empty when not collected
    std::vector<std::pair<Permutation, Witness>> witnesses;
    double elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

/// Runs contains_pattern for every sigma in S_k against the host.
VerificationReport verify_superpattern(const Permutation& host, int k,
                                       const VerifyOptions& options = {});

/// Runs contains_circular for one representative per cyclic class; each
/// class is thereby checked through all k rotations.
VerificationReport verify_circular_superpattern(const Permutation& host, int k,
                                                const VerifyOptions& options = {});

struct SearchOptions {
    int workers = 0;
    long long max_nodes = -1;   // candidates examined; < 0 = unlimited
    double max_seconds = -1;    // wall clock; < 0 = unlimited
    bool allow_large = false;   // lift the default k guardrails
};

struct SearchResult {
    int k = 0;
    Mode mode = Mode::linear;
    std::optional<int> minimal_length;
    std::optional<Permutation> example;  // lexicographically first at minimal_length
    std::vector<std::pair<int, long long>> lengths_refuted;  // (length, candidates searched)
    bool budget_exhausted = false;
    std::optional<int> exhausted_at_length;  // length being scanned when the budget ran out
    long long nodes = 0;                     // total candidates examined
    double elapsed_ms = 0;
};

/// Smallest n <= n_limit admitting a verifying permutation, scanning each
/// length in lexicographic order. n_limit < 0 selects the construction
/// bound for the mode, where a superpattern is guaranteed to exist.
SearchResult min_superpattern_length(int k, Mode mode, int n_limit = -1,
                                     const SearchOptions& options = {});

struct IdentityReport {
    int k = 0;
    long long total = 0;  // k!
    std::vector<Permutation> lift_violations;
    std::vector<Permutation> circular_lift_violations;
    bool oddsum_asserted = false;  // odd k only
    std::vector<Permutation> oddsum_violations;
    long long circular_zero_count = 0;  // informational; nonzero only for even k
    std::optional<Permutation> circular_zero_example;
    std::array<long long, 4> shifted_case_counts{};  // (S, parity of first): (0,even),(0,odd),(1,even),(1,odd)
    std::vector<Permutation> shifted_violations;
    double elapsed_ms = 0;

    bool ok() const {
        return lift_violations.empty() && circular_lift_violations.empty() &&
               oddsum_violations.empty() && shifted_violations.empty();
    }
};

/// Evaluates the lift, circular lift, odd-k nonvanishing and shifted-score
/// relations over all of S_k. Nonvanishing is asserted only for odd k.
IdentityReport check_identities(int k);

struct EmbeddingReport {
    int k = 0;
    long long total = 0;
    // (a) sigma or lift(sigma) exact in zz(k,k+1)
    std::vector<Permutation> exact_counterexamples;
    // (b) odd k: sigma or lift(sigma) cyclically exact in zz(k-1,k+1)
    bool cyclic_checked = false;
    std::vector<Permutation> cyclic_counterexamples_pattern_rotation;
    std::vector<Permutation> cyclic_counterexamples_word_cyclic;
    // (c) even k: some rotation of sigma order-isomorphic in zz(k-1,k+1)
    bool circular_iso_checked = false;
    std::vector<Permutation> circular_iso_counterexamples;
    double elapsed_ms = 0;

    /// Verdict; part (b) is gated on the chosen semantics (the other is
    /// still reported).
    bool ok(CyclicSemantics semantics = CyclicSemantics::pattern_rotation) const {
        if (!exact_counterexamples.empty()) return false;
        if (cyclic_checked) {
            const auto& gate = semantics == CyclicSemantics::pattern_rotation
                                   ? cyclic_counterexamples_pattern_rotation
                                   : cyclic_counterexamples_word_cyclic;
            if (!gate.empty()) return false;
        }
        if (circular_iso_checked && !circular_iso_counterexamples.empty()) return false;
        return true;
    }
};

/// Exercises the exact and circular embedding statements for every sigma
/// in S_k against the corresponding zigzag words.
EmbeddingReport check_embedding_theorems(int k);

}  // namespace superpat
