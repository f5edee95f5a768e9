#include "superpat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "superpat/zigzag.hpp"

namespace superpat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

void run_parallel(int workers, const std::function<void(int)>& body) {
    if (workers <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
}

// Static contiguous chunks; each worker owns a disjoint index range, so
// results merge deterministically by index.
void parallel_over(long long count, int workers, const std::function<void(long long, long long)>& body) {
    workers = static_cast<int>(std::min<long long>(workers, std::max<long long>(count, 1)));
    if (workers <= 1) {
        body(0, count);
        return;
    }
    const long long chunk = (count + workers - 1) / workers;
    run_parallel(workers, [&](int t) {
        const long long lo = t * chunk;
        const long long hi = std::min(count, lo + chunk);
        if (lo < hi) body(lo, hi);
    });
}

void require_pattern_size(int k) {
    if (k < 1 || k > 9) throw std::invalid_argument("pattern length must be in [1, 9]");
}

// One cyclic class compiled for repeated membership tests: the queries of
// all k rotations of the representative, in rotation order.
struct CompiledClass {
    std::vector<PatternQuery> rotations;
};

std::vector<CompiledClass> compile_circular_classes(int k) {
    std::vector<CompiledClass> classes;
    for (const Permutation& rep : enumerate_cyclic_classes(k)) {
        CompiledClass cc;
        cc.rotations.reserve(k);
        for (int r = 0; r < k; ++r) cc.rotations.emplace_back(rotate(rep, r).entries());
        classes.push_back(std::move(cc));
    }
    return classes;
}

std::vector<CompiledClass> compile_linear_patterns(int k) {
    std::vector<CompiledClass> classes;
    for (const Permutation& sigma : enumerate_patterns(k)) {
        CompiledClass cc;
        cc.rotations.emplace_back(sigma.entries());
        classes.push_back(std::move(cc));
    }
    return classes;
}

bool class_contained(std::span<const int> host, const CompiledClass& cc) {
    for (const PatternQuery& q : cc.rotations) {
        if (q.find_in(host)) return true;
    }
    return false;
}

// Refutation-oriented test with a per-caller cache of the last class that
// failed; trying it first makes consecutive refutations cheap.
bool all_classes_contained(std::span<const int> host, const std::vector<CompiledClass>& classes,
                           int& last_fail) {
    const int m = static_cast<int>(classes.size());
    if (last_fail >= 0 && last_fail < m && !class_contained(host, classes[last_fail])) return false;
    for (int c = 0; c < m; ++c) {
        if (c == last_fail) continue;
        if (!class_contained(host, classes[c])) {
            last_fail = c;
            return false;
        }
    }
    return true;
}

VerificationReport run_verification(const Permutation& host, int k, Mode mode,
                                    const VerifyOptions& options) {
    require_pattern_size(k);
    if (k > host.size())
        throw std::invalid_argument("verify: k exceeds the host length, every pattern would fail");
    const auto start = Clock::now();

    const std::vector<Permutation> items =
        mode == Mode::circular ? enumerate_cyclic_classes(k) : enumerate_patterns(k);
    const long long count = static_cast<long long>(items.size());

    std::vector<std::optional<Witness>> results(items.size());
    parallel_over(count, resolve_workers(options.workers), [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            results[i] = mode == Mode::circular ? contains_circular(host, items[i])
                                                : contains_pattern(host, items[i]);
        }
    });

    VerificationReport report{host, k, mode, factorial(k), std::nullopt, {}, {}, 0};
    if (mode == Mode::circular) report.total_classes = static_cast<long long>(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        if (!results[i]) {
            report.failures.push_back(items[i]);
        } else if (options.collect_witnesses) {
            report.witnesses.emplace_back(items[i], std::move(*results[i]));
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::circular ? "circular" : "linear"; }

long long factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Permutation unrank_permutation(int n, long long rank) {
    if (n < 1) throw std::invalid_argument("unrank: n must be >= 1");
    if (rank < 0 || rank >= factorial(n)) throw std::out_of_range("unrank: rank out of range");
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    long long r = rank;
    for (int i = n - 1; i >= 0; --i) {
        const long long f = factorial(i);
        const int idx = static_cast<int>(r / f);
        r %= f;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> enumerate_patterns(int k) {
    require_pattern_size(k);
    std::vector<Permutation> out;
    out.reserve(factorial(k));
    for_each_pattern(k, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

void for_each_pattern(int k, const std::function<void(const Permutation&)>& fn) {
    require_pattern_size(k);
    std::vector<int> entries(k);
    std::iota(entries.begin(), entries.end(), 1);
    do {
        fn(Permutation(entries));
    } while (std::next_permutation(entries.begin(), entries.end()));
}

std::vector<Permutation> enumerate_cyclic_classes(int k) {
    require_pattern_size(k);
    std::vector<Permutation> out;
    out.reserve(factorial(k - 1));
    if (k == 1) {
        out.push_back(Permutation::identity(1));
        return out;
    }
    std::vector<int> tail(k - 1);
    std::iota(tail.begin(), tail.end(), 1);
    do {
        std::vector<int> entries;
        entries.reserve(k);
        entries.push_back(k);
        entries.insert(entries.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(entries));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

VerificationReport verify_superpattern(const Permutation& host, int k, const VerifyOptions& options) {
    return run_verification(host, k, Mode::linear, options);
}

VerificationReport verify_circular_superpattern(const Permutation& host, int k,
                                                const VerifyOptions& options) {
    return run_verification(host, k, Mode::circular, options);
}

SearchResult min_superpattern_length(int k, Mode mode, int n_limit, const SearchOptions& options) {
    require_pattern_size(k);
    if (!options.allow_large) {
        if (mode == Mode::circular && k > 5)
            throw std::invalid_argument("search: circular k > 5 requires allow_large");
        if (mode == Mode::linear && k > 4)
            throw std::invalid_argument("search: linear k > 4 requires allow_large");
    }
    if (n_limit < 0) {
        const long long kk = k;
        const long long bound = mode == Mode::linear ? (kk * kk + 2) / 2          // ceil((k^2+1)/2)
                                                     : (kk * kk - 2 * kk + 5) / 2;  // remark bound
        n_limit = static_cast<int>(std::max<long long>(bound, k));
    }
    if (n_limit > 12) throw std::invalid_argument("search: n_limit beyond 12 is not supported");

    const auto start = Clock::now();
    const std::vector<CompiledClass> classes =
        mode == Mode::circular ? compile_circular_classes(k) : compile_linear_patterns(k);
    const int workers = resolve_workers(options.workers);

    SearchResult result;
    result.k = k;
    result.mode = mode;

    std::atomic<long long> nodes_total{0};
    std::atomic<bool> stop{false};

    for (int n = k; n <= n_limit; ++n) {
        const long long total = factorial(n);
        constexpr long long kBlock = 64;
        const long long nblocks = (total + kBlock - 1) / kBlock;
        std::atomic<long long> next_block{0};
        std::atomic<long long> best{LLONG_MAX};

        run_parallel(std::min<long long>(workers, nblocks), [&](int) {
            int last_fail = -1;
            while (!stop.load(std::memory_order_relaxed)) {
                const long long b = next_block.fetch_add(1, std::memory_order_relaxed);
                if (b >= nblocks) break;
                const long long lo = b * kBlock;
                const long long hi = std::min(total, lo + kBlock);
                if (lo >= best.load(std::memory_order_relaxed)) break;

                std::vector<int> host = unrank_permutation(n, lo).entries();
                long long examined = 0;
                for (long long rank = lo; rank < hi; ++rank) {
                    if (rank > lo) std::next_permutation(host.begin(), host.end());
                    if (rank >= best.load(std::memory_order_relaxed)) break;
                    ++examined;
                    if (all_classes_contained(host, classes, last_fail)) {
                        long long seen = best.load();
                        while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
                        }
                        break;
                    }
                }
                const long long done = nodes_total.fetch_add(examined) + examined;
                if (options.max_nodes >= 0 && done >= options.max_nodes) stop.store(true);
                if (options.max_seconds >= 0 && ms_since(start) >= options.max_seconds * 1000.0)
                    stop.store(true);
            }
        });

        const long long found = best.load();
        if (found < total) {
            result.minimal_length = n;
            result.example = unrank_permutation(n, found);
            if (stop.load()) {
                // Ranks below the found one may be unexamined: the length is
                // exact and the example verifies, but it is not necessarily
                // the lexicographically first.
                result.budget_exhausted = true;
                result.exhausted_at_length = n;
            }
            break;
        }
        if (stop.load()) {
            result.budget_exhausted = true;
            result.exhausted_at_length = n;
            break;
        }
        result.lengths_refuted.emplace_back(n, total);
    }

    result.nodes = nodes_total.load();
    result.elapsed_ms = ms_since(start);
    return result;
}

IdentityReport check_identities(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("check_identities: k must be in [1, 8]");
    const auto start = Clock::now();
    IdentityReport report;
    report.k = k;
    report.total = factorial(k);
    // Nonvanishing needs a genuine cycle; a singleton has no wrap pair.
    report.oddsum_asserted = (k % 2 == 1 && k >= 3);

    for_each_pattern(k, [&](const Permutation& sigma) {
        const std::vector<int>& s = sigma.entries();
        const std::vector<int> lifted = lift(s);

        const int linear = score(s).total;
        const int linear_lifted = score(lifted).total;
        if (linear + linear_lifted != 1) report.lift_violations.push_back(sigma);

        const int circ = circular_score(s).total;
        const int circ_lifted = circular_score(lifted).total;
        if (circ + circ_lifted != 0) report.circular_lift_violations.push_back(sigma);

        if (circ == 0) {
            ++report.circular_zero_count;
            if (!report.circular_zero_example) report.circular_zero_example = sigma;
            if (report.oddsum_asserted) report.oddsum_violations.push_back(sigma);
        }

        const bool first_even = s.front() % 2 == 0;
        if (linear == 0 || linear == 1) {
            const int case_index = (linear == 0 ? 0 : 2) + (first_even ? 0 : 1);
            ++report.shifted_case_counts[case_index];
            bool holds = true;
            switch (case_index) {
                case 0: holds = shifted_score(s).total == -1; break;
                case 1: holds = shifted_score(lifted).total == 0; break;
                case 2: holds = shifted_score(s).total == 0; break;
                case 3: holds = shifted_score(lifted).total == -1; break;
            }
            if (!holds) report.shifted_violations.push_back(sigma);
        }
    });

    report.elapsed_ms = ms_since(start);
    return report;
}

EmbeddingReport check_embedding_theorems(int k) {
    if (k < 1 || k > 7) throw std::invalid_argument("check_embedding_theorems: k must be in [1, 7]");
    const auto start = Clock::now();
    EmbeddingReport report;
    report.k = k;
    report.total = factorial(k);

    const Word exact_word = zigzag_word(k, k + 1);
    const bool do_cyclic = (k % 2 == 1 && k >= 3);
    const bool do_circular_iso = (k % 2 == 0);
    report.cyclic_checked = do_cyclic;
    report.circular_iso_checked = do_circular_iso;
    const std::optional<Word> reduced_word =
        k >= 2 ? std::optional<Word>(zigzag_word(k - 1, k + 1)) : std::nullopt;

    for_each_pattern(k, [&](const Permutation& sigma) {
        const std::vector<int>& s = sigma.entries();
        const std::vector<int> lifted = lift(s);

        if (!exact_subsequence(exact_word, s) && !exact_subsequence(exact_word, lifted))
            report.exact_counterexamples.push_back(sigma);

        if (do_cyclic) {
            const Word& w = *reduced_word;
            const auto sem_pattern = CyclicSemantics::pattern_rotation;
            if (!exact_cyclic_subsequence(w, s, sem_pattern) &&
                !exact_cyclic_subsequence(w, lifted, sem_pattern))
                report.cyclic_counterexamples_pattern_rotation.push_back(sigma);
            const auto sem_word = CyclicSemantics::word_cyclic;
            if (!exact_cyclic_subsequence(w, s, sem_word) &&
                !exact_cyclic_subsequence(w, lifted, sem_word))
                report.cyclic_counterexamples_word_cyclic.push_back(sigma);
        }

        if (do_circular_iso) {
            const Word& w = *reduced_word;
            bool found = false;
            for (int r = 0; r < k && !found; ++r)
                found = find_order_isomorphic(w.letters(), rotate(sigma, r)).has_value();
            if (!found) report.circular_iso_counterexamples.push_back(sigma);
        }
    });

    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace superpat
