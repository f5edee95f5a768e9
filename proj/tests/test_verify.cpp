#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "superpat/constructions.hpp"
#include "superpat/containment.hpp"
#include "superpat/perm.hpp"
#include "superpat/verify.hpp"

using namespace superpat;

TEST_CASE("pattern enumeration") {
    CHECK(enumerate_patterns(1).size() == 1);
    CHECK(enumerate_patterns(3).size() == 6);
    CHECK(enumerate_patterns(5).size() == 120);
    const auto s3 = enumerate_patterns(3);
    CHECK(s3.front() == Permutation({1, 2, 3}));
    CHECK(s3.back() == Permutation({3, 2, 1}));
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK_THROWS_AS(enumerate_patterns(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_patterns(10), std::invalid_argument);
}

TEST_CASE("cyclic class enumeration") {
    const auto c3 = enumerate_cyclic_classes(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0] == Permutation({3, 1, 2}));
    CHECK(c3[1] == Permutation({3, 2, 1}));
    CHECK(enumerate_cyclic_classes(4).size() == 6);
    CHECK(enumerate_cyclic_classes(1).size() == 1);

    // the classes partition S_k
    for (int k = 2; k <= 5; ++k) {
        std::set<std::vector<int>> covered;
        for (const auto& rep : enumerate_cyclic_classes(k))
            for (int r = 0; r < k; ++r) covered.insert(rotate(rep, r).entries());
        CHECK(covered.size() == static_cast<size_t>(factorial(k)));
    }
}

TEST_CASE("unranking matches lexicographic enumeration") {
    long long rank = 0;
    for_each_pattern(5, [&](const Permutation& sigma) {
        CHECK(unrank_permutation(5, rank) == sigma);
        ++rank;
    });
    CHECK(rank == factorial(5));
    CHECK_THROWS_AS(unrank_permutation(3, 6), std::out_of_range);
}

TEST_CASE("linear superpattern verification") {
    CHECK(verify_superpattern(Permutation({2, 5, 3, 1, 4}), 3).ok());

    const auto failing = verify_superpattern(Permutation::identity(4), 2);
    CHECK_FALSE(failing.ok());
    REQUIRE(failing.failures.size() == 1);
    CHECK(failing.failures[0] == Permutation({2, 1}));

    CHECK(verify_superpattern(ev_linear_superpattern(5).permutation, 5).ok());
    CHECK_THROWS_AS(verify_superpattern(Permutation({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("verification witnesses re-validate") {
    const auto report = verify_superpattern(Permutation({2, 5, 3, 1, 4}), 3);
    CHECK(report.witnesses.size() == 6);
    for (const auto& [pattern, witness] : report.witnesses)
        CHECK(validate_witness(report.host, pattern, witness));

    const auto circ = verify_circular_superpattern(Permutation({6, 2, 5, 3, 1, 4}), 4);
    CHECK(circ.ok());
    REQUIRE(circ.total_classes.has_value());
    CHECK(*circ.total_classes == 6);
    for (const auto& [rep, witness] : circ.witnesses) CHECK(validate_witness(circ.host, rep, witness));
}

TEST_CASE("every class witness of the k=7 zzc permutation re-validates") {
    const auto gamma7 = zzc_permutation(7).permutation;
    const auto report = verify_circular_superpattern(gamma7, 7);
    REQUIRE(report.ok());
    REQUIRE(report.witnesses.size() == 720);
    for (const auto& [rep, witness] : report.witnesses)
        CHECK(validate_witness(gamma7, rep, witness));
}

TEST_CASE("circular verification agrees with full enumeration") {
    const std::vector<std::pair<Permutation, int>> cases = {
        {Permutation({8, 4, 6, 2, 7, 1, 3, 5, 9}), 4},
        {Permutation({8, 4, 6, 2, 7, 1, 3, 5, 9}), 5},
        {Permutation({1, 2, 3, 4, 5, 6}), 3},
        {Permutation({2, 7, 5, 6, 1, 4, 3}), 4},
        {Permutation({2, 7, 5, 6, 1, 4, 3}), 5},
        {Permutation({6, 2, 5, 3, 1, 4}), 4},
    };
    for (const auto& [host, k] : cases) {
        const auto report = verify_circular_superpattern(host, k);
        std::set<std::vector<int>> failing_by_enumeration;
        for (const auto& sigma : enumerate_patterns(k))
            if (!contains_circular(host, sigma)) failing_by_enumeration.insert(sigma.entries());
        CHECK(report.ok() == failing_by_enumeration.empty());

        std::set<std::vector<int>> failing_by_classes;
        for (const auto& rep : report.failures)
            for (int r = 0; r < k; ++r) failing_by_classes.insert(rotate(rep, r).entries());
        CHECK(failing_by_classes == failing_by_enumeration);
    }
}

TEST_CASE("parallel and serial verification produce identical reports") {
    const Permutation host = zzc_permutation(5).permutation;
    VerifyOptions serial;
    serial.workers = 1;
    VerifyOptions parallel;
    parallel.workers = 4;
    const auto a = verify_circular_superpattern(host, 5, serial);
    const auto b = verify_circular_superpattern(host, 5, parallel);
    CHECK(a.failures == b.failures);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].first == b.witnesses[i].first);
        CHECK(a.witnesses[i].second == b.witnesses[i].second);
    }
}

TEST_CASE("minimal length search, small exact values") {
    const auto circ2 = min_superpattern_length(2, Mode::circular);
    REQUIRE(circ2.minimal_length.has_value());
    CHECK(*circ2.minimal_length == 2);
    REQUIRE(circ2.example.has_value());
    CHECK(*circ2.example == Permutation({1, 2}));

    const auto lin3 = min_superpattern_length(3, Mode::linear);
    REQUIRE(lin3.minimal_length.has_value());
    CHECK(*lin3.minimal_length == 5);
    CHECK(*lin3.example == Permutation({2, 5, 3, 1, 4}));
    CHECK(lin3.lengths_refuted ==
          std::vector<std::pair<int, long long>>{{3, 6}, {4, 24}});

    // the found example indeed verifies, and every shorter length truly fails
    CHECK(verify_superpattern(*lin3.example, 3).ok());
    for (const auto& sigma : enumerate_patterns(4)) CHECK_FALSE(verify_superpattern(sigma, 3).ok());
}

TEST_CASE("minimal lengths across both modes") {
    // (k, mode, minimal length); the circular k=5 value shows the known
    // length-9 circular 5-superpattern is optimal.
    const auto circ3 = min_superpattern_length(3, Mode::circular);
    REQUIRE(circ3.minimal_length.has_value());
    CHECK(*circ3.minimal_length == 4);

    const auto circ4 = min_superpattern_length(4, Mode::circular);
    REQUIRE(circ4.minimal_length.has_value());
    CHECK(*circ4.minimal_length == 6);

    const auto circ5 = min_superpattern_length(5, Mode::circular);
    REQUIRE(circ5.minimal_length.has_value());
    CHECK(*circ5.minimal_length == 9);
    CHECK(circ5.lengths_refuted.back() == std::pair<int, long long>{8, 40320});
    CHECK(verify_circular_superpattern(*circ5.example, 5).ok());

    const auto lin1 = min_superpattern_length(1, Mode::linear);
    REQUIRE(lin1.minimal_length.has_value());
    CHECK(*lin1.minimal_length == 1);

    const auto lin4 = min_superpattern_length(4, Mode::linear);
    REQUIRE(lin4.minimal_length.has_value());
    CHECK(*lin4.minimal_length == 9);
}

TEST_CASE("search results extend monotonically") {
    for (int k = 2; k <= 3; ++k) {
        const auto circ = min_superpattern_length(k, Mode::circular);
        REQUIRE(circ.example.has_value());
        auto extended = circ.example->entries();
        extended.insert(extended.begin(), static_cast<int>(extended.size()) + 1);
        CHECK(verify_circular_superpattern(Permutation(extended), k).ok());

        const auto lin = min_superpattern_length(k, Mode::linear);
        REQUIRE(lin.example.has_value());
        auto appended = lin.example->entries();
        appended.push_back(static_cast<int>(appended.size()) + 1);
        CHECK(verify_superpattern(Permutation(appended), k).ok());
    }
}

TEST_CASE("search guardrails and budgets") {
    CHECK_THROWS_AS(min_superpattern_length(6, Mode::circular), std::invalid_argument);
    CHECK_THROWS_AS(min_superpattern_length(5, Mode::linear), std::invalid_argument);

    SearchOptions tiny;
    tiny.max_nodes = 5;
    const auto partial = min_superpattern_length(4, Mode::circular, -1, tiny);
    CHECK(partial.budget_exhausted);
    CHECK_FALSE(partial.minimal_length.has_value());
    REQUIRE(partial.exhausted_at_length.has_value());
    CHECK(partial.nodes >= 5);
}

TEST_CASE("search is deterministic across worker counts") {
    SearchOptions one;
    one.workers = 1;
    SearchOptions four;
    four.workers = 4;
    const auto a = min_superpattern_length(4, Mode::circular, -1, one);
    const auto b = min_superpattern_length(4, Mode::circular, -1, four);
    REQUIRE(a.minimal_length.has_value());
    REQUIRE(b.minimal_length.has_value());
    CHECK(*a.minimal_length == *b.minimal_length);
    CHECK(*a.example == *b.example);
    CHECK(a.lengths_refuted == b.lengths_refuted);
}

TEST_CASE("identity suite") {
    const auto k5 = check_identities(5);
    CHECK(k5.ok());
    CHECK(k5.total == 120);
    CHECK(k5.oddsum_asserted);
    CHECK(k5.circular_zero_count == 0);

    const auto k4 = check_identities(4);
    CHECK(k4.ok());
    CHECK_FALSE(k4.oddsum_asserted);
    CHECK(k4.circular_zero_count > 0);
    CHECK(circular_score(std::vector<int>{2, 1, 4, 3}).total == 0);

    const auto k1 = check_identities(1);
    CHECK(k1.ok());
    CHECK(score(std::vector<int>{1}).total == 0);
    CHECK(score(std::vector<int>{2}).total == 1);
}

TEST_CASE("embedding suite") {
    for (int k = 1; k <= 5; ++k) {
        const auto report = check_embedding_theorems(k);
        CHECK(report.ok());
        CHECK(report.ok(CyclicSemantics::word_cyclic));
        CHECK(report.total == factorial(k));
        CHECK(report.cyclic_checked == (k % 2 == 1 && k >= 3));
        CHECK(report.circular_iso_checked == (k % 2 == 0));
    }
    // the worked instance: (3,1,2) lifts to (4,2,3), whose rotation (3,4,2)
    // sits in zz(2,4) = 1 3 4 2
    const auto hit = exact_cyclic_subsequence(zigzag_word(2, 4), lift(Permutation({3, 1, 2})));
    REQUIRE(hit.has_value());
    CHECK(hit->pattern_rotation == 2);
}
