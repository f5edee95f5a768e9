#include "doctest.h"

#include <stdexcept>

#include "superpat/constructions.hpp"
#include "superpat/containment.hpp"
#include "superpat/perm.hpp"
#include "superpat/verify.hpp"
#include "superpat/zigzag.hpp"

using namespace superpat;

TEST_CASE("break-ties linear superpatterns") {
    const auto ev3 = ev_linear_superpattern(3);
    CHECK(ev3.permutation == Permutation({2, 5, 3, 1, 4}));
    CHECK(ev3.length == 5);
    CHECK(ev3.claimed_k == 3);
    REQUIRE(ev3.source_word.has_value());
    CHECK(ev3.source_word->letters() == std::vector<int>{1, 3, 2, 1, 3});

    const auto ev4 = ev_linear_superpattern(4);
    CHECK(ev4.length == 9);
    CHECK(ev4.source_word->letters() == std::vector<int>{1, 3, 4, 2, 1, 3, 4, 2, 1});

    CHECK(ev_linear_superpattern(5).length == 13);
    CHECK_THROWS_AS(ev_linear_superpattern(1), std::invalid_argument);

    for (int n = 2; n <= 8; ++n)
        CHECK(ev_linear_superpattern(n).length == (n * n + 2) / 2);  // ceil((n^2+1)/2)
}

TEST_CASE("break-ties constructions verify as linear superpatterns") {
    for (int n = 2; n <= 5; ++n) {
        const auto ev = ev_linear_superpattern(n);
        CHECK(verify_superpattern(ev.permutation, n).ok());
    }
}

TEST_CASE("prepending the new maximum") {
    const auto from_one = circular_from_linear(Permutation({1}), 2);
    CHECK(from_one.permutation == Permutation({2, 1}));
    CHECK(from_one.claimed_k == 2);

    const auto gamma = circular_from_linear(Permutation({2, 5, 3, 1, 4}), 4);
    CHECK(gamma.permutation == Permutation({6, 2, 5, 3, 1, 4}));
    CHECK(gamma.length == 6);
    CHECK_FALSE(gamma.source_word.has_value());

    for (int k = 3; k <= 6; ++k) {
        const auto base = ev_linear_superpattern(k - 1);
        const auto circ = circular_from_linear(base.permutation, k);
        CHECK(circ.permutation.at(1) == circ.length);  // unique maximum up front
        CHECK(circ.length == base.length + 1);
    }
}

TEST_CASE("zzc word") {
    CHECK(zzc_word(5).letters() == std::vector<int>{1, 3, 4, 2, 1, 3, 4, 5, 4});
    CHECK(zzc_word(5).letters().size() == 9);

    const auto w7 = zzc_word(7).letters();
    CHECK(w7.size() == 19);
    CHECK(w7[17] == 7);
    CHECK(w7[18] == 6);
    const auto zz66 = zigzag_word(6, 6).letters();
    for (size_t i = 0; i + 1 < zz66.size(); ++i) CHECK(w7[i] == zz66[i]);

    CHECK_THROWS_AS(zzc_word(4), std::invalid_argument);
    CHECK_THROWS_AS(zzc_word(3), std::invalid_argument);
}

TEST_CASE("zzc permutation") {
    const auto g5 = zzc_permutation(5);
    CHECK(g5.permutation == Permutation({2, 5, 8, 3, 1, 4, 7, 9, 6}));
    CHECK(g5.claimed_k == 5);
    CHECK(g5.method == Method::zzc_odd);

    for (int k : {5, 7, 9})
        CHECK(zzc_permutation(k).length == (k - 1) * (k - 1) / 2 + 1);
}

TEST_CASE("bound formulas side by side") {
    const auto b5 = bounds(5);
    REQUIRE(b5.word_alphabet.has_value());
    CHECK(*b5.word_alphabet == 12);
    CHECK(b5.table_permutation == 14);
    CHECK(b5.remark == 10);
    REQUIRE(b5.zzc_length.has_value());
    CHECK(*b5.zzc_length == 9);

    const auto b4 = bounds(4);
    CHECK(b4.remark == 6);
    CHECK_FALSE(b4.word_alphabet.has_value());
    CHECK_FALSE(b4.zzc_length.has_value());

    CHECK(bounds(2).remark == 2);
    const auto b3 = bounds(3);
    REQUIRE(b3.word_alphabet.has_value());
    CHECK(*b3.word_alphabet == 4);
    CHECK_FALSE(b3.zzc_length.has_value());
    CHECK_THROWS_AS(bounds(1), std::invalid_argument);
}

TEST_CASE("rotated decreasing pattern embeds in the zzc permutation") {
    for (int k : {5, 7}) {
        const auto gamma = zzc_permutation(k).permutation;
        std::vector<int> entries;
        for (int v = k - 1; v >= 1; --v) entries.push_back(v);
        entries.push_back(k);
        CHECK(contains_circular(gamma, Permutation(entries)).has_value());
    }
}

TEST_CASE("layered patterns ending low embed in the zzc permutation") {
    for (int k : {5, 7}) {
        const auto gamma = zzc_permutation(k).permutation;
        int checked = 0;
        for_each_pattern(k, [&](const Permutation& sigma) {
            if (!is_layered(sigma)) return;
            if (sigma.at(k) != k) return;
            const int penultimate = sigma.at(k - 1);
            if (penultimate != 2 && penultimate != 3) return;
            ++checked;
            CHECK(contains_circular(gamma, sigma).has_value());
        });
        CHECK(checked > 0);
    }
}
