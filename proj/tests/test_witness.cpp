#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ldlab/errors.hpp"
#include "ldlab/witness.hpp"
#include "test_util.hpp"

using namespace ldlab;
using testing::full_space;
using testing::random_full_rank;
using testing::random_word;

namespace {

// Direct statement of the removal rule, cubic in |C|.
std::vector<std::size_t> naive_removed(const Code& c, std::size_t t, std::size_t L, std::size_t eps) {
    const std::size_t n = c.n();
    const std::size_t m = (L + 1) * t / L + eps + 1;
    const std::size_t thr = (n - m) + L * (eps + 1);
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < c.size(); ++w) {
        bool bad = false;
        for (std::size_t i = 0; i < c.size() && !bad; ++i) {
            for (std::size_t j = 0; j < c.size() && !bad; ++j) {
                if (i == j || agreement_count(c[i], c[j]) < thr) continue;
                std::size_t both = 0;
                for (std::size_t x = 0; x < n; ++x) both += c[w][x] == c[i][x] && c[i][x] == c[j][x];
                bad = both >= n - m;
            }
        }
        if (bad) out.push_back(w);
    }
    return out;
}

std::vector<Word> cluster_with_suffix(Rng& rng, std::uint32_t q, std::size_t n, std::size_t m, std::size_t count) {
    const Word tail = random_word(rng, q, n - m);
    std::vector<Word> out;
    while (out.size() < count) {
        Word head = random_word(rng, q, m);
        std::vector<Symbol> s(head.begin(), head.end());
        s.insert(s.end(), tail.begin(), tail.end());
        Word w(q, std::move(s));
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

}  // namespace

TEST_CASE("cluster center: random clusters at q=3, n=9, t=2, L=2") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto words = cluster_with_suffix(rng, 3, 9, 4, 4);
        auto w = refute_center_from_cluster(words, 2, 2);
        CAPTURE(trial);
        CHECK(witness_holds(w));
        REQUIRE(w.captured.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(words[w.captured_indices[i]] == w.captured[i]);
        CHECK(common_center_exists(w.captured, 2).has_value());
    }
}

TEST_CASE("cluster center: unique decoding case and padded cube") {
    std::vector<Word> two{Word(2, {0, 0, 0, 0}), Word(2, {0, 1, 1, 0})};
    auto w = refute_center_from_cluster(two, 1, 1);
    CHECK(witness_holds(w));
    CHECK(w.center == Word(2, {0, 0, 1, 0}));

    std::vector<Word> cube;
    for (const auto& x : full_space(2, 3)) cube.push_back(Word(2, {x[0], x[1], x[2], 0}));
    auto cw = refute_center_from_cluster(cube, 1, 1);
    CHECK(witness_holds(cw));
    Code code(2, 4, cube);
    CHECK_FALSE(is_list_decodable(code, 1, 1).passed());
    // floor(t/L) + 1 >= L fails for the plain cube at L = 2
    CHECK_THROWS_AS(refute_center_from_cluster(cube, 1, 2), PreconditionError);
}

TEST_CASE("cluster center: preconditions") {
    std::vector<Word> diff{Word(3, {0, 0, 0, 0, 1}), Word(3, {1, 1, 0, 0, 2}), Word(3, {2, 2, 2, 0, 1})};
    CHECK_THROWS_AS(refute_center_from_cluster(diff, 1, 1), PreconditionError);
    std::vector<Word> few{Word(3, {0, 0, 0, 0, 1})};
    CHECK_THROWS_AS(refute_center_from_cluster(few, 1, 1), PreconditionError);
    std::vector<Word> dup{Word(3, {0, 0, 0, 0}), Word(3, {0, 0, 0, 0})};
    CHECK_THROWS_AS(refute_center_from_cluster(dup, 1, 1), PreconditionError);
    // no word meets the degree requirement: two words disagreeing on all of [m]
    std::vector<Word> apart{Word(3, {0, 0, 0, 2}), Word(3, {1, 1, 1, 2})};
    CHECK_THROWS_AS(refute_center_from_cluster(apart, 1, 1), PreconditionError);
}

TEST_CASE("linear refutation: small examples") {
    Field f3(3);
    LinearCode c32(f3, 3, {{1, 0, 1}, {0, 1, 1}});
    auto w = refute_linear(c32, 1, 2);
    CHECK(witness_holds(w));
    CHECK(w.captured.size() == 3);
    CHECK(w.notes.empty());
    const Code words = c32.expand();
    for (std::size_t i = 0; i < w.captured.size(); ++i) CHECK(words[w.captured_indices[i]] == w.captured[i]);

    Field f5(5);
    Rng rng(11);
    LinearCode c64(f5, 6, random_full_rank(rng, f5, 4, 6));
    auto v = refute_linear(c64, 2, 2);
    CHECK(witness_holds(v));
    CHECK(v.notes.size() == 1);
    CHECK_FALSE(is_list_decodable(c64, 2, 2).passed());

    Field f2(2);
    LinearCode parity(f2, 3, {{1, 0, 1}, {0, 1, 1}});
    try {
        refute_linear(parity, 1, 3);
        FAIL("expected HypothesisFailure");
    } catch (const HypothesisFailure& e) {
        CHECK(std::string(e.what()).find("k(q-1) > (L-1)q") != std::string::npos);
    }
    CHECK(is_list_decodable(parity, 1, 3).passed());
    CHECK_THROWS_AS(refute_linear(c32, 1, 1), HypothesisFailure);
    CHECK_THROWS_AS(refute_linear(c64, 1, 2), HypothesisFailure);  // wrong dimension
}

TEST_CASE("linear refutation succeeds whenever the hypothesis holds") {
    Rng rng(314);
    std::size_t runs = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        Field f(q);
        for (std::size_t L : {2u, 3u}) {
            for (std::size_t n = 3; n <= 8; ++n) {
                for (std::size_t t = 1; t <= 3 && t * (L + 1) < n * L; ++t) {
                    const std::size_t c = ((L + 1) * t + L - 1) / L;
                    const std::size_t k = n + 1 - c;
                    if (k * (q - 1) <= (L - 1) * q) continue;
                    for (int rep = 0; rep < 3; ++rep) {
                        LinearCode code(f, n, random_full_rank(rng, f, k, n));
                        auto w = refute_linear(code, t, L);
                        CAPTURE(q);
                        CAPTURE(n);
                        CAPTURE(t);
                        CAPTURE(L);
                        CHECK(witness_holds(w));
                        CHECK(w.captured.size() == L + 1);
                        const Code words = code.expand();
                        for (std::size_t i = 0; i < w.captured.size(); ++i) {
                            CHECK(words[w.captured_indices[i]] == w.captured[i]);
                        }
                        ++runs;
                    }
                }
            }
        }
    }
    CHECK(runs >= 100);
}

TEST_CASE("recovery box reproduces the four-word example") {
    std::vector<Word> words{Word(5, {0, 0, 0, 0}), Word(5, {1, 1, 1, 1}), Word(5, {2, 2, 2, 2}),
                            Word(5, {3, 3, 3, 3})};
    auto w = refute_recovery_box(words, 1, 3);
    CHECK(witness_holds(w));
    const Box expected{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(w.box == expected);
    const std::vector<std::vector<std::size_t>> contrib{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(w.contributors == contrib);
}

TEST_CASE("recovery box: midpoint and random instances") {
    std::vector<Word> pair{Word(3, {0, 0, 1}), Word(3, {1, 2, 1})};
    auto mid = refute_recovery_box(pair, 1, 1);
    CHECK(witness_holds(mid));
    CHECK(mid.box[2] == std::vector<Symbol>{1});

    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Symbol>> cols(6);
        for (std::size_t c = 2; c < 6; ++c) {
            cols[c] = {static_cast<Symbol>(rng.below(5)), static_cast<Symbol>(rng.below(5))};
        }
        std::vector<Word> words;
        while (words.size() < 4) {
            std::vector<Symbol> s(6);
            s[0] = static_cast<Symbol>(rng.below(5));
            s[1] = static_cast<Symbol>(rng.below(5));
            for (std::size_t c = 2; c < 6; ++c) s[c] = cols[c][rng.below(2)];
            Word w(5, std::move(s));
            if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
        }
        auto w = refute_recovery_box(words, 1, 2);
        CHECK(witness_holds(w));
        CHECK(common_box_exists(words, 1, 2).has_value());
    }
    std::vector<Word> wide{Word(5, {0, 0, 0, 0}), Word(5, {1, 1, 1, 1}), Word(5, {2, 2, 2, 2})};
    CHECK_THROWS_AS(refute_recovery_box(wide, 1, 2), PreconditionError);
}

TEST_CASE("linear distance refutation") {
    Field f3(3);
    LinearCode c(f3, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto w = refute_linear_distance(c, 2, 1, 2);
    CHECK(witness_holds(w));
    CHECK(w.captured.size() == 3);
    CHECK(common_box_exists(w.captured, 2, 1).has_value());
    const Code words = c.expand();
    for (std::size_t i = 0; i < 3; ++i) CHECK(words[w.captured_indices[i]] == w.captured[i]);
    // t = 1 leaves m = 1 below the minimum distance 2
    CHECK_THROWS_AS(refute_linear_distance(c, 1, 1, 2), HypothesisFailure);

    Field f4(4);
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        LinearCode code(f4, 5, random_full_rank(rng, f4, 2, 5));
        auto b = refute_linear_distance(code, 2, 2, 3);
        CHECK(witness_holds(b));
        CHECK(b.captured.size() == 4);
        CHECK_FALSE(is_list_recoverable(code, 2, 2, 3).passed());
    }

    Field f7(7);
    auto rs = rs_code(f7, 6, 3, {0, 1, 2, 3, 4, 5});  // d = 4 > 1 + floor(1/2)
    CHECK_THROWS_AS(refute_linear_distance(rs, 1, 1, 2), HypothesisFailure);
    LinearCode line(f3, 3, {{1, 1, 1}});
    CHECK_THROWS_AS(refute_linear_distance(line, 2, 2, 2), HypothesisFailure);
}

TEST_CASE("subcode extraction matches the direct rule") {
    Rng rng(404);
    for (int trial = 0; trial < 120; ++trial) {
        const std::uint32_t q = 3 + static_cast<std::uint32_t>(rng.below(3));
        const std::size_t n = 4 + rng.below(3);
        const std::size_t L = 1 + rng.below(2);
        const std::size_t t = L == 1 ? 1 + rng.below(2) : 2 + rng.below(2);
        if ((L + 1) * t / L + 1 > n) continue;
        Code code(q, n);
        const std::size_t size = 3 + rng.below(25);
        while (code.size() < size) {
            Word w = random_word(rng, q, n);
            if (!code.contains(w)) code.insert(w);
        }
        auto r = subcode_extract(code, t, L, 0);
        CAPTURE(trial);
        CHECK(r.removed == naive_removed(code, t, L, 0));
        CHECK(r.subcode.size() + r.removed.size() == code.size());
        if (r.subcode.size() >= 2) CHECK(min_distance(r.subcode) >= r.guaranteed_distance);
    }
}

TEST_CASE("subcode extraction examples") {
    Code clean(5, 5, {Word(5, {0, 0, 0, 0, 0}), Word(5, {1, 1, 1, 1, 1}), Word(5, {2, 2, 2, 2, 2})});
    auto same = subcode_extract(clean, 2, 2, 0);
    CHECK(same.subcode == clean);
    CHECK(same.bad_pairs == 0);

    Code close(5, 5,
               {Word(5, {0, 0, 0, 0, 0}), Word(5, {0, 0, 0, 0, 1}), Word(5, {1, 1, 1, 1, 1}), Word(5, {2, 2, 2, 2, 2})});
    auto r = subcode_extract(close, 2, 2, 0);
    CHECK(r.removed == std::vector<std::size_t>{0, 1});
    CHECK(r.subcode.size() == 2);
    CHECK(r.m == 4);
    CHECK(r.guaranteed_distance == 3);
    CHECK_THROWS_AS(subcode_extract(close, 1, 2, 0), PreconditionError);
}

TEST_CASE("subcode extraction on a perturbed Reed-Solomon code") {
    Field f(31);
    std::vector<Symbol> alpha{0, 1, 2, 3, 4, 5};
    const Code base = rs_code(f, 6, 3, alpha).expand();
    Rng rng(9);
    std::vector<Word> words(base.begin(), base.end());
    std::vector<std::size_t> touched;
    for (int i = 0; i < 5; ++i) {
        const std::size_t victim = 1 + rng.below(words.size() - 1);
        std::vector<Symbol> s(words[0].begin(), words[0].end());
        s[rng.below(6)] = static_cast<Symbol>(1 + rng.below(30));
        Word w(31, std::move(s));
        if (std::find(words.begin(), words.end(), w) != words.end()) continue;
        words[victim] = w;
        touched.push_back(victim);
    }
    Code code(31, 6, words);
    auto r = subcode_extract(code, 2, 2, 0);
    CHECK(r.bad_pairs >= 1);
    CHECK(std::binary_search(r.removed.begin(), r.removed.end(), 0));
    CHECK_FALSE(has_pair_agreeing_on(r.subcode, 4));
    CHECK(r.subcode.size() * 2 >= code.size());
}

TEST_CASE("pair agreement detection") {
    Code c(3, 4, {Word(3, {0, 0, 0, 0}), Word(3, {0, 1, 1, 0}), Word(3, {2, 2, 2, 2})});
    CHECK(has_pair_agreeing_on(c, 2));
    CHECK_FALSE(has_pair_agreeing_on(c, 3));
    CHECK(has_pair_agreeing_on(c, 0));
    CHECK_FALSE(has_pair_agreeing_on(c, 5));
}

TEST_CASE("pair center") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        // q=3, n=10, t=3, L=2, eps=0: m = 5, c1 and c2 share >= 2 of the first 5
        auto base = cluster_with_suffix(rng, 3, 10, 5, 2);
        std::vector<Symbol> s(base[0].begin(), base[0].end());
        s[2] = (s[2] + 1) % 3;
        s[3] = (s[3] + 1 + rng.below(2)) % 3;
        s[4] = (s[4] + 1) % 3;
        Word c2(3, std::move(s));
        if (c2 == base[1]) continue;
        std::vector<Word> cluster{base[1]};
        auto w = pair_center(base[0], c2, cluster, 3, 2, 0);
        CHECK(witness_holds(w));
        CHECK(w.captured.size() == 3);
    }
    Word a(3, {0, 0, 0, 0}), b(3, {1, 1, 1, 1});
    std::vector<Word> none;
    auto deg = pair_center(a, Word(3, {0, 1, 1, 0}), none, 1, 1, 0);
    CHECK(witness_holds(deg));
    CHECK_THROWS_AS(pair_center(a, b, none, 1, 1, 0), PreconditionError);
    std::vector<Word> stray{Word(3, {2, 2, 2, 2, 2, 2, 2, 2, 2, 1})};
    CHECK_THROWS_AS(pair_center(Word(3, std::vector<Symbol>(10, 0)), Word(3, {0, 0, 1, 1, 1, 0, 0, 0, 0, 0}), stray, 3,
                                2, 0),
                    PreconditionError);
}
