#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ldlab/errors.hpp"
#include "ldlab/hypergraph.hpp"
#include "test_util.hpp"

using namespace ldlab;
using testing::random_word;

namespace {

PartiteHypergraph random_hypergraph(Rng& rng, std::uint32_t q, std::size_t n, std::size_t edges) {
    PartiteHypergraph h(q, n);
    while (h.size() < edges) h.add_edge(random_word(rng, q, n));
    return h;
}

// First lexicographic e-subset covering <= v vertices, by plain enumeration.
std::vector<std::size_t> first_violation(const PartiteHypergraph& h, std::size_t v, std::size_t e) {
    std::vector<std::size_t> idx(e);
    for (std::size_t i = 0; i < e; ++i) idx[i] = i;
    if (h.size() < e) return {};
    while (true) {
        std::vector<Word> pick;
        for (auto i : idx) pick.push_back(h[i]);
        if (union_size(pick) <= v) return idx;
        std::size_t i = e;
        while (i > 0 && idx[i - 1] == h.size() - e + i - 1) --i;
        if (i == 0) return {};
        ++idx[i - 1];
        for (std::size_t j = i; j < e; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TEST_CASE("psi is a bijection and respects the union identity") {
    Edge edge{{0, 2}, {1, 5}, {2, 1}};
    CHECK(psi(edge, 6) == Word(6, {2, 5, 1}));
    Edge shuffled{{2, 1}, {0, 2}, {1, 5}};
    CHECK(psi(shuffled, 6) == Word(6, {2, 5, 1}));
    CHECK_THROWS_AS(psi(Edge{{0, 1}, {0, 2}}, 3), ParameterError);
    CHECK_THROWS_AS(psi(Edge{{0, 1}, {1, 3}}, 3), ParameterError);

    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, 7, 5);
        CHECK(psi(psi_inv(w), 7) == w);
    }
    for (int i = 0; i < 10000; ++i) {
        Word x = random_word(rng, 4, 6), y = random_word(rng, 4, 6);
        auto ex = psi_inv(x), ey = psi_inv(y);
        std::set<Vertex> sx(ex.begin(), ex.end());
        std::size_t shared = 0;
        for (const auto& vtx : ey) shared += sx.count(vtx);
        CHECK(shared + hamming_distance(x, y) == 6);
        std::vector<Word> pair{x, y};
        CHECK(union_size(pair) == 12 - shared);
    }
}

TEST_CASE("sparsity examples") {
    PartiteHypergraph one_shared(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 1, 1})});
    CHECK(is_sparse(one_shared, 4, 2).sparse);
    PartiteHypergraph near(3, 3, {Word(3, {0, 0, 0}), Word(3, {0, 0, 1})});
    auto r = is_sparse(near, 4, 2);
    CHECK_FALSE(r.sparse);
    CHECK(r.violating == std::vector<std::size_t>{0, 1});
    CHECK(is_sparse(PartiteHypergraph(3, 3), 4, 2).sparse);
    CHECK_THROWS_AS(is_sparse(near, 4, 1), ParameterError);
}

TEST_CASE("sparsity scan matches direct enumeration") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = random_hypergraph(rng, 8, 3, 30);
        const std::size_t e = 2 + rng.below(2);
        const std::size_t v = 3 + rng.below(e == 2 ? 3 : 5);
        auto r = is_sparse(h, v, e);
        auto expected = first_violation(h, v, e);
        CAPTURE(trial);
        CHECK(r.sparse == expected.empty());
        CHECK(r.violating == expected);
    }
    auto big = random_hypergraph(rng, 8, 3, 60);
    CHECK_THROWS_AS(is_sparse(big, 3, 3, 100), BudgetExceeded);
}

TEST_CASE("codes from hypergraphs") {
    PartiteHypergraph empty(5, 3);
    CHECK(code_from_hypergraph(empty).size() == 0);

    PartiteHypergraph h(3, 3, {Word(3, {0, 0, 0}), Word(3, {1, 1, 1}), Word(3, {2, 2, 2}), Word(3, {0, 1, 2})});
    auto tagged = code_from_hypergraph(h, 1, 2);
    REQUIRE(tagged.guaranteed.has_value());
    CHECK(*tagged.guaranteed == std::make_pair<std::size_t, std::size_t>(1, 2));
    CHECK(is_list_decodable(tagged.code, 1, 2).passed());
    CHECK(hypergraph_from_code(tagged.code).edges() == h.edges());

    PartiteHypergraph dense(2, 3, {Word(2, {0, 0, 0}), Word(2, {0, 0, 1}), Word(2, {0, 1, 0})});
    CHECK_FALSE(code_from_hypergraph(dense, 1, 2).guaranteed.has_value());
}

TEST_CASE("random sparse hypergraphs") {
    auto r = random_sparse_hypergraph(3, 5, 6, 3, 7);
    CHECK(is_sparse(r.graph, 6, 3).sparse);
    CHECK(r.sampled == r.graph.size() + r.deleted);
    auto again = random_sparse_hypergraph(3, 5, 6, 3, 7);
    CHECK(again.graph.edges() == r.graph.edges());

    // v >= en: any e edges violate
    auto degenerate = random_sparse_hypergraph(3, 4, 6, 2, 3, {.c = 1.0});
    CHECK(degenerate.graph.size() < 2);
    CHECK_THROWS_AS(random_sparse_hypergraph(3, 4, 2, 2, 3), ParameterError);

    double previous = 0;
    for (std::uint32_t q : {8u, 16u, 32u}) {
        double total = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) total += random_sparse_hypergraph(3, q, 6, 3, seed).graph.size();
        CHECK(total / 50 > previous);
        previous = total / 50;
    }
}

TEST_CASE("sparse hypergraphs give list-decodable codes") {
    std::size_t runs = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
        for (std::uint32_t q : {3u, 5u, 7u}) {
            for (std::size_t L = 1; L <= 3; ++L) {
                for (std::size_t t = 1; t <= 2 && t * (L + 1) < n * L; ++t) {
                    for (std::uint64_t seed = 0; seed < 3; ++seed) {
                        auto res = pipeline_sparse_to_code(n, q, t, L, seed * 97 + q);
                        CAPTURE(n);
                        CAPTURE(q);
                        CAPTURE(L);
                        CAPTURE(t);
                        CHECK(res.certificate.passed());
                        CHECK(res.log_factor_regime == (std::gcd(L, t) == 1));
                        if (L == 1 && res.code.size() >= 2) CHECK(min_distance(res.code) > 2 * t);
                        ++runs;
                    }
                }
            }
        }
    }
    CHECK(runs >= 50);
    auto res = pipeline_sparse_to_code(3, 7, 1, 2, 1);
    CHECK(res.v == 6);
    CHECK(res.e == 3);
    CHECK(res.certificate.passed());
    CHECK(res.benchmark == doctest::Approx(std::pow(7.0, 1.5)));
}

TEST_CASE("random partitions") {
    auto complete = complete_hypergraph(6, 3);
    CHECK(complete.edges.size() == 20);
    double sum = 0, sum_sq = 0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s) {
        auto r = erdos_kleitman_partition(complete, s);
        CHECK(r.graph.q() == 2);
        std::vector<std::size_t> sizes(3, 0);
        for (auto p : r.part_of) ++sizes[p];
        CHECK(sizes == std::vector<std::size_t>{2, 2, 2});
        const double frac = static_cast<double>(r.retained.size()) / 20.0;
        sum += frac;
        sum_sq += frac * frac;
    }
    const double mean = sum / seeds;
    const double se = std::sqrt((sum_sq / seeds - mean * mean) / seeds);
    CHECK(mean + 3 * se >= 2.0 / 9.0);
    CHECK(mean == doctest::Approx(8.0 / 20.0).epsilon(0.1));  // 2^3 of the 20 triples are transversal

    Hypergraph single{7, 3, {{0, 3, 5}}};
    double hits = 0;
    for (int s = 0; s < 10000; ++s) {
        auto r = erdos_kleitman_partition(single, s);
        CHECK(r.padded_vertices == 9);
        hits += static_cast<double>(r.retained.size());
    }
    const double p = hits / 10000;
    CHECK(p + 3 * std::sqrt(p * (1 - p) / 10000) >= 6.0 / 27.0);

    CHECK(erdos_kleitman_partition(complete, 3).graph.edges() == erdos_kleitman_partition(complete, 3).graph.edges());
}

TEST_CASE("hypergraph JSON") {
    PartiteHypergraph h(4, 2, {Word(4, {0, 3}), Word(4, {2, 1})});
    auto j = hypergraph_to_json(h);
    CHECK(j["edges"].size() == 2);
    CHECK(hypergraph_from_json(j).edges() == h.edges());
    Json bad = j;
    bad["edges"][1][1] = 7;
    try {
        hypergraph_from_json(bad);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("edges[1][1]") != std::string::npos);
    }
    CHECK_THROWS_AS(hypergraph_from_json(Json{{"n", 2}}), ParameterError);
}
