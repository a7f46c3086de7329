#include <catch_amalgamated.hpp>

#include <set>

#include "lpa/paths.hpp"
#include "lpa/random.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("norm table") {
    const auto table = norm_table(fixtures::path_example(), 6);
    for (std::size_t s = 1; s <= 6; ++s) {
        CHECK(table.at(s).total == 3);
        CHECK(table.at(s).col == std::vector<Integer>{0, 3});
    }
    CHECK(table.at(0).total == 2);
    CHECK(table.at(0).col == std::vector<Integer>{1, 1});
    CHECK(table.at(0).row == std::vector<Integer>{1, 1});

    const auto zero = norm_table(fixtures::edgeless(3), 1);
    CHECK(zero.at(1).total == 0);
    CHECK(zero.at(1).col == std::vector<Integer>(3, 0));
}

TEST_CASE("path counts on small graphs") {
    CHECK(p_k(fixtures::path_example(), 3) == 18);
    CHECK(p_k(fixtures::census_example(), 0) == 3);
    CHECK(p_k(fixtures::census_example(), 1) == 2 * 7);
    CHECK(p_k(fixtures::single_loop(), 2) == 2);
    CHECK(p_k(fixtures::edgeless(4), 0) == 4);
    CHECK(p_k(fixtures::edgeless(4), 3) == 0);
}

TEST_CASE("monomial enumeration on small graphs") {
    CHECK(enumerate_monomials(fixtures::path_example(), 3).size() == 18);

    const auto vertices = enumerate_monomials(fixtures::census_example(), 0);
    REQUIRE(vertices.size() == 3);
    for (VertexIndex v = 0; v < 3; ++v) {
        CHECK(vertices[v].anchor == v);
        CHECK(vertices[v].alpha.empty());
        CHECK(vertices[v].beta.empty());
    }

    CHECK(enumerate_monomials(fixtures::rose(2), 1).size() == 4);

    // e e and e* e* survive; e e* collapses because v1 emits only e
    const auto loop = enumerate_monomials(fixtures::single_loop(), 2);
    REQUIRE(loop.size() == 2);
    CHECK(loop[0].alpha.empty());
    CHECK(loop[0].beta.size() == 2);
    CHECK(loop[1].alpha.size() == 2);
    CHECK(loop[1].beta.empty());
}

TEST_CASE("enumeration refuses oversized requests") {
    try {
        enumerate_monomials(fixtures::rose(3), 12, 1000);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("formula matches enumeration") {
    random::Engine rng(2024);
    std::size_t mismatches = 0;
    for (int round = 0; round < 60; ++round) {
        const auto g = random::multigraph(rng, 5, 2);
        for (std::size_t k = 0; k <= 6; ++k)
            if (p_k(g, k) != enumerate_monomials(g, k).size()) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("path counts are invariant under relabeling") {
    random::Engine rng(31);
    for (int round = 0; round < 40; ++round) {
        const auto g = random::multigraph(rng, 5, 2);
        std::vector<VertexIndex> order(g.vertex_count());
        std::iota(order.begin(), order.end(), VertexIndex{0});
        std::shuffle(order.begin(), order.end(), rng);
        const auto r = relabel(g, order);
        for (std::size_t k = 0; k <= 5; ++k) CHECK(p_k(g, k) == p_k(r, k));
    }
}

TEST_CASE("without out-degree one the subtraction term vanishes") {
    random::Engine rng(32);
    int checked = 0;
    for (int round = 0; round < 200 && checked < 30; ++round) {
        const auto g = random::multigraph(rng, 5, 3, 0.5);
        bool any_single = false;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) any_single = any_single || g.out_degree(v) == 1;
        if (any_single) continue;
        ++checked;
        for (std::size_t k = 2; k <= 5; ++k) {
            const auto table = norm_table(g, k);
            Integer expected = 2 * table.at(k).total;
            for (std::size_t s = 1; s < k; ++s)
                for (std::size_t j = 0; j < g.vertex_count(); ++j) expected += table.at(s).col[j] * table.at(k - s).col[j];
            CHECK(p_k(g, k) == expected);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("the monomial set is closed under the star involution") {
    random::Engine rng(33);
    for (int round = 0; round < 40; ++round) {
        const auto g = random::multigraph(rng, 4, 2);
        for (std::size_t k = 0; k <= 4; ++k) {
            const auto list = enumerate_monomials(g, k);
            const std::set<Monomial> all(list.begin(), list.end());
            CHECK(all.size() == list.size());
            for (const auto& m : list) CHECK(all.count(m.star()) == 1);
        }
    }
}

TEST_CASE("path counts grow past 64 bits") {
    // 2^70 paths of length 70 in a two-loop rose
    const auto count = p_k(fixtures::rose(2), 70);
    Integer two_pow = 1;
    for (int i = 0; i < 70; ++i) two_pow *= 2;
    CHECK(count > two_pow);
}
