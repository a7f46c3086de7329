#include <catch_amalgamated.hpp>

#include "lpa/matrix.hpp"
#include "lpa/random.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("adjacency matrices of the worked examples") {
    CHECK(adjacency(fixtures::census_example()) == ExactMatrix{{1, 1, 0}, {1, 0, 2}, {1, 1, 0}});
    CHECK(adjacency(fixtures::path_example()) == ExactMatrix{{0, 2}, {0, 1}});
    const auto empty = adjacency(fixtures::edgeless(0));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
}

TEST_CASE("adjacency round trip") {
    random::Engine rng(3);
    for (int round = 0; round < 50; ++round) {
        const auto g = random::multigraph(rng, 6, 3);
        CHECK(adjacency(graph_from_adjacency(adjacency(g))) == adjacency(g));
    }
}

TEST_CASE("matrix powers") {
    const ExactMatrix m{{0, 2}, {0, 1}};
    for (std::size_t k = 1; k <= 8; ++k) CHECK(power(m, k) == m);
    CHECK(power(m, 0) == ExactMatrix::identity(2));
    CHECK(power(cyclic_shift(4), 4) == ExactMatrix::identity(4));

    // entries count paths
    random::Engine rng(8);
    for (int round = 0; round < 20; ++round) {
        const auto g = random::multigraph(rng, 4, 2);
        const auto p = power(adjacency(g), 3);
        for (VertexIndex v = 0; v < g.vertex_count(); ++v)
            for (VertexIndex w = 0; w < g.vertex_count(); ++w) CHECK(p(v, w) == oracle::count_paths(g, v, w, 3));
    }
    CHECK_THROWS_AS(power(ExactMatrix(2, 3), 2), Error);
}

TEST_CASE("matrix powers stay exact past 64 bits") {
    const auto p = power(ExactMatrix{{3}}, 200);
    Integer expected = 1;
    for (int i = 0; i < 200; ++i) expected *= 3;
    CHECK(p(0, 0) == expected);
}

TEST_CASE("norms") {
    const auto n = norms(ExactMatrix{{0, 2}, {0, 1}});
    CHECK(n.total == 3);
    CHECK(n.col == std::vector<Integer>{0, 3});
    CHECK(n.row == std::vector<Integer>{2, 1});

    const auto z = norms(ExactMatrix(3, 3));
    CHECK(z.total == 0);
    CHECK(z.row == std::vector<Integer>(3, 0));
    CHECK(z.col == std::vector<Integer>(3, 0));

    random::Engine rng(21);
    for (int round = 0; round < 30; ++round) {
        const auto m = adjacency(random::multigraph(rng, 6, 4));
        const auto r = norms(m);
        Integer direct = 0, by_rows = 0, by_cols = 0;
        for (const auto& x : m.entries()) direct += x;
        for (const auto& x : r.row) by_rows += x;
        for (const auto& x : r.col) by_cols += x;
        CHECK(r.total == direct);
        CHECK(by_rows == direct);
        CHECK(by_cols == direct);
    }
}

TEST_CASE("rank") {
    CHECK(rank(ExactMatrix::identity(5)) == 5);
    CHECK(rank(adjacency(fixtures::hereditary_example())) == 2);
    CHECK(rank(ExactMatrix{{1, 0}, {2, 0}}) < 2);
    CHECK(rank(ExactMatrix(0, 0)) == 0);

    random::Engine rng(17);
    for (int round = 0; round < 200; ++round) {
        const auto m = adjacency(random::multigraph(rng, 6, 4, 0.5));
        CHECK(rank(m) == oracle::rational_rank(m));
    }
}

TEST_CASE("simultaneous permutation") {
    const ExactMatrix m{{0, 1}, {0, 0}};
    CHECK(permute(m, {0, 1}) == m);
    CHECK(permute(m, {1, 0}) == ExactMatrix{{0, 0}, {1, 0}});
    CHECK_THROWS_AS(permute(m, {0, 0}), Error);
    CHECK_THROWS_AS(permute(m, {0}), Error);

    random::Engine rng(2);
    for (int round = 0; round < 30; ++round) {
        const auto a = adjacency(random::multigraph(rng, 6, 3));
        std::vector<std::size_t> perm(a.rows());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(norms(permute(a, perm)).total == norms(a).total);
        CHECK(rank(permute(a, perm)) == rank(a));
    }
}

TEST_CASE("submatrix selection") {
    const ExactMatrix m{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    const auto n2 = select(m, {{0, 2}, {1, 2}});
    CHECK(n2.matrix == ExactMatrix{{1, 0}, {0, 0}});
    CHECK_FALSE(n2.formal);
    CHECK_FALSE(n2.principal);

    const auto n1 = select(m, SubmatrixSelector::leading(2));
    CHECK(n1.matrix == ExactMatrix{{0, 1}, {0, 0}});
    CHECK(n1.formal_principal());

    const auto full = select(m, SubmatrixSelector::leading(3));
    CHECK(full.matrix == m);

    CHECK_THROWS_AS(select(m, {{2, 0}, {0}}), Error);
    CHECK_THROWS_AS(select(m, {{0, 3}, {0}}), Error);
}

TEST_CASE("degree and stochastic matrices") {
    CHECK(degree_matrix(fixtures::single_loop()) == ExactMatrix{{1}});
    CHECK(stochastic(fixtures::single_loop()) == RationalMatrix{{1}});
    CHECK(degree_matrix(fixtures::rose(3)) == ExactMatrix{{3}});
    CHECK(stochastic(fixtures::rose(3)) == RationalMatrix{{1}});

    const auto g = fixtures::census_example();
    CHECK(degree_matrix(g) == ExactMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 2}});
    const auto p = stochastic(g);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < 3; ++j) sum += p(i, j);
        CHECK(sum == 1);
    }
    CHECK_THROWS_AS(stochastic(fixtures::chain(2)), Error);
}

TEST_CASE("nilpotency") {
    for (std::size_t m = 1; m <= 6; ++m) {
        ExactMatrix shift(m, m);
        for (std::size_t i = 0; i + 1 < m; ++i) shift(i, i + 1) = 1;
        CHECK(is_nilpotent(shift) == std::optional<std::size_t>(m));
    }
    CHECK(is_nilpotent(ExactMatrix{{0}}) == std::optional<std::size_t>(1));
    CHECK_FALSE(is_nilpotent(ExactMatrix::identity(3)).has_value());
}

TEST_CASE("circulant permutation matrices") {
    CHECK(is_circulant_permutation(cyclic_shift(4)));
    CHECK(is_circulant_permutation(ExactMatrix{{0, 1}, {1, 0}}));
    CHECK(is_circulant_permutation(ExactMatrix{{1}}));
    CHECK_FALSE(is_circulant_permutation(ExactMatrix::identity(3)));
    // two 2-cycles
    CHECK_FALSE(is_circulant_permutation(ExactMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    // the 4-cycle traversed out of order is still one cycle
    CHECK(is_circulant_permutation(ExactMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
    CHECK_FALSE(is_circulant_permutation(ExactMatrix{{0, 2}, {1, 0}}));
}
