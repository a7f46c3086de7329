#include <catch_amalgamated.hpp>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/random.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

std::vector<std::string> ids(const Graph& g, const std::vector<EdgeIndex>& edges) {
    std::vector<std::string> out;
    for (auto e : edges) out.push_back(g.edge(e).id);
    return out;
}

}  // namespace

TEST_CASE("out_edges lists the edges leaving a vertex") {
    const auto g = fixtures::hereditary_example();
    std::vector<VertexIndex> targets;
    for (auto e : out_edges(g, 3)) targets.push_back(g.edge(e).dst);
    CHECK(targets == std::vector<VertexIndex>{0, 1, 3});

    CHECK(out_edges(fixtures::edgeless(1), 0).empty());

    const auto rose = fixtures::rose(2);
    CHECK(ids(rose, out_edges(rose, 0)) == std::vector<std::string>{"e1", "e2"});

    CHECK_THROWS_AS(out_edges(g, 4), Error);
}

TEST_CASE("sinks and sources") {
    const auto g = fixtures::hereditary_example();
    CHECK(is_sink(g, 0));
    CHECK_FALSE(is_sink(g, 1));
    CHECK(is_source(g, 2));
    CHECK(sinks(g) == std::vector<VertexIndex>{0});
    CHECK(sources(g) == std::vector<VertexIndex>{2});

    const auto loop = fixtures::single_loop();
    CHECK_FALSE(is_sink(loop, 0));
    CHECK_FALSE(is_source(loop, 0));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Graph({"a"}, {{"e", 0, 1}}), Error);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"e", 0, 1}, {"e", 1, 0}}), Error);
    CHECK_THROWS_AS(VertexSet(3, {0, 3}), Error);
    CHECK_THROWS_AS(VertexSet(3, {1, 1}), Error);
}

TEST_CASE("induced subgraph") {
    const auto g = fixtures::hereditary_example();
    const auto sub = induced_subgraph(g, VertexSet(4, {0, 1}));
    CHECK(sub.vertex_count() == 2);
    REQUIRE(sub.edge_count() == 1);
    CHECK(sub.edge(0).src == 1);
    CHECK(sub.edge(0).dst == 1);

    CHECK(induced_subgraph(g, VertexSet::full(4)) == g);
    const auto none = induced_subgraph(g, VertexSet::empty(4));
    CHECK(none.vertex_count() == 0);
    CHECK(none.edge_count() == 0);
}

TEST_CASE("quotient graph removes a set and the edges touching it") {
    const auto g = fixtures::hereditary_example();
    const auto q = quotient_graph(g, VertexSet(4, {0, 1, 2}), VertexSet::full(4));
    CHECK(q.vertex_count() == 1);
    CHECK(q.vertices() == std::vector<std::string>{"v4"});
    REQUIRE(q.edge_count() == 1);
    CHECK(q.edge(0).src == q.edge(0).dst);

    CHECK(quotient_graph(g, VertexSet::empty(4), VertexSet::full(4)) == g);
}

TEST_CASE("quotient of a 2-cycle feeding a vertex onto a loop is a comet") {
    // a <-> b, b -> c, c has a loop. Removing {a, b} leaves the loop at c alone.
    const auto g = Graph::from_pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
    CHECK_FALSE(is_comet(g));
    const VertexSet h(3, {0, 1});
    const auto q = quotient_graph(g, h, VertexSet::full(3));
    CHECK(is_comet(q));
}

TEST_CASE("opposite and double graphs") {
    const auto g = fixtures::path_example();
    CHECK(adjacency(opposite_graph(g)) == ExactMatrix{{0, 0}, {2, 1}});

    const auto d = double_graph(fixtures::single_loop());
    CHECK(d.edge_count() == 2);
    CHECK(adjacency(d) == ExactMatrix{{2}});

    random::Engine rng(11);
    for (int round = 0; round < 50; ++round) {
        const auto r = random::multigraph(rng, 6, 3);
        CHECK(opposite_graph(opposite_graph(r)) == r);
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(fixtures::four_cycle()));
    CHECK_FALSE(is_strongly_connected(fixtures::hereditary_example()));
    CHECK(is_strongly_connected(fixtures::edgeless(1)));
    CHECK_FALSE(is_strongly_connected(fixtures::edgeless(2)));
}

TEST_CASE("comets") {
    CHECK(is_comet(fixtures::single_loop()));
    CHECK_FALSE(is_comet(fixtures::four_cycle_extended()));
    CHECK_FALSE(is_comet(fixtures::chain(2)));
    // one cycle with an exit is not a comet
    CHECK_FALSE(is_comet(Graph::from_pairs(2, {{0, 0}, {0, 1}})));
    // a tail feeding an exitless cycle is
    CHECK(is_comet(Graph::from_pairs(3, {{2, 0}, {0, 1}, {1, 0}})));
}

TEST_CASE("cycle enumeration") {
    CHECK(find_all_cycles(fixtures::census_example()).size() == 6);
    CHECK(find_all_cycles(fixtures::chain(4)).empty());
    CHECK(find_all_cycles(fixtures::rose(3)).size() == 3);

    const auto cycles = find_all_cycles(fixtures::four_cycle());
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].vertices() == std::vector<VertexIndex>{0, 1, 2, 3});

    random::Engine rng(5);
    for (int round = 0; round < 100; ++round) {
        const auto g = random::multigraph(rng, 5, 3);
        CHECK(find_all_cycles(g).size() == oracle::count_cycles(g));
    }
}

TEST_CASE("cycle sequences are rotated and validated") {
    const auto g = fixtures::four_cycle();
    const CycleSeq c(g, {2, 3, 0, 1});
    CHECK(c.vertices() == std::vector<VertexIndex>{0, 1, 2, 3});
    CHECK(c.edges() == std::vector<EdgeIndex>{0, 1, 2, 3});
    CHECK_THROWS_AS(CycleSeq(g, {0, 1}), Error);

    // figure eight at v1: closed but revisits v1
    const auto eight = Graph::from_pairs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});
    CHECK_THROWS_AS(CycleSeq(eight, {0, 1, 2, 3}), Error);
}

TEST_CASE("relabel permutes vertices") {
    const auto g = fixtures::path_example();
    const auto r = relabel(g, {1, 0});
    CHECK(adjacency(r) == ExactMatrix{{1, 0}, {2, 0}});
}
