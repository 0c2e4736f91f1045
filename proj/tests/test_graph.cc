#include <doctest.h>

#include <pmramsey/errors.hh>
#include <pmramsey/graph.hh>

using namespace pmramsey;

TEST_CASE("complete graphs have binom(n,2) edges")
{
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(7).edge_count() == 21);
    CHECK(complete_graph(64).edge_count() == 2016);
}

TEST_CASE("isolated_count")
{
    SimpleGraph empty(5);
    CHECK(isolated_count(empty, empty.vertices()) == 5);
    CHECK(isolated_count(complete_graph(3), VertexSet::range(3)) == 0);

    SimpleGraph g(4);
    g.add_edge(0, 1);
    CHECK(isolated_count(g, VertexSet::of({1, 2, 3})) == 2);
    CHECK(isolated_count(g, VertexSet{}) == 0);
}

TEST_CASE("induced subgraphs relabel in host order")
{
    auto k3 = induced(complete_graph(4), VertexSet::of({0, 2, 3}));
    CHECK(k3.graph == complete_graph(3));
    CHECK(k3.original == std::vector<int>{0, 2, 3});

    SimpleGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    auto sub = induced(path, VertexSet::of({0, 2, 3}));
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.adjacent(1, 2));
    CHECK(sub.graph.degree(0) == 0);

    CHECK(induced(path, path.vertices()).graph == path);
}

TEST_CASE("edge edits stay symmetric")
{
    SimpleGraph g(64);
    g.add_edge(0, 63);
    CHECK(g.adjacent(63, 0));
    CHECK(g.degree(63) == 1);
    g.remove_edge(63, 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("vertex sets")
{
    auto s = VertexSet::of({5, 1, 63});
    CHECK(s.size() == 3);
    CHECK(s.first() == 1);
    CHECK(s.members() == std::vector<int>{1, 5, 63});
    CHECK((s - VertexSet::of({5})).size() == 2);
    CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("graph order is limited to one machine word")
{
    CHECK_THROWS_AS(SimpleGraph(65), InvalidInput);
}
