#include <doctest.h>

#include <numeric>

#include "swk/error.hpp"
#include "swk/graph.hpp"
#include "swk/graph_io.hpp"

using namespace swk;

namespace {

std::size_t degree_sum(const Graph& g)
{
    std::size_t s = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        s += g.degree(v);
    return s;
}

} // namespace

TEST_CASE("build_graph basics")
{
    auto i = build_graph({"a", "b"}, {{"a", "b"}}, "I");
    CHECK(i.num_vertices() == 2);
    CHECK(i.num_edges() == 1);
    CHECK(i.degree(0) == 1);
    CHECK(i.degree(1) == 1);

    auto c1 = build_graph({"v"}, {{"v", "v"}});
    CHECK(c1.degree(0) == 2);
    CHECK(c1.is_self_loop(0));
    CHECK(c1.half_edges_at(0).size() == 2);

    auto k4 = build_graph({"1", "2", "3", "4"},
                          {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(k4.degree(v) == 3);
    CHECK(betti1(k4) == 3);
}

TEST_CASE("build_graph rejects bad input")
{
    CHECK_THROWS_AS(build_graph({"a", "a"}, {}), GraphError);
    CHECK_THROWS_AS(build_graph({"a"}, {{"a", "b"}}), GraphError);
}

TEST_CASE("half-edge bookkeeping")
{
    auto g = theta_graph(3);
    CHECK(degree_sum(g) == 2 * g.num_edges());
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        auto v = g.vertex_of(h);
        auto hs = g.half_edges_at(v);
        CHECK(hs[g.local_index(h)] == h);
        CHECK(Graph::opposite(Graph::opposite(h)) == h);
    }
}

TEST_CASE("standard families")
{
    auto s3 = standard_graph("star 3");
    CHECK(s3.num_vertices() == 4);
    CHECK(s3.num_edges() == 3);
    CHECK(s3.degree(s3.vertex("v0")) == 3);
    CHECK(betti1(s3) == 0);

    auto th = standard_graph("theta 3");
    CHECK(th.num_vertices() == 2);
    CHECK(th.num_edges() == 3);

    auto net = standard_graph("net");
    CHECK(net.num_vertices() == 6);
    CHECK(net.num_edges() == 6);
    std::size_t ones = 0, threes = 0;
    for (std::size_t v = 0; v < net.num_vertices(); ++v) {
        ones += net.degree(v) == 1;
        threes += net.degree(v) == 3;
    }
    CHECK(ones == 3);
    CHECK(threes == 3);

    CHECK(betti1(standard_graph("complete_bipartite 3 3")) == 4);
    CHECK(betti1(standard_graph("K3,3")) == 4);
    CHECK(standard_graph("K4") == complete_graph(4));
    CHECK(standard_graph("L1").num_edges() == 2);
    CHECK(standard_graph("C1").is_self_loop(0));
    CHECK_THROWS_AS(standard_graph("dodecahedron"), PreconditionError);
    CHECK_THROWS_AS(standard_graph("star x"), PreconditionError);
}

TEST_CASE("subdivision")
{
    auto i = interval_graph();
    auto same = subdivide(i, {1});
    CHECK(same.graph == i);
    CHECK(same.smoothing == GraphMorphism::identity(i));

    auto c3 = subdivide(cycle_graph(1), {3});
    CHECK(c3.graph.num_vertices() == 3);
    CHECK(c3.graph.num_edges() == 3);
    CHECK(c3.smoothing.is_valid());
    for (std::size_t e = 0; e < 3; ++e)
        CHECK(c3.smoothing.edge_image(e) == 0);

    auto path = subdivide(i, {3});
    CHECK(path.graph.num_vertices() == 4);
    CHECK(path.graph.num_edges() == 3);
    CHECK(path.smoothing.is_valid());

    auto k4 = subdivide_uniform(complete_graph(4), 3);
    CHECK(k4.graph.num_vertices() == 16);
    CHECK(k4.graph.num_edges() == 18);
    CHECK(k4.smoothing.is_valid());
}

TEST_CASE("vertex explosion")
{
    auto s3 = star_graph(3);
    auto ex = vertex_explosion(s3, s3.vertex("v0"));
    CHECK(ex.graph.num_vertices() == 6);
    CHECK(ex.graph.num_edges() == 3);
    CHECK(ex.graph.num_components() == 3);
    CHECK(ex.morphism.is_valid());

    auto k4 = complete_graph(4);
    auto net = vertex_explosion(k4, k4.vertex("4"));
    CHECK(net.graph.vertex_ids() == net_graph().vertex_ids());
    CHECK(net.morphism.is_valid());

    auto c1 = vertex_explosion(cycle_graph(1), 0);
    CHECK(c1.graph.num_vertices() == 2);
    CHECK(c1.graph.num_edges() == 1);
    CHECK(!c1.graph.is_self_loop(0));
    CHECK(c1.morphism.is_valid());

    for (std::size_t v = 0; v < k4.num_vertices(); ++v) {
        auto e = vertex_explosion(k4, v);
        CHECK(e.graph.num_edges() == k4.num_edges());
        CHECK(e.graph.num_vertices() == k4.num_vertices() + k4.degree(v) - 1);
    }
}

TEST_CASE("edge contraction")
{
    auto l1 = lollipop_graph(1);
    auto tail = contract_edge(l1, l1.edge("e0"));
    CHECK(tail.minor.num_vertices() == 1);
    CHECK(tail.minor.num_edges() == 1);
    CHECK(tail.minor.is_self_loop(0));

    auto c3 = cycle_graph(3);
    auto c2 = contract_edge(c3, 0);
    CHECK(c2.minor.num_vertices() == 2);
    CHECK(c2.minor.num_edges() == 2);
    CHECK(betti1(c2.minor) == 1);

    auto k4 = complete_graph(4);
    auto m = contract_edge(k4, 0);
    CHECK(m.minor.num_vertices() == 3);
    CHECK(m.minor.num_edges() == 5);
    CHECK(!m.minor.is_simple());
    CHECK(betti1(m.minor) == betti1(k4));

    auto loop = contract_edge(cycle_graph(1), 0);
    CHECK(loop.minor.num_edges() == 0);
    CHECK(!loop.merged_vertex);
    CHECK(betti1(loop.minor) == 0);
}

TEST_CASE("morphism validation")
{
    auto k4 = complete_graph(4);
    CHECK(GraphMorphism::identity(k4).is_valid());

    // Two edges of a path squeezed onto one target edge end to end, overlapping.
    auto i = interval_graph();
    auto p = subdivide(i, {2}).graph;  // 0 - e.1 - 1
    std::vector<VertexImage> vimg = {
        VertexImage::to_vertex(0, {Graph::half_edge(0, 0)}),
        VertexImage::to_vertex(1, {Graph::half_edge(0, 1)}),
        VertexImage::to_vertex(0, {Graph::half_edge(0, 0), Graph::half_edge(0, 1)}),
    };
    GraphMorphism bad(p, i, {0, 0}, vimg);
    CHECK(!bad.is_valid());

    // Both ends of an edge at one vertex image but the edge itself elsewhere.
    auto s2 = star_graph(2);
    std::vector<VertexImage> v2 = {
        VertexImage::to_vertex(0, {Graph::half_edge(0, 0), Graph::half_edge(0, 0)}),
        VertexImage::to_vertex(1, {Graph::half_edge(0, 1)}),
        VertexImage::to_vertex(2, {Graph::half_edge(1, 1)}),
    };
    CHECK(!GraphMorphism(s2, s2, {0, 1}, v2).is_valid());

    // A closed loop cannot live inside an edge.
    auto c1 = cycle_graph(1);
    GraphMorphism loop_in_edge(c1, i, {0}, {VertexImage::into_edge(0)});
    CHECK(!loop_in_edge.is_valid());
}

TEST_CASE("composition of smoothings")
{
    auto g = theta_graph(3);
    auto first = subdivide(g, {2, 1, 3});
    auto second = subdivide(first.graph, std::vector<std::size_t>(first.graph.num_edges(), 2));
    auto composite = compose(first.smoothing, second.smoothing);
    CHECK(composite.is_valid());
    CHECK(composite.source() == second.graph);
    CHECK(composite.target() == g);

    auto k4 = complete_graph(4);
    auto ex = vertex_explosion(k4, 0);
    auto sub = subdivide_uniform(ex.graph, 2);
    CHECK(compose(ex.morphism, sub.smoothing).is_valid());
}

TEST_CASE("disjoint union renames clashes")
{
    auto u = disjoint_union(interval_graph(), interval_graph());
    CHECK(u.num_vertices() == 4);
    CHECK(u.num_edges() == 2);
    CHECK(u.num_components() == 2);
}

TEST_CASE("graph text format")
{
    auto g = parse_graph("# complete graph\n"
                         "graph k4\n"
                         "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
                         "edge e12 1 2\nedge e13 1 3\nedge e14 1 4\n"
                         "edge e23 2 3\nedge e24 2 4\nedge e34 3 4   # last\n");
    CHECK(g.name() == "k4");
    CHECK(g == complete_graph(4));
    CHECK(parse_graph(format_graph(g)) == g);

    auto loop = parse_graph("graph c1\nvertex v\nedge e v v\n");
    CHECK(loop.is_self_loop(0));

    try {
        parse_graph("graph x\nvertex a\n\nedge e a b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 4);
        CHECK(err.column() == 10);
    }
    CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a\nedge e a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("node a\n"), ParseError);
}
