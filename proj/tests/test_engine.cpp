#include <doctest.h>

#include "swk/engine.hpp"
#include "swk/error.hpp"
#include "swk/formulas.hpp"
#include "swk/properties.hpp"

using namespace swk;

namespace {

std::vector<std::size_t> all_vertices(const Graph& g)
{
    std::vector<std::size_t> u(g.num_vertices());
    for (std::size_t v = 0; v < u.size(); ++v)
        u[v] = v;
    return u;
}

} // namespace

TEST_CASE("spot homology values")
{
    CHECK(homology(star_graph(3), 1, 2).betti == 1);
    auto k33 = homology(SwkComplex::fully_reduced(complete_bipartite_graph(3, 3)), 1, 2);
    CHECK(k33.betti == 4);
    CHECK(k33.torsion == std::vector<BigInt>{2});
    for (const auto* name : {"K4", "theta 3", "lollipop 1", "net"})
        for (std::size_t k = 0; k <= 3; ++k)
            CHECK(homology(standard_graph(name), 0, k).betti == 1);
}

TEST_CASE("homology tables")
{
    auto c3 = homology_table(SwkComplex(cycle_graph(3)), 1, 3, 2);
    for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(c3.at(0, k).betti == 1);
        CHECK(c3.at(1, k).betti == (k >= 1 ? 1U : 0U));
    }
    auto i = homology_table(SwkComplex(interval_graph()), 2, 4);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(i.at(0, k).betti == 1);
        CHECK(i.at(1, k).is_zero());
    }
    auto k4 = homology_table(SwkComplex::fully_reduced(complete_graph(4)), 4, 2);
    CHECK(k4.at(0, 2).to_string() == "Z");
    CHECK(k4.at(1, 2).to_string() == "Z^4");
    for (std::size_t d = 2; d <= 4; ++d)
        CHECK(k4.at(d, 2).is_zero());

    auto serial = homology_table(SwkComplex(theta_graph(3)), 2, 3, 1);
    auto threaded = homology_table(SwkComplex(theta_graph(3)), 2, 3, 4);
    CHECK(serial.entries == threaded.entries);
}

TEST_CASE("Euler identity per weight")
{
    for (const auto* name : {"star 3", "theta 3", "K4", "lollipop 2"}) {
        auto g = standard_graph(name);
        SwkComplex c = SwkComplex::fully_reduced(g);
        for (std::size_t k = 0; k <= 4; ++k) {
            BigInt chi = 0;
            for (std::size_t i = 0; i <= k; ++i)
                chi += (i % 2 ? -1 : 1) * static_cast<long>(homology(c, i, k).betti);
            CHECK(chi == euler_characteristic(g, k));
        }
    }
}

TEST_CASE("reduced quasi-isomorphism")
{
    CHECK(verify_reduced_quasi_iso(star_graph(3), all_vertices(star_graph(3)), 1, 4).pass());
    CHECK(verify_reduced_quasi_iso(complete_graph(4), all_vertices(complete_graph(4)), 2, 3).pass());
    CHECK(verify_reduced_quasi_iso(theta_graph(3), {0}, 2, 3).pass());
    auto lonely = disjoint_union(interval_graph(), build_graph({"p"}, {}));
    CHECK_THROWS_AS(verify_reduced_quasi_iso(lonely, {2}, 1, 1), PreconditionError);
}

TEST_CASE("edge multiplication is injective")
{
    CHECK(verify_edge_injectivity(star_graph(3), 1, 3).pass());
    CHECK(verify_edge_injectivity(theta_graph(3), 1, 3).pass());
    CHECK(verify_edge_injectivity(complete_graph(4), 2, 2).pass());
}

TEST_CASE("vertex long exact sequence")
{
    auto k4 = complete_graph(4);
    auto v4 = k4.vertex("4");
    auto r = les_check(k4, v4, k4.half_edges_at(v4)[0], 3);
    CHECK_MESSAGE(r.pass(), r.summary());
    auto s3 = star_graph(3);
    CHECK(les_check(s3, 0, s3.half_edges_at(0)[0], 3).pass());
    CHECK(les_check(s3, 0, s3.half_edges_at(0)[2], 3).pass());
    auto c1 = cycle_graph(1);
    CHECK(les_check(c1, 0, 1, 3).pass());
    CHECK_THROWS_AS(les_check(s3, 1, 0, 2), PreconditionError);
}

TEST_CASE("one-bridge count")
{
    // Two triangles joined through the bivalent vertex m.
    auto g = build_graph({"a1", "a2", "a3", "m", "b1", "b2", "b3"},
                         {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}, {"a1", "m"}, {"m", "b1"}, {"b1", "b2"},
                          {"b2", "b3"}, {"b3", "b1"}},
                         "bridged");
    auto r = one_bridge_check(g, g.vertex("m"), 3);
    CHECK_MESSAGE(r.pass(), r.summary());
    auto path = subdivide_uniform(interval_graph(), 2).graph;
    CHECK(one_bridge_check(path, 2, 3).pass());
    auto lol = subdivide(lollipop_graph(1), {2, 1}).graph;
    CHECK(one_bridge_check(lol, lol.vertex("e0.1"), 3).pass());
    CHECK_THROWS_AS(one_bridge_check(cycle_graph(3), 0, 2), PreconditionError);
}

TEST_CASE("unitrivalent top degree")
{
    auto net = unitrivalent_top_check(net_graph(), 4, 7);
    CHECK_MESSAGE(net.pass(), net.summary());
    CHECK(homology(SwkComplex::fully_reduced(net_graph()), 3, 6).betti == 1);
    CHECK(homology(SwkComplex::fully_reduced(net_graph()), 3, 7).betti == 6);
    CHECK(unitrivalent_top_check(star_graph(3), 2, 4).pass());
    CHECK_THROWS_AS(unitrivalent_top_check(cycle_graph(3), 1, 2), PreconditionError);
}

TEST_CASE("random property suite")
{
    auto g = random_graph(7);
    CHECK(g.num_vertices() >= 1);
    CHECK(g.num_vertices() <= 5);
    CHECK(g.num_edges() <= 7);
    CHECK(random_graph(7) == g);
    auto r = property_suite(1, 10, 3);
    CHECK_MESSAGE(r.pass(), r.summary());
}
