#include <doctest.h>

#include "swk/formulas.hpp"
#include "swk/oracle.hpp"

using namespace swk;

namespace {

Graph path_graph(std::size_t n)
{
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t j = 0; j < n; ++j)
        vs.push_back("p" + std::to_string(j));
    for (std::size_t j = 0; j + 1 < n; ++j)
        es.emplace_back(vs[j], vs[j + 1]);
    return build_graph(vs, es, "path");
}

} // namespace

TEST_CASE("sufficient subdivision sizes")
{
    auto k4 = sufficient_subdivision(complete_graph(4), 2);
    CHECK(k4.num_vertices() == 16);
    CHECK(k4.num_edges() == 18);
    CHECK(sufficient_subdivision(interval_graph(), 3).num_vertices() == 5);
    auto c1 = sufficient_subdivision(cycle_graph(1), 2);
    CHECK(c1.num_vertices() == 3);
    CHECK(c1.num_edges() == 3);
    CHECK(sufficient_subdivision(cycle_graph(1), 0).num_edges() == 2);
}

TEST_CASE("cell counts")
{
    auto p4 = path_graph(4);
    CHECK(enumerate_cells(p4, 2, 0).size() == 6);
    CHECK(enumerate_cells(p4, 2, 1).size() == 6);
    CHECK(enumerate_cells(p4, 2, 2).size() == 1);
    auto c5 = subdivide_uniform(cycle_graph(1), 5).graph;
    CHECK(enumerate_cells(c5, 2, 0).size() == 10);
    CHECK(enumerate_cells(c5, 2, 1).size() == 15);
    CHECK(enumerate_cells(c5, 2, 2).size() == 5);
    auto empty = enumerate_cells(complete_graph(4), 0, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].edges.empty());
    CHECK(empty[0].vertices.empty());
    CHECK_THROWS_AS(enumerate_cells(c5, 2, 0, 3), CellLimitError);
}

TEST_CASE("cube boundary")
{
    auto i = interval_graph();
    auto d = cube_boundary(i, 1, 1);
    CHECK(d == IntMatrix::from_rows({{-1}, {1}}));

    auto loop = cycle_graph(1);
    CHECK(cube_boundary(loop, 1, 1).is_zero());

    for (const auto* name : {"K4", "theta 3", "net", "star 4"}) {
        auto g = sufficient_subdivision(standard_graph(name), 3);
        for (std::size_t dim = 2; dim <= 3; ++dim)
            CHECK((cube_boundary(g, 3, dim - 1) * cube_boundary(g, 3, dim)).is_zero());
    }
}

TEST_CASE("oracle homology")
{
    CHECK(oracle_homology(cycle_graph(1), 1, 2).to_string() == "Z");
    CHECK(oracle_homology(star_graph(3), 1, 2).to_string() == "Z");
    for (std::size_t k = 0; k <= 3; ++k)
        for (std::size_t deg = 0; deg <= 2; ++deg)
            CHECK(oracle_homology(interval_graph(), deg, k).betti == (deg == 0 ? 1U : 0U));
}

TEST_CASE("oracle Euler characteristic and components")
{
    for (const auto* name : {"star 3", "cycle 3", "theta 3", "lollipop 1", "net", "K4"}) {
        auto base = standard_graph(name);
        for (std::size_t k = 0; k <= 3; ++k) {
            auto g = sufficient_subdivision(base, k);
            BigInt chi = 0;
            for (std::size_t dim = 0; dim <= k; ++dim)
                chi += (dim % 2 ? -1 : 1) * static_cast<long>(enumerate_cells(g, k, dim).size());
            CHECK(chi == euler_characteristic(base, k));
        }
    }
    auto two = disjoint_union(interval_graph(), cycle_graph(3));
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(oracle_homology(two, 0, k).betti == k + 1);
}

TEST_CASE("cross checks")
{
    for (const auto* name : {"interval", "star 3", "cycle 3", "lollipop 1"}) {
        auto r = cross_check(standard_graph(name), 2, 3);
        CHECK_MESSAGE(r.pass(), r.summary());
    }
    auto k33 = cross_check(complete_bipartite_graph(3, 3), 1, 2);
    CHECK_MESSAGE(k33.pass(), k33.summary());
    auto ii = cross_check(disjoint_union(interval_graph(), interval_graph()), 2, 2);
    CHECK_MESSAGE(ii.pass(), ii.summary());

    auto capped = cross_check(star_graph(3), 1, 2, 10);
    CHECK(std::any_of(capped.items.begin(), capped.items.end(), [](const CheckItem& x) { return x.skipped; }));
}
