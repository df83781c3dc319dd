#include <doctest.h>

#include "swk/formulas.hpp"

using namespace swk;

TEST_CASE("binomials and monomial counts")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(monomial_count(0, 0) == 1);
    CHECK(monomial_count(0, 2) == 0);
    CHECK(monomial_count(3, 2) == 6);
    CHECK(free_module_rank(3, {2}, 2) == 1);
    CHECK(free_module_rank(6, {6}, 7) == 6);
    CHECK(free_module_rank(4, {0}, 0) == 1);
}

TEST_CASE("Euler characteristic spot values")
{
    CHECK(euler_characteristic(complete_graph(4), 2) == -3);
    CHECK(euler_characteristic(star_graph(3), 2) == 0);
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(euler_characteristic(interval_graph(), k) == 1);
    for (const auto* name : {"K4", "theta 4", "lollipop 2", "K3,3"}) {
        auto g = standard_graph(name);
        CHECK(euler_characteristic(g, 1) == long(g.num_vertices()) - long(g.num_edges()));
    }
    // Points only: k-subsets.
    auto points = build_graph({"a", "b", "c"}, {});
    CHECK(euler_characteristic(points, 2) == 3);
}

TEST_CASE("series, formula and chain sum agree")
{
    for (const auto* name : {"interval", "star 3", "star 4", "cycle 1", "cycle 3", "theta 3", "lollipop 1", "net", "K4"}) {
        auto g = standard_graph(name);
        auto series = euler_poincare_coeffs(g, 10);
        SwkComplex full(g);
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK(series[k] == euler_characteristic(g, k));
            if (k <= 5)
                CHECK(chain_euler_characteristic(full, k) == series[k]);
        }
    }
    auto c1 = euler_poincare_coeffs(cycle_graph(1), 5);
    CHECK(c1 == std::vector<BigInt>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("disjoint union convolves")
{
    auto a = star_graph(3), b = cycle_graph(2);
    auto u = disjoint_union(a, b);
    for (std::size_t k = 0; k <= 6; ++k) {
        BigInt conv = 0;
        for (std::size_t j = 0; j <= k; ++j)
            conv += euler_characteristic(a, j) * euler_characteristic(b, k - j);
        CHECK(euler_characteristic(u, k) == conv);
    }
}
