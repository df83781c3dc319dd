#include <doctest.h>

#include <functional>

#include "swk/complex.hpp"
#include "swk/error.hpp"
#include "swk/homology_group.hpp"

using namespace swk;

namespace {

// Coefficient of x^i t^k in prod_v local_v(x, t) / (1 - t)^|E|, where a full
// vertex contributes 1 + t + d x t and a reduced one 1 + (d - 1) x t.
BigInt slice_dimension_oracle(const Graph& g, const std::vector<bool>& reduced, std::size_t i, std::size_t k)
{
    // poly[a][b] = coefficient of x^a t^b
    std::vector<std::vector<BigInt>> poly(i + 1, std::vector<BigInt>(k + 1, 0));
    poly[0][0] = 1;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        long d = static_cast<long>(g.degree(v));
        auto next = std::vector<std::vector<BigInt>>(i + 1, std::vector<BigInt>(k + 1, 0));
        for (std::size_t a = 0; a <= i; ++a)
            for (std::size_t b = 0; b <= k; ++b) {
                if (poly[a][b] == 0)
                    continue;
                next[a][b] += poly[a][b];
                long xt = reduced[v] ? (d > 0 ? d - 1 : 0) : d;
                if (b + 1 <= k) {
                    if (!reduced[v])
                        next[a][b + 1] += poly[a][b];
                    if (a + 1 <= i)
                        next[a + 1][b + 1] += poly[a][b] * xt;
                }
            }
        poly = std::move(next);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        for (std::size_t a = 0; a <= i; ++a)
            for (std::size_t b = 1; b <= k; ++b)
                poly[a][b] += poly[a][b - 1];
    return poly[i][k];
}

std::vector<bool> mask(const Graph& g, const std::vector<std::size_t>& u)
{
    std::vector<bool> m(g.num_vertices(), false);
    for (auto v : u)
        m[v] = true;
    return m;
}

HomologyGroup slice_homology(const SwkComplex& c, std::size_t i, std::size_t k)
{
    return homology_of_pair(c.differential(i + 1, k), c.differential(i, k));
}

void check_chain_map(const SwkComplex& src, const SwkComplex& dst, std::size_t k,
                     const std::function<IntMatrix(std::size_t, std::size_t)>& f)
{
    for (std::size_t i = 1; i <= k; ++i)
        CHECK(dst.differential(i, k) * f(i, k) == f(i - 1, k) * src.differential(i, k));
}

} // namespace

TEST_CASE("slice dimensions")
{
    auto s3 = star_graph(3);
    CHECK(SwkComplex(s3).slice(1, 2)->dim() == 36);
    CHECK(SwkComplex(s3).slice(0, 0)->dim() == 1);
    CHECK(SwkComplex(s3, {0, 1, 2, 3}).slice(1, 2)->dim() == 6);

    for (const auto* name : {"star 3", "cycle 3", "theta 3", "complete 4", "lollipop 2", "net"}) {
        auto g = standard_graph(name);
        std::vector<std::vector<std::size_t>> reductions = {{}, {0}};
        std::vector<std::size_t> all;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            all.push_back(v);
        reductions.push_back(all);
        for (const auto& u : reductions) {
            SwkComplex c(g, u);
            for (std::size_t k = 0; k <= 3; ++k)
                for (std::size_t i = 0; i <= k; ++i)
                    CHECK(BigInt(c.slice(i, k)->dim()) == slice_dimension_oracle(g, mask(g, u), i, k));
        }
    }
}

TEST_CASE("basis monomials are valid, sorted and distinct")
{
    SwkComplex c(theta_graph(3), {1});
    auto s = c.slice(2, 3);
    for (std::size_t j = 0; j < s->dim(); ++j) {
        CHECK(c.is_valid_monomial(s->basis[j]));
        CHECK(s->basis[j].degree() == 2);
        CHECK(s->basis[j].weight() == 3);
        if (j > 0)
            CHECK(s->basis[j - 1] < s->basis[j]);
    }
}

TEST_CASE("differential squares to zero and is Z[E]-linear")
{
    for (const auto* name : {"star 4", "theta 4", "complete 4", "K3,3"}) {
        auto g = standard_graph(name);
        for (auto c : {SwkComplex::full(g), SwkComplex::fully_reduced(g), SwkComplex(g, {1})}) {
            for (std::size_t k = 0; k <= 3; ++k)
                for (std::size_t i = 2; i <= k; ++i)
                    CHECK((c.differential(i - 1, k) * c.differential(i, k)).is_zero());
            for (std::size_t e = 0; e < g.num_edges(); e += 2)
                for (std::size_t i = 1; i <= 2; ++i)
                    CHECK(c.differential(i, 3) * c.edge_multiplication(e, i, 2) ==
                          c.edge_multiplication(e, i - 1, 2) * c.differential(i, 2));
        }
    }
}

TEST_CASE("chain-level boundary agrees with the matrix")
{
    SwkComplex c(complete_graph(4));
    auto s = c.slice(2, 3);
    auto t = c.slice(1, 3);
    auto d = c.differential(2, 3);
    for (std::size_t j = 0; j < s->dim(); j += 7) {
        IntVector unit(s->dim());
        unit[j] = 1;
        CHECK(c.to_vector(c.boundary(s->basis[j]), *t) == d.apply(unit));
    }
}

TEST_CASE("small homology groups")
{
    auto i = interval_graph();
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(slice_homology(SwkComplex(i), 0, k).betti == 1);

    auto c4 = cycle_graph(4);
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(slice_homology(SwkComplex(c4), 0, k).betti == 1);
        CHECK(slice_homology(SwkComplex(c4), 1, k).betti == 1);
    }

    // Two points on a tripod: a circle.
    auto h = slice_homology(SwkComplex(star_graph(3)), 1, 2);
    CHECK(h.betti == 1);
    CHECK(h.torsion.empty());
    auto hr = slice_homology(SwkComplex::fully_reduced(star_graph(3)), 1, 2);
    CHECK(hr.betti == 1);
}

TEST_CASE("the star class is a cycle")
{
    auto g = star_graph(3);
    SwkComplex c(g);
    auto hs = g.half_edges_at(0);
    Chain alpha;
    for (int j = 0; j < 3; ++j) {
        std::size_t h1 = hs[j], h2 = hs[(j + 1) % 3], h3 = hs[(j + 2) % 3];
        Monomial a = unit_monomial(g), b = unit_monomial(g);
        a.edge_degrees[Graph::edge_of(h1)] = 1;
        b.edge_degrees[Graph::edge_of(h1)] = 1;
        a.states[0] = VertexState::at(h2);
        b.states[0] = VertexState::at(h3);
        alpha.add(a, 1);
        alpha.add(b, -1);
    }
    CHECK(alpha.bidegree() == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(c.boundary(alpha).is_zero());
    CHECK(c.format(Chain(unit_monomial(g))) == "1");
}

TEST_CASE("induced maps are chain maps and functorial")
{
    auto k4 = complete_graph(4);
    auto ex = vertex_explosion(k4, 3);
    SwkComplex a(ex.graph), b(k4);
    check_chain_map(a, b, 3, [&](std::size_t i, std::size_t k) { return induced_chain_map(ex.morphism, a, b, i, k); });

    // Reduced source, reduced target.
    SwkComplex ar = SwkComplex::fully_reduced(ex.graph);
    SwkComplex br(k4, {0, 1, 2});
    check_chain_map(ar, br, 3,
                    [&](std::size_t i, std::size_t k) { return induced_chain_map(ex.morphism, ar, br, i, k); });

    auto sub = subdivide_uniform(k4, 2);
    SwkComplex s(sub.graph);
    check_chain_map(s, b, 3,
                    [&](std::size_t i, std::size_t k) { return induced_chain_map(sub.smoothing, s, b, i, k); });

    // Subdivide the exploded graph, smooth back, then map into K4.
    auto sub2 = subdivide_uniform(ex.graph, 2);
    SwkComplex s2(sub2.graph);
    auto comp = compose(ex.morphism, sub2.smoothing);
    for (std::size_t i = 0; i <= 2; ++i)
        CHECK(induced_chain_map(comp, s2, b, i, 2) ==
              induced_chain_map(ex.morphism, a, b, i, 2) * induced_chain_map(sub2.smoothing, s2, a, i, 2));

    auto id = GraphMorphism::identity(k4);
    CHECK(induced_chain_map(id, b, b, 1, 2) == IntMatrix::identity(b.slice(1, 2)->dim()));
}

TEST_CASE("reduced inclusion and contraction are chain maps")
{
    auto g = theta_graph(3);
    SwkComplex full(g);
    SwkComplex red = SwkComplex::fully_reduced(g);
    check_chain_map(red, full, 3, [&](std::size_t i, std::size_t k) { return reduced_inclusion(red, full, i, k); });

    auto lonely = disjoint_union(interval_graph(), build_graph({"p"}, {}));
    SwkComplex bad(lonely, {2});
    CHECK_THROWS_AS(reduced_inclusion(bad, SwkComplex(lonely), 0, 0), PreconditionError);

    auto k4 = complete_graph(4);
    SwkComplex big(k4);
    for (std::size_t e : {0U, 5U}) {
        auto con = contract_edge(k4, e);
        SwkComplex minor(con.minor);
        check_chain_map(minor, big, 3,
                        [&](std::size_t i, std::size_t k) { return contraction_chain_map(con, minor, big, i, k); });
    }
    auto loop = contract_edge(cycle_graph(1), 0);
    SwkComplex lm(loop.minor), lc(cycle_graph(1));
    CHECK_THROWS_AS(contraction_chain_map(loop, lm, lc, 0, 0), PreconditionError);
}

TEST_CASE("image outside a reduced target is rejected")
{
    auto g = star_graph(3);
    auto id = GraphMorphism::identity(g);
    SwkComplex full(g), red(g, {0});
    CHECK_THROWS_AS(induced_chain_map(id, full, red, 0, 1), PreconditionError);
}

TEST_CASE("chain arithmetic")
{
    auto g = interval_graph();
    Monomial m = unit_monomial(g);
    Chain a(m, 2);
    Chain b = a - a;
    CHECK(b.is_zero());
    CHECK_THROWS_AS(b.bidegree(), PreconditionError);
    CHECK((BigInt(3) * a).coefficient(m) == 6);
    SwkComplex c(g);
    CHECK(c.from_vector(c.to_vector(a, *c.slice(0, 0)), *c.slice(0, 0)) == a);
}
