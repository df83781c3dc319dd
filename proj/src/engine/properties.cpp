#include "swk/properties.hpp"

#include <random>

#include "swk/formulas.hpp"
#include "swk/smith.hpp"

namespace swk {

Graph random_graph(std::uint64_t seed, std::size_t max_vertices, std::size_t max_edges)
{
    std::mt19937_64 rng(seed);
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    GraphBuilder b("random" + std::to_string(seed));
    for (std::size_t v = 0; v < n; ++v)
        b.add_vertex("v" + std::to_string(v));
    for (std::size_t e = 0; e < m; ++e)
        b.add_edge("e" + std::to_string(e), pick(rng), pick(rng));
    return std::move(b).build();
}

namespace {

bool smith_certificate(const IntMatrix& m)
{
    auto s = smith_normal_form(m);
    if (!(s.U * m * s.V == s.D))
        return false;
    if (!(s.U * s.U_inv == IntMatrix::identity(m.rows())) || !(s.V * s.V_inv == IntMatrix::identity(m.cols())))
        return false;
    for (std::size_t c = 0; c < s.D.cols(); ++c)
        for (const auto& e : s.D.column(c))
            if (e.row != c)
                return false;
    for (std::size_t j = 0; j < s.invariant_factors.size(); ++j) {
        if (s.invariant_factors[j] <= 0 || s.D.at(j, j) != s.invariant_factors[j])
            return false;
        if (j > 0 && !mpz_divisible_p(s.invariant_factors[j].get_mpz_t(), s.invariant_factors[j - 1].get_mpz_t()))
            return false;
    }
    return s.invariant_factors == invariant_factors(m);
}

std::vector<std::vector<std::size_t>> betti_grid(const SwkComplex& c, std::size_t max_weight)
{
    std::vector<std::vector<std::size_t>> out(max_weight + 1, std::vector<std::size_t>(max_weight + 1, 0));
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            out[i][k] = betti_of_pair(c.differential(i + 1, k), c.differential(i, k));
    return out;
}

} // namespace

CheckReport property_checks(std::uint64_t seed, std::size_t max_weight)
{
    Graph g = random_graph(seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    CheckReport r{"properties", g.name() + ", k<=" + std::to_string(max_weight), {}};
    SwkComplex full(g);
    SwkComplex red = SwkComplex::fully_reduced(g);

    for (const SwkComplex* c : {&full, &red}) {
        std::string tag = c == &full ? "full" : "reduced";
        bool square = true, graded = true, linear = true;
        for (std::size_t k = 0; k <= max_weight; ++k)
            for (std::size_t i = 0; i <= k; ++i) {
                if (i >= 2)
                    square = square && (c->differential(i - 1, k) * c->differential(i, k)).is_zero();
                for (const auto& m : c->slice(i, k)->basis) {
                    graded = graded && m.degree() == i && m.weight() == k && c->is_valid_monomial(m);
                    Chain d = c->boundary(m);
                    graded = graded && (d.is_zero() || d.bidegree() == std::pair{i - 1, k});
                }
                if (i >= 1 && k < max_weight)
                    for (std::size_t e = 0; e < g.num_edges(); ++e)
                        linear = linear && c->differential(i, k + 1) * c->edge_multiplication(e, i, k) ==
                                               c->edge_multiplication(e, i - 1, k) * c->differential(i, k);
            }
        r.add(tag + " d^2 = 0", square);
        r.add(tag + " bigrading", graded);
        r.add(tag + " Z[E]-linear", linear);
    }

    // Composition of morphisms: subdivide twice, and explode then subdivide.
    if (g.num_edges() > 0) {
        std::vector<std::size_t> pieces(g.num_edges(), 1);
        pieces[rng() % g.num_edges()] = 2;
        auto s1 = subdivide(g, pieces);
        std::vector<std::size_t> pieces2(s1.graph.num_edges(), 1);
        pieces2[rng() % s1.graph.num_edges()] = 3;
        auto s2 = subdivide(s1.graph, pieces2);
        auto composite = compose(s1.smoothing, s2.smoothing);
        SwkComplex a(s2.graph), b(s1.graph);
        bool ok = composite.is_valid();
        for (std::size_t k = 0; ok && k <= 2; ++k)
            for (std::size_t i = 0; i <= k; ++i)
                ok = ok && induced_chain_map(composite, a, full, i, k) ==
                               induced_chain_map(s1.smoothing, b, full, i, k) *
                                   induced_chain_map(s2.smoothing, a, b, i, k);
        r.add("functor composition (subdivisions)", ok);

        std::size_t v = g.endpoint(rng() % g.num_edges(), 0);
        auto ex = vertex_explosion(g, v);
        auto s3 = subdivide_uniform(ex.graph, 2);
        auto composite2 = compose(ex.morphism, s3.smoothing);
        SwkComplex x(ex.graph), y(s3.graph);
        bool ok2 = composite2.is_valid();
        for (std::size_t k = 0; ok2 && k <= 2; ++k)
            for (std::size_t i = 0; i <= k; ++i) {
                IntMatrix lhs = induced_chain_map(composite2, y, full, i, k);
                ok2 = ok2 && lhs == induced_chain_map(ex.morphism, x, full, i, k) *
                                        induced_chain_map(s3.smoothing, y, x, i, k);
                if (i >= 1)
                    ok2 = ok2 && full.differential(i, k) * lhs == induced_chain_map(composite2, y, full, i - 1, k) *
                                                                       y.differential(i, k);
            }
        r.add("functor composition (explosion)", ok2);
    }

    bool certified = true;
    for (std::size_t i = 1; i <= 2; ++i)
        certified = certified && smith_certificate(red.differential(i, 2)) && smith_certificate(full.differential(i, 1));
    r.add("Smith certificates", certified);

    bool euler = true;
    for (std::size_t k = 0; k <= max_weight; ++k) {
        BigInt chi = 0;
        for (std::size_t i = 0; i <= k; ++i)
            chi += (i % 2 ? -1 : 1) * static_cast<long>(homology(red, i, k).betti);
        euler = euler && chi == euler_characteristic(g, k) && chi == chain_euler_characteristic(full, k);
    }
    r.add("Euler identity", euler);

    Graph other = random_graph(seed + 0x51ed2701ULL, 3, 4);
    Graph both = disjoint_union(g, other);
    auto h1 = betti_grid(red, max_weight);
    auto h2 = betti_grid(SwkComplex::fully_reduced(other), max_weight);
    auto h = betti_grid(SwkComplex::fully_reduced(both), max_weight);
    bool kunneth = true;
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t n = 0; n <= k; ++n) {
            std::size_t predicted = 0;
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t a = 0; a <= k; ++a)
                    predicted += h1[i][a] * h2[n - i][k - a];
            kunneth = kunneth && predicted == h[n][k];
        }
    r.add("disjoint-union Kunneth", kunneth);
    return r;
}

CheckReport property_suite(std::uint64_t first_seed, std::size_t count, std::size_t max_weight)
{
    CheckReport r{"property suite",
                  "seeds " + std::to_string(first_seed) + ".." + std::to_string(first_seed + count - 1) +
                      ", k<=" + std::to_string(max_weight),
                  {}};
    for (std::size_t j = 0; j < count; ++j) {
        auto one = property_checks(first_seed + j, max_weight);
        for (auto item : one.items) {
            item.label = one.parameters + ": " + item.label;
            r.items.push_back(std::move(item));
        }
    }
    return r;
}

} // namespace swk
