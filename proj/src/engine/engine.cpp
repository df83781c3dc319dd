#include "swk/engine.hpp"

#include <sstream>

#include "swk/error.hpp"
#include "swk/formulas.hpp"
#include "swk/lattice.hpp"
#include "swk/parallel.hpp"
#include "swk/smith.hpp"

namespace swk {

HomologyGroup homology(const SwkComplex& c, std::size_t degree, std::size_t weight)
{
    if (c.slice(degree, weight)->dim() == 0)
        return {};
    return homology_of_pair(c.differential(degree + 1, weight), c.differential(degree, weight));
}

HomologyGroup homology(const Graph& g, std::size_t degree, std::size_t weight, const std::vector<std::size_t>& reduced)
{
    return homology(SwkComplex(g, reduced), degree, weight);
}

HomologyTable homology_table(const SwkComplex& c, std::size_t max_degree, std::size_t max_weight, std::size_t workers)
{
    HomologyTable t;
    t.graph = c.graph().name();
    t.max_degree = max_degree;
    t.max_weight = max_weight;
    t.reduced = c.reduced_vertices();
    std::vector<std::pair<std::size_t, std::size_t>> slices;
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t i = 0; i <= max_degree; ++i)
            slices.emplace_back(i, k);
    auto groups = parallel_map(
        slices.size(), [&](std::size_t j) { return homology(c, slices[j].first, slices[j].second); }, workers);
    for (std::size_t j = 0; j < slices.size(); ++j)
        t.entries.emplace(slices[j], std::move(groups[j]));
    return t;
}

// ---------------------------------------------------------------------------
// CheckReport
// ---------------------------------------------------------------------------

bool CheckReport::pass() const
{
    bool ran = false;
    for (const auto& item : items) {
        if (item.skipped)
            continue;
        ran = true;
        if (!item.pass)
            return false;
    }
    return ran;
}

std::size_t CheckReport::failures() const
{
    std::size_t n = 0;
    for (const auto& item : items)
        n += !item.skipped && !item.pass;
    return n;
}

void CheckReport::add(std::string label, bool ok, std::string detail)
{
    items.push_back({std::move(label), ok, std::move(detail), false});
}

void CheckReport::skip(std::string label, std::string detail)
{
    items.push_back({std::move(label), true, std::move(detail), true});
}

void CheckReport::merge(const CheckReport& other)
{
    for (auto item : other.items) {
        item.label = other.name + " " + item.label;
        items.push_back(std::move(item));
    }
}

std::string CheckReport::summary() const
{
    std::size_t ran = 0, skipped = 0;
    for (const auto& item : items)
        (item.skipped ? skipped : ran) += 1;
    std::ostringstream out;
    out << name;
    if (!parameters.empty())
        out << " (" << parameters << ")";
    out << ": " << (pass() ? "pass" : "FAIL") << ", " << ran - failures() << "/" << ran << " items";
    if (skipped)
        out << ", " << skipped << " skipped";
    return out.str();
}

std::string slice_label(std::size_t degree, std::size_t weight)
{
    return "H" + std::to_string(degree) + "(B" + std::to_string(weight) + ")";
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

namespace {

HomologyPresentation presentation(const SwkComplex& c, std::size_t degree, std::size_t weight)
{
    return HomologyPresentation(c.differential(degree + 1, weight), c.differential(degree, weight));
}

IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies)
{
    IntMatrix out(block.rows() * copies, 0);
    for (std::size_t b = 0; b < copies; ++b)
        for (std::size_t c = 0; c < block.cols(); ++c) {
            IntMatrix::Column col = block.column(c);
            for (auto& e : col)
                e.row += b * block.rows();
            out.append_column(std::move(col));
        }
    return out;
}

IntMatrix hstack_all(const std::vector<IntMatrix>& parts, std::size_t rows)
{
    IntMatrix out(rows, 0);
    for (const auto& p : parts)
        for (std::size_t c = 0; c < p.cols(); ++c)
            out.append_column(p.column(c));
    return out;
}

std::string bounds(std::size_t max_degree, std::size_t max_weight)
{
    return "i<=" + std::to_string(max_degree) + ", k<=" + std::to_string(max_weight);
}

} // namespace

CheckReport verify_reduced_quasi_iso(const Graph& g, const std::vector<std::size_t>& reduced, std::size_t max_degree,
                                     std::size_t max_weight)
{
    for (std::size_t v : reduced)
        if (v < g.num_vertices() && g.degree(v) == 0)
            throw PreconditionError("reduction set contains the isolated vertex '" + g.vertex_id(v) + "'");
    SwkComplex red(g, reduced), full(g);
    CheckReport r{"reduced quasi-isomorphism", g.name() + ", " + bounds(max_degree, max_weight), {}};
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t i = 0; i <= std::min(max_degree, k); ++i) {
            auto pr = presentation(red, i, k);
            auto pf = presentation(full, i, k);
            auto f = induced_on_homology(reduced_inclusion(red, full, i, k), pr, pf);
            r.add(slice_label(i, k), f.isomorphism(),
                  pr.group().to_string() + " -> " + pf.group().to_string() +
                      (f.isomorphism() ? "" : f.injective ? " not surjective" : " not injective"));
        }
    return r;
}

CheckReport verify_edge_injectivity(const Graph& g, std::size_t max_degree, std::size_t max_weight)
{
    SwkComplex c(g);
    CheckReport r{"edge multiplication injective", g.name() + ", " + bounds(max_degree, max_weight), {}};
    for (std::size_t i = 0; i <= max_degree; ++i) {
        if (i > max_weight)
            break;
        auto lower = presentation(c, i, i);
        for (std::size_t k = i; k <= max_weight; ++k) {
            auto upper = presentation(c, i, k + 1);
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                auto f = induced_on_homology(c.edge_multiplication(e, i, k), lower, upper);
                r.add(g.edge_id(e) + " on " + slice_label(i, k), f.injective,
                      lower.group().to_string() + " -> " + upper.group().to_string());
            }
            lower = std::move(upper);
        }
    }
    return r;
}

CheckReport les_check(const Graph& g, std::size_t v, std::size_t h0, std::size_t max_weight)
{
    if (v >= g.num_vertices())
        throw PreconditionError("les_check: unknown vertex");
    auto hv = g.half_edges_at(v);
    if (std::find(hv.begin(), hv.end(), h0) == hv.end())
        throw PreconditionError("les_check: half-edge is not at the vertex");

    auto ex = vertex_explosion(g, v);
    SwkComplex a(ex.graph);
    SwkComplex b(g, {v});
    std::size_t base = b.base_half_edge(v);
    std::vector<std::size_t> others;  // copies of the cokernel summand, one per h != h0
    for (std::size_t h : hv)
        if (h != h0)
            others.push_back(h);
    std::size_t copies = others.size();
    auto copy_of = [&](std::size_t h) {
        return static_cast<std::size_t>(std::find(others.begin(), others.end(), h) - others.begin());
    };
    std::vector<std::size_t> new_of(g.num_vertices(), 0);
    for (std::size_t w = 0; w < ex.graph.num_vertices(); ++w) {
        const auto& img = ex.morphism.vertex_image(w);
        if (img.kind == VertexImage::Kind::Vertex)
            new_of[img.target] = w;
    }

    // Quotient S̃_v(G)_{i,k} -> ⊕_{h != h0} S(G_v)_{i-1,k-1}.
    auto psi = [&](std::size_t i, std::size_t k) {
        auto src = b.slice(i, k);
        IntMatrix m(0, 0);
        if (i == 0 || k == 0)
            return IntMatrix(0, src->dim());
        auto dst = a.slice(i - 1, k - 1);
        m = IntMatrix(copies * dst->dim(), 0);
        for (const auto& mono : src->basis) {
            IntMatrix::Column col;
            const auto& st = mono.states[v];
            if (st.kind == StateKind::Difference) {
                Monomial x = unit_monomial(ex.graph);
                x.edge_degrees = mono.edge_degrees;
                long sign = 1;
                for (std::size_t u = 0; u < g.num_vertices(); ++u) {
                    if (u == v)
                        continue;
                    x.states[new_of[u]] = mono.states[u];
                    if (u < v && mono.states[u].degree())
                        sign = -sign;
                }
                std::size_t row = dst->index.at(x);
                if (st.half_edge != h0)
                    col.push_back({copy_of(st.half_edge) * dst->dim() + row, sign});
                if (base != h0)
                    col.push_back({copy_of(base) * dst->dim() + row, -sign});
            }
            m.append_column(std::move(col));
        }
        return m;
    };

    std::map<std::pair<std::size_t, std::size_t>, IntMatrix> cycles_a, cycles_b;
    auto za = [&](std::size_t i, std::size_t k) -> const IntMatrix& {
        auto it = cycles_a.find({i, k});
        if (it == cycles_a.end())
            it = cycles_a.emplace(std::make_pair(i, k), kernel_basis(a.differential(i, k))).first;
        return it->second;
    };
    auto zb = [&](std::size_t i, std::size_t k) -> const IntMatrix& {
        auto it = cycles_b.find({i, k});
        if (it == cycles_b.end())
            it = cycles_b.emplace(std::make_pair(i, k), kernel_basis(b.differential(i, k))).first;
        return it->second;
    };
    auto betti_a = [&](std::size_t i, std::size_t k) { return betti_of_pair(a.differential(i + 1, k), a.differential(i, k)); };
    auto betti_b = [&](std::size_t i, std::size_t k) { return betti_of_pair(b.differential(i + 1, k), b.differential(i, k)); };

    auto rank_phi = [&](std::size_t i, std::size_t k) {
        return induced_rank_rational(induced_chain_map(ex.morphism, a, b, i, k), za(i, k), b.differential(i + 1, k));
    };
    auto rank_psi = [&](std::size_t i, std::size_t k) -> std::size_t {
        if (i == 0 || k == 0)
            return 0;
        return induced_rank_rational(psi(i, k), zb(i, k), block_diagonal(a.differential(i, k - 1), copies));
    };
    // δ : ⊕ H_j(B_{k-1}(G_v)) -> H_j(B_k(G_v)), copy h acting by e(h) - e(h0).
    auto rank_delta = [&](std::size_t j, std::size_t k) -> std::size_t {
        if (k == 0)
            return 0;
        const auto& z = za(j, k - 1);
        std::vector<IntMatrix> parts;
        IntMatrix m0 = a.edge_multiplication(Graph::edge_of(h0), j, k - 1);
        for (std::size_t h : others)
            parts.push_back((a.edge_multiplication(Graph::edge_of(h), j, k - 1) - m0) * z);
        IntMatrix f = hstack_all(parts, a.slice(j, k)->dim());
        IntMatrix by = a.differential(j + 1, k);
        return rank(hstack(f, by)) - rank(by);
    };

    CheckReport r{"vertex long exact sequence",
                  g.name() + ", v=" + g.vertex_id(v) + ", k<=" + std::to_string(max_weight), {}};
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            std::size_t phi = rank_phi(i, k);
            std::size_t ps = rank_psi(i, k);
            std::size_t hb = betti_b(i, k);
            std::size_t ha = betti_a(i, k);
            std::size_t din = rank_delta(i, k);
            r.add("at " + slice_label(i, k) + "(G)", hb == phi + ps,
                  "dim " + std::to_string(hb) + ", rank in " + std::to_string(phi) + ", rank out " + std::to_string(ps));
            r.add("at " + slice_label(i, k) + "(G_v)", ha == din + phi,
                  "dim " + std::to_string(ha) + ", rank in " + std::to_string(din) + ", rank out " + std::to_string(phi));
            if (i >= 1 && k >= 1) {
                std::size_t hc = copies * betti_a(i - 1, k - 1);
                std::size_t dout = rank_delta(i - 1, k);
                r.add("at " + std::to_string(copies) + " x " + slice_label(i - 1, k - 1) + "(G_v)", hc == ps + dout,
                      "dim " + std::to_string(hc) + ", rank in " + std::to_string(ps) + ", rank out " +
                          std::to_string(dout));
            }
        }
    return r;
}

Graph component_subgraph(const Graph& g, std::size_t label)
{
    auto labels = g.component_labels();
    GraphBuilder b(g.name() + "#" + std::to_string(label));
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (labels[v] == label)
            b.add_vertex(g.vertex_id(v));
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (labels[g.endpoint(e, 0)] == label)
            b.add_edge(g.edge_id(e), g.vertex_id(g.endpoint(e, 0)), g.vertex_id(g.endpoint(e, 1)));
    return std::move(b).build();
}

CheckReport one_bridge_check(const Graph& g, std::size_t v, std::size_t max_weight)
{
    if (v >= g.num_vertices())
        throw PreconditionError("one_bridge_check: unknown vertex");
    if (g.degree(v) != 2 || g.num_components() != 1)
        throw PreconditionError("one_bridge_check: vertex must be bivalent in a connected graph");
    auto ex = vertex_explosion(g, v);
    if (ex.graph.num_components() != 2)
        throw PreconditionError("one_bridge_check: removing '" + g.vertex_id(v) + "' does not disconnect the graph");

    auto betti_grid = [&](const Graph& h) {
        SwkComplex c = SwkComplex::fully_reduced(h);
        std::vector<std::vector<long>> out(max_weight + 1, std::vector<long>(max_weight + 1, 0));
        for (std::size_t k = 0; k <= max_weight; ++k)
            for (std::size_t i = 0; i <= k; ++i)
                out[i][k] = static_cast<long>(betti_of_pair(c.differential(i + 1, k), c.differential(i, k)));
        return out;
    };
    // Generator counts of a free Q[e]-module: first differences in the weight.
    auto generators = [&](const std::vector<std::vector<long>>& dims) {
        auto out = dims;
        for (std::size_t i = 0; i <= max_weight; ++i)
            for (std::size_t k = 1; k <= max_weight; ++k)
                out[i][k] = dims[i][k] - dims[i][k - 1];
        return out;
    };
    auto g1 = generators(betti_grid(component_subgraph(ex.graph, 0)));
    auto g2 = generators(betti_grid(component_subgraph(ex.graph, 1)));
    auto whole = betti_grid(g);

    CheckReport r{"one-bridge Kunneth", g.name() + ", v=" + g.vertex_id(v) + ", k<=" + std::to_string(max_weight), {}};
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t n = 0; n <= k; ++n) {
            long predicted = 0;
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t a = 0; a <= k; ++a)
                    for (std::size_t bw = 0; a + bw <= k; ++bw)
                        predicted += g1[i][a] * g2[n - i][bw];
            r.add(slice_label(n, k), predicted == whole[n][k],
                  "predicted " + std::to_string(predicted) + ", computed " + std::to_string(whole[n][k]));
        }
    return r;
}

CheckReport unitrivalent_top_check(const Graph& g, std::size_t min_weight, std::size_t max_weight)
{
    std::size_t n = 0, loops = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 1 && g.degree(v) != 3)
            throw PreconditionError("unitrivalent_top_check: vertex '" + g.vertex_id(v) + "' has valence " +
                                    std::to_string(g.degree(v)));
        n += g.degree(v) == 3;
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        loops += g.is_self_loop(e);
    long top_weight = 2 * static_cast<long>(n) - static_cast<long>(loops);
    std::size_t ne = g.num_edges();

    SwkComplex c = SwkComplex::fully_reduced(g);
    CheckReport r{"unitrivalent top degree",
                  g.name() + ", N=" + std::to_string(n) + ", k in [" + std::to_string(min_weight) + "," +
                      std::to_string(max_weight) + "]",
                  {}};
    for (std::size_t k = min_weight; k <= max_weight; ++k) {
        auto top = homology(c, n, k);
        BigInt expected = monomial_count(ne, static_cast<long>(k) - top_weight);
        r.add(slice_label(n, k) + " rank", BigInt(static_cast<unsigned long>(top.betti)) == expected,
              top.to_string() + ", expected rank " + expected.get_str());
        r.add(slice_label(n, k) + " torsion-free", top.torsion.empty(), top.to_string());
        if (!g.is_simple())
            continue;
        if (n >= 1) {
            auto codim1 = homology(c, n - 1, k);
            if (ne >= 2) {
                BigInt e1 = static_cast<unsigned long>(n);
                e1 *= monomial_count(ne - 2, static_cast<long>(k) - (2 * static_cast<long>(n) - 2));
                r.add(slice_label(n - 1, k) + " rank", BigInt(static_cast<unsigned long>(codim1.betti)) == e1,
                      codim1.to_string() + ", expected rank " + e1.get_str());
            }
            r.add(slice_label(n - 1, k) + " torsion-free", codim1.torsion.empty(), codim1.to_string());
        }
        if (n >= 2) {
            auto codim2 = homology(c, n - 2, k);
            r.add(slice_label(n - 2, k) + " torsion-free", codim2.torsion.empty(), codim2.to_string());
        }
    }
    return r;
}

} // namespace swk
