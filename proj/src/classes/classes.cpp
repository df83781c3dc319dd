#include "swk/classes.hpp"

#include <algorithm>
#include <set>

#include "swk/error.hpp"
#include "swk/lattice.hpp"

namespace swk {

namespace {

Monomial with_state(const Graph& g, std::size_t v, VertexState s)
{
    Monomial m = unit_monomial(g);
    m.states[v] = s;
    return m;
}

Chain times_edge(std::size_t e, const Chain& c)
{
    Chain out;
    for (const auto& [m, coef] : c.terms()) {
        Monomial n = m;
        ++n.edge_degrees[e];
        out.add(n, coef);
    }
    return out;
}

// h_a - h_b at v.
Chain half_edge_difference(const Graph& g, std::size_t v, std::size_t a, std::size_t b)
{
    Chain c(with_state(g, v, VertexState::at(a)), 1);
    c.add(with_state(g, v, VertexState::at(b)), -1);
    return c;
}

void require_at(const Graph& g, std::size_t v, std::size_t h, const char* what)
{
    if (h >= g.num_half_edges() || g.vertex_of(h) != v)
        throw PreconditionError(std::string(what) + ": half-edge is not at vertex '" + g.vertex_id(v) + "'");
}

std::vector<std::size_t> walk_vertices(const Graph& g, const Walk& walk)
{
    if (walk.empty())
        throw PreconditionError("walk is empty");
    std::vector<std::size_t> vs;
    std::set<std::size_t> edges;
    for (std::size_t j = 0; j < walk.size(); ++j) {
        std::size_t h = walk[j];
        if (h >= g.num_half_edges())
            throw PreconditionError("walk names an unknown half-edge");
        std::size_t next = walk[(j + 1) % walk.size()];
        if (next >= g.num_half_edges() || g.vertex_of(Graph::opposite(h)) != g.vertex_of(next))
            throw PreconditionError("walk is not closed");
        if (!edges.insert(Graph::edge_of(h)).second)
            throw PreconditionError("walk repeats an edge");
        vs.push_back(g.vertex_of(h));
    }
    auto sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("walk is not embedded: a vertex repeats");
    return vs;
}

} // namespace

Chain star_cycle(const Graph& g, std::size_t v, std::size_t h1, std::size_t h2, std::size_t h3)
{
    if (v >= g.num_vertices())
        throw PreconditionError("star_cycle: unknown vertex");
    for (std::size_t h : {h1, h2, h3})
        require_at(g, v, h, "star_cycle");
    if (h1 == h2 || h2 == h3 || h1 == h3)
        throw PreconditionError("star_cycle: half-edges must be distinct");
    Chain c;
    std::size_t hs[3] = {h1, h2, h3};
    for (int j = 0; j < 3; ++j)
        c += times_edge(Graph::edge_of(hs[j]), half_edge_difference(g, v, hs[(j + 1) % 3], hs[(j + 2) % 3]));
    return c;
}

Walk walk_through(const Graph& g, const std::vector<std::size_t>& vertices)
{
    Walk walk;
    std::set<std::size_t> used;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        std::size_t a = vertices[j], b = vertices[(j + 1) % vertices.size()];
        if (a >= g.num_vertices() || b >= g.num_vertices())
            throw PreconditionError("walk_through: unknown vertex");
        std::optional<std::size_t> pick;
        for (std::size_t h : g.half_edges_at(a))
            if (g.vertex_of(Graph::opposite(h)) == b && !used.count(Graph::edge_of(h))) {
                pick = h;
                break;
            }
        if (!pick)
            throw PreconditionError("walk_through: no free edge from '" + g.vertex_id(a) + "' to '" + g.vertex_id(b) +
                                    "'");
        used.insert(Graph::edge_of(*pick));
        walk.push_back(*pick);
    }
    walk_vertices(g, walk);
    return walk;
}

Chain loop_cycle(const Graph& g, const Walk& walk)
{
    auto vs = walk_vertices(g, walk);
    Chain c;
    for (std::size_t j = 0; j < walk.size(); ++j) {
        std::size_t in = Graph::opposite(walk[(j + walk.size() - 1) % walk.size()]);
        c += half_edge_difference(g, vs[j], walk[j], in);
    }
    return c;
}

std::vector<std::size_t> vertex_support(const Chain& c)
{
    std::set<std::size_t> out;
    for (const auto& [m, coef] : c.terms())
        for (std::size_t v = 0; v < m.states.size(); ++v)
            if (m.states[v].kind != StateKind::Empty)
                out.insert(v);
    return {out.begin(), out.end()};
}

Chain external_product(const Graph& g, const std::vector<Chain>& factors)
{
    std::set<std::size_t> seen;
    for (const auto& f : factors)
        for (std::size_t v : vertex_support(f))
            if (!seen.insert(v).second)
                throw PreconditionError("external_product: supports overlap at vertex '" + g.vertex_id(v) + "'");

    Chain acc(unit_monomial(g), 1);
    for (const auto& f : factors) {
        Chain next;
        for (const auto& [a, ca] : acc.terms())
            for (const auto& [b, cb] : f.terms()) {
                Monomial m = a;
                for (std::size_t e = 0; e < m.edge_degrees.size(); ++e)
                    m.edge_degrees[e] += b.edge_degrees[e];
                // Moving each degree-1 state of b past the later-indexed ones of a.
                std::size_t swaps = 0;
                for (std::size_t v = 0; v < m.states.size(); ++v) {
                    if (b.states[v].kind == StateKind::Empty)
                        continue;
                    m.states[v] = b.states[v];
                    if (b.states[v].degree())
                        for (std::size_t u = v + 1; u < a.states.size(); ++u)
                            swaps += a.states[u].degree();
                }
                BigInt coef = ca * cb;
                next.add(m, swaps % 2 ? BigInt(-coef) : coef);
            }
        acc = std::move(next);
    }
    return acc;
}

Relation i_relation(const Graph& g, std::size_t v, std::size_t h1, std::size_t h2)
{
    require_at(g, v, h1, "i_relation");
    require_at(g, v, h2, "i_relation");
    if (h1 == h2)
        throw PreconditionError("i_relation: half-edges must be distinct");
    Chain c(unit_monomial(g), 0);
    Monomial a = unit_monomial(g), b = unit_monomial(g);
    ++a.edge_degrees[Graph::edge_of(h1)];
    ++b.edge_degrees[Graph::edge_of(h2)];
    c.add(a, 1);
    c.add(b, -1);
    return {"I", c, half_edge_difference(g, v, h1, h2)};
}

Relation x_relation(const Graph& g, std::size_t v, const std::array<std::size_t, 4>& h)
{
    Chain c;
    for (int j = 0; j < 4; ++j) {
        Chain star = star_cycle(g, v, h[(j + 1) % 4], h[(j + 2) % 4], h[(j + 3) % 4]);
        Chain term = times_edge(Graph::edge_of(h[j]), star);
        if (j % 2)
            c -= term;
        else
            c += term;
    }
    return {"X", c, std::nullopt};
}

Relation q_relation(const Graph& g, std::size_t h0, const Walk& walk)
{
    if (h0 >= g.num_half_edges())
        throw PreconditionError("q_relation: unknown half-edge");
    std::size_t v = g.vertex_of(h0);
    auto vs = walk_vertices(g, walk);
    if (vs.front() != v)
        throw PreconditionError("q_relation: walk must start at the vertex of h0");
    std::size_t out = walk.front();
    std::size_t in = Graph::opposite(walk.back());
    for (std::size_t h : walk)
        if (Graph::edge_of(h) == Graph::edge_of(h0))
            throw PreconditionError("q_relation: h0 lies on the walk");
    Chain gamma = loop_cycle(g, walk);
    Chain c = times_edge(Graph::edge_of(out), gamma) - times_edge(Graph::edge_of(h0), gamma);
    c -= star_cycle(g, v, h0, in, out);
    return {"Q", c, std::nullopt};
}

Relation theta_relation(const Graph& g, const std::array<std::size_t, 3>& at_u, const std::array<std::size_t, 3>& at_w)
{
    for (std::size_t h : at_u)
        if (h >= g.num_half_edges())
            throw PreconditionError("theta_relation: unknown half-edge");
    for (std::size_t h : at_w)
        if (h >= g.num_half_edges())
            throw PreconditionError("theta_relation: unknown half-edge");
    std::size_t u = g.vertex_of(at_u[0]);
    std::size_t w = g.vertex_of(at_w[0]);
    if (u == w)
        throw PreconditionError("theta_relation: the two vertices coincide");
    Chain c = star_cycle(g, u, at_u[0], at_u[1], at_u[2]) - star_cycle(g, w, at_w[2], at_w[1], at_w[0]);
    std::optional<Chain> witness;
    bool direct = true;
    for (int j = 0; j < 3; ++j)
        direct = direct && Graph::edge_of(at_u[j]) == Graph::edge_of(at_w[j]);
    if (direct) {
        auto hu = [&](int a, int b) { return half_edge_difference(g, u, at_u[a], at_u[b]); };
        auto hw = [&](int a, int b) { return half_edge_difference(g, w, at_w[a], at_w[b]); };
        witness = external_product(g, {hu(0, 1), hw(0, 2)}) - external_product(g, {hu(0, 2), hw(0, 1)});
    }
    return {"Theta", c, witness};
}

Relation o_relation(const Graph& g, const Walk& walk, std::size_t edge_i, std::size_t edge_j)
{
    auto on_walk = [&](std::size_t e) {
        return std::any_of(walk.begin(), walk.end(), [&](std::size_t h) { return Graph::edge_of(h) == e; });
    };
    Chain gamma = loop_cycle(g, walk);
    if (!on_walk(edge_i) || !on_walk(edge_j))
        throw PreconditionError("o_relation: edges must lie on the walk");
    return {"O", times_edge(edge_i, gamma) - times_edge(edge_j, gamma), std::nullopt};
}

bool verify_boundary(const SwkComplex& c, const Chain& chain)
{
    if (!c.boundary(chain).is_zero())
        throw PreconditionError("verify_boundary: chain is not closed");
    if (chain.is_zero())
        return true;
    auto [i, k] = chain.bidegree();
    auto s = c.slice(i, k);
    return solve_in_image(c.differential(i + 1, k), c.to_vector(chain, *s)).has_value();
}

Chain canonical_class(const Graph& g)
{
    std::vector<Chain> factors;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::size_t d = g.degree(v);
        if (d != 1 && d != 3)
            throw PreconditionError("canonical_class: vertex '" + g.vertex_id(v) + "' has valence " + std::to_string(d));
        if (d == 1)
            continue;
        auto hs = g.half_edges_at(v);
        std::optional<std::size_t> loop;
        for (std::size_t h : hs)
            if (g.is_self_loop(Graph::edge_of(h)))
                loop = Graph::edge_of(h);
        if (loop)
            factors.push_back(loop_cycle(g, {Graph::half_edge(*loop, 0)}));
        else
            factors.push_back(star_cycle(g, v, hs[0], hs[1], hs[2]));
    }
    return external_product(g, factors);
}

} // namespace swk

namespace swk {

std::vector<Walk> fundamental_cycles(const Graph& g)
{
    // BFS forest: parent half-edge (at the child, pointing to the parent) per vertex.
    std::size_t n = g.num_vertices();
    std::vector<std::optional<std::size_t>> up(n);
    std::vector<std::size_t> depth(n, 0);
    std::vector<char> seen(n, 0), tree_edge(g.num_edges(), 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        std::vector<std::size_t> queue{root};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            std::size_t a = queue[q];
            for (std::size_t h : g.half_edges_at(a)) {
                std::size_t b = g.vertex_of(Graph::opposite(h));
                if (seen[b])
                    continue;
                seen[b] = 1;
                up[b] = Graph::opposite(h);
                depth[b] = depth[a] + 1;
                tree_edge[Graph::edge_of(h)] = 1;
                queue.push_back(b);
            }
        }
    }
    std::vector<Walk> out;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (tree_edge[e])
            continue;
        // Walk: along e from a to b, then up the tree from b and down to a.
        std::size_t a = g.endpoint(e, 0), b = g.endpoint(e, 1);
        Walk from_b, from_a;  // half-edges pointing towards the root
        std::size_t x = b, y = a;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                from_b.push_back(*up[x]);
                x = g.vertex_of(Graph::opposite(*up[x]));
            } else {
                from_a.push_back(*up[y]);
                y = g.vertex_of(Graph::opposite(*up[y]));
            }
        }
        Walk w{Graph::half_edge(e, 0)};
        w.insert(w.end(), from_b.begin(), from_b.end());
        for (auto it = from_a.rbegin(); it != from_a.rend(); ++it)
            w.push_back(Graph::opposite(*it));
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

// Simple paths from u to w as half-edge sequences, at most `cap` of them.
std::vector<Walk> simple_paths(const Graph& g, std::size_t u, std::size_t w, std::size_t cap)
{
    std::vector<Walk> out;
    Walk path;
    std::vector<char> on(g.num_vertices(), 0);
    auto dfs = [&](auto&& self, std::size_t a) -> void {
        if (out.size() >= cap)
            return;
        if (a == w) {
            out.push_back(path);
            return;
        }
        for (std::size_t h : g.half_edges_at(a)) {
            std::size_t b = g.vertex_of(Graph::opposite(h));
            if (on[b])
                continue;
            on[b] = 1;
            path.push_back(h);
            self(self, b);
            path.pop_back();
            on[b] = 0;
        }
    };
    on[u] = 1;
    dfs(dfs, u);
    return out;
}

std::optional<std::array<Walk, 3>> find_theta(const Graph& g, std::size_t u, std::size_t w)
{
    auto paths = simple_paths(g, u, w, 400);
    auto interior = [&](const Walk& p) {
        std::vector<std::size_t> vs;
        for (std::size_t j = 1; j < p.size(); ++j)
            vs.push_back(g.vertex_of(p[j]));
        return vs;
    };
    auto disjoint = [&](const Walk& p, const Walk& q) {
        if (p.front() == q.front() || Graph::opposite(p.back()) == Graph::opposite(q.back()))
            return false;
        auto a = interior(p), b = interior(q);
        for (auto x : a)
            if (std::find(b.begin(), b.end(), x) != b.end())
                return false;
        return true;
    };
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            if (!disjoint(paths[i], paths[j]))
                continue;
            for (std::size_t k = j + 1; k < paths.size(); ++k)
                if (disjoint(paths[i], paths[k]) && disjoint(paths[j], paths[k]))
                    return std::array<Walk, 3>{paths[i], paths[j], paths[k]};
        }
    return std::nullopt;
}

} // namespace

CheckReport relation_suite(const Graph& g)
{
    SwkComplex c(g);
    CheckReport r{"relation suite", g.name(), {}};
    auto nontrivial = [&](const std::string& label, const Chain& x) {
        bool closed = c.boundary(x).is_zero();
        bool bounds = closed && verify_boundary(c, x);
        r.add(label, closed && !bounds, !closed ? "not closed" : bounds ? "is a boundary" : "closed, not a boundary");
    };
    auto relation = [&](const std::string& label, const Relation& rel) {
        bool closed = c.boundary(rel.chain).is_zero();
        bool witnessed = !rel.witness || c.boundary(*rel.witness) == rel.chain;
        bool bounds = closed && verify_boundary(c, rel.chain);
        std::string detail = !closed ? "not closed" : bounds ? "integral boundary" : "NOT a boundary";
        if (rel.witness)
            detail += witnessed ? ", explicit witness checks" : ", explicit witness fails";
        r.add(label, closed && bounds && witnessed, detail);
    };

    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto hs = g.half_edges_at(v);
        const auto& id = g.vertex_id(v);
        if (hs.size() >= 3)
            nontrivial("star at " + id, star_cycle(g, v, hs[0], hs[1], hs[2]));
        if (hs.size() >= 2)
            relation("I at " + id, i_relation(g, v, hs[0], hs[1]));
        if (hs.size() >= 4)
            relation("X at " + id, x_relation(g, v, {hs[0], hs[1], hs[2], hs[3]}));
    }

    auto cycles = fundamental_cycles(g);
    for (std::size_t j = 0; j < cycles.size(); ++j) {
        const Walk& walk = cycles[j];
        std::string name = "cycle " + std::to_string(j + 1) + " (through " + g.vertex_id(g.vertex_of(walk[0])) + ")";
        nontrivial("loop " + name, loop_cycle(g, walk));
        if (walk.size() >= 2)
            relation("O on " + name, o_relation(g, walk, Graph::edge_of(walk[0]), Graph::edge_of(walk[1])));
        bool found = false;
        for (std::size_t s = 0; s < walk.size() && !found; ++s) {
            Walk rotated(walk.begin() + static_cast<long>(s), walk.end());
            rotated.insert(rotated.end(), walk.begin(), walk.begin() + static_cast<long>(s));
            std::size_t v = g.vertex_of(rotated[0]);
            for (std::size_t h : g.half_edges_at(v)) {
                bool on_walk = std::any_of(walk.begin(), walk.end(),
                                           [&](std::size_t x) { return Graph::edge_of(x) == Graph::edge_of(h); });
                if (on_walk)
                    continue;
                relation("Q at " + g.vertex_id(v) + " on " + name, q_relation(g, h, rotated));
                found = true;
                break;
            }
        }
    }

    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t w = u + 1; w < g.num_vertices(); ++w) {
            if (g.degree(u) < 3 || g.degree(w) < 3)
                continue;
            auto theta = find_theta(g, u, w);
            if (!theta)
                continue;
            std::array<std::size_t, 3> at_u, at_w;
            for (int j = 0; j < 3; ++j) {
                at_u[j] = (*theta)[j].front();
                at_w[j] = Graph::opposite((*theta)[j].back());
            }
            relation("Theta " + g.vertex_id(u) + "-" + g.vertex_id(w), theta_relation(g, at_u, at_w));
        }
    return r;
}

} // namespace swk
