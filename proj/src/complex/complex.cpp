#include "swk/complex.hpp"

#include <algorithm>
#include <sstream>

#include "swk/error.hpp"

namespace swk {

std::size_t Monomial::degree() const noexcept
{
    std::size_t d = 0;
    for (const auto& s : states)
        d += s.degree();
    return d;
}

std::size_t Monomial::weight() const noexcept
{
    std::size_t w = 0;
    for (auto d : edge_degrees)
        w += d;
    for (const auto& s : states)
        w += s.weight();
    return w;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::size_t x) { h = (h ^ x) * 0x100000001b3ULL; };
    for (auto d : m.edge_degrees)
        mix(d);
    for (const auto& s : m.states)
        mix((static_cast<std::size_t>(s.half_edge) << 2) | static_cast<std::size_t>(s.kind));
    return h;
}

Monomial unit_monomial(const Graph& g)
{
    Monomial m;
    m.edge_degrees.assign(g.num_edges(), 0);
    m.states.assign(g.num_vertices(), VertexState::empty());
    return m;
}

// ---------------------------------------------------------------------------
// Chain
// ---------------------------------------------------------------------------

Chain::Chain(const Monomial& m, const BigInt& coefficient)
{
    add(m, coefficient);
}

void Chain::add(const Monomial& m, const BigInt& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigInt Chain::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool Chain::is_homogeneous() const noexcept
{
    if (terms_.empty())
        return true;
    auto d = terms_.begin()->first.degree();
    auto w = terms_.begin()->first.weight();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree() == d && t.first.weight() == w; });
}

std::pair<std::size_t, std::size_t> Chain::bidegree() const
{
    if (terms_.empty())
        throw PreconditionError("the zero chain has no bidegree");
    if (!is_homogeneous())
        throw PreconditionError("chain is not homogeneous");
    const auto& m = terms_.begin()->first;
    return {m.degree(), m.weight()};
}

Chain& Chain::operator+=(const Chain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

Chain& Chain::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

std::optional<std::size_t> ComplexSlice::find(const Monomial& m) const
{
    auto it = index.find(m);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// SwkComplex
// ---------------------------------------------------------------------------

SwkComplex::SwkComplex(Graph g, std::vector<std::size_t> reduced)
    : graph_(std::move(g)), reduced_(graph_.num_vertices(), 0)
{
    for (std::size_t v : reduced) {
        if (v >= graph_.num_vertices())
            throw PreconditionError("reduction set names a vertex outside the graph");
        reduced_[v] = 1;
    }
    for (std::size_t v = 0; v < graph_.num_vertices(); ++v)
        if (reduced_[v])
            reduced_list_.push_back(v);
}

SwkComplex::SwkComplex(const SwkComplex& other)
    : graph_(other.graph_), reduced_(other.reduced_), reduced_list_(other.reduced_list_)
{
    std::lock_guard lock(other.cache_mutex_);
    cache_ = other.cache_;
}

SwkComplex SwkComplex::fully_reduced(const Graph& g)
{
    std::vector<std::size_t> u;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0)
            u.push_back(v);
    return SwkComplex(g, std::move(u));
}

std::size_t SwkComplex::base_half_edge(std::size_t v) const
{
    auto hs = graph_.half_edges_at(v);
    if (hs.empty())
        throw PreconditionError("vertex '" + graph_.vertex_id(v) + "' has no half-edges");
    return hs.front();
}

std::vector<VertexState> SwkComplex::local_states(std::size_t v) const
{
    std::vector<VertexState> out{VertexState::empty()};
    auto hs = graph_.half_edges_at(v);
    if (reduced_.at(v)) {
        for (std::size_t i = 1; i < hs.size(); ++i)
            out.push_back(VertexState::difference(hs[i]));
    } else {
        out.push_back(VertexState::occupied());
        for (std::size_t h : hs)
            out.push_back(VertexState::at(h));
    }
    return out;
}

bool SwkComplex::is_valid_monomial(const Monomial& m) const
{
    if (m.edge_degrees.size() != graph_.num_edges() || m.states.size() != graph_.num_vertices())
        return false;
    for (std::size_t v = 0; v < graph_.num_vertices(); ++v) {
        auto allowed = local_states(v);
        if (std::find(allowed.begin(), allowed.end(), m.states[v]) == allowed.end())
            return false;
    }
    return true;
}

ComplexSlice enumerate_basis(const SwkComplex& c, std::size_t degree, std::size_t weight)
{
    const Graph& g = c.graph();
    ComplexSlice s;
    s.degree = degree;
    s.weight = weight;
    std::size_t nv = g.num_vertices();
    std::size_t ne = g.num_edges();
    std::vector<std::vector<VertexState>> local(nv);
    for (std::size_t v = 0; v < nv; ++v)
        local[v] = c.local_states(v);

    Monomial m = unit_monomial(g);

    // Distribute `rest` units of weight over edges from index e on.
    auto fill_edges = [&](auto&& self, std::size_t e, std::size_t rest) -> void {
        if (e + 1 >= ne) {
            if (ne == 0) {
                if (rest == 0)
                    s.basis.push_back(m);
                return;
            }
            m.edge_degrees[ne - 1] = static_cast<std::uint16_t>(rest);
            s.basis.push_back(m);
            m.edge_degrees[ne - 1] = 0;
            return;
        }
        for (std::size_t d = 0; d <= rest; ++d) {
            m.edge_degrees[e] = static_cast<std::uint16_t>(d);
            self(self, e + 1, rest - d);
        }
        m.edge_degrees[e] = 0;
    };
    auto fill_states = [&](auto&& self, std::size_t v, std::size_t deg_left, std::size_t wt_left) -> void {
        if (deg_left > wt_left)
            return;
        if (v == nv) {
            if (deg_left == 0)
                fill_edges(fill_edges, 0, wt_left);
            return;
        }
        for (const auto& st : local[v]) {
            if (static_cast<std::size_t>(st.degree()) > deg_left || static_cast<std::size_t>(st.weight()) > wt_left)
                continue;
            m.states[v] = st;
            self(self, v + 1, deg_left - st.degree(), wt_left - st.weight());
        }
        m.states[v] = VertexState::empty();
    };
    fill_states(fill_states, 0, degree, weight);

    std::sort(s.basis.begin(), s.basis.end());
    s.index.reserve(s.basis.size());
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        s.index.emplace(s.basis[i], i);
    return s;
}

std::shared_ptr<const ComplexSlice> SwkComplex::slice(std::size_t degree, std::size_t weight) const
{
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find({degree, weight});
        if (it != cache_.end())
            return it->second;
    }
    auto built = std::make_shared<const ComplexSlice>(enumerate_basis(*this, degree, weight));
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(std::make_pair(degree, weight), built);
    return it->second;
}

Chain SwkComplex::boundary(const Monomial& m) const
{
    Chain out;
    int sign = 1;
    for (std::size_t v = 0; v < m.states.size(); ++v) {
        const auto& st = m.states[v];
        if (st.degree() == 0)
            continue;
        Monomial a = m;
        a.states[v] = VertexState::empty();
        std::size_t h = st.half_edge;
        if (st.kind == StateKind::HalfEdge) {
            Monomial b = a;
            ++a.edge_degrees[Graph::edge_of(h)];
            b.states[v] = VertexState::occupied();
            out.add(a, sign);
            out.add(b, -sign);
        } else {
            Monomial b = a;
            ++a.edge_degrees[Graph::edge_of(h)];
            ++b.edge_degrees[Graph::edge_of(base_half_edge(v))];
            out.add(a, sign);
            out.add(b, -sign);
        }
        sign = -sign;
    }
    return out;
}

Chain SwkComplex::boundary(const Chain& c) const
{
    Chain out;
    for (const auto& [m, coef] : c.terms()) {
        Chain d = boundary(m);
        d *= coef;
        out += d;
    }
    return out;
}

Chain SwkComplex::multiply_edge(std::size_t e, const Chain& c) const
{
    if (e >= graph_.num_edges())
        throw PreconditionError("multiply_edge: unknown edge");
    Chain out;
    for (const auto& [m, coef] : c.terms()) {
        Monomial n = m;
        ++n.edge_degrees[e];
        out.add(n, coef);
    }
    return out;
}

IntMatrix SwkComplex::differential(std::size_t degree, std::size_t weight) const
{
    auto src = slice(degree, weight);
    if (degree == 0)
        return IntMatrix(0, src->dim());
    auto dst = slice(degree - 1, weight);
    IntMatrix d(dst->dim(), 0);
    for (const auto& m : src->basis) {
        IntMatrix::Column col;
        Chain image = boundary(m);
        for (const auto& [t, coef] : image.terms())
            col.push_back({dst->index.at(t), coef});
        d.append_column(std::move(col));
    }
    return d;
}

IntMatrix SwkComplex::edge_multiplication(std::size_t e, std::size_t degree, std::size_t weight) const
{
    if (e >= graph_.num_edges())
        throw PreconditionError("edge_multiplication: unknown edge");
    auto src = slice(degree, weight);
    auto dst = slice(degree, weight + 1);
    IntMatrix m(dst->dim(), 0);
    for (const auto& b : src->basis) {
        Monomial n = b;
        ++n.edge_degrees[e];
        m.append_column({{dst->index.at(n), 1}});
    }
    return m;
}

IntVector SwkComplex::to_vector(const Chain& c, const ComplexSlice& s) const
{
    IntVector v(s.dim());
    for (const auto& [m, coef] : c.terms()) {
        auto i = s.find(m);
        if (!i)
            throw PreconditionError("chain term " + format(m) + " is outside the slice");
        v[*i] = coef;
    }
    return v;
}

Chain SwkComplex::from_vector(const IntVector& v, const ComplexSlice& s) const
{
    if (v.size() != s.dim())
        throw PreconditionError("vector length does not match the slice");
    Chain c;
    for (std::size_t i = 0; i < v.size(); ++i)
        c.add(s.basis[i], v[i]);
    return c;
}

std::string SwkComplex::format(const Monomial& m) const
{
    std::ostringstream out;
    bool any = false;
    auto sep = [&] {
        if (any)
            out << '*';
        any = true;
    };
    for (std::size_t e = 0; e < m.edge_degrees.size(); ++e) {
        if (m.edge_degrees[e] == 0)
            continue;
        sep();
        out << graph_.edge_id(e);
        if (m.edge_degrees[e] > 1)
            out << '^' << m.edge_degrees[e];
    }
    auto half = [&](std::size_t h) {
        return "h[" + graph_.edge_id(Graph::edge_of(h)) + "@" + graph_.vertex_id(graph_.vertex_of(h)) + "]";
    };
    for (std::size_t v = 0; v < m.states.size(); ++v) {
        const auto& st = m.states[v];
        switch (st.kind) {
        case StateKind::Empty: break;
        case StateKind::Occupied:
            sep();
            out << "v[" << graph_.vertex_id(v) << "]";
            break;
        case StateKind::HalfEdge:
            sep();
            out << half(st.half_edge);
            break;
        case StateKind::Difference:
            sep();
            out << '(' << half(st.half_edge) << '-' << half(base_half_edge(v)) << ')';
            break;
        }
    }
    if (!any)
        out << '1';
    return out.str();
}

std::string SwkComplex::format(const Chain& c) const
{
    if (c.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, coef] : c.terms()) {
        BigInt a = abs(coef);
        if (first)
            out << (coef < 0 ? "-" : "");
        else
            out << (coef < 0 ? " - " : " + ");
        if (a != 1)
            out << a.get_str() << '*';
        out << format(m);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Chain maps built from vertex-local images
// ---------------------------------------------------------------------------

namespace {

struct LocalTerm {
    enum class Kind { Unit, Edge, State } kind;
    int coefficient;
    std::size_t target;  // edge for Edge, vertex for State
    VertexState state;
};
using LocalImage = std::vector<LocalTerm>;

// Rewrites a chain over full target states into the target's reduced basis.
Chain to_reduced_target(const SwkComplex& target, const Chain& full)
{
    const auto& reduced = target.reduced_vertices();
    if (reduced.empty())
        return full;
    Chain kept, leftover;
    for (const auto& [m, coef] : full.terms()) {
        // Each HalfEdge(h != h0) at a reduced vertex splits as Difference(h) + HalfEdge(h0).
        std::vector<std::size_t> split;
        bool clean = true;
        for (std::size_t w : reduced) {
            const auto& st = m.states[w];
            if (st.kind == StateKind::Empty || st.kind == StateKind::Difference)
                continue;
            if (st.kind == StateKind::HalfEdge && target.graph().degree(w) > 0 &&
                st.half_edge != target.base_half_edge(w))
                split.push_back(w);
            else
                clean = false;
        }
        std::size_t combos = std::size_t{1} << split.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            Monomial n = m;
            for (std::size_t b = 0; b < split.size(); ++b) {
                std::size_t w = split[b];
                if (mask >> b & 1U)
                    n.states[w] = VertexState::at(target.base_half_edge(w));
                else
                    n.states[w] = VertexState::difference(m.states[w].half_edge);
            }
            if (clean && mask == 0)
                kept.add(n, coef);
            else
                leftover.add(n, coef);
        }
    }
    if (!leftover.is_zero())
        throw PreconditionError("chain map image leaves the reduced target subcomplex");
    return kept;
}

template <class LocalFn>
Chain map_monomial(const SwkComplex& source, const SwkComplex& target, const std::vector<std::size_t>& edge_map,
                   LocalFn&& local, const Monomial& m)
{
    const Graph& sg = source.graph();
    std::size_t nv = sg.num_vertices();
    std::vector<LocalImage> images(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& st = m.states[v];
        if (st.kind == StateKind::Difference) {
            images[v] = local(v, VertexState::at(st.half_edge));
            for (auto t : local(v, VertexState::at(source.base_half_edge(v)))) {
                t.coefficient = -t.coefficient;
                images[v].push_back(t);
            }
        } else {
            images[v] = local(v, st);
        }
        if (images[v].empty())
            return {};
    }

    Monomial base = unit_monomial(target.graph());
    for (std::size_t e = 0; e < m.edge_degrees.size(); ++e)
        base.edge_degrees[edge_map[e]] += m.edge_degrees[e];

    Chain out;
    std::vector<std::size_t> pick(nv, 0);
    std::vector<std::size_t> order;
    for (;;) {
        Monomial n = base;
        long coef = 1;
        order.clear();
        for (std::size_t v = 0; v < nv; ++v) {
            const auto& t = images[v][pick[v]];
            coef *= t.coefficient;
            switch (t.kind) {
            case LocalTerm::Kind::Unit: break;
            case LocalTerm::Kind::Edge: ++n.edge_degrees[t.target]; break;
            case LocalTerm::Kind::State:
                if (n.states[t.target].kind != StateKind::Empty)
                    throw PreconditionError("two source vertices land on the same target vertex");
                n.states[t.target] = t.state;
                if (t.state.degree())
                    order.push_back(t.target);
                break;
            }
        }
        // Koszul sign of reordering degree-1 factors into target vertex order.
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b)
                inversions += order[a] > order[b];
        if (inversions % 2)
            coef = -coef;
        out.add(n, coef);

        std::size_t v = 0;
        while (v < nv && ++pick[v] == images[v].size())
            pick[v++] = 0;
        if (v == nv)
            break;
    }
    return to_reduced_target(target, out);
}

template <class LocalFn>
Chain map_chain(const SwkComplex& source, const SwkComplex& target, const std::vector<std::size_t>& edge_map,
                LocalFn&& local, const Chain& c)
{
    Chain out;
    for (const auto& [m, coef] : c.terms()) {
        Chain image = map_monomial(source, target, edge_map, local, m);
        image *= coef;
        out += image;
    }
    return out;
}

template <class LocalFn>
IntMatrix map_matrix(const SwkComplex& source, const SwkComplex& target, const std::vector<std::size_t>& edge_map,
                     LocalFn&& local, std::size_t degree, std::size_t weight)
{
    auto src = source.slice(degree, weight);
    auto dst = target.slice(degree, weight);
    IntMatrix f(dst->dim(), 0);
    for (const auto& m : src->basis) {
        IntMatrix::Column col;
        Chain image = map_monomial(source, target, edge_map, local, m);
        for (const auto& [t, coef] : image.terms()) {
            auto row = dst->find(t);
            if (!row)
                throw PreconditionError("chain map image " + target.format(t) + " is not a basis monomial");
            col.push_back({*row, coef});
        }
        f.append_column(std::move(col));
    }
    return f;
}

auto morphism_local(const GraphMorphism& f)
{
    return [&f](std::size_t v, const VertexState& st) -> LocalImage {
        const auto& img = f.vertex_image(v);
        bool to_vertex = img.kind == VertexImage::Kind::Vertex;
        switch (st.kind) {
        case StateKind::Empty: return {{LocalTerm::Kind::Unit, 1, 0, {}}};
        case StateKind::Occupied:
            if (to_vertex)
                return {{LocalTerm::Kind::State, 1, img.target, VertexState::occupied()}};
            return {{LocalTerm::Kind::Edge, 1, img.target, {}}};
        case StateKind::HalfEdge:
            if (to_vertex)
                return {{LocalTerm::Kind::State, 1, img.target,
                         VertexState::at(img.half_edge_map.at(f.source().local_index(st.half_edge)))}};
            return {};
        case StateKind::Difference: break;
        }
        throw PreconditionError("unexpected local state");
    };
}

void check_morphism(const GraphMorphism& f, const SwkComplex& source, const SwkComplex& target)
{
    if (!(f.source() == source.graph()) || !(f.target() == target.graph()))
        throw PreconditionError("morphism endpoints do not match the complexes");
    f.validate();
}

auto contraction_local(const Contraction& c, const Graph& original)
{
    return [&c, &original](std::size_t u, const VertexState& st) -> LocalImage {
        std::size_t e = c.contracted_edge;
        bool merged = c.merged_vertex && *c.merged_vertex == u;
        auto original_half = [&](std::size_t h) {
            return Graph::half_edge(c.edge_to_original.at(Graph::edge_of(h)), Graph::end_of(h));
        };
        switch (st.kind) {
        case StateKind::Empty: return {{LocalTerm::Kind::Unit, 1, 0, {}}};
        case StateKind::Occupied:
            if (merged)
                return {{LocalTerm::Kind::Edge, 1, e, {}}};
            return {{LocalTerm::Kind::State, 1, c.vertex_to_original.at(u), VertexState::occupied()}};
        case StateKind::HalfEdge: {
            std::size_t h = original_half(st.half_edge);
            std::size_t w = original.vertex_of(h);
            if (!merged)
                return {{LocalTerm::Kind::State, 1, w, VertexState::at(h)}};
            std::size_t hj = original.endpoint(e, 0) == w ? Graph::half_edge(e, 0) : Graph::half_edge(e, 1);
            return {{LocalTerm::Kind::State, 1, w, VertexState::at(h)},
                    {LocalTerm::Kind::State, -1, w, VertexState::at(hj)}};
        }
        case StateKind::Difference: break;
        }
        throw PreconditionError("unexpected local state");
    };
}

void check_contraction(const Contraction& c, const SwkComplex& minor, const SwkComplex& original)
{
    if (!(c.minor == minor.graph()))
        throw PreconditionError("contraction minor does not match the source complex");
    if (original.graph().num_edges() != c.minor.num_edges() + 1 ||
        c.contracted_edge >= original.graph().num_edges())
        throw PreconditionError("contraction does not match the target complex");
    if (!c.merged_vertex)
        throw PreconditionError("contraction_chain_map needs a non-loop edge; use the deletion embedding");
    if (!minor.is_full() || !original.is_full())
        throw PreconditionError("contraction_chain_map works on full complexes");
}

} // namespace

IntMatrix induced_chain_map(const GraphMorphism& f, const SwkComplex& source, const SwkComplex& target,
                            std::size_t degree, std::size_t weight)
{
    check_morphism(f, source, target);
    return map_matrix(source, target, f.edge_images(), morphism_local(f), degree, weight);
}

Chain induced_chain(const GraphMorphism& f, const SwkComplex& source, const SwkComplex& target, const Chain& c)
{
    check_morphism(f, source, target);
    return map_chain(source, target, f.edge_images(), morphism_local(f), c);
}

IntMatrix contraction_chain_map(const Contraction& c, const SwkComplex& minor, const SwkComplex& original,
                                std::size_t degree, std::size_t weight)
{
    check_contraction(c, minor, original);
    return map_matrix(minor, original, c.edge_to_original, contraction_local(c, original.graph()), degree, weight);
}

Chain contraction_chain(const Contraction& c, const SwkComplex& minor, const SwkComplex& original, const Chain& x)
{
    check_contraction(c, minor, original);
    return map_chain(minor, original, c.edge_to_original, contraction_local(c, original.graph()), x);
}

IntMatrix reduced_inclusion(const SwkComplex& reduced, const SwkComplex& full, std::size_t degree,
                            std::size_t weight)
{
    if (!(reduced.graph() == full.graph()))
        throw PreconditionError("reduced_inclusion: complexes belong to different graphs");
    if (!full.is_full())
        throw PreconditionError("reduced_inclusion: target must be the full complex");
    for (std::size_t v : reduced.reduced_vertices())
        if (reduced.graph().degree(v) == 0)
            throw PreconditionError("reduced_inclusion: vertex '" + reduced.graph().vertex_id(v) +
                                    "' in the reduction set is isolated");
    auto id = GraphMorphism::identity(reduced.graph());
    return map_matrix(reduced, full, id.edge_images(), morphism_local(id), degree, weight);
}

} // namespace swk
