#include <algorithm>
#include <numeric>

#include "swk/error.hpp"
#include "swk/graph.hpp"

namespace swk {

GraphMorphism::GraphMorphism(Graph source, Graph target, std::vector<std::size_t> edge_image,
                             std::vector<VertexImage> vertex_image)
    : source_(std::move(source)),
      target_(std::move(target)),
      edge_image_(std::move(edge_image)),
      vertex_image_(std::move(vertex_image))
{
    if (edge_image_.size() != source_.num_edges())
        throw GraphError("morphism edge image has " + std::to_string(edge_image_.size()) + " entries, source has " +
                         std::to_string(source_.num_edges()) + " edges");
    if (vertex_image_.size() != source_.num_vertices())
        throw GraphError("morphism vertex image has " + std::to_string(vertex_image_.size()) +
                         " entries, source has " + std::to_string(source_.num_vertices()) + " vertices");
}

GraphMorphism GraphMorphism::identity(const Graph& g)
{
    std::vector<std::size_t> edges(g.num_edges());
    std::iota(edges.begin(), edges.end(), std::size_t{0});
    std::vector<VertexImage> vertices;
    vertices.reserve(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto hs = g.half_edges_at(v);
        vertices.push_back(VertexImage::to_vertex(v, {hs.begin(), hs.end()}));
    }
    return GraphMorphism(g, g, std::move(edges), std::move(vertices));
}

std::optional<std::size_t> GraphMorphism::half_edge_image(std::size_t h) const
{
    const auto& img = vertex_image_.at(source_.vertex_of(h));
    if (img.kind != VertexImage::Kind::Vertex)
        return std::nullopt;
    return img.half_edge_map.at(source_.local_index(h));
}

void GraphMorphism::validate() const
{
    const Graph& s = source_;
    const Graph& t = target_;
    auto vname = [&](std::size_t v) { return "'" + s.vertex_id(v) + "'"; };

    for (std::size_t e = 0; e < s.num_edges(); ++e)
        if (edge_image_[e] >= t.num_edges())
            throw GraphError("edge '" + s.edge_id(e) + "' maps outside the target");

    std::vector<int> target_vertex_used(t.num_vertices(), 0);
    std::vector<int> target_half_used(t.num_half_edges(), 0);

    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
        const auto& img = vertex_image_[v];
        auto hs = s.half_edges_at(v);
        if (img.kind == VertexImage::Kind::Vertex) {
            if (img.target >= t.num_vertices())
                throw GraphError("vertex " + vname(v) + " maps outside the target");
            if (target_vertex_used[img.target]++)
                throw GraphError("two vertices map to target vertex '" + t.vertex_id(img.target) + "'");
            if (img.half_edge_map.size() != hs.size())
                throw GraphError("half-edge map at vertex " + vname(v) + " has the wrong length");
            for (std::size_t i = 0; i < hs.size(); ++i) {
                std::size_t h = img.half_edge_map[i];
                if (h >= t.num_half_edges() || t.vertex_of(h) != img.target)
                    throw GraphError("half-edge map at vertex " + vname(v) + " leaves the image vertex");
                if (Graph::edge_of(h) != edge_image_[Graph::edge_of(hs[i])])
                    throw GraphError("half-edge map at vertex " + vname(v) + " disagrees with the edge map");
                if (target_half_used[h]++)
                    throw GraphError("target half-edge of '" + t.edge_id(Graph::edge_of(h)) + "' is hit twice");
            }
        } else {
            if (img.target >= t.num_edges())
                throw GraphError("vertex " + vname(v) + " maps into an edge outside the target");
            if (hs.size() > 2)
                throw GraphError("vertex " + vname(v) + " of valence > 2 maps into an edge interior");
            for (std::size_t h : hs)
                if (edge_image_[Graph::edge_of(h)] != img.target)
                    throw GraphError("edge at vertex " + vname(v) + " leaves the edge its vertex maps into");
        }
    }

    // Source edges over one target edge must form disjoint arcs.
    std::vector<std::size_t> parent(s.num_edges());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
        const auto& img = vertex_image_[v];
        auto hs = s.half_edges_at(v);
        if (img.kind != VertexImage::Kind::EdgeInterior || hs.size() < 2)
            continue;
        auto a = find(Graph::edge_of(hs[0]));
        auto b = find(Graph::edge_of(hs[1]));
        if (a == b)
            throw GraphError("source edges over '" + t.edge_id(img.target) + "' close up into a cycle");
        parent[a] = b;
    }
    // A component reaching both target half-edges covers the whole edge and must be alone.
    std::vector<std::size_t> attached(s.num_edges(), 0);
    for (std::size_t h = 0; h < s.num_half_edges(); ++h)
        if (vertex_image_[s.vertex_of(h)].kind == VertexImage::Kind::Vertex)
            ++attached[find(Graph::edge_of(h))];
    std::vector<std::size_t> pieces_over(t.num_edges(), 0);
    std::vector<bool> full_over(t.num_edges(), false);
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        if (find(e) != e)
            continue;
        ++pieces_over[edge_image_[e]];
        if (attached[e] >= 2)
            full_over[edge_image_[e]] = true;
    }
    for (std::size_t v = 0; v < s.num_vertices(); ++v)
        if (vertex_image_[v].kind == VertexImage::Kind::EdgeInterior && s.degree(v) == 0)
            ++pieces_over[vertex_image_[v].target];
    for (std::size_t e = 0; e < t.num_edges(); ++e)
        if (full_over[e] && pieces_over[e] > 1)
            throw GraphError("target edge '" + t.edge_id(e) + "' is covered more than once");
}

bool GraphMorphism::is_valid() const noexcept
{
    try {
        validate();
        return true;
    } catch (const Error&) {
        return false;
    }
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner)
{
    if (!(inner.target() == outer.source()))
        throw GraphError("cannot compose morphisms: intermediate graphs differ");
    const Graph& a = inner.source();
    const Graph& b = inner.target();

    std::vector<std::size_t> edges(a.num_edges());
    for (std::size_t e = 0; e < a.num_edges(); ++e)
        edges[e] = outer.edge_image(inner.edge_image(e));

    std::vector<VertexImage> vertices;
    vertices.reserve(a.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        const auto& first = inner.vertex_image(v);
        if (first.kind == VertexImage::Kind::EdgeInterior) {
            vertices.push_back(VertexImage::into_edge(outer.edge_image(first.target)));
            continue;
        }
        const auto& second = outer.vertex_image(first.target);
        if (second.kind == VertexImage::Kind::EdgeInterior) {
            vertices.push_back(VertexImage::into_edge(second.target));
            continue;
        }
        std::vector<std::size_t> hmap;
        hmap.reserve(first.half_edge_map.size());
        for (std::size_t hb : first.half_edge_map)
            hmap.push_back(second.half_edge_map.at(b.local_index(hb)));
        vertices.push_back(VertexImage::to_vertex(second.target, std::move(hmap)));
    }
    return GraphMorphism(a, outer.target(), std::move(edges), std::move(vertices));
}

} // namespace swk
