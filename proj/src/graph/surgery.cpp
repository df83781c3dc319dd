#include <algorithm>
#include <numeric>

#include "swk/error.hpp"
#include "swk/graph.hpp"

namespace swk {

namespace {

template <class Has>
std::string fresh_id(Has has, std::string id)
{
    while (has(id))
        id += "'";
    return id;
}

// Vertex map sending every vertex of `sub` to `g` via original half-edges.
std::vector<VertexImage> vertex_images_by_half_edge(const Graph& sub, const std::vector<std::size_t>& vertex_to_g,
                                                    const std::vector<std::size_t>& half_to_g)
{
    std::vector<VertexImage> out;
    out.reserve(sub.num_vertices());
    for (std::size_t v = 0; v < sub.num_vertices(); ++v) {
        std::vector<std::size_t> hmap;
        for (std::size_t h : sub.half_edges_at(v))
            hmap.push_back(half_to_g[h]);
        out.push_back(VertexImage::to_vertex(vertex_to_g[v], std::move(hmap)));
    }
    return out;
}

} // namespace

Subdivision subdivide(const Graph& g, const std::vector<std::size_t>& pieces_per_edge)
{
    if (pieces_per_edge.size() != g.num_edges())
        throw PreconditionError("subdivide: one piece count per edge is required");
    for (std::size_t p : pieces_per_edge)
        if (p == 0)
            throw PreconditionError("subdivide: piece counts must be positive");

    GraphBuilder b(g.name() + "'");
    auto has_v = [&](const std::string& s) { return b.has_vertex(s) || g.find_vertex(s).has_value(); };
    for (const auto& v : g.vertex_ids())
        b.add_vertex(v);

    // interior[e][j-1] is the j-th new vertex along e.
    std::vector<std::vector<std::size_t>> interior(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        for (std::size_t j = 1; j < pieces_per_edge[e]; ++j)
            interior[e].push_back(b.add_vertex(fresh_id(has_v, g.edge_id(e) + "." + std::to_string(j))));

    std::vector<std::size_t> edge_image;
    std::vector<std::size_t> half_to_g;  // new half-edge -> original half-edge (only at original vertices)
    auto has_e = [&](const std::string& s) { return b.has_edge(s) || g.find_edge(s).has_value(); };
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        std::size_t p = pieces_per_edge[e];
        if (p == 1) {
            b.add_edge(g.edge_id(e), g.endpoint(e, 0), g.endpoint(e, 1));
            edge_image.push_back(e);
            half_to_g.push_back(Graph::half_edge(e, 0));
            half_to_g.push_back(Graph::half_edge(e, 1));
            continue;
        }
        for (std::size_t j = 1; j <= p; ++j) {
            std::size_t tail = j == 1 ? g.endpoint(e, 0) : interior[e][j - 2];
            std::size_t head = j == p ? g.endpoint(e, 1) : interior[e][j - 1];
            b.add_edge(fresh_id(has_e, g.edge_id(e) + "." + std::to_string(j)), tail, head);
            edge_image.push_back(e);
            half_to_g.push_back(j == 1 ? Graph::half_edge(e, 0) : std::size_t(-1));
            half_to_g.push_back(j == p ? Graph::half_edge(e, 1) : std::size_t(-1));
        }
    }
    Graph sub = std::move(b).build();

    std::vector<VertexImage> vertices;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::size_t> hmap;
        for (std::size_t h : sub.half_edges_at(v))
            hmap.push_back(half_to_g[h]);
        vertices.push_back(VertexImage::to_vertex(v, std::move(hmap)));
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        for (std::size_t j = 1; j < pieces_per_edge[e]; ++j)
            vertices.push_back(VertexImage::into_edge(e));

    GraphMorphism smoothing(sub, g, std::move(edge_image), std::move(vertices));
    return {std::move(sub), std::move(smoothing)};
}

Subdivision subdivide_uniform(const Graph& g, std::size_t pieces)
{
    return subdivide(g, std::vector<std::size_t>(g.num_edges(), pieces));
}

Explosion vertex_explosion(const Graph& g, std::size_t v)
{
    if (v >= g.num_vertices())
        throw PreconditionError("vertex_explosion: vertex index out of range");
    GraphBuilder b(g.name() + "_" + g.vertex_id(v));
    auto has_v = [&](const std::string& s) { return b.has_vertex(s) || g.find_vertex(s).has_value(); };

    std::vector<std::size_t> old_to_new(g.num_vertices());
    std::vector<std::size_t> half_target(g.num_half_edges());  // new endpoint for half-edges at v
    std::vector<std::size_t> new_vertices;
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        if (u != v) {
            old_to_new[u] = b.add_vertex(g.vertex_id(u));
            continue;
        }
        for (std::size_t h : g.half_edges_at(v)) {
            std::size_t e = Graph::edge_of(h);
            std::string id = g.vertex_id(v) + ":" + g.edge_id(e);
            if (g.is_self_loop(e))
                id += "." + std::to_string(Graph::end_of(h));
            std::size_t w = b.add_vertex(fresh_id(has_v, id));
            half_target[h] = w;
            new_vertices.push_back(w);
        }
    }
    std::vector<std::size_t> edge_image(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        std::size_t ends[2];
        for (int end = 0; end < 2; ++end) {
            std::size_t u = g.endpoint(e, end);
            ends[end] = u == v ? half_target[Graph::half_edge(e, end)] : old_to_new[u];
        }
        b.add_edge(g.edge_id(e), ends[0], ends[1]);
        edge_image[e] = e;
    }
    Graph exploded = std::move(b).build();

    std::vector<VertexImage> vertices(exploded.num_vertices());
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        if (u == v)
            continue;
        auto hs = g.half_edges_at(u);
        vertices[old_to_new[u]] = VertexImage::to_vertex(u, {hs.begin(), hs.end()});
    }
    auto hv = g.half_edges_at(v);
    for (std::size_t i = 0; i < hv.size(); ++i)
        vertices[new_vertices[i]] = VertexImage::into_edge(Graph::edge_of(hv[i]));

    GraphMorphism morphism(exploded, g, std::move(edge_image), std::move(vertices));
    return {std::move(exploded), std::move(morphism), std::move(new_vertices)};
}

Contraction contract_edge(const Graph& g, std::size_t e)
{
    if (e >= g.num_edges())
        throw PreconditionError("contract_edge: edge index out of range");
    std::size_t a = g.endpoint(e, 0);
    std::size_t c = g.endpoint(e, 1);
    Contraction out;
    out.contracted_edge = e;

    GraphBuilder b(g.name() + "/" + g.edge_id(e));
    std::vector<std::size_t> old_to_new(g.num_vertices());
    if (a == c) {
        for (std::size_t u = 0; u < g.num_vertices(); ++u) {
            old_to_new[u] = b.add_vertex(g.vertex_id(u));
            out.vertex_to_original.push_back(u);
        }
    } else {
        std::size_t keep = std::min(a, c);
        std::size_t drop = std::max(a, c);
        for (std::size_t u = 0; u < g.num_vertices(); ++u) {
            if (u == drop)
                continue;
            std::string id = u == keep ? g.vertex_id(a) + "+" + g.vertex_id(c) : g.vertex_id(u);
            if (u == keep)
                id = fresh_id([&](const std::string& s) { return g.find_vertex(s).has_value(); }, id);
            old_to_new[u] = b.add_vertex(id);
            out.vertex_to_original.push_back(u == keep ? a : u);
        }
        old_to_new[drop] = old_to_new[keep];
        out.merged_vertex = old_to_new[keep];
    }
    for (std::size_t f = 0; f < g.num_edges(); ++f) {
        if (f == e)
            continue;
        b.add_edge(g.edge_id(f), old_to_new[g.endpoint(f, 0)], old_to_new[g.endpoint(f, 1)]);
        out.edge_to_original.push_back(f);
    }
    out.minor = std::move(b).build();
    return out;
}

GraphMorphism edge_deletion_embedding(const Graph& g, std::size_t e)
{
    if (e >= g.num_edges())
        throw PreconditionError("edge_deletion_embedding: edge index out of range");
    GraphBuilder b(g.name() + "-" + g.edge_id(e));
    for (const auto& v : g.vertex_ids())
        b.add_vertex(v);
    std::vector<std::size_t> edge_image;
    std::vector<std::size_t> half_to_g;
    for (std::size_t f = 0; f < g.num_edges(); ++f) {
        if (f == e)
            continue;
        b.add_edge(g.edge_id(f), g.endpoint(f, 0), g.endpoint(f, 1));
        edge_image.push_back(f);
        half_to_g.push_back(Graph::half_edge(f, 0));
        half_to_g.push_back(Graph::half_edge(f, 1));
    }
    Graph sub = std::move(b).build();
    std::vector<std::size_t> vertex_to_g(g.num_vertices());
    std::iota(vertex_to_g.begin(), vertex_to_g.end(), std::size_t{0});
    auto vertices = vertex_images_by_half_edge(sub, vertex_to_g, half_to_g);
    return GraphMorphism(std::move(sub), g, std::move(edge_image), std::move(vertices));
}

} // namespace swk
