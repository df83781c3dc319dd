#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace swk {

/**
 * Finite multigraph with explicit half-edges.
 *
 * Vertices and edges are identified by opaque string ids and indexed in
 * insertion order. Edge e owns the half-edges 2e (its first endpoint) and
 * 2e+1 (its second endpoint), so the global half-edge order is (edge, end).
 * Self-loops and parallel edges are allowed. A Graph is immutable once built.
 */
class Graph {
public:
    struct EdgeRecord {
        std::string id;
        std::size_t ends[2];
    };

    Graph() = default;

    const std::string& name() const noexcept { return name_; }

    std::size_t num_vertices() const noexcept { return vertex_ids_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::size_t num_half_edges() const noexcept { return 2 * edges_.size(); }

    const std::string& vertex_id(std::size_t v) const { return vertex_ids_.at(v); }
    const std::string& edge_id(std::size_t e) const { return edges_.at(e).id; }

    std::optional<std::size_t> find_vertex(std::string_view id) const;
    std::optional<std::size_t> find_edge(std::string_view id) const;
    std::size_t vertex(std::string_view id) const;   // throws GraphError if absent
    std::size_t edge(std::string_view id) const;     // throws GraphError if absent

    /// Endpoint `end` (0 or 1) of edge e.
    std::size_t endpoint(std::size_t e, int end) const { return edges_.at(e).ends[end]; }

    static constexpr std::size_t half_edge(std::size_t e, int end) noexcept { return 2 * e + static_cast<std::size_t>(end); }
    static constexpr std::size_t edge_of(std::size_t h) noexcept { return h / 2; }
    static constexpr int end_of(std::size_t h) noexcept { return static_cast<int>(h % 2); }
    static constexpr std::size_t opposite(std::size_t h) noexcept { return h ^ 1U; }

    std::size_t vertex_of(std::size_t h) const { return edges_.at(h / 2).ends[h % 2]; }

    /// H(v), ascending in the global half-edge order.
    std::span<const std::size_t> half_edges_at(std::size_t v) const { return incidence_.at(v); }
    std::size_t degree(std::size_t v) const { return incidence_.at(v).size(); }

    /// Position of h inside H(v(h)).
    std::size_t local_index(std::size_t h) const;

    bool is_self_loop(std::size_t e) const { return edges_.at(e).ends[0] == edges_.at(e).ends[1]; }
    bool is_simple() const;

    /// Component label per vertex (labels numbered in order of first vertex).
    std::vector<std::size_t> component_labels() const;
    std::size_t num_components() const;

    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
    const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;

    std::string name_;
    std::vector<std::string> vertex_ids_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Incremental construction of a Graph; validation happens on each call.
class GraphBuilder {
public:
    explicit GraphBuilder(std::string name = "graph");

    std::size_t add_vertex(std::string id);
    std::size_t add_edge(std::string id, std::string_view tail, std::string_view head);
    std::size_t add_edge(std::string id, std::size_t tail, std::size_t head);

    bool has_vertex(std::string_view id) const;
    bool has_edge(std::string_view id) const;

    Graph build() &&;

private:
    Graph graph_;
};

/// Edges are named e1, e2, ... in the order given.
Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<std::pair<std::string, std::string>>& edge_endpoints,
                  std::string name = "graph");

/// |E| - |V| + #components.
std::size_t betti1(const Graph& g);

/// Disjoint union; clashing ids of the second graph get primes appended.
Graph disjoint_union(const Graph& a, const Graph& b, std::string name = {});

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

enum class GraphFamily { Interval, Star, Cycle, Theta, Lollipop, Complete, CompleteBipartite, Net };

struct StandardGraphSpec {
    GraphFamily family;
    std::size_t n = 0;
    std::size_t m = 0;  // second part size for complete bipartite
};

/**
 * Deterministically labeled representatives:
 *  - interval: vertices 0,1, edge e
 *  - star n: center v0, leaves v1..vn, edges ei = (v0, vi)
 *  - cycle n: v1..vn, ei = (vi, v(i+1)); n = 1 is a self-loop
 *  - theta n: v1, v2 with n parallel edges e1..en
 *  - lollipop n: cycle n plus leaf w and tail e0 = (v1, w), listed first among edges
 *  - complete n: vertices 1..n, eab = (a, b) for a < b
 *  - complete bipartite (m,n): a1..am, b1..bn, edges ai_bj
 *  - net: K4 exploded at vertex 4 (triangle 123 with three pendant edges)
 */
Graph standard_graph(const StandardGraphSpec& spec);
Graph standard_graph(std::string_view description);  // "star 3", "complete_bipartite 3 3", "net", ...

Graph interval_graph();
Graph star_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph theta_graph(std::size_t n);
Graph lollipop_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);
Graph net_graph();

// ---------------------------------------------------------------------------
// Graph morphisms
// ---------------------------------------------------------------------------

/// Where a source vertex goes: a target vertex (with a half-edge map) or the interior of a target edge.
struct VertexImage {
    enum class Kind { Vertex, EdgeInterior };

    Kind kind = Kind::Vertex;
    std::size_t target = 0;                  // target vertex or target edge
    std::vector<std::size_t> half_edge_map;  // indexed like H(v); global target half-edges (Vertex only)

    static VertexImage to_vertex(std::size_t w, std::vector<std::size_t> half_edges)
    {
        return {Kind::Vertex, w, std::move(half_edges)};
    }
    static VertexImage into_edge(std::size_t e) { return {Kind::EdgeInterior, e, {}}; }

    friend bool operator==(const VertexImage&, const VertexImage&) = default;
};

/**
 * Combinatorial shadow of an injective continuous map that sends no edge
 * interior point onto a vertex. Only the data needed to induce maps on
 * Swiatkowski complexes is stored; validate() enforces local consistency
 * but does not re-prove topological injectivity.
 */
class GraphMorphism {
public:
    GraphMorphism(Graph source, Graph target, std::vector<std::size_t> edge_image,
                  std::vector<VertexImage> vertex_image);

    static GraphMorphism identity(const Graph& g);

    const Graph& source() const noexcept { return source_; }
    const Graph& target() const noexcept { return target_; }
    std::size_t edge_image(std::size_t e) const { return edge_image_.at(e); }
    const VertexImage& vertex_image(std::size_t v) const { return vertex_image_.at(v); }
    const std::vector<std::size_t>& edge_images() const noexcept { return edge_image_; }
    const std::vector<VertexImage>& vertex_images() const noexcept { return vertex_image_; }

    /// Target half-edge of source half-edge h at a vertex-mapped vertex; nullopt otherwise.
    std::optional<std::size_t> half_edge_image(std::size_t h) const;

    /// Throws GraphError describing the first violated rule.
    void validate() const;
    bool is_valid() const noexcept;

    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

private:
    Graph source_;
    Graph target_;
    std::vector<std::size_t> edge_image_;
    std::vector<VertexImage> vertex_image_;
};

/// outer ∘ inner (inner: A -> B, outer: B -> C).
GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner);

// ---------------------------------------------------------------------------
// Surgeries
// ---------------------------------------------------------------------------

struct Subdivision {
    Graph graph;
    GraphMorphism smoothing;  // graph -> original
};

/// Edge e becomes pieces[e] edges; new vertices are named "<edge>.<j>".
Subdivision subdivide(const Graph& g, const std::vector<std::size_t>& pieces_per_edge);
Subdivision subdivide_uniform(const Graph& g, std::size_t pieces);

struct Explosion {
    Graph graph;
    GraphMorphism morphism;              // exploded -> original
    std::vector<std::size_t> new_vertices;  // exploded vertex per half-edge of H(v), in H(v) order
};

/**
 * Replace v by one univalent vertex per half-edge, named "<v>:<edge>" (with a
 * ".0"/".1" suffix for the two ends of a self-loop). The new vertices take v's
 * place in the vertex order.
 */
Explosion vertex_explosion(const Graph& g, std::size_t v);

struct Contraction {
    Graph minor;
    std::vector<std::size_t> edge_to_original;    // minor edge -> original edge
    std::vector<std::size_t> vertex_to_original;  // minor vertex -> original vertex (merged -> first endpoint)
    std::optional<std::size_t> merged_vertex;     // minor index of the merged vertex; none when a loop was deleted
    std::size_t contracted_edge = 0;              // in the original graph
};

/// Contract e; contracting a self-loop deletes it. The merged vertex is named "<a>+<b>".
Contraction contract_edge(const Graph& g, std::size_t e);

/// Subgraph obtained by deleting one edge, with the embedding into g.
GraphMorphism edge_deletion_embedding(const Graph& g, std::size_t e);

} // namespace swk
