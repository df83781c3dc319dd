#include "swk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "swk/error.hpp"

namespace swk {

std::optional<std::size_t> Graph::find_vertex(std::string_view id) const
{
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const
{
    auto it = edge_index_.find(std::string(id));
    if (it == edge_index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Graph::vertex(std::string_view id) const
{
    if (auto v = find_vertex(id))
        return *v;
    throw GraphError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Graph::edge(std::string_view id) const
{
    if (auto e = find_edge(id))
        return *e;
    throw GraphError("unknown edge '" + std::string(id) + "'");
}

std::size_t Graph::local_index(std::size_t h) const
{
    const auto& hs = incidence_.at(vertex_of(h));
    auto it = std::lower_bound(hs.begin(), hs.end(), h);
    return static_cast<std::size_t>(it - hs.begin());
}

bool Graph::is_simple() const
{
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    seen.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.ends[0] == e.ends[1])
            return false;
        seen.emplace_back(std::min(e.ends[0], e.ends[1]), std::max(e.ends[0], e.ends[1]));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::vector<std::size_t> Graph::component_labels() const
{
    std::vector<std::size_t> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) {
        auto a = find(e.ends[0]);
        auto b = find(e.ends[1]);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> label(num_vertices());
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        auto root = find(v);
        auto [it, inserted] = renumber.emplace(root, renumber.size());
        label[v] = it->second;
    }
    return label;
}

std::size_t Graph::num_components() const
{
    auto labels = component_labels();
    if (labels.empty())
        return 0;
    return *std::max_element(labels.begin(), labels.end()) + 1;
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.vertex_ids_ != b.vertex_ids_ || a.edges_.size() != b.edges_.size())
        return false;
    for (std::size_t e = 0; e < a.edges_.size(); ++e) {
        const auto& x = a.edges_[e];
        const auto& y = b.edges_[e];
        if (x.id != y.id || x.ends[0] != y.ends[0] || x.ends[1] != y.ends[1])
            return false;
    }
    return true;
}

GraphBuilder::GraphBuilder(std::string name)
{
    graph_.name_ = std::move(name);
}

std::size_t GraphBuilder::add_vertex(std::string id)
{
    if (id.empty())
        throw GraphError("empty vertex identifier");
    if (graph_.vertex_index_.count(id))
        throw GraphError("duplicate vertex identifier '" + id + "'");
    std::size_t v = graph_.vertex_ids_.size();
    graph_.vertex_index_.emplace(id, v);
    graph_.vertex_ids_.push_back(std::move(id));
    graph_.incidence_.emplace_back();
    return v;
}

std::size_t GraphBuilder::add_edge(std::string id, std::string_view tail, std::string_view head)
{
    auto t = graph_.find_vertex(tail);
    if (!t)
        throw GraphError("edge '" + id + "' references unknown vertex '" + std::string(tail) + "'");
    auto h = graph_.find_vertex(head);
    if (!h)
        throw GraphError("edge '" + id + "' references unknown vertex '" + std::string(head) + "'");
    return add_edge(std::move(id), *t, *h);
}

std::size_t GraphBuilder::add_edge(std::string id, std::size_t tail, std::size_t head)
{
    if (id.empty())
        throw GraphError("empty edge identifier");
    if (graph_.edge_index_.count(id))
        throw GraphError("duplicate edge identifier '" + id + "'");
    if (tail >= graph_.num_vertices() || head >= graph_.num_vertices())
        throw GraphError("edge '" + id + "' references a vertex index out of range");
    std::size_t e = graph_.edges_.size();
    graph_.edge_index_.emplace(id, e);
    graph_.edges_.push_back({std::move(id), {tail, head}});
    // Half-edges are appended in increasing global order, so each H(v) stays sorted.
    graph_.incidence_[tail].push_back(Graph::half_edge(e, 0));
    graph_.incidence_[head].push_back(Graph::half_edge(e, 1));
    return e;
}

bool GraphBuilder::has_vertex(std::string_view id) const
{
    return graph_.find_vertex(id).has_value();
}

bool GraphBuilder::has_edge(std::string_view id) const
{
    return graph_.find_edge(id).has_value();
}

Graph GraphBuilder::build() &&
{
    return std::move(graph_);
}

Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<std::pair<std::string, std::string>>& edge_endpoints, std::string name)
{
    GraphBuilder b(std::move(name));
    for (const auto& v : vertex_ids)
        b.add_vertex(v);
    std::size_t n = 0;
    for (const auto& [tail, head] : edge_endpoints)
        b.add_edge("e" + std::to_string(++n), tail, head);
    return std::move(b).build();
}

std::size_t betti1(const Graph& g)
{
    return g.num_edges() + g.num_components() - g.num_vertices();
}

Graph disjoint_union(const Graph& a, const Graph& b, std::string name)
{
    if (name.empty())
        name = a.name() + "+" + b.name();
    GraphBuilder out(std::move(name));
    auto fresh = [](auto has, std::string id) {
        while (has(id))
            id += "'";
        return id;
    };
    std::vector<std::size_t> bv(b.num_vertices());
    for (const auto& v : a.vertex_ids())
        out.add_vertex(v);
    for (std::size_t v = 0; v < b.num_vertices(); ++v)
        bv[v] = out.add_vertex(fresh([&](const std::string& s) { return out.has_vertex(s); }, b.vertex_id(v)));
    for (const auto& e : a.edges())
        out.add_edge(e.id, e.ends[0], e.ends[1]);
    for (const auto& e : b.edges())
        out.add_edge(fresh([&](const std::string& s) { return out.has_edge(s); }, e.id), bv[e.ends[0]],
                     bv[e.ends[1]]);
    return std::move(out).build();
}

} // namespace swk
