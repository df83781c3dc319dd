#include "swk/oracle.hpp"

#include <algorithm>
#include <map>

namespace swk {

Graph sufficient_subdivision(const Graph& g, std::size_t weight)
{
    return subdivide_uniform(g, std::max<std::size_t>(weight + 1, 2)).graph;
}

std::vector<CubeCell> enumerate_cells(const Graph& g, std::size_t weight, std::size_t dimension,
                                      std::size_t max_cells)
{
    std::vector<CubeCell> out;
    if (dimension > weight)
        return out;
    std::vector<int> blocked(g.num_vertices(), 0);
    CubeCell cell;

    auto push = [&] {
        if (out.size() >= max_cells)
            throw CellLimitError("cube complex of " + g.name() + " exceeds " + std::to_string(max_cells) + " cells");
        out.push_back(cell);
    };
    auto pick_vertices = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
            push();
            return;
        }
        for (std::size_t v = from; v < g.num_vertices(); ++v) {
            if (blocked[v])
                continue;
            cell.vertices.push_back(v);
            self(self, v + 1, left - 1);
            cell.vertices.pop_back();
        }
    };
    auto pick_edges = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
            pick_vertices(pick_vertices, 0, weight - dimension);
            return;
        }
        for (std::size_t e = from; e < g.num_edges(); ++e) {
            std::size_t a = g.endpoint(e, 0), b = g.endpoint(e, 1);
            if (blocked[a] || blocked[b])
                continue;
            ++blocked[a];
            ++blocked[b];
            cell.edges.push_back(e);
            self(self, e + 1, left - 1);
            cell.edges.pop_back();
            --blocked[a];
            --blocked[b];
        }
    };
    pick_edges(pick_edges, 0, dimension);
    return out;
}

IntMatrix cube_boundary(const Graph& g, std::size_t weight, std::size_t dimension, std::size_t max_cells)
{
    if (dimension == 0)
        throw PreconditionError("cube_boundary: dimension must be positive");
    auto cols = enumerate_cells(g, weight, dimension, max_cells);
    auto rows = enumerate_cells(g, weight, dimension - 1, max_cells);
    std::map<CubeCell, std::size_t> index;
    for (std::size_t r = 0; r < rows.size(); ++r)
        index.emplace(rows[r], r);

    IntMatrix d(rows.size(), 0);
    for (const auto& cell : cols) {
        IntMatrix::Column col;
        for (std::size_t j = 0; j < cell.edges.size(); ++j) {
            std::size_t e = cell.edges[j];
            std::size_t tail = std::min(g.endpoint(e, 0), g.endpoint(e, 1));
            std::size_t head = std::max(g.endpoint(e, 0), g.endpoint(e, 1));
            long sign = j % 2 ? -1 : 1;
            for (auto [v, s] : {std::pair{head, sign}, std::pair{tail, -sign}}) {
                CubeCell face;
                face.edges = cell.edges;
                face.edges.erase(face.edges.begin() + static_cast<long>(j));
                face.vertices = cell.vertices;
                face.vertices.insert(std::lower_bound(face.vertices.begin(), face.vertices.end(), v), v);
                col.push_back({index.at(face), s});
            }
        }
        d.append_column(std::move(col));
    }
    return d;
}

HomologyGroup cube_homology(const Graph& g, std::size_t degree, std::size_t weight, std::size_t max_cells)
{
    std::size_t n = enumerate_cells(g, weight, degree, max_cells).size();
    if (n == 0)
        return {};
    IntMatrix d_in = cube_boundary(g, weight, degree + 1, max_cells);
    if (d_in.cols() == 0)
        d_in = IntMatrix(n, 0);
    IntMatrix d_out = degree == 0 ? IntMatrix(0, n) : cube_boundary(g, weight, degree, max_cells);
    return homology_of_pair(d_in, d_out);
}

OracleAnswer oracle_answer(const Graph& g, std::size_t degree, std::size_t weight, std::size_t max_cells)
{
    OracleAnswer a;
    a.pieces = std::max<std::size_t>(weight + 1, 2);
    a.group = cube_homology(subdivide_uniform(g, a.pieces).graph, degree, weight, max_cells);
    a.refined = cube_homology(subdivide_uniform(g, a.pieces + 1).graph, degree, weight, max_cells);
    return a;
}

HomologyGroup oracle_homology(const Graph& g, std::size_t degree, std::size_t weight, std::size_t max_cells)
{
    auto a = oracle_answer(g, degree, weight, max_cells);
    if (!a.stable())
        throw StabilizationError(slice_label(degree, weight) + " of " + g.name() + " changes under subdivision: " +
                                 a.group.to_string() + " vs " + a.refined.to_string());
    return a.group;
}

CheckReport cross_check(const Graph& g, std::size_t max_degree, std::size_t max_weight, std::size_t max_cells,
                        OracleGroups* groups)
{
    SwkComplex c = SwkComplex::fully_reduced(g);
    CheckReport r{"oracle agreement",
                  g.name() + ", i<=" + std::to_string(max_degree) + ", k<=" + std::to_string(max_weight), {}};
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (std::size_t i = 0; i <= max_degree; ++i) {
            auto label = slice_label(i, k);
            OracleAnswer a;
            try {
                a = oracle_answer(g, i, k, max_cells);
            } catch (const CellLimitError& e) {
                r.skip(label, e.what());
                continue;
            }
            if (groups)
                groups->emplace(std::pair{i, k}, a.group);
            auto swk = homology(c, i, k);
            std::string detail = "swk " + swk.to_string() + ", oracle " + a.group.to_string();
            if (!a.stable())
                detail += ", unstable under subdivision (" + a.refined.to_string() + ")";
            r.add(label, a.stable() && a.group == swk, detail);
        }
    return r;
}

} // namespace swk
