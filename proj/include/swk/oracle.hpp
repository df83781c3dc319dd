#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "swk/engine.hpp"
#include "swk/error.hpp"
#include "swk/graph.hpp"
#include "swk/homology_group.hpp"
#include "swk/int_matrix.hpp"

namespace swk {

/// Raised when a cube complex would exceed the configured cell ceiling.
class CellLimitError : public Error {
public:
    using Error::Error;
};

/// Raised when the oracle's answer changes under one more subdivision round.
class StabilizationError : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t default_max_cells = 2'000'000;

/// Every edge cut into max(k + 1, 2) pieces.
Graph sufficient_subdivision(const Graph& g, std::size_t weight);

/// k pairwise closure-disjoint closed cells; the dimension is the number of edges.
struct CubeCell {
    std::vector<std::size_t> edges;     // ascending
    std::vector<std::size_t> vertices;  // ascending

    std::size_t dimension() const noexcept { return edges.size(); }
    friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

/// All cells of B_k with exactly d edge members, in (edges, vertices) lexicographic order.
std::vector<CubeCell> enumerate_cells(const Graph& g, std::size_t weight, std::size_t dimension,
                                      std::size_t max_cells = default_max_cells);

/**
 * Cellular boundary from dimension d to d - 1: for edge members e_1 < ... < e_d,
 * ∂ = Σ_j (-1)^(j-1) ([e_j -> head] - [e_j -> tail]) with each edge oriented from
 * its lower-indexed endpoint to its higher-indexed one.
 */
IntMatrix cube_boundary(const Graph& g, std::size_t weight, std::size_t dimension,
                        std::size_t max_cells = default_max_cells);

/// H_i of the cube complex of g itself (no subdivision).
HomologyGroup cube_homology(const Graph& g, std::size_t degree, std::size_t weight,
                            std::size_t max_cells = default_max_cells);

struct OracleAnswer {
    HomologyGroup group;
    HomologyGroup refined;   // one more piece per edge
    std::size_t pieces = 0;  // per edge, first computation
    bool stable() const { return group == refined; }
};

/// Both computations, without judging them.
OracleAnswer oracle_answer(const Graph& g, std::size_t degree, std::size_t weight,
                           std::size_t max_cells = default_max_cells);

/// Stabilized H_i(B_k(g)); throws StabilizationError if the two subdivisions disagree.
HomologyGroup oracle_homology(const Graph& g, std::size_t degree, std::size_t weight,
                              std::size_t max_cells = default_max_cells);

/// Oracle groups of the slices that fit under the cell ceiling, keyed by (i, k).
using OracleGroups = std::map<std::pair<std::size_t, std::size_t>, HomologyGroup>;

/// Oracle against the fully reduced Swiatkowski complex on every slice in bounds.
CheckReport cross_check(const Graph& g, std::size_t max_degree, std::size_t max_weight,
                        std::size_t max_cells = default_max_cells, OracleGroups* groups = nullptr);

} // namespace swk
