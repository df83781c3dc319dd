#pragma once

#include <cstddef>
#include <cstdint>

#include "swk/engine.hpp"
#include "swk/graph.hpp"

namespace swk {

/// Random multigraph (self-loops and parallel edges allowed) with 1..max_vertices vertices and 0..max_edges edges.
Graph random_graph(std::uint64_t seed, std::size_t max_vertices = 5, std::size_t max_edges = 7);

/**
 * Structural properties on one random graph: ∂² = 0, bigrading, Z[E]-linearity,
 * functoriality of composed morphisms, Smith certificates of its differentials,
 * Euler identity and the disjoint-union Kunneth count.
 */
CheckReport property_checks(std::uint64_t seed, std::size_t max_weight = 3);

/// property_checks over seeds first_seed .. first_seed + count - 1, merged.
CheckReport property_suite(std::uint64_t first_seed, std::size_t count, std::size_t max_weight = 3);

} // namespace swk
