#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swk/complex.hpp"
#include "swk/engine.hpp"
#include "swk/graph.hpp"

namespace swk {

/**
 * Star class e(h1)(h2 - h3) + e(h2)(h3 - h1) + e(h3)(h1 - h2) at v, a degree-1
 * weight-2 cycle of the full complex. The half-edges must be distinct and at v;
 * their edges need not be.
 */
Chain star_cycle(const Graph& g, std::size_t v, std::size_t h1, std::size_t h2, std::size_t h3);

/**
 * A closed embedded walk given by its outgoing half-edges: walk[j] leaves vertex
 * v_j and its opposite end sits at v_{j+1} (indices mod length). Vertices v_j
 * must be distinct.
 */
using Walk = std::vector<std::size_t>;

/// Walk through the listed vertices in order, using the first edge found between neighbours.
Walk walk_through(const Graph& g, const std::vector<std::size_t>& vertices);

/// Σ_j (walk[j] - opposite(walk[j-1])) at v_j: degree 1, weight 1, closed.
Chain loop_cycle(const Graph& g, const Walk& walk);

/// Vertices touched by non-empty states in some term.
std::vector<std::size_t> vertex_support(const Chain& c);

/**
 * Product of chains with pairwise disjoint vertex supports, taken in the given
 * order with Koszul signs relative to the global vertex order. Edge factors may
 * repeat (Z[E] is commutative).
 */
Chain external_product(const Graph& g, const std::vector<Chain>& factors);

/// A relation chain with an explicit bounding chain when one is known.
struct Relation {
    std::string name;
    Chain chain;
    std::optional<Chain> witness;  // ∂ witness = chain
};

/// I: (e(h1) - e(h2))∅ = ∂(h1 - h2) for two half-edges at v.
Relation i_relation(const Graph& g, std::size_t v, std::size_t h1, std::size_t h2);

/// X: e1 α234 - e2 α341 + e3 α412 - e4 α123 for four half-edges at v.
Relation x_relation(const Graph& g, std::size_t v, const std::array<std::size_t, 4>& h);

/**
 * Q: (e(h_out) - e(h0))γ - α(v; h0, h_in, h_out) where γ is the loop class of
 * the walk starting at v = vertex of h0, h_out = walk[0], h_in the walk's return
 * half-edge, and h0 is not on the walk.
 */
Relation q_relation(const Graph& g, std::size_t h0, const Walk& walk);

/**
 * Θ: α(u; h1, h2, h3) - α(w; h'3, h'2, h'1) where h_j at u and h'_j at w lie on
 * the j-th of three internally disjoint u-w paths. The witness h12·h'13 - h13·h'12
 * is attached when each path is a single edge.
 */
Relation theta_relation(const Graph& g, const std::array<std::size_t, 3>& at_u, const std::array<std::size_t, 3>& at_w);

/// O: (e_i - e_j)γ for two edges of the walk.
Relation o_relation(const Graph& g, const Walk& walk, std::size_t edge_i, std::size_t edge_j);

/// True iff the closed homogeneous chain is an integral boundary in c; throws if it is not closed.
bool verify_boundary(const SwkComplex& c, const Chain& chain);

/**
 * External product over trivalent vertices of the loop class of the vertex's
 * self-loop, or else its star class on H(v) in order. Degree N, weight 2N - r.
 */
Chain canonical_class(const Graph& g);

/// One embedded cycle per edge outside a spanning forest.
std::vector<Walk> fundamental_cycles(const Graph& g);

/**
 * Star and loop classes (closed, not boundaries) and every I/X/Q/Θ/O relation
 * instance found in g (closed and integral boundaries), in the full complex.
 */
CheckReport relation_suite(const Graph& g);

} // namespace swk
