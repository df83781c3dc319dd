#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swk/graph.hpp"
#include "swk/int_matrix.hpp"

namespace swk {

enum class StateKind : std::uint8_t { Empty, Occupied, HalfEdge, Difference };

/**
 * Local state at one vertex. HalfEdge and Difference carry a global half-edge
 * index; Difference(h) stands for h - h0 with h0 the vertex's base half-edge.
 */
struct VertexState {
    StateKind kind = StateKind::Empty;
    std::uint32_t half_edge = 0;

    static VertexState empty() { return {}; }
    static VertexState occupied() { return {StateKind::Occupied, 0}; }
    static VertexState at(std::size_t h) { return {StateKind::HalfEdge, static_cast<std::uint32_t>(h)}; }
    static VertexState difference(std::size_t h) { return {StateKind::Difference, static_cast<std::uint32_t>(h)}; }

    int degree() const noexcept { return kind == StateKind::HalfEdge || kind == StateKind::Difference; }
    int weight() const noexcept { return kind != StateKind::Empty; }

    friend auto operator<=>(const VertexState&, const VertexState&) = default;
};

/// Basis element of Z[E] ⊗ (⊗_v S_v): an edge multidegree and one state per vertex.
struct Monomial {
    std::vector<std::uint16_t> edge_degrees;
    std::vector<VertexState> states;

    std::size_t degree() const noexcept;
    std::size_t weight() const noexcept;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// All-empty monomial of weight 0.
Monomial unit_monomial(const Graph& g);

/// Finite integer combination of monomials, kept in basis order.
class Chain {
public:
    Chain() = default;
    Chain(const Monomial& m, const BigInt& coefficient = 1);

    const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add(const Monomial& m, const BigInt& coefficient);
    BigInt coefficient(const Monomial& m) const;

    /// (degree, weight) when every term shares it; throws PreconditionError otherwise or when zero.
    std::pair<std::size_t, std::size_t> bidegree() const;
    bool is_homogeneous() const noexcept;

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const BigInt& scalar);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const BigInt& s, Chain a) { return a *= s; }
    friend Chain operator-(Chain a) { return a *= -1; }
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::map<Monomial, BigInt> terms_;
};

/// Basis of one (degree, weight) slice, sorted by Monomial order.
struct ComplexSlice {
    std::size_t degree = 0;
    std::size_t weight = 0;
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;

    std::size_t dim() const noexcept { return basis.size(); }
    std::optional<std::size_t> find(const Monomial& m) const;
};

/**
 * The Swiatkowski complex of a graph, optionally reduced at a vertex set U.
 *
 * Sign convention: a monomial is the ordered product e^a ⊗ s_1 ⊗ ... ⊗ s_n over
 * the vertex order, so the differential acting at vertex v picks up
 * (-1)^(number of degree-1 states at earlier vertices). Reduced vertices use
 * the states ∅ and h - h0 for h in H(v) other than the smallest half-edge h0;
 * an isolated vertex in U keeps only ∅.
 */
class SwkComplex {
public:
    explicit SwkComplex(Graph g, std::vector<std::size_t> reduced = {});
    SwkComplex(const SwkComplex& other);
    SwkComplex& operator=(const SwkComplex&) = delete;

    static SwkComplex full(const Graph& g) { return SwkComplex(g); }
    /// Reduced at every non-isolated vertex.
    static SwkComplex fully_reduced(const Graph& g);

    const Graph& graph() const noexcept { return graph_; }
    bool is_reduced(std::size_t v) const { return reduced_.at(v); }
    const std::vector<std::size_t>& reduced_vertices() const noexcept { return reduced_list_; }
    bool is_full() const noexcept { return reduced_list_.empty(); }
    /// Smallest half-edge at v; v must be non-isolated.
    std::size_t base_half_edge(std::size_t v) const;

    /// Cached; safe to call concurrently.
    std::shared_ptr<const ComplexSlice> slice(std::size_t degree, std::size_t weight) const;

    /// ∂ : C_{i,k} -> C_{i-1,k} (0 rows when i = 0).
    IntMatrix differential(std::size_t degree, std::size_t weight) const;
    /// Multiplication by edge e : C_{i,k} -> C_{i,k+1}.
    IntMatrix edge_multiplication(std::size_t e, std::size_t degree, std::size_t weight) const;

    /// Local states allowed at v, in order.
    std::vector<VertexState> local_states(std::size_t v) const;
    bool is_valid_monomial(const Monomial& m) const;

    Chain boundary(const Chain& c) const;
    Chain boundary(const Monomial& m) const;
    Chain multiply_edge(std::size_t e, const Chain& c) const;

    IntVector to_vector(const Chain& c, const ComplexSlice& s) const;
    Chain from_vector(const IntVector& v, const ComplexSlice& s) const;

    std::string format(const Monomial& m) const;
    std::string format(const Chain& c) const;

private:
    Graph graph_;
    std::vector<char> reduced_;
    std::vector<std::size_t> reduced_list_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const ComplexSlice>> cache_;
};

/// Sorted basis of a slice without going through a complex's cache.
ComplexSlice enumerate_basis(const SwkComplex& c, std::size_t degree, std::size_t weight);

/**
 * Matrix of the map S(f) : source_{i,k} -> target_{i,k} induced by a graph
 * morphism. Either side may be reduced; the image must land in the target's
 * subcomplex (throws PreconditionError otherwise).
 */
IntMatrix induced_chain_map(const GraphMorphism& f, const SwkComplex& source, const SwkComplex& target,
                            std::size_t degree, std::size_t weight);
Chain induced_chain(const GraphMorphism& f, const SwkComplex& source, const SwkComplex& target, const Chain& c);

/**
 * Chain map S(G/e) -> S(G) for a non-loop edge e = (v1, v2): the merged vertex
 * goes to e when occupied, its half-edges to h̃ - h_j where h_j is the end of e
 * at the vertex carrying h̃. Both complexes are full.
 */
IntMatrix contraction_chain_map(const Contraction& c, const SwkComplex& minor, const SwkComplex& original,
                                std::size_t degree, std::size_t weight);
Chain contraction_chain(const Contraction& c, const SwkComplex& minor, const SwkComplex& original, const Chain& x);

/// Inclusion of a reduced complex into the full complex of the same graph.
IntMatrix reduced_inclusion(const SwkComplex& reduced, const SwkComplex& full, std::size_t degree,
                            std::size_t weight);

} // namespace swk
