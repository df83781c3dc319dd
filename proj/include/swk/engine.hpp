#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swk/complex.hpp"
#include "swk/graph.hpp"
#include "swk/homology_group.hpp"

namespace swk {

/// H_i of the weight-k slice of a complex.
HomologyGroup homology(const SwkComplex& c, std::size_t degree, std::size_t weight);
/// H_i(B_k(g)) computed from the complex reduced at `reduced`.
HomologyGroup homology(const Graph& g, std::size_t degree, std::size_t weight,
                       const std::vector<std::size_t>& reduced = {});

struct HomologyTable {
    std::string graph;
    std::size_t max_degree = 0;
    std::size_t max_weight = 0;
    std::vector<std::size_t> reduced;
    std::map<std::pair<std::size_t, std::size_t>, HomologyGroup> entries;  // (i, k) -> H_i(B_k)

    const HomologyGroup& at(std::size_t degree, std::size_t weight) const { return entries.at({degree, weight}); }
};

/// Every slice with i <= max_degree, k <= max_weight; slices run on `workers` threads (0 = all cores).
HomologyTable homology_table(const SwkComplex& c, std::size_t max_degree, std::size_t max_weight,
                             std::size_t workers = 0);

/// One diagnostic line of a check. Skipped items do not count towards the verdict.
struct CheckItem {
    std::string label;
    bool pass = false;
    std::string detail;
    bool skipped = false;
};

struct CheckReport {
    std::string name;
    std::string parameters;
    std::vector<CheckItem> items;

    /// True when at least one item ran and every item that ran passed.
    bool pass() const;
    std::size_t failures() const;
    void add(std::string label, bool ok, std::string detail = {});
    void skip(std::string label, std::string detail);
    void merge(const CheckReport& other);
    std::string summary() const;
};

std::string slice_label(std::size_t degree, std::size_t weight);

/// The inclusion of the complex reduced at `reduced` is an isomorphism on H_i(B_k) for i, k in bounds.
CheckReport verify_reduced_quasi_iso(const Graph& g, const std::vector<std::size_t>& reduced, std::size_t max_degree,
                                     std::size_t max_weight);

/// Multiplication by each edge is injective H_i(B_k) -> H_i(B_{k+1}) over Z, i <= max_degree, k <= max_weight.
CheckReport verify_edge_injectivity(const Graph& g, std::size_t max_degree, std::size_t max_weight);

/**
 * Rational exactness of H_i(B_k(G_v)) -> H_i(B_k(G)) -> ⊕_{h != h0} H_{i-1}(B_{k-1}(G_v)) -> H_{i-1}(B_k(G_v)),
 * G_v the explosion at v, the connecting map being multiplication by e(h) - e(h0).
 */
CheckReport les_check(const Graph& g, std::size_t v, std::size_t h0, std::size_t max_weight);

/// Rational Kunneth count across a separating bivalent vertex.
CheckReport one_bridge_check(const Graph& g, std::size_t v, std::size_t max_weight);

/**
 * Top-degree rank and torsion-freeness of a unitrivalent graph for k in [min_weight, max_weight];
 * for simple graphs also the codimension-one rank and torsion-freeness in degrees N-1, N-2
 * (N = number of trivalent vertices).
 */
CheckReport unitrivalent_top_check(const Graph& g, std::size_t min_weight, std::size_t max_weight);

/// The subgraph spanned by one connected component, ids preserved.
Graph component_subgraph(const Graph& g, std::size_t label);

} // namespace swk
