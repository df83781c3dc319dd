#pragma once

#include <cstddef>
#include <vector>

#include "swk/complex.hpp"
#include "swk/engine.hpp"
#include "swk/graph.hpp"
#include "swk/int_matrix.hpp"

namespace swk {

/// C(n, m), defined as 0 when m < 0, n < 0 or n < m.
BigInt binomial(long n, long m);

/// Number of monomials of the given weight in num_vars commuting variables.
BigInt monomial_count(std::size_t num_vars, long weight);

/// χ(B_k(g)) = Σ_{U ⊆ V} (-1)^|U| #monomials(|E|, k - |U|) Π_{v ∈ U} (d(v) - 1).
BigInt euler_characteristic(const Graph& g, std::size_t weight);

/// Coefficients c_0..c_kmax of Π_v (1 + t(1 - d(v))) / (1 - t)^(d(v)/2).
std::vector<BigInt> euler_poincare_coeffs(const Graph& g, std::size_t max_weight);

/// Σ_i (-1)^i dim S_i(g)_k, read from the complex.
BigInt chain_euler_characteristic(const SwkComplex& c, std::size_t weight);

/// Rank in weight k of a free Z[E]-module with generators of the given weights.
BigInt free_module_rank(std::size_t num_edges, const std::vector<std::size_t>& generator_weights,
                        std::size_t weight);

/// Closed formula, chain-level alternating sum and series coefficient agree for k <= max_weight.
CheckReport euler_check(const Graph& g, std::size_t max_weight);

} // namespace swk
