#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swk/int_matrix.hpp"
#include "swk/lattice.hpp"

namespace swk {

/// Z^betti ⊕ Z/t1 ⊕ ... ⊕ Z/tm with t1 | t2 | ... and every ti > 1.
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const noexcept { return betti == 0 && torsion.empty(); }
    std::string to_string() const;  // "Z^4 + Z/2", "0"

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/**
 * H = ker(d_out) / im(d_in) for C_{i+1} -d_in-> C_i -d_out-> C_{i-1}.
 * Throws LinalgError when shapes disagree or d_out·d_in != 0.
 */
HomologyGroup homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out);

/// Rational Betti number only; skips the torsion computation.
std::size_t betti_of_pair(const IntMatrix& d_in, const IntMatrix& d_out);

/**
 * Explicit presentation of H = ker(d_out)/im(d_in) by cycle generators.
 * Generator j is free when orders[j] == 0 and has order orders[j] > 1
 * otherwise. Free generators come last.
 */
class HomologyPresentation {
public:
    HomologyPresentation(const IntMatrix& d_in, const IntMatrix& d_out);

    std::size_t chain_dim() const noexcept { return dim_; }
    std::size_t num_generators() const noexcept { return generators_.size(); }
    const std::vector<IntVector>& generators() const noexcept { return generators_; }
    const std::vector<BigInt>& orders() const noexcept { return orders_; }
    HomologyGroup group() const;

    bool is_cycle(const IntVector& c) const;
    bool is_boundary(const IntVector& c) const;

    /// Coordinates of a cycle's class on the generators (torsion entries reduced); throws if not a cycle.
    IntVector class_of(const IntVector& cycle) const;

    const IntMatrix& boundary_in() const noexcept { return d_in_; }

private:
    std::size_t dim_;
    IntMatrix d_in_, d_out_;
    IntMatrix cycles_;                 // basis Z of ker(d_out)
    std::optional<LatticeSolver> in_cycles_;
    IntMatrix to_adapted_;             // U from the Smith form of d_in in Z-coordinates
    std::vector<std::size_t> kept_;    // adapted coordinates that survive
    std::vector<IntVector> generators_;
    std::vector<BigInt> orders_;
};

/// Map on homology induced by a degree-i chain map f.
struct InducedMap {
    IntMatrix matrix;  // target generators x source generators
    bool injective = false;
    bool surjective = false;

    bool isomorphism() const noexcept { return injective && surjective; }
};

/**
 * Requires f to send cycles to cycles and boundaries to boundaries (checked;
 * LinalgError otherwise).
 */
InducedMap induced_on_homology(const IntMatrix& f, const HomologyPresentation& source,
                               const HomologyPresentation& target);

/**
 * Rank over Q of the map H_i(X) -> H_i(Y) induced by f, given the cycle
 * basis of X and the incoming boundary of Y.
 */
std::size_t induced_rank_rational(const IntMatrix& f, const IntMatrix& source_cycles,
                                  const IntMatrix& target_boundary_in);

} // namespace swk
