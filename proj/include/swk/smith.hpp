#pragma once

#include <cstddef>
#include <vector>

#include "swk/int_matrix.hpp"

namespace swk {

/**
 * U·M·V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr > 0.
 * U_inv and V_inv are carried along so callers can change bases both ways.
 */
struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    std::vector<BigInt> invariant_factors;  // nonzero diagonal of D

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Dense elimination with transforms. Pivot: smallest |entry|, ties by (row, col).
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors (ones included) via sparse unit-pivot elimination.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Rank over Q via sparse unit-pivot elimination followed by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Rank over Q by dense fraction-free (Bareiss) elimination; independent of rank().
std::size_t rank_bareiss(const IntMatrix& m);

/// Determinant of a square matrix by Bareiss elimination.
BigInt determinant(const IntMatrix& m);

} // namespace swk
