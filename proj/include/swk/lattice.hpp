#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swk/int_matrix.hpp"

namespace swk {

/**
 * Column echelon form with unimodular transform: M·V = [L | 0], where the
 * pivot rows of L's columns strictly increase. Built once, then answers
 * integral solvability and kernel queries for M.
 */
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

    /// Basis of {x : Mx = 0} over Z (columns), saturated in Z^cols.
    IntMatrix kernel_basis() const;

    /// Some integral x with Mx = b, or nullopt when none exists.
    std::optional<IntVector> solve(const IntVector& b) const;
    std::optional<IntVector> solve(const IntMatrix::Column& b) const;

private:
    using Sparse = IntMatrix::Column;

    struct Pivot {
        std::size_t row;
        Sparse column;     // column of L
        Sparse transform;  // matching column of V
    };

    std::size_t rows_, cols_;
    std::vector<Pivot> pivots_;
    std::vector<Sparse> kernel_;
};

std::optional<IntVector> solve_in_image(const IntMatrix& m, const IntVector& b);
IntMatrix kernel_basis(const IntMatrix& m);

} // namespace swk
