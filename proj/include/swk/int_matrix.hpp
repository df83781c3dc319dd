#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace swk {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

/**
 * Sparse integer matrix stored by columns. Each column is a list of
 * (row, value) entries with strictly increasing rows and nonzero values.
 */
class IntMatrix {
public:
    struct Entry {
        std::size_t row;
        BigInt value;

        friend bool operator==(const Entry& a, const Entry& b) { return a.row == b.row && a.value == b.value; }
    };
    using Column = std::vector<Entry>;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_dense(const std::vector<std::vector<BigInt>>& rows, std::size_t cols = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const Column& column(std::size_t c) const { return columns_.at(c); }

    /// Replace column c; entries may be unsorted, repeated or zero.
    void set_column(std::size_t c, Column col);
    void append_column(Column col);

    BigInt at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const BigInt& value);
    void add(std::size_t r, std::size_t c, const BigInt& value);

    std::size_t nnz() const noexcept;
    bool is_zero() const noexcept;

    IntMatrix transpose() const;
    IntMatrix select_columns(const std::vector<std::size_t>& which) const;
    IntMatrix column_range(std::size_t begin, std::size_t end) const;
    std::vector<std::vector<BigInt>> to_dense() const;

    IntVector apply(const IntVector& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// [a | b]; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

/// Column vector view of a dense vector.
IntMatrix column_matrix(const IntVector& v);

/// Sorts, merges duplicates and drops zeros.
void normalize_column(IntMatrix::Column& col);

} // namespace swk
