#include "swk/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "swk/error.hpp"

namespace swk {

void normalize_column(IntMatrix::Column& col)
{
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
        std::size_t r = col[i].row;
        BigInt sum = 0;
        for (; i < col.size() && col[i].row == r; ++i)
            sum += col[i].value;
        if (sum != 0)
            col[out++] = {r, std::move(sum)};
    }
    col.resize(out);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.columns_[i].push_back({i, 1});
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    IntMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw LinalgError("from_rows: ragged rows");
        std::size_t c = 0;
        for (long v : row) {
            if (v != 0)
                m.columns_[c].push_back({r, BigInt(v)});
            ++c;
        }
        ++r;
    }
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw LinalgError("from_dense: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.columns_[c].push_back({r, rows[r][c]});
    }
    return m;
}

void IntMatrix::set_column(std::size_t c, Column col)
{
    normalize_column(col);
    if (!col.empty() && col.back().row >= rows_)
        throw LinalgError("set_column: row index out of range");
    columns_.at(c) = std::move(col);
}

void IntMatrix::append_column(Column col)
{
    columns_.emplace_back();
    set_column(columns_.size() - 1, std::move(col));
}

BigInt IntMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
    if (it != col.end() && it->row == r)
        return it->value;
    return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const BigInt& value)
{
    if (r >= rows_)
        throw LinalgError("set: row index out of range");
    auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
    if (it != col.end() && it->row == r) {
        if (value == 0)
            col.erase(it);
        else
            it->value = value;
    } else if (value != 0) {
        col.insert(it, {r, value});
    }
}

void IntMatrix::add(std::size_t r, std::size_t c, const BigInt& value)
{
    set(r, c, at(r, c) + value);
}

std::size_t IntMatrix::nnz() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool IntMatrix::is_zero() const noexcept
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            t.columns_[e.row].push_back({c, e.value});
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const
{
    IntMatrix out(rows_, 0);
    out.columns_.reserve(which.size());
    for (std::size_t c : which)
        out.columns_.push_back(columns_.at(c));
    return out;
}

IntMatrix IntMatrix::column_range(std::size_t begin, std::size_t end) const
{
    if (begin > end || end > cols())
        throw LinalgError("column_range: bad range");
    IntMatrix out(rows_, 0);
    out.columns_.assign(columns_.begin() + static_cast<std::ptrdiff_t>(begin),
                        columns_.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

std::vector<std::vector<BigInt>> IntMatrix::to_dense() const
{
    std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols()));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            d[e.row][c] = e.value;
    return d;
}

IntVector IntMatrix::apply(const IntVector& x) const
{
    if (x.size() != cols())
        throw LinalgError("apply: dimension mismatch");
    IntVector y(rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
        if (x[c] == 0)
            continue;
        for (const auto& e : columns_[c])
            y[e.row] += e.value * x[c];
    }
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw LinalgError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + " differ");
    IntMatrix out(a.rows(), b.cols());
    std::vector<BigInt> acc(a.rows());
    std::vector<char> touched(a.rows(), 0);
    std::vector<std::size_t> rows_hit;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        rows_hit.clear();
        for (const auto& be : b.columns_[j])
            for (const auto& ae : a.columns_[be.row]) {
                if (!touched[ae.row]) {
                    touched[ae.row] = 1;
                    rows_hit.push_back(ae.row);
                }
                acc[ae.row] += ae.value * be.value;
            }
        std::sort(rows_hit.begin(), rows_hit.end());
        auto& col = out.columns_[j];
        for (std::size_t r : rows_hit) {
            if (acc[r] != 0)
                col.push_back({r, acc[r]});
            acc[r] = 0;
            touched[r] = 0;
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LinalgError("matrix sum: shape mismatch");
    IntMatrix out(a.rows(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        IntMatrix::Column col = a.columns_[c];
        col.insert(col.end(), b.columns_[c].begin(), b.columns_[c].end());
        normalize_column(col);
        out.columns_.push_back(std::move(col));
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a)
{
    IntMatrix out = a;
    for (auto& col : out.columns_)
        for (auto& e : col)
            e.value = -e.value;
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    return a + (-b);
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream out;
    auto d = to_dense();
    for (const auto& row : d) {
        out << '[';
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << row[c].get_str();
        out << "]\n";
    }
    return out.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw LinalgError("hstack: row counts differ");
    IntMatrix out = a;
    for (std::size_t c = 0; c < b.cols(); ++c)
        out.append_column(b.column(c));
    return out;
}

IntMatrix column_matrix(const IntVector& v)
{
    IntMatrix m(v.size(), 1);
    IntMatrix::Column col;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (v[r] != 0)
            col.push_back({r, v[r]});
    m.set_column(0, std::move(col));
    return m;
}

} // namespace swk
