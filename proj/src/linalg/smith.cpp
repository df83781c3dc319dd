#include "swk/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "swk/error.hpp"

namespace swk {

namespace {

using Dense = std::vector<std::vector<BigInt>>;

// ---------------------------------------------------------------------------
// Dense Smith normal form
// ---------------------------------------------------------------------------

class DenseSmith {
public:
    DenseSmith(Dense a, std::size_t rows, std::size_t cols, bool track)
        : a_(std::move(a)), m_(rows), n_(cols), track_(track)
    {
        if (track_) {
            U_ = identity(m_);
            Ui_ = identity(m_);
            V_ = identity(n_);
            Vi_ = identity(n_);
        }
    }

    void run()
    {
        std::size_t lim = std::min(m_, n_);
        for (std::size_t t = 0; t < lim; ++t) {
            auto p = smallest(t, t, true, true);
            if (!p)
                break;
            swap_rows(t, p->first);
            swap_cols(t, p->second);
            while (!settle(t)) {
            }
            if (a_[t][t] < 0)
                negate_row(t);
            factors_.push_back(a_[t][t]);
        }
    }

    const std::vector<BigInt>& factors() const { return factors_; }

    SmithForm result() const
    {
        SmithForm s;
        s.D = IntMatrix::from_dense(a_, n_);
        s.U = IntMatrix::from_dense(U_, m_);
        s.U_inv = IntMatrix::from_dense(Ui_, m_);
        s.V = IntMatrix::from_dense(V_, n_);
        s.V_inv = IntMatrix::from_dense(Vi_, n_);
        s.invariant_factors = factors_;
        return s;
    }

private:
    static Dense identity(std::size_t n)
    {
        Dense d(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i)
            d[i][i] = 1;
        return d;
    }

    // Smallest nonzero |a_ij| with i, j >= t, optionally restricted to row t or column t.
    std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t, std::size_t t2, bool all_rows,
                                                                bool all_cols) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs;
        std::size_t r0 = t, r1 = all_rows ? m_ : t + 1;
        std::size_t c0 = t2, c1 = all_cols ? n_ : t2 + 1;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const BigInt& v = a_[i][j];
                if (v == 0)
                    continue;
                if (!best || mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
                    best = {i, j};
                    best_abs = abs(v);
                }
            }
        return best;
    }

    // One pass of clearing row and column t; false when another pass is needed.
    bool settle(std::size_t t)
    {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i) {
            if (a_[i][t] == 0)
                continue;
            BigInt q = a_[i][t] / a_[t][t];
            if (q != 0)
                row_sub(i, t, q);
            if (a_[i][t] != 0)
                clean = false;
        }
        if (!clean) {
            auto p = smallest(t, t, true, false);
            swap_rows(t, p->first);
            return false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
            if (a_[t][j] == 0)
                continue;
            BigInt q = a_[t][j] / a_[t][t];
            if (q != 0)
                col_sub(j, t, q);
            if (a_[t][j] != 0)
                clean = false;
        }
        if (!clean) {
            auto p = smallest(t, t, false, true);
            swap_cols(t, p->second);
            return false;
        }
        for (std::size_t i = t + 1; i < m_; ++i)
            for (std::size_t j = t + 1; j < n_; ++j)
                if (a_[i][j] != 0 && !mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                    row_sub(t, i, -1);
                    return false;
                }
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        std::swap(a_[i], a_[j]);
        if (track_) {
            std::swap(U_[i], U_[j]);
            for (auto& row : Ui_)
                std::swap(row[i], row[j]);
        }
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (auto& row : a_)
            std::swap(row[i], row[j]);
        if (track_) {
            for (auto& row : V_)
                std::swap(row[i], row[j]);
            std::swap(Vi_[i], Vi_[j]);
        }
    }

    // row_i -= q * row_s
    void row_sub(std::size_t i, std::size_t s, const BigInt& q)
    {
        for (std::size_t c = 0; c < n_; ++c)
            if (a_[s][c] != 0)
                a_[i][c] -= q * a_[s][c];
        if (track_) {
            for (std::size_t c = 0; c < m_; ++c)
                if (U_[s][c] != 0)
                    U_[i][c] -= q * U_[s][c];
            for (std::size_t r = 0; r < m_; ++r)
                if (Ui_[r][i] != 0)
                    Ui_[r][s] += q * Ui_[r][i];
        }
    }

    // col_j -= q * col_s
    void col_sub(std::size_t j, std::size_t s, const BigInt& q)
    {
        for (std::size_t r = 0; r < m_; ++r)
            if (a_[r][s] != 0)
                a_[r][j] -= q * a_[r][s];
        if (track_) {
            for (std::size_t r = 0; r < n_; ++r)
                if (V_[r][s] != 0)
                    V_[r][j] -= q * V_[r][s];
            for (std::size_t c = 0; c < n_; ++c)
                if (Vi_[j][c] != 0)
                    Vi_[s][c] += q * Vi_[j][c];
        }
    }

    void negate_row(std::size_t t)
    {
        for (auto& v : a_[t])
            v = -v;
        if (track_) {
            for (auto& v : U_[t])
                v = -v;
            for (auto& row : Ui_)
                row[t] = -row[t];
        }
    }

    Dense a_;
    std::size_t m_, n_;
    bool track_;
    Dense U_, Ui_, V_, Vi_;
    std::vector<BigInt> factors_;
};

std::vector<BigInt> dense_invariant_factors(Dense a, std::size_t rows, std::size_t cols)
{
    DenseSmith s(std::move(a), rows, cols, false);
    s.run();
    return s.factors();
}

std::size_t dense_rank(Dense a, std::size_t rows, std::size_t cols)
{
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sparse unit-pivot elimination
// ---------------------------------------------------------------------------

struct Overflow {};

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }
inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return v == 0; }

// a - q*b
inline std::int64_t fms(std::int64_t a, std::int64_t q, std::int64_t b)
{
    std::int64_t p, r;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
        throw Overflow{};
    return r;
}
inline BigInt fms(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t from_big(const BigInt& v, std::int64_t*)
{
    if (!v.fits_slong_p())
        throw Overflow{};
    return v.get_si();
}
inline BigInt from_big(const BigInt& v, BigInt*) { return v; }
inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_big(const BigInt& v) { return v; }

/**
 * Eliminates unit pivots one at a time, choosing among the shortest rows the
 * entry whose column is sparsest. Each step peels off an invariant factor 1
 * and leaves a matrix with the same remaining invariant factors.
 */
template <class T>
class UnitEliminator {
public:
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    explicit UnitEliminator(const IntMatrix& m)
        : rows_(m.rows()), col_rows_(m.cols()), col_count_(m.cols(), 0), alive_(m.rows(), 1)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& e : m.column(c)) {
                rows_[e.row].emplace_back(static_cast<std::uint32_t>(c), from_big(e.value, static_cast<T*>(nullptr)));
                col_rows_[c].push_back(static_cast<std::uint32_t>(e.row));
                ++col_count_[c];
            }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                alive_[r] = 0;
            else
                queue_.emplace(rows_[r].size(), r);
        }
    }

    void run()
    {
        constexpr std::size_t kCandidates = 8;
        for (;;) {
            std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best;  // cost, row, col
            std::size_t seen = 0;
            for (const auto& [len, r] : queue_) {
                std::optional<std::size_t> col;
                for (const auto& [c, v] : rows_[r])
                    if (is_unit(v) && (!col || col_count_[c] < col_count_[*col]))
                        col = c;
                if (!col)
                    continue;
                std::size_t cost = (len - 1) * (col_count_[*col] - 1);
                if (!best || cost < std::get<0>(*best))
                    best = std::make_tuple(cost, r, *col);
                if (cost == 0 || ++seen >= kCandidates)
                    break;
            }
            if (!best)
                return;
            pivot(std::get<1>(*best), std::get<2>(*best));
        }
    }

    std::size_t pivots() const noexcept { return pivots_; }

    Dense remainder(std::size_t& rows, std::size_t& cols) const
    {
        std::vector<std::size_t> col_pos(col_count_.size(), SIZE_MAX);
        cols = 0;
        for (std::size_t c = 0; c < col_count_.size(); ++c)
            if (col_count_[c] > 0)
                col_pos[c] = cols++;
        Dense d;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!alive_[r])
                continue;
            std::vector<BigInt> row(cols);
            for (const auto& [c, v] : rows_[r])
                row[col_pos[c]] = to_big(v);
            d.push_back(std::move(row));
        }
        rows = d.size();
        return d;
    }

private:
    void pivot(std::size_t r, std::size_t c)
    {
        const Row& prow = rows_[r];
        T u{};
        for (const auto& [pc, v] : prow)
            if (pc == c)
                u = v;
        auto targets = std::move(col_rows_[c]);
        col_rows_[c].clear();
        for (std::uint32_t r2 : targets) {
            if (r2 == r || !alive_[r2])
                continue;
            auto& row = rows_[r2];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, std::size_t col) { return e.first < col; });
            if (it == row.end() || it->first != c)
                continue;
            T q = it->second * u;  // u = ±1, so u^-1 = u
            std::size_t old_len = row.size();
            Row merged;
            merged.reserve(row.size() + prow.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < prow.size()) {
                if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
                    merged.push_back(std::move(row[i++]));
                } else if (i == row.size() || prow[j].first < row[i].first) {
                    T zero{};
                    T v = fms(zero, q, prow[j].second);
                    std::uint32_t col = prow[j].first;
                    ++col_count_[col];
                    col_rows_[col].push_back(r2);
                    merged.emplace_back(col, std::move(v));
                    ++j;
                } else {
                    T v = fms(row[i].second, q, prow[j].second);
                    if (is_zero(v))
                        --col_count_[row[i].first];
                    else
                        merged.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            queue_.erase({old_len, r2});
            row = std::move(merged);
            if (row.empty())
                alive_[r2] = 0;
            else
                queue_.emplace(row.size(), r2);
        }
        for (const auto& [pc, v] : prow)
            --col_count_[pc];
        queue_.erase({prow.size(), r});
        alive_[r] = 0;
        rows_[r].clear();
        ++pivots_;
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::size_t> col_count_;
    std::vector<char> alive_;
    std::set<std::pair<std::size_t, std::size_t>> queue_;
    std::size_t pivots_ = 0;
};

struct Reduced {
    std::size_t pivots;
    Dense rest;
    std::size_t rows, cols;
};

template <class T>
Reduced eliminate_with(const IntMatrix& m)
{
    UnitEliminator<T> e(m);
    e.run();
    Reduced out;
    out.pivots = e.pivots();
    out.rest = e.remainder(out.rows, out.cols);
    return out;
}

Reduced eliminate(const IntMatrix& m)
{
    try {
        return eliminate_with<std::int64_t>(m);
    } catch (const Overflow&) {
        return eliminate_with<BigInt>(m);
    }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    DenseSmith s(m.to_dense(), m.rows(), m.cols(), true);
    s.run();
    return s.result();
}

std::vector<BigInt> invariant_factors(const IntMatrix& m)
{
    Reduced red = eliminate(m);
    std::vector<BigInt> out(red.pivots, BigInt(1));
    auto rest = dense_invariant_factors(std::move(red.rest), red.rows, red.cols);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::size_t rank(const IntMatrix& m)
{
    Reduced red = eliminate(m);
    return red.pivots + dense_rank(std::move(red.rest), red.rows, red.cols);
}

std::size_t rank_bareiss(const IntMatrix& m)
{
    return dense_rank(m.to_dense(), m.rows(), m.cols());
}

BigInt determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw LinalgError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    Dense a = m.to_dense();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? BigInt(1) : BigInt(sign * prev);
}

} // namespace swk
