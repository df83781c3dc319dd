#include "swk/lattice.hpp"

#include <algorithm>

#include "swk/error.hpp"

namespace swk {

namespace {

using Sparse = IntMatrix::Column;

// a -= q * b
void axpy(Sparse& a, const BigInt& q, const Sparse& b)
{
    Sparse out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].row < a[i].row) {
            out.push_back({b[j].row, -q * b[j].value});
            ++j;
        } else {
            BigInt v = a[i].value - q * b[j].value;
            if (v != 0)
                out.push_back({a[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

} // namespace

LatticeSolver::LatticeSolver(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols())
{
    struct Work {
        Sparse column;
        Sparse transform;
    };
    std::vector<Work> work(cols_);
    // bucket[r]: working columns whose leading entry sits in row r.
    std::vector<std::vector<std::size_t>> bucket(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        work[c].column = m.column(c);
        work[c].transform.push_back({c, 1});
        if (work[c].column.empty())
            kernel_.push_back(std::move(work[c].transform));
        else
            bucket[work[c].column.front().row].push_back(c);
    }

    auto requeue = [&](std::size_t c) {
        if (work[c].column.empty())
            kernel_.push_back(std::move(work[c].transform));
        else
            bucket[work[c].column.front().row].push_back(c);
    };

    for (std::size_t r = 0; r < rows_; ++r) {
        auto cols = std::move(bucket[r]);
        std::sort(cols.begin(), cols.end());
        while (cols.size() > 1) {
            auto lead = [&](std::size_t c) -> const BigInt& { return work[c].column.front().value; };
            auto best = std::min_element(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
                int cmp = mpz_cmpabs(lead(a).get_mpz_t(), lead(b).get_mpz_t());
                return cmp < 0 || (cmp == 0 && a < b);
            });
            std::size_t p = *best;
            std::vector<std::size_t> keep{p};
            for (std::size_t c : cols) {
                if (c == p)
                    continue;
                BigInt q = lead(c) / lead(p);
                axpy(work[c].column, q, work[p].column);
                axpy(work[c].transform, q, work[p].transform);
                if (!work[c].column.empty() && work[c].column.front().row == r)
                    keep.push_back(c);
                else
                    requeue(c);
            }
            std::sort(keep.begin(), keep.end());
            cols = std::move(keep);
        }
        if (cols.size() == 1)
            pivots_.push_back({r, std::move(work[cols[0]].column), std::move(work[cols[0]].transform)});
    }
}

IntMatrix LatticeSolver::kernel_basis() const
{
    IntMatrix k(cols_, 0);
    for (const auto& v : kernel_)
        k.append_column(v);
    return k;
}

std::optional<IntVector> LatticeSolver::solve(const IntMatrix::Column& b) const
{
    Sparse res = b;
    Sparse x;
    for (const auto& p : pivots_) {
        if (res.empty())
            break;
        if (res.front().row < p.row)
            return std::nullopt;
        if (res.front().row > p.row)
            continue;
        const BigInt& piv = p.column.front().value;
        if (!mpz_divisible_p(res.front().value.get_mpz_t(), piv.get_mpz_t()))
            return std::nullopt;
        BigInt y = res.front().value / piv;
        axpy(res, y, p.column);
        axpy(x, -y, p.transform);
    }
    if (!res.empty())
        return std::nullopt;
    IntVector out(cols_);
    for (auto& e : x)
        out[e.row] = std::move(e.value);
    return out;
}

std::optional<IntVector> LatticeSolver::solve(const IntVector& b) const
{
    if (b.size() != rows_)
        throw LinalgError("solve: right-hand side has the wrong length");
    Sparse s;
    for (std::size_t r = 0; r < b.size(); ++r)
        if (b[r] != 0)
            s.push_back({r, b[r]});
    return solve(s);
}

std::optional<IntVector> solve_in_image(const IntMatrix& m, const IntVector& b)
{
    return LatticeSolver(m).solve(b);
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    return LatticeSolver(m).kernel_basis();
}

} // namespace swk
