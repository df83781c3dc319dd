#include "swk/homology_group.hpp"

#include <sstream>

#include "swk/error.hpp"
#include "swk/smith.hpp"

namespace swk {

namespace {

void check_pair(const IntMatrix& d_in, const IntMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw LinalgError("boundary pair shapes disagree: d_out has " + std::to_string(d_out.cols()) +
                          " columns, d_in has " + std::to_string(d_in.rows()) + " rows");
    if (!(d_out * d_in).is_zero())
        throw LinalgError("boundary pair does not compose to zero");
}

} // namespace

std::string HomologyGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (betti > 0) {
        out << "Z";
        if (betti > 1)
            out << '^' << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return out.str();
}

HomologyGroup homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out)
{
    check_pair(d_in, d_out);
    HomologyGroup h;
    auto factors = invariant_factors(d_in);
    std::size_t dim = d_in.rows();
    std::size_t r_out = rank(d_out);
    h.betti = dim - r_out - factors.size();
    for (auto& f : factors)
        if (f > 1)
            h.torsion.push_back(f);
    return h;
}

std::size_t betti_of_pair(const IntMatrix& d_in, const IntMatrix& d_out)
{
    check_pair(d_in, d_out);
    return d_in.rows() - rank(d_out) - rank(d_in);
}

HomologyPresentation::HomologyPresentation(const IntMatrix& d_in, const IntMatrix& d_out)
    : dim_(d_in.rows()), d_in_(d_in), d_out_(d_out)
{
    check_pair(d_in, d_out);
    cycles_ = kernel_basis(d_out);
    in_cycles_.emplace(cycles_);

    std::size_t z = cycles_.cols();
    IntMatrix a(z, 0);
    for (std::size_t c = 0; c < d_in.cols(); ++c) {
        auto coords = in_cycles_->solve(d_in.column(c));
        if (!coords)
            throw LinalgError("boundary is not a cycle");
        IntMatrix::Column col;
        for (std::size_t r = 0; r < z; ++r)
            if ((*coords)[r] != 0)
                col.push_back({r, (*coords)[r]});
        a.append_column(std::move(col));
    }

    SmithForm snf = smith_normal_form(a);
    to_adapted_ = snf.U;
    IntMatrix adapted = cycles_ * snf.U_inv;
    const auto& d = snf.invariant_factors;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] > 1) {
            kept_.push_back(j);
            orders_.push_back(d[j]);
        }
    for (std::size_t j = d.size(); j < z; ++j) {
        kept_.push_back(j);
        orders_.push_back(0);
    }
    for (std::size_t j : kept_) {
        IntVector g(dim_);
        for (const auto& e : adapted.column(j))
            g[e.row] = e.value;
        generators_.push_back(std::move(g));
    }
}

HomologyGroup HomologyPresentation::group() const
{
    HomologyGroup h;
    for (const auto& o : orders_) {
        if (o == 0)
            ++h.betti;
        else
            h.torsion.push_back(o);
    }
    return h;
}

bool HomologyPresentation::is_cycle(const IntVector& c) const
{
    if (c.size() != dim_)
        throw LinalgError("chain has the wrong length");
    auto image = d_out_.apply(c);
    for (const auto& v : image)
        if (v != 0)
            return false;
    return true;
}

IntVector HomologyPresentation::class_of(const IntVector& cycle) const
{
    if (!is_cycle(cycle))
        throw LinalgError("class_of: chain is not a cycle");
    auto coords = in_cycles_->solve(cycle);
    if (!coords)
        throw LinalgError("class_of: cycle outside the cycle lattice");
    IntVector w = to_adapted_.apply(*coords);
    IntVector out;
    out.reserve(kept_.size());
    for (std::size_t i = 0; i < kept_.size(); ++i) {
        BigInt v = w[kept_[i]];
        if (orders_[i] != 0)
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), orders_[i].get_mpz_t());
        out.push_back(std::move(v));
    }
    return out;
}

bool HomologyPresentation::is_boundary(const IntVector& c) const
{
    if (!is_cycle(c))
        return false;
    for (const auto& v : class_of(c))
        if (v != 0)
            return false;
    return true;
}

InducedMap induced_on_homology(const IntMatrix& f, const HomologyPresentation& source,
                               const HomologyPresentation& target)
{
    if (f.cols() != source.chain_dim() || f.rows() != target.chain_dim())
        throw LinalgError("induced_on_homology: chain map has the wrong shape");

    const IntMatrix& b = source.boundary_in();
    for (std::size_t c = 0; c < b.cols(); ++c) {
        IntVector col(source.chain_dim());
        for (const auto& e : b.column(c))
            col[e.row] = e.value;
        if (!target.is_boundary(f.apply(col)))
            throw LinalgError("induced_on_homology: a boundary maps to a non-boundary");
    }

    std::size_t ns = source.num_generators();
    std::size_t nt = target.num_generators();
    InducedMap out;
    out.matrix = IntMatrix(nt, ns);
    for (std::size_t j = 0; j < ns; ++j) {
        IntVector image = f.apply(source.generators()[j]);
        if (!target.is_cycle(image))
            throw LinalgError("induced_on_homology: a cycle maps to a non-cycle");
        auto cls = target.class_of(image);
        IntMatrix::Column col;
        for (std::size_t r = 0; r < nt; ++r)
            if (cls[r] != 0)
                col.push_back({r, cls[r]});
        out.matrix.set_column(j, std::move(col));
    }

    IntMatrix relations(nt, 0);
    for (std::size_t r = 0; r < nt; ++r)
        if (target.orders()[r] != 0)
            relations.append_column({{r, target.orders()[r]}});

    // x lies in the kernel iff F x is a combination of the target's torsion relations.
    IntMatrix ker = kernel_basis(hstack(out.matrix, -relations));
    out.injective = true;
    for (std::size_t c = 0; c < ker.cols() && out.injective; ++c)
        for (const auto& e : ker.column(c)) {
            if (e.row >= ns)
                continue;
            const BigInt& order = source.orders()[e.row];
            if (order == 0 || !mpz_divisible_p(e.value.get_mpz_t(), order.get_mpz_t())) {
                out.injective = false;
                break;
            }
        }

    auto factors = invariant_factors(hstack(out.matrix, relations));
    out.surjective = factors.size() == nt;
    for (const auto& d : factors)
        if (d != 1)
            out.surjective = false;
    return out;
}

std::size_t induced_rank_rational(const IntMatrix& f, const IntMatrix& source_cycles,
                                  const IntMatrix& target_boundary_in)
{
    IntMatrix image = f * source_cycles;
    return rank(hstack(image, target_boundary_in)) - rank(target_boundary_in);
}

} // namespace swk
