#include "swk/formulas.hpp"

#include <gmpxx.h>

#include "swk/error.hpp"

namespace swk {

BigInt binomial(long n, long m)
{
    if (m < 0 || n < 0 || n < m)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return out;
}

BigInt monomial_count(std::size_t num_vars, long weight)
{
    if (weight < 0)
        return 0;
    if (num_vars == 0)
        return weight == 0 ? 1 : 0;
    return binomial(weight + static_cast<long>(num_vars) - 1, static_cast<long>(num_vars) - 1);
}

BigInt euler_characteristic(const Graph& g, std::size_t weight)
{
    // Group the subset sum by |U| using elementary symmetric polynomials in d(v) - 1.
    std::vector<BigInt> elementary(g.num_vertices() + 1, 0);
    elementary[0] = 1;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        BigInt x = static_cast<long>(g.degree(v)) - 1;
        for (std::size_t j = v + 1; j >= 1; --j)
            elementary[j] += elementary[j - 1] * x;
    }
    BigInt chi = 0;
    for (std::size_t j = 0; j <= g.num_vertices() && j <= weight; ++j) {
        BigInt term = elementary[j] * monomial_count(g.num_edges(), static_cast<long>(weight - j));
        chi += j % 2 ? BigInt(-term) : term;
    }
    return chi;
}

std::vector<BigInt> euler_poincare_coeffs(const Graph& g, std::size_t max_weight)
{
    std::size_t n = max_weight + 1;
    std::vector<mpq_class> series(n, 0);
    series[0] = 1;
    auto multiply = [&](const std::vector<mpq_class>& factor) {
        std::vector<mpq_class> out(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; a + b < n; ++b)
                out[a + b] += series[a] * factor[b];
        series = std::move(out);
    };
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        long d = static_cast<long>(g.degree(v));
        std::vector<mpq_class> numerator(n, 0);
        numerator[0] = 1;
        if (n > 1)
            numerator[1] = 1 - d;
        multiply(numerator);
        // (1 - t)^(-d/2) = Σ_m (d/2)(d/2 + 1)...(d/2 + m - 1) / m! t^m
        mpq_class s(d, 2);
        std::vector<mpq_class> inverse(n, 0);
        inverse[0] = 1;
        for (std::size_t m = 1; m < n; ++m)
            inverse[m] = inverse[m - 1] * (s + static_cast<long>(m) - 1) / static_cast<long>(m);
        multiply(inverse);
    }
    std::vector<BigInt> out;
    for (auto& c : series) {
        c.canonicalize();
        if (c.get_den() != 1)
            throw LinalgError("Euler-Poincare series has a non-integral coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

BigInt chain_euler_characteristic(const SwkComplex& c, std::size_t weight)
{
    BigInt chi = 0;
    for (std::size_t i = 0; i <= weight; ++i) {
        BigInt d = static_cast<unsigned long>(c.slice(i, weight)->dim());
        chi += i % 2 ? BigInt(-d) : d;
    }
    return chi;
}

BigInt free_module_rank(std::size_t num_edges, const std::vector<std::size_t>& generator_weights, std::size_t weight)
{
    BigInt total = 0;
    for (std::size_t w : generator_weights)
        total += monomial_count(num_edges, static_cast<long>(weight) - static_cast<long>(w));
    return total;
}

} // namespace swk

namespace swk {

CheckReport euler_check(const Graph& g, std::size_t max_weight)
{
    CheckReport r{"euler characteristic", g.name() + ", k<=" + std::to_string(max_weight), {}};
    SwkComplex c(g);
    auto series = euler_poincare_coeffs(g, max_weight);
    for (std::size_t k = 0; k <= max_weight; ++k) {
        BigInt formula = euler_characteristic(g, k);
        BigInt chain = chain_euler_characteristic(c, k);
        bool ok = formula == chain && chain == series[k];
        r.add("k=" + std::to_string(k), ok,
              ok ? "formula = chain-sum = series = " + formula.get_str()
                 : "formula " + formula.get_str() + ", chain-sum " + chain.get_str() + ", series " +
                       series[k].get_str());
    }
    return r;
}

} // namespace swk
