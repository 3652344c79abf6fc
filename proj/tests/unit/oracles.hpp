// Independent brute-force oracles used by the unit and acceptance tests.
// They deliberately avoid the library's termwise binomial formulas.
#ifndef FPLAB_TEST_ORACLES_HPP
#define FPLAB_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/polynomial.hpp"

namespace oracle {

using namespace fplab;

// C(n, k) mod p from Pascal's rule.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(std::uint32_t max_n, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> c(max_n + 1, std::vector<std::uint32_t>(max_n + 1, 0));
    for (std::uint32_t n = 0; n <= max_n; ++n) {
        c[n][0] = 1 % p;
        for (std::uint32_t k = 1; k <= n; ++k) c[n][k] = (c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0)) % p;
    }
    return c;
}

// F(a) by summing c * prod a_k^e_k with repeated multiplication.
inline std::uint64_t eval(const Polynomial& f, const Point& a) {
    const std::uint64_t p = f.field().modulus();
    std::uint64_t acc = 0;
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t t = c.value;
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (std::uint32_t r = 0; r < e[k]; ++r) t = t * a[k].value % p;
        }
        acc = (acc + t) % p;
    }
    return acc;
}

// Coefficients of z^i in F(x + z), computed in 2m variables by multiplying
// out (x_k + z_k)^e. Returns the polynomial in x for the requested i.
inline Polynomial hasse_by_expansion(const Polynomial& f, const Multiindex& i) {
    const std::size_t m = f.num_vars();
    const auto& F = f.field();
    Polynomial expanded(F, 2 * m);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(F, 2 * m, c);
        for (std::size_t k = 0; k < m; ++k) {
            Polynomial lin = Polynomial::variable(F, 2 * m, k) + Polynomial::variable(F, 2 * m, m + k);
            for (std::uint32_t r = 0; r < e[k]; ++r) term = term * lin;
        }
        expanded += term;
    }
    Polynomial out(F, m);
    for (const auto& [e, c] : expanded.terms()) {
        bool match = true;
        for (std::size_t k = 0; k < m; ++k) match = match && e[m + k] == i[k];
        if (!match) continue;
        Multiindex x(m);
        for (std::size_t k = 0; k < m; ++k) x[k] = e[k];
        out.add_term(x, c);
    }
    return out;
}

// Every multiindex in the box [0, bound]^m.
inline std::vector<Multiindex> box(std::size_t m, std::uint32_t bound) {
    std::vector<Multiindex> out;
    Multiindex cur(m);
    while (true) {
        out.push_back(cur);
        std::size_t k = 0;
        for (; k < m; ++k) {
            if (++cur[k] <= bound) break;
            cur[k] = 0;
        }
        if (k == m) break;
    }
    return out;
}

// m_w(F, a) by scanning derivatives up to the total degree; max() for F = 0.
inline std::uint64_t multiplicity(const Polynomial& f, const Point& a, const WeightVector& w) {
    if (f.is_zero()) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& i : box(f.num_vars(), static_cast<std::uint32_t>(f.total_degree()))) {
        if (i.total_degree() > f.total_degree()) continue;
        if (eval(hasse_by_expansion(f, i), a) != 0) best = std::min(best, weighted_order(i, w));
    }
    return best;
}

// #V_J(<gens>) by evaluating every J-derivative of every generator.
inline std::uint64_t count_J_zeros(const std::vector<Polynomial>& gens, const DecreasingSet& J, const Grid& grid) {
    std::vector<std::vector<Polynomial>> derivs;
    for (const auto& g : gens) {
        std::vector<Polynomial> d;
        for (const auto& i : J.elements()) d.push_back(hasse_by_expansion(g, i));
        derivs.push_back(std::move(d));
    }
    std::uint64_t count = 0;
    for (const auto& a : grid.points()) {
        bool zero = true;
        for (const auto& ds : derivs) {
            for (const auto& d : ds) zero = zero && eval(d, a) == 0;
        }
        if (zero) ++count;
    }
    return count;
}

}  // namespace oracle

#endif  // FPLAB_TEST_ORACLES_HPP
