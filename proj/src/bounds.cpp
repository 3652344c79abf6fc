#include "fplab/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fplab {

namespace {

void require_same_arity(const DecreasingSet& J, const Grid& grid) {
    if (J.num_vars() != grid.num_vars()) {
        throw std::invalid_argument("decreasing set and grid disagree on the number of variables");
    }
}

BoundReport make_report(BoundMethod method, std::uint64_t value, const Grid& grid) {
    BoundReport r{method, value, value >= grid.cardinality(), grid.cardinality(), FootprintWitness{}};
    return r;
}

}  // namespace

BoundReport footprint_bound(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                            const MonomialOrdering& ord) {
    require_same_arity(J, grid);
    auto basis = buchberger(augment_ideal(ideal, J, grid), ord);
    auto fp = footprint(basis);
    FootprintWitness w;
    w.footprint_size = fp.size();
    w.decreasing_set_size = J.size();
    w.grid_expansion_size = grid.cardinality() * J.size();
    w.leading_monomials = basis.leading_monomials();
    auto report = make_report(BoundMethod::footprint, fp.size() / J.size(), grid);
    report.witness = std::move(w);
    return report;
}

BoundReport classical_footprint_bound(const IdealPresentation& ideal, const Grid& grid, const MonomialOrdering& ord) {
    return footprint_bound(ideal, origin_only(grid.num_vars()), grid, ord);
}

BoundReport multiplicity_footprint_bound(const IdealPresentation& ideal, std::uint64_t r, const Grid& grid,
                                         const MonomialOrdering& ord) {
    return footprint_bound(ideal, weighted_ball(WeightVector::ones(grid.num_vars()), r), grid, ord);
}

BoundReport coordinate_footprint_bound(const IdealPresentation& ideal, const Multiindex& r, const Grid& grid,
                                       const MonomialOrdering& ord) {
    return footprint_bound(ideal, coordinate_box(r), grid, ord);
}

BoundReport weighted_footprint_bound(const IdealPresentation& ideal, const WeightVector& w, std::uint64_t r,
                                     const Grid& grid, const MonomialOrdering& ord) {
    return footprint_bound(ideal, weighted_ball(w, r), grid, ord);
}

std::uint64_t staircase_count(std::span<const Multiindex> leading_monomials, const DecreasingSet& J,
                              std::span<const std::size_t> sizes) {
    std::uint64_t count = 0;
    for (const auto& i : grid_expand(J, sizes)) {
        bool removed = std::any_of(leading_monomials.begin(), leading_monomials.end(),
                                   [&](const Multiindex& lm) { return lm.divides(i); });
        if (!removed) ++count;
    }
    return count;
}

BoundReport leading_monomial_footprint_bound(std::span<const Multiindex> leading_monomials, const DecreasingSet& J,
                                             const Grid& grid) {
    require_same_arity(J, grid);
    for (const auto& lm : leading_monomials) {
        if (lm.size() != grid.num_vars()) throw std::invalid_argument("leading monomial has wrong arity");
    }
    const auto count = staircase_count(leading_monomials, J, grid.sizes());
    FootprintWitness w;
    w.footprint_size = count;
    w.decreasing_set_size = J.size();
    w.grid_expansion_size = grid.cardinality() * J.size();
    for (const auto& r : J.minimal_complement()) {
        Multiindex lm(r.size());
        for (std::size_t k = 0; k < r.size(); ++k) {
            lm[k] = static_cast<Multiindex::value_type>(r[k] * grid.sizes()[k]);
        }
        w.leading_monomials.push_back(lm);
    }
    w.leading_monomials.insert(w.leading_monomials.end(), leading_monomials.begin(), leading_monomials.end());
    auto report = make_report(BoundMethod::footprint, count / J.size(), grid);
    report.witness = std::move(w);
    return report;
}

std::uint64_t staircase_removed_count(const Multiindex& i, const DecreasingSet& J, std::span<const std::size_t> sizes) {
    if (!in_grid_expansion(i, J, sizes)) {
        throw std::invalid_argument("multiindex " + i.to_string() + " lies outside J_S");
    }
    std::uint64_t count = 0;
    for (const auto& j : grid_expand(J, sizes)) {
        if (i.divides(j)) ++count;
    }
    return count;
}

BoundReport demillo_lipton_general_bound(const Multiindex& lm, const DecreasingSet& J, const Grid& grid) {
    require_same_arity(J, grid);
    const std::uint64_t js = grid.cardinality() * J.size();
    const std::uint64_t removed = staircase_removed_count(lm, J, grid.sizes());
    DeMilloLiptonWitness w{lm, removed, J.size(), js, (removed + J.size() - 1) / J.size()};
    BoundReport report = make_report(BoundMethod::demillo_lipton_general, (js - removed) / J.size(), grid);
    report.witness = std::move(w);
    return report;
}

std::uint64_t demillo_lipton_product_nonzeros(const Polynomial& f, const Grid& grid) {
    if (f.num_vars() != grid.num_vars()) throw std::invalid_argument("polynomial and grid arity mismatch");
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no non-zeros");
    std::uint64_t prod = 1;
    for (std::size_t j = 0; j < grid.num_vars(); ++j) {
        const std::uint64_t d = f.degree_in(j);
        if (d >= grid.sizes()[j]) {
            throw std::invalid_argument("degree in x" + std::to_string(j + 1) + " is not below #S_" +
                                        std::to_string(j + 1));
        }
        prod *= grid.sizes()[j] - d;
    }
    return prod;
}

std::uint64_t alon_furedi_min_nonzeros(std::uint64_t degree, std::span<const std::size_t> sizes) {
    std::uint64_t total = 0;
    for (auto s : sizes) total += s;
    const std::uint64_t need = degree >= total ? 0 : total - degree;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> y(sizes.size(), 1);
    // Exhaustive over the box of y vectors; grids here are small.
    while (true) {
        std::uint64_t sum = 0;
        std::uint64_t prod = 1;
        for (auto v : y) {
            sum += v;
            prod *= v;
        }
        if (sum >= need) best = std::min(best, prod);
        std::size_t k = 0;
        for (; k < y.size(); ++k) {
            if (++y[k] <= sizes[k]) break;
            y[k] = 1;
        }
        if (k == y.size()) break;
    }
    return best;
}

std::uint64_t schwartz_zippel_rhs(const Multiindex& lm, const WeightVector& w, std::span<const std::size_t> sizes) {
    if (lm.size() != w.size() || sizes.size() != w.size()) throw std::invalid_argument("arity mismatch");
    std::uint64_t card = 1;
    for (auto s : sizes) card *= s;
    std::uint64_t rhs = 0;
    for (std::size_t j = 0; j < lm.size(); ++j) rhs += std::uint64_t{lm[j]} * w[j] * (card / sizes[j]);
    return rhs;
}

BoundReport schwartz_zippel_weighted(const Polynomial& f, const WeightVector& w, const Grid& grid,
                                     const std::vector<std::size_t>& lex_priority, std::uint64_t r) {
    if (f.is_zero()) throw std::invalid_argument("Schwartz-Zippel bound of the zero polynomial");
    if (r == 0) throw std::invalid_argument("multiplicity threshold must be positive");
    MonomialOrdering lex(OrderingKind::lex, f.num_vars(), lex_priority);
    Multiindex lm = f.leading_monomial(lex);
    const std::uint64_t rhs = schwartz_zippel_rhs(lm, w, grid.sizes());
    BoundReport report = make_report(BoundMethod::schwartz_zippel_weighted, rhs / r, grid);
    report.witness = SchwartzZippelWitness{lm, rhs, r};
    return report;
}

NullstellensatzWitness nullstellensatz_witness(const Polynomial& f, const DecreasingSet& J, const Grid& grid,
                                               const MonomialOrdering& ord) {
    require_same_arity(J, grid);
    if (f.is_zero()) throw std::invalid_argument("Nullstellensatz needs a non-zero polynomial");
    Multiindex lm = f.leading_monomial(ord);
    if (!in_grid_expansion(lm, J, grid.sizes())) {
        throw std::invalid_argument("leading monomial " + lm.to_string() + " is outside J_S; no witness is guaranteed");
    }
    const auto derivs = J.graded_elements();
    for (std::uint64_t idx = 0; idx < grid.cardinality(); ++idx) {
        Point s = grid.point(idx);
        Polynomial shifted = taylor_shift(f, s);
        for (const auto& j : derivs) {
            FieldElement v = shifted.coefficient(j);
            if (!v.is_zero()) return {std::move(s), j, v};
        }
    }
    throw std::logic_error("no Nullstellensatz witness found although LM(F) lies in J_S");
}

NullstellensatzWitness alon_nullstellensatz_witness(const Polynomial& f, const Multiindex& i, const Grid& grid) {
    if (f.coefficient(i).is_zero()) throw std::invalid_argument("coefficient of x^i is zero");
    if (f.total_degree() != i.total_degree()) throw std::invalid_argument("deg F differs from |i|");
    for (std::size_t j = 0; j < i.size(); ++j) {
        if (grid.sizes()[j] <= i[j]) throw std::invalid_argument("#S_j must exceed i_j");
    }
    Multiindex zero(i.size());
    for (std::uint64_t idx = 0; idx < grid.cardinality(); ++idx) {
        Point s = grid.point(idx);
        FieldElement v = f.evaluate(s);
        if (!v.is_zero()) return {std::move(s), zero, v};
    }
    throw std::logic_error("no non-zero of F found although Alon's hypotheses hold");
}

NullstellensatzWitness weighted_nullstellensatz_witness(const Polynomial& f, const WeightVector& w, std::uint64_t r,
                                                        const Multiindex& i, const Grid& grid) {
    if (f.coefficient(i).is_zero()) throw std::invalid_argument("coefficient of x^i is zero");
    if (weighted_degree(f, w) != weighted_order(i, w)) throw std::invalid_argument("deg_w F differs from |i|_w");
    auto J = weighted_ball(w, r);
    // Every r' outside J has some r'_j #S_j > i_j  <=>  i lies in J_S.
    if (!in_grid_expansion(i, J, grid.sizes())) {
        throw std::invalid_argument("some r' with |r'|_w >= r has r'_j #S_j <= i_j for all j");
    }
    const auto derivs = J.graded_elements();
    for (std::uint64_t idx = 0; idx < grid.cardinality(); ++idx) {
        Point s = grid.point(idx);
        Polynomial shifted = taylor_shift(f, s);
        for (const auto& j : derivs) {
            FieldElement v = shifted.coefficient(j);
            if (!v.is_zero()) return {std::move(s), j, v};
        }
    }
    throw std::logic_error("no weighted Nullstellensatz witness found although the hypotheses hold");
}

bool whole_grid_check(const Polynomial& f, const WeightVector& w, std::uint64_t r, const Grid& grid) {
    const auto& sizes = grid.sizes();
    if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
        throw std::invalid_argument("whole-grid check needs equal coordinate set sizes");
    }
    const std::uint64_t s = sizes.front();
    std::uint64_t s_pow = 1;
    for (std::size_t k = 1; k < sizes.size(); ++k) s_pow *= s;
    return r * grid.cardinality() <= weighted_degree(f, w) * s_pow;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;
        if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

BinomialEstimate weighted_binomial_estimate(const WeightVector& w, std::uint64_t r) {
    const std::uint64_t m = w.size();
    std::uint64_t prod = 1;
    for (auto v : w.values()) prod *= v;
    return {binomial(m + r - 1, m), prod * weighted_ball(w, r).size()};
}

}  // namespace fplab
