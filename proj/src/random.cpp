#include "fplab/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fplab {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

FieldElement random_element(const PrimeField& field, Rng& rng) {
    return FieldElement{static_cast<std::uint32_t>(uniform(rng, 0, field.modulus() - 1))};
}

Polynomial random_polynomial(const PrimeField& field, std::size_t num_vars, std::uint32_t max_degree,
                             std::size_t max_terms, Rng& rng, bool nonzero) {
    while (true) {
        Polynomial f(field, num_vars);
        const std::size_t terms = uniform(rng, 1, std::max<std::size_t>(max_terms, 1));
        for (std::size_t t = 0; t < terms; ++t) {
            Multiindex e(num_vars);
            std::uint64_t budget = uniform(rng, 0, max_degree);
            for (std::size_t k = 0; k < num_vars && budget > 0; ++k) {
                auto v = static_cast<Multiindex::value_type>(uniform(rng, 0, budget));
                e[k] = v;
                budget -= v;
            }
            // Shuffle so the first variable is not favoured.
            std::vector<Multiindex::value_type> tmp(e.begin(), e.end());
            std::shuffle(tmp.begin(), tmp.end(), rng);
            f.add_term(Multiindex(std::span<const Multiindex::value_type>(tmp)), random_element(field, rng));
        }
        if (!nonzero || !f.is_zero()) return f;
    }
}

DecreasingSet random_decreasing_set(std::size_t num_vars, std::size_t size, Rng& rng) {
    if (size == 0) throw std::invalid_argument("decreasing sets are non-empty");
    DecreasingSet J = origin_only(num_vars);
    while (J.size() < size) {
        const auto& bj = J.minimal_complement();
        auto pick = bj[uniform(rng, 0, bj.size() - 1)];
        auto elems = J.elements();
        elems.push_back(pick);
        J = DecreasingSet(num_vars, std::move(elems));
    }
    return J;
}

Grid random_grid(const PrimeField& field, std::size_t num_vars, std::size_t max_size, Rng& rng) {
    const std::size_t cap = std::min<std::size_t>(max_size, field.modulus());
    std::vector<std::vector<FieldElement>> sets(num_vars);
    std::vector<std::uint32_t> all(field.modulus());
    std::iota(all.begin(), all.end(), 0u);
    for (auto& s : sets) {
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t n = uniform(rng, 1, cap);
        for (std::size_t k = 0; k < n; ++k) s.push_back(FieldElement{all[k]});
        std::sort(s.begin(), s.end());
    }
    return Grid(field, std::move(sets));
}

std::vector<Point> random_grid_points(const Grid& grid, std::size_t count, Rng& rng) {
    if (count > grid.cardinality()) throw std::invalid_argument("more points requested than the grid holds");
    std::vector<std::uint64_t> idx(grid.cardinality());
    std::iota(idx.begin(), idx.end(), 0u);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Point> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(grid.point(idx[k]));
    return out;
}

WeightVector random_weights(std::size_t num_vars, std::uint32_t max_weight, Rng& rng) {
    std::vector<std::uint32_t> w(num_vars);
    for (auto& v : w) v = static_cast<std::uint32_t>(uniform(rng, 1, max_weight));
    return WeightVector(std::move(w));
}

}  // namespace fplab
