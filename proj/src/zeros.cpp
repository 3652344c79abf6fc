#include "fplab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace fplab {

EnumerationLimits EnumerationLimits::from_environment() {
    EnumerationLimits limits;
    const char* env = std::getenv("FPLAB_MAX_ENUM");
    if (env == nullptr || *env == '\0') return limits;
    std::uint64_t v = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc{} || ptr != end || v == 0) {
        throw std::invalid_argument(std::string("FPLAB_MAX_ENUM is not a positive integer: ") + env);
    }
    limits.max_points = v;
    return limits;
}

namespace {

void check_cap(const Grid& grid, const EnumerationLimits& limits) {
    if (grid.cardinality() > limits.max_points) {
        throw std::length_error("grid has " + std::to_string(grid.cardinality()) +
                                " points, above the enumeration cap of " + std::to_string(limits.max_points));
    }
}

void check_ring(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid) {
    if (ideal.num_vars() != grid.num_vars() || J.num_vars() != grid.num_vars()) {
        throw std::invalid_argument("ideal, decreasing set and grid disagree on the number of variables");
    }
    if (!(ideal.field() == grid.field())) throw std::invalid_argument("ideal and grid live over different fields");
}

bool is_J_zero(const std::vector<Polynomial>& derivatives, const Point& s) {
    return std::all_of(derivatives.begin(), derivatives.end(),
                       [&](const Polynomial& d) { return d.evaluate(s).is_zero(); });
}

ZeroSet collect(const Grid& grid, const std::vector<char>& flags) {
    ZeroSet out;
    for (std::uint64_t idx = 0; idx < flags.size(); ++idx) {
        if (flags[idx]) out.points.push_back(grid.point(idx));
    }
    return out;
}

std::uint64_t finite_multiplicity(const Polynomial& f, const Point& s, const WeightVector& w) {
    return weighted_multiplicity(f, s, w).value();
}

}  // namespace

ZeroSet zeros_with_multiplicity(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                                const EnumerationLimits& limits) {
    check_ring(ideal, J, grid);
    check_cap(grid, limits);
    const auto n = static_cast<std::int64_t>(grid.cardinality());
    std::vector<char> flags(static_cast<std::size_t>(n), 0);
    // every J-derivative of every generator, expanded once
    std::vector<Polynomial> derivatives;
    for (const auto& g : ideal.generators()) {
        for (const auto& i : J.elements()) {
            auto d = hasse_derivative(g, i);
            if (!d.is_zero()) derivatives.push_back(std::move(d));
        }
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        flags[static_cast<std::size_t>(idx)] = is_J_zero(derivatives, grid.point(static_cast<std::uint64_t>(idx)));
    }
    return collect(grid, flags);
}

ZeroSet weighted_zeros(const Polynomial& f, const WeightVector& w, std::uint64_t r, const Grid& grid,
                       const EnumerationLimits& limits) {
    if (f.num_vars() != grid.num_vars() || w.size() != grid.num_vars()) {
        throw std::invalid_argument("polynomial, weights and grid disagree on the number of variables");
    }
    check_cap(grid, limits);
    const auto n = static_cast<std::int64_t>(grid.cardinality());
    std::vector<Multiplicity> mult(static_cast<std::size_t>(n), Multiplicity::finite(0));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        mult[static_cast<std::size_t>(idx)] = weighted_multiplicity(f, grid.point(static_cast<std::uint64_t>(idx)), w);
    }
    ZeroSet out;
    for (std::size_t idx = 0; idx < mult.size(); ++idx) {
        if (mult[idx].at_least(r)) {
            out.points.push_back(grid.point(idx));
            out.multiplicities.push_back(mult[idx]);
        }
    }
    return out;
}

std::uint64_t multiplicity_sum(const Polynomial& f, const WeightVector& w, const Grid& grid,
                               const EnumerationLimits& limits) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity sum of the zero polynomial is infinite");
    if (f.num_vars() != grid.num_vars() || w.size() != grid.num_vars()) {
        throw std::invalid_argument("polynomial, weights and grid disagree on the number of variables");
    }
    check_cap(grid, limits);
    const auto n = static_cast<std::int64_t>(grid.cardinality());
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        total += finite_multiplicity(f, grid.point(static_cast<std::uint64_t>(idx)), w);
    }
    return total;
}

std::uint64_t count_nonzeros(const Polynomial& f, const Grid& grid, const EnumerationLimits& limits) {
    if (f.num_vars() != grid.num_vars()) throw std::invalid_argument("polynomial and grid arity mismatch");
    check_cap(grid, limits);
    const auto n = static_cast<std::int64_t>(grid.cardinality());
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        if (!f.evaluate(grid.point(static_cast<std::uint64_t>(idx))).is_zero()) ++count;
    }
    return count;
}

namespace serial {

ZeroSet zeros_with_multiplicity(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                                const EnumerationLimits& limits) {
    check_ring(ideal, J, grid);
    check_cap(grid, limits);
    ZeroSet out;
    for (std::uint64_t idx = 0; idx < grid.cardinality(); ++idx) {
        Point s = grid.point(idx);
        bool zero = true;
        for (const auto& g : ideal.generators()) {
            for (const auto& i : J.elements()) {
                if (!hasse_derivative_at(g, i, s).is_zero()) {
                    zero = false;
                    break;
                }
            }
            if (!zero) break;
        }
        if (zero) out.points.push_back(std::move(s));
    }
    return out;
}

std::uint64_t multiplicity_sum(const Polynomial& f, const WeightVector& w, const Grid& grid,
                               const EnumerationLimits& limits) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity sum of the zero polynomial is infinite");
    check_cap(grid, limits);
    std::uint64_t total = 0;
    for (std::uint64_t idx = 0; idx < grid.cardinality(); ++idx) {
        total += finite_multiplicity(f, grid.point(idx), w);
    }
    return total;
}

}  // namespace serial

Polynomial sz_sharp_construction(const Grid& grid, const WeightVector& w, const Multiindex& i,
                                 const std::vector<std::vector<std::uint32_t>>& split) {
    const std::size_t m = grid.num_vars();
    if (w.size() != m || i.size() != m || split.size() != m) {
        throw std::invalid_argument("weights, exponent and split must all have one entry per variable");
    }
    const auto& F = grid.field();
    Polynomial f = Polynomial::constant(F, m, F.one());
    for (std::size_t j = 0; j < m; ++j) {
        const auto& set = grid.coordinate_set(j);
        if (split[j].size() != set.size()) {
            throw std::invalid_argument("split for x" + std::to_string(j + 1) + " needs one entry per element of S_" +
                                        std::to_string(j + 1));
        }
        std::uint64_t sum = 0;
        for (auto v : split[j]) sum += v;
        if (sum != i[j]) {
            throw std::invalid_argument("split for x" + std::to_string(j + 1) + " does not sum to i_" +
                                        std::to_string(j + 1));
        }
        Polynomial xj = Polynomial::variable(F, m, j);
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (split[j][k] == 0) continue;
            Polynomial factor = xj - Polynomial::constant(F, m, set[k]);
            f = f * factor.pow(split[j][k]);
        }
    }
    return f;
}

IdealPresentation equality_case_builder(std::span<const Point> V, const DecreasingSet& J, const Grid& grid,
                                        const MonomialOrdering& ord) {
    for (const auto& a : V) {
        if (!grid.contains(a)) throw std::invalid_argument("point of V lies off the grid");
    }
    return IdealPresentation(vanishing_ideal(V, J, ord, grid.field()).elements());
}

}  // namespace fplab
