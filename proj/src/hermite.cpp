#include "fplab/hermite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fplab/groebner.hpp"

namespace fplab {

namespace {

// (x^m)^(i)(a) = prod_k C(m_k, i_k) a_k^(m_k - i_k).
FieldElement monomial_derivative_at(const Multiindex& m, const Multiindex& i, const Point& a, const PrimeField& F) {
    FieldElement acc = F.one();
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (i[k] > m[k]) return F.zero();
        acc = F.mul(acc, binomial_mod_p(m[k], i[k], F));
        if (acc.is_zero()) return acc;
        acc = F.mul(acc, F.pow(a[k], m[k] - i[k]));
    }
    return acc;
}

void check_shapes(std::span<const Multiindex> monomials, std::span<const Point> T, std::span<const Multiindex> J) {
    std::size_t m = 0;
    bool have = false;
    auto check = [&](std::size_t size) {
        if (!have) {
            m = size;
            have = true;
        } else if (size != m) {
            throw std::invalid_argument("monomials, points and derivatives disagree on the number of variables");
        }
    };
    for (const auto& x : monomials) check(x.size());
    for (const auto& x : T) check(x.size());
    for (const auto& x : J) check(x.size());
}

EvaluationMatrix empty_matrix(std::span<const Multiindex> monomials, std::span<const Point> T,
                              std::span<const Multiindex> J, const PrimeField& field) {
    check_shapes(monomials, T, J);
    EvaluationMatrix out{{monomials.begin(), monomials.end()}, {}, FieldMatrix(field, monomials.size(), T.size() * J.size())};
    out.columns.reserve(T.size() * J.size());
    for (const auto& a : T) {
        for (const auto& i : J) out.columns.push_back({a, i});
    }
    return out;
}

Polynomial embed_univariate(const Polynomial& u, std::size_t num_vars, std::size_t k) {
    Polynomial out(u.field(), num_vars);
    for (const auto& [e, c] : u.terms()) out.add_term(Multiindex::unit(num_vars, k, e[0]), c);
    return out;
}

}  // namespace

EvaluationMatrix evaluation_matrix(std::span<const Multiindex> monomials, std::span<const Point> T,
                                   std::span<const Multiindex> J, const PrimeField& field) {
    EvaluationMatrix out = empty_matrix(monomials, T, J, field);
    const auto ncols = static_cast<std::int64_t>(out.columns.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < ncols; ++c) {
        const auto col = static_cast<std::size_t>(c);
        const auto& [a, i] = out.columns[col];
        for (std::size_t r = 0; r < monomials.size(); ++r) {
            out.entries(r, col) = monomial_derivative_at(monomials[r], i, a, field);
        }
    }
    return out;
}

namespace serial {
EvaluationMatrix evaluation_matrix(std::span<const Multiindex> monomials, std::span<const Point> T,
                                   std::span<const Multiindex> J, const PrimeField& field) {
    EvaluationMatrix out = empty_matrix(monomials, T, J, field);
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        Polynomial x = Polynomial::monomial(field, monomials[r]);
        for (std::size_t col = 0; col < out.columns.size(); ++col) {
            out.entries(r, col) = hasse_derivative_at(x, out.columns[col].derivative, out.columns[col].point);
        }
    }
    return out;
}
}  // namespace serial

std::vector<FieldElement> evaluate_with_derivatives(const Polynomial& f, std::span<const Point> T,
                                                    std::span<const Multiindex> J) {
    std::vector<FieldElement> out;
    out.reserve(T.size() * J.size());
    for (const auto& a : T) {
        Polynomial shifted = taylor_shift(f, a);
        for (const auto& i : J) out.push_back(shifted.coefficient(i));
    }
    return out;
}

HermiteBasis hermite_univariate_basis(std::span<const FieldElement> nodes, std::uint32_t max_order,
                                      const PrimeField& field) {
    if (nodes.empty()) throw std::invalid_argument("Hermite basis needs at least one node");
    std::set<FieldElement> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) throw std::invalid_argument("Hermite nodes must be distinct");
    const std::size_t n = nodes.size();
    const std::size_t orders = max_order + 1;
    const std::size_t N = n * orders;
    // Confluent Vandermonde: row e is x^e, column (j, k) is the k-th Hasse
    // derivative at node j.
    FieldMatrix V(field, N, N);
    for (std::size_t e = 0; e < N; ++e) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < orders; ++k) {
                V(e, j * orders + k) =
                    e < k ? field.zero() : field.mul(binomial_mod_p(e, k, field), field.pow(nodes[j], e - k));
            }
        }
    }
    auto inv = inverse(V);
    if (!inv) throw std::logic_error("confluent Vandermonde matrix is singular for distinct nodes");
    std::vector<std::vector<Polynomial>> elems(orders);
    for (std::size_t k = 0; k < orders; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial f(field, 1);
            for (std::size_t e = 0; e < N; ++e) {
                f.add_term(Multiindex{static_cast<Multiindex::value_type>(e)}, (*inv)(j * orders + k, e));
            }
            elems[k].push_back(std::move(f));
        }
    }
    return HermiteBasis({nodes.begin(), nodes.end()}, max_order, std::move(elems));
}

Polynomial hermite_interpolate(std::span<const Point> T, std::span<const Multiindex> J,
                               std::span<const InterpolationTarget> targets, const PrimeField& field) {
    if (T.empty() || J.empty()) throw std::invalid_argument("interpolation needs non-empty T and J");
    check_shapes({}, T, J);
    const std::size_t m = T.front().size();
    std::set<Point> tset(T.begin(), T.end());
    std::set<Multiindex> jset(J.begin(), J.end());
    std::map<std::pair<Point, Multiindex>, FieldElement> wanted;
    for (const auto& t : targets) {
        if (!tset.count(t.point)) throw std::invalid_argument("target point is not in T");
        if (!jset.count(t.derivative)) {
            throw std::invalid_argument("target derivative " + t.derivative.to_string() + " is not in J");
        }
        if (t.value.value >= field.modulus()) throw std::invalid_argument("target value is not reduced");
        auto [it, fresh] = wanted.emplace(std::make_pair(t.point, t.derivative), t.value);
        if (!fresh && it->second != t.value) throw std::invalid_argument("conflicting duplicate targets");
    }
    std::uint32_t M = 0;
    for (const auto& i : J) {
        for (auto e : i) M = std::max(M, e);
    }
    std::vector<std::vector<FieldElement>> coords(m);
    std::vector<HermiteBasis> bases;
    for (std::size_t k = 0; k < m; ++k) {
        std::set<FieldElement> s;
        for (const auto& a : T) s.insert(a[k]);
        coords[k].assign(s.begin(), s.end());
        bases.push_back(hermite_univariate_basis(coords[k], M, field));
    }
    Polynomial out(field, m);
    for (const auto& [key, value] : wanted) {
        if (value.is_zero()) continue;
        const auto& [a, i] = key;
        Polynomial term = Polynomial::constant(field, m, value);
        for (std::size_t k = 0; k < m; ++k) {
            auto pos = std::lower_bound(coords[k].begin(), coords[k].end(), a[k]) - coords[k].begin();
            term = term * embed_univariate(bases[k].at(i[k], static_cast<std::size_t>(pos)), m, k);
        }
        out += term;
    }
    return out;
}

Polynomial reduce_over_grid(const Polynomial& f, const Grid& grid, const DecreasingSet& J) {
    auto ord = MonomialOrdering::grlex(grid.num_vars());
    auto basis = grid_ideal_basis(grid, J, ord);
    return normal_form(f, basis.elements(), ord);
}

Polynomial hermite_interpolate_unique(const Grid& grid, const DecreasingSet& J,
                                      std::span<const InterpolationTarget> targets) {
    auto points = grid.points();
    auto raw = hermite_interpolate(points, J.elements(), targets, grid.field());
    return reduce_over_grid(raw, grid, J);
}

}  // namespace fplab
