#ifndef FPLAB_HERMITE_HPP
#define FPLAB_HERMITE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/linalg.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

struct EvaluationColumn {
    Point point;
    Multiindex derivative;
};

/// Rows follow `monomials`; columns are (point, derivative) pairs with points
/// outer and derivatives inner, in the order given. Entry = (x^m)^(i)(a).
struct EvaluationMatrix {
    std::vector<Multiindex> monomials;
    std::vector<EvaluationColumn> columns;
    FieldMatrix entries;
};

EvaluationMatrix evaluation_matrix(std::span<const Multiindex> monomials, std::span<const Point> T,
                                   std::span<const Multiindex> J, const PrimeField& field);

namespace serial {
EvaluationMatrix evaluation_matrix(std::span<const Multiindex> monomials, std::span<const Point> T,
                                   std::span<const Multiindex> J, const PrimeField& field);
}

/// Ev(F) = ((F^(i)(a))_{i in J})_{a in T}, flattened points-outer.
std::vector<FieldElement> evaluate_with_derivatives(const Polynomial& f, std::span<const Point> T,
                                                    std::span<const Multiindex> J);

/// Univariate Hermite basis F_{i,j}, i = derivative order 0..M, j = node
/// index, with F_{i,j}^(k)(a_l) = delta_{ik} delta_{jl} and degree below
/// n(M+1). Obtained by inverting the confluent Vandermonde matrix.
class HermiteBasis {
public:
    HermiteBasis(std::vector<FieldElement> nodes, std::uint32_t max_order, std::vector<std::vector<Polynomial>> elems)
        : nodes_(std::move(nodes)), max_order_(max_order), elems_(std::move(elems)) {}

    const std::vector<FieldElement>& nodes() const { return nodes_; }
    std::uint32_t max_order() const { return max_order_; }
    const Polynomial& at(std::uint32_t order, std::size_t node) const { return elems_.at(order).at(node); }

private:
    std::vector<FieldElement> nodes_;
    std::uint32_t max_order_;
    std::vector<std::vector<Polynomial>> elems_;
};

/// Throws std::invalid_argument on an empty or repeated node list.
HermiteBasis hermite_univariate_basis(std::span<const FieldElement> nodes, std::uint32_t max_order,
                                      const PrimeField& field);

struct InterpolationTarget {
    Point point;
    Multiindex derivative;
    FieldElement value;
};

/// Some F with F^(i)(a) equal to every target and zero at the remaining
/// (a, i) in T x J. Built from tensor products of univariate Hermite bases
/// with M = max coordinate of J and S_k = the k-th coordinates used by T.
/// Targets outside T x J, or conflicting duplicates, are rejected.
Polynomial hermite_interpolate(std::span<const Point> T, std::span<const Multiindex> J,
                               std::span<const InterpolationTarget> targets, const PrimeField& field);

/// The unique interpolant supported on J_S: hermite_interpolate over the
/// whole grid followed by reduction modulo I(S; J). Targets not listed are 0.
Polynomial hermite_interpolate_unique(const Grid& grid, const DecreasingSet& J,
                                      std::span<const InterpolationTarget> targets);

/// Remainder of F modulo the closed-form basis of I(S; J).
Polynomial reduce_over_grid(const Polynomial& f, const Grid& grid, const DecreasingSet& J);

}  // namespace fplab

#endif  // FPLAB_HERMITE_HPP
