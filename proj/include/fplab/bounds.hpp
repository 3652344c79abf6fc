#ifndef FPLAB_BOUNDS_HPP
#define FPLAB_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/groebner.hpp"
#include "fplab/ordering.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

enum class BoundMethod { footprint, demillo_lipton_general, schwartz_zippel_weighted };

struct FootprintWitness {
    std::size_t footprint_size = 0;   // #Delta(I_J)
    std::size_t decreasing_set_size = 0;  // #J
    std::size_t grid_expansion_size = 0;  // #J_S
    std::vector<Multiindex> leading_monomials;  // of the reduced basis of I_J, or the supplied LMs
};

struct DeMilloLiptonWitness {
    Multiindex leading_monomial;
    std::uint64_t removed_count = 0;  // #{j in J_S : j >= lm}
    std::size_t decreasing_set_size = 0;
    std::size_t grid_expansion_size = 0;
    std::uint64_t min_non_zeros = 0;  // ceil(removed / #J)
};

struct SchwartzZippelWitness {
    Multiindex leading_monomial;
    std::uint64_t multiplicity_sum_bound = 0;  // #S * sum_j i_j w_j / #S_j (always an integer)
    std::uint64_t threshold = 1;               // r
};

/// Upper bound on a number of grid zeros.
///
/// `value` is always the computed count bound. `no_information` is set when
/// value >= #S, i.e. the bound says nothing beyond the trivial one.
struct BoundReport {
    BoundMethod method;
    std::uint64_t value = 0;
    bool no_information = false;
    std::uint64_t grid_size = 0;
    std::variant<FootprintWitness, DeMilloLiptonWitness, SchwartzZippelWitness> witness;
};

/// #V_J(I) <= floor(#Delta(I_J) / #J), with Delta computed by Buchberger on
/// the augmented ideal.
BoundReport footprint_bound(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                            const MonomialOrdering& ord);

/// J = {0}: plain zeros in S.
BoundReport classical_footprint_bound(const IdealPresentation& ideal, const Grid& grid, const MonomialOrdering& ord);
/// J = {i : |i| < r}: zeros of standard multiplicity at least r.
BoundReport multiplicity_footprint_bound(const IdealPresentation& ideal, std::uint64_t r, const Grid& grid,
                                         const MonomialOrdering& ord);
/// J = {i : i_j < r_j}.
BoundReport coordinate_footprint_bound(const IdealPresentation& ideal, const Multiindex& r, const Grid& grid,
                                       const MonomialOrdering& ord);
/// J = {i : |i|_w < r}: zeros of weighted multiplicity at least r.
BoundReport weighted_footprint_bound(const IdealPresentation& ideal, const WeightVector& w, std::uint64_t r,
                                     const Grid& grid, const MonomialOrdering& ord);

/// #{i in J_S : no element of `leading_monomials` divides i}. This is the
/// staircase left in J_S when <LM(I_J)> is generated by the given monomials
/// together with the grid-product leading monomials.
std::uint64_t staircase_count(std::span<const Multiindex> leading_monomials, const DecreasingSet& J,
                              std::span<const std::size_t> sizes);

/// Footprint bound when only leading monomials of ideal members are known.
BoundReport leading_monomial_footprint_bound(std::span<const Multiindex> leading_monomials, const DecreasingSet& J,
                                             const Grid& grid);

/// #{j in J_S : j >= i}. Throws std::invalid_argument if i is not in J_S.
std::uint64_t staircase_removed_count(const Multiindex& i, const DecreasingSet& J, std::span<const std::size_t> sizes);

/// #V_J(F) <= floor((#J_S - #{j in J_S : j >= lm}) / #J) for any F with LM(F) = lm.
BoundReport demillo_lipton_general_bound(const Multiindex& lm, const DecreasingSet& J, const Grid& grid);

/// Number of non-zeros in S is at least prod_j (#S_j - d_j), d_j = deg_{x_j}(F).
/// Throws std::invalid_argument unless d_j < #S_j for all j.
std::uint64_t demillo_lipton_product_nonzeros(const Polynomial& f, const Grid& grid);

/// min { prod y_j : 1 <= y_j <= #S_j, sum y_j >= sum #S_j - degree }.
std::uint64_t alon_furedi_min_nonzeros(std::uint64_t degree, std::span<const std::size_t> sizes);

/// #S * sum_j i_j w_j / #S_j, an integer because #S_j divides #S.
std::uint64_t schwartz_zippel_rhs(const Multiindex& lm, const WeightVector& w, std::span<const std::size_t> sizes);

/// Weighted Schwartz-Zippel: sum_a m_w(F, a) <= rhs, with LM taken under lex
/// for the given variable priority (empty = x1 > ... > xm). The count bound
/// on zeros of weighted multiplicity >= r is floor(rhs / r).
BoundReport schwartz_zippel_weighted(const Polynomial& f, const WeightVector& w, const Grid& grid,
                                     const std::vector<std::size_t>& lex_priority = {}, std::uint64_t r = 1);

struct NullstellensatzWitness {
    Point point;
    Multiindex derivative;
    FieldElement value;
};

/// Finds s in S and j in J with F^(j)(s) != 0. Requires F != 0 and
/// LM(F) in J_S (std::invalid_argument otherwise); failure to find a witness
/// is an invariant violation (std::logic_error).
NullstellensatzWitness nullstellensatz_witness(const Polynomial& f, const DecreasingSet& J, const Grid& grid,
                                               const MonomialOrdering& ord);

/// Alon's original form: coefficient of x^i non-zero, deg F = |i| and
/// #S_j > i_j; returns s with F(s) != 0.
NullstellensatzWitness alon_nullstellensatz_witness(const Polynomial& f, const Multiindex& i, const Grid& grid);

/// Weighted form: coefficient of x^i non-zero, deg_w F = |i|_w, and every r'
/// with |r'|_w >= r has some j with r'_j #S_j > i_j. Returns s and j with
/// |j|_w < r and F^(j)(s) != 0.
NullstellensatzWitness weighted_nullstellensatz_witness(const Polynomial& f, const WeightVector& w, std::uint64_t r,
                                                        const Multiindex& i, const Grid& grid);

/// r #S <= deg_w(F) s^(m-1) for grids with all #S_j = s. Throws
/// std::invalid_argument on unequal sizes or F = 0.
bool whole_grid_check(const Polynomial& f, const WeightVector& w, std::uint64_t r, const Grid& grid);

struct BinomialEstimate {
    std::uint64_t lhs = 0;  // C(m + r - 1, m)
    std::uint64_t rhs = 0;  // w_1 ... w_m * B(w; r)
    bool holds() const { return lhs <= rhs; }
};
BinomialEstimate weighted_binomial_estimate(const WeightVector& w, std::uint64_t r);

/// Exact C(n, k) over the integers; throws std::overflow_error past 2^64.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace fplab

#endif  // FPLAB_BOUNDS_HPP
