#ifndef FPLAB_ZEROS_HPP
#define FPLAB_ZEROS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/groebner.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

/// Cap on the number of grid points a brute-force scan may visit. Exceeding
/// it is an error, never a silent truncation.
struct EnumerationLimits {
    std::uint64_t max_points = 1'000'000;

    /// Reads FPLAB_MAX_ENUM when set; throws std::invalid_argument on a
    /// malformed value.
    static EnumerationLimits from_environment();
};

/// Grid points in grid index order, optionally with weighted multiplicities.
struct ZeroSet {
    std::vector<Point> points;
    std::vector<Multiplicity> multiplicities;  // empty unless requested

    std::size_t size() const { return points.size(); }
};

/// V_J(I): grid points where every generator has all J-derivatives zero.
ZeroSet zeros_with_multiplicity(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                                const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Points with m_w(F, a) >= r, carrying their multiplicities.
ZeroSet weighted_zeros(const Polynomial& f, const WeightVector& w, std::uint64_t r, const Grid& grid,
                       const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// sum over a in S of m_w(F, a). Throws std::invalid_argument for F = 0.
std::uint64_t multiplicity_sum(const Polynomial& f, const WeightVector& w, const Grid& grid,
                               const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Number of grid points where F does not vanish.
std::uint64_t count_nonzeros(const Polynomial& f, const Grid& grid,
                             const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Single-threaded reference versions of the grid scans above.
namespace serial {
ZeroSet zeros_with_multiplicity(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid,
                                const EnumerationLimits& limits = EnumerationLimits::from_environment());
std::uint64_t multiplicity_sum(const Polynomial& f, const WeightVector& w, const Grid& grid,
                               const EnumerationLimits& limits = EnumerationLimits::from_environment());
}  // namespace serial

/// prod_j prod_k (x_j - a^(j)_k)^{split[j][k]}, where a^(j)_k is the k-th
/// element of S_j. split[j] must have #S_j entries summing to i_j.
Polynomial sz_sharp_construction(const Grid& grid, const WeightVector& w, const Multiindex& i,
                                 const std::vector<std::vector<std::uint32_t>>& split);

/// Generators of I(V; J). Throws std::invalid_argument if V leaves the grid.
IdealPresentation equality_case_builder(std::span<const Point> V, const DecreasingSet& J, const Grid& grid,
                                        const MonomialOrdering& ord);

}  // namespace fplab

#endif  // FPLAB_ZEROS_HPP
