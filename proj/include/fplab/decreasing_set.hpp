#ifndef FPLAB_DECREASING_SET_HPP
#define FPLAB_DECREASING_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fplab/multiindex.hpp"

namespace fplab {

/// A finite, non-empty, downward-closed subset J of N^m.
///
/// Construction validates downward closure (it never auto-completes) and
/// caches B_J, the coordinate-wise minimal multiindices outside J. Elements
/// are kept sorted and deduplicated.
class DecreasingSet {
public:
    /// Throws std::invalid_argument if `elements` is empty, has mixed lengths,
    /// or is not downward closed.
    DecreasingSet(std::size_t num_vars, std::vector<Multiindex> elements);

    std::size_t num_vars() const { return m_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Multiindex>& elements() const { return elems_; }
    const std::vector<Multiindex>& minimal_complement() const { return bj_; }

    bool contains(const Multiindex& i) const;
    /// Largest coordinate appearing in any element.
    std::uint32_t max_coordinate() const;

    /// Elements sorted by total degree, ties broken lexicographically.
    std::vector<Multiindex> graded_elements() const;

    friend bool operator==(const DecreasingSet& a, const DecreasingSet& b) {
        return a.m_ == b.m_ && a.elems_ == b.elems_;
    }

private:
    std::size_t m_;
    std::vector<Multiindex> elems_;
    std::vector<Multiindex> bj_;
};

/// B_J of a decreasing set (the cached value).
inline const std::vector<Multiindex>& minimal_complement(const DecreasingSet& J) {
    return J.minimal_complement();
}

/// {i : |i|_w < r}. Requires r >= 1.
DecreasingSet weighted_ball(const WeightVector& w, std::uint64_t r);

/// {i : i_j < r_j for all j}. Requires every r_j >= 1.
DecreasingSet coordinate_box(const Multiindex& r);

/// {0} in m variables.
DecreasingSet origin_only(std::size_t num_vars);

/// J_S for the given side lengths #S_j: all (p_j * #S_j + t_j) with p in J and
/// 0 <= t_j < #S_j, sorted. Its size is #S * #J.
std::vector<Multiindex> grid_expand(const DecreasingSet& J, std::span<const std::size_t> sizes);

/// Membership in J_S without materialising it: i is in J_S iff
/// (floor(i_j / #S_j))_j is in J.
bool in_grid_expansion(const Multiindex& i, const DecreasingSet& J, std::span<const std::size_t> sizes);

}  // namespace fplab

#endif  // FPLAB_DECREASING_SET_HPP
