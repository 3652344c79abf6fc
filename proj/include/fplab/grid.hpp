#ifndef FPLAB_GRID_HPP
#define FPLAB_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

using Point = std::vector<FieldElement>;

/// S = S_1 x ... x S_m over a prime field. Coordinate sets keep their input
/// order; repeated elements are an error.
class Grid {
public:
    /// Throws std::invalid_argument on an empty coordinate set, an empty grid,
    /// or a repeated element within one S_j.
    Grid(PrimeField field, std::vector<std::vector<FieldElement>> coordinate_sets);

    /// Convenience: integer coordinates reduced mod p before the duplicate check.
    static Grid from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& coords);
    /// S_j = {0, 1, ..., sizes[j]-1}; requires sizes[j] <= p.
    static Grid leading_block(PrimeField field, const std::vector<std::size_t>& sizes);

    const PrimeField& field() const { return field_; }
    std::size_t num_vars() const { return sets_.size(); }
    const std::vector<FieldElement>& coordinate_set(std::size_t j) const { return sets_[j]; }
    const std::vector<std::vector<FieldElement>>& coordinate_sets() const { return sets_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    /// #S.
    std::uint64_t cardinality() const { return card_; }

    /// The point with mixed-radix index `idx` (x_1 most significant), so that
    /// increasing indices walk S lexicographically by coordinate position.
    Point point(std::uint64_t idx) const;
    std::vector<Point> points() const;
    bool contains(const Point& a) const;

private:
    PrimeField field_;
    std::vector<std::vector<FieldElement>> sets_;
    std::vector<std::size_t> sizes_;
    std::uint64_t card_ = 1;
};

}  // namespace fplab

#endif  // FPLAB_GRID_HPP
