#include "fplab/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fplab {

Grid::Grid(PrimeField field, std::vector<std::vector<FieldElement>> coordinate_sets)
    : field_(field), sets_(std::move(coordinate_sets)) {
    if (sets_.empty()) throw std::invalid_argument("grid needs at least one coordinate set");
    for (std::size_t j = 0; j < sets_.size(); ++j) {
        const auto& s = sets_[j];
        if (s.empty()) throw std::invalid_argument("coordinate set " + std::to_string(j + 1) + " is empty");
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("coordinate set " + std::to_string(j + 1) +
                                        " has a repeated element");
        }
        for (auto e : s) {
            if (e.value >= field_.modulus()) throw std::invalid_argument("coordinate not reduced mod p");
        }
        sizes_.push_back(s.size());
        card_ *= s.size();
    }
}

Grid Grid::from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& coords) {
    std::vector<std::vector<FieldElement>> sets;
    for (const auto& c : coords) {
        std::vector<FieldElement> s;
        for (auto v : c) s.push_back(field.from_int(v));
        sets.push_back(std::move(s));
    }
    return Grid(field, std::move(sets));
}

Grid Grid::leading_block(PrimeField field, const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<FieldElement>> sets;
    for (auto n : sizes) {
        if (n > field.modulus()) throw std::invalid_argument("coordinate set larger than the field");
        std::vector<FieldElement> s;
        for (std::size_t v = 0; v < n; ++v) s.push_back(FieldElement{static_cast<std::uint32_t>(v)});
        sets.push_back(std::move(s));
    }
    return Grid(field, std::move(sets));
}

Point Grid::point(std::uint64_t idx) const {
    Point a(sets_.size());
    for (std::size_t j = sets_.size(); j-- > 0;) {
        a[j] = sets_[j][idx % sizes_[j]];
        idx /= sizes_[j];
    }
    return a;
}

std::vector<Point> Grid::points() const {
    std::vector<Point> out;
    out.reserve(card_);
    for (std::uint64_t i = 0; i < card_; ++i) out.push_back(point(i));
    return out;
}

bool Grid::contains(const Point& a) const {
    if (a.size() != sets_.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::find(sets_[j].begin(), sets_[j].end(), a[j]) == sets_[j].end()) return false;
    }
    return true;
}

}  // namespace fplab
