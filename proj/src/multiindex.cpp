#include "fplab/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace fplab {

std::uint64_t Multiindex::total_degree() const {
    std::uint64_t d = 0;
    for (auto v : e_) d += v;
    return d;
}

bool Multiindex::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Multiindex::divides(const Multiindex& other) const {
    if (other.size() != size()) return false;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] > other.e_[k]) return false;
    }
    return true;
}

Multiindex Multiindex::operator+(const Multiindex& other) const {
    if (other.size() != size()) throw std::invalid_argument("multiindex length mismatch");
    Multiindex r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += other.e_[k];
    return r;
}

Multiindex Multiindex::operator-(const Multiindex& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("multiindex difference would be negative");
    Multiindex r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= other.e_[k];
    return r;
}

Multiindex Multiindex::lcm(const Multiindex& other) const {
    if (other.size() != size()) throw std::invalid_argument("multiindex length mismatch");
    Multiindex r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = std::max(e_[k], other.e_[k]);
    return r;
}

bool Multiindex::coprime(const Multiindex& other) const {
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] != 0 && other.e_[k] != 0) return false;
    }
    return true;
}

std::string Multiindex::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(e_[k]);
    }
    return s + ")";
}

WeightVector::WeightVector(std::vector<std::uint32_t> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("weight vector must be non-empty");
    for (auto v : w_) {
        if (v == 0) throw std::invalid_argument("weights must be positive");
    }
}

std::uint64_t weighted_order(const Multiindex& i, const WeightVector& w) {
    if (i.size() != w.size()) throw std::invalid_argument("multiindex/weight length mismatch");
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < i.size(); ++k) s += std::uint64_t{i[k]} * w[k];
    return s;
}

bool is_antichain(std::span<const Multiindex> elems) {
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
            if (a != b && elems[a].divides(elems[b])) return false;
        }
    }
    return true;
}

}  // namespace fplab
