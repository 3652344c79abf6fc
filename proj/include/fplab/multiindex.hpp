#ifndef FPLAB_MULTIINDEX_HPP
#define FPLAB_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fplab {

/// An exponent vector (i_1, ..., i_m) in N^m.
///
/// The built-in comparison is lexicographic on the raw exponent sequence and
/// exists only so multiindices can key ordered containers; monomial orderings
/// live in MonomialOrdering and the coordinate-wise partial order is
/// divides()/dominates().
class Multiindex {
public:
    using value_type = std::uint32_t;
    using storage = boost::container::small_vector<value_type, 4>;

    Multiindex() = default;
    explicit Multiindex(std::size_t num_vars) : e_(num_vars, 0) {}
    Multiindex(std::initializer_list<value_type> exps) : e_(exps) {}
    explicit Multiindex(std::span<const value_type> exps) : e_(exps.begin(), exps.end()) {}

    static Multiindex unit(std::size_t num_vars, std::size_t k, value_type power = 1) {
        Multiindex m(num_vars);
        m.e_[k] = power;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    value_type operator[](std::size_t k) const { return e_[k]; }
    value_type& operator[](std::size_t k) { return e_[k]; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    std::uint64_t total_degree() const;
    bool is_zero() const;

    /// Coordinate-wise: this <= other in every entry.
    bool divides(const Multiindex& other) const;
    bool dominates(const Multiindex& other) const { return other.divides(*this); }

    Multiindex operator+(const Multiindex& other) const;
    /// Requires other.divides(*this).
    Multiindex operator-(const Multiindex& other) const;
    Multiindex lcm(const Multiindex& other) const;
    bool coprime(const Multiindex& other) const;

    std::string to_string() const;

    friend bool operator==(const Multiindex& a, const Multiindex& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const Multiindex& a, const Multiindex& b) {
        return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                                      b.e_.end());
    }

private:
    storage e_;
};

inline std::ostream& operator<<(std::ostream& os, const Multiindex& m) { return os << m.to_string(); }

/// Positive integer weights (w_1, ..., w_m).
class WeightVector {
public:
    /// Throws std::invalid_argument if any weight is zero or the vector is empty.
    explicit WeightVector(std::vector<std::uint32_t> weights);

    std::size_t size() const { return w_.size(); }
    std::uint32_t operator[](std::size_t k) const { return w_[k]; }
    const std::vector<std::uint32_t>& values() const { return w_; }

    static WeightVector ones(std::size_t m) { return WeightVector(std::vector<std::uint32_t>(m, 1)); }

private:
    std::vector<std::uint32_t> w_;
};

/// |i|_w = sum_j i_j w_j. Throws std::invalid_argument on length mismatch.
std::uint64_t weighted_order(const Multiindex& i, const WeightVector& w);

/// True iff no two distinct elements are comparable under the coordinate-wise order.
bool is_antichain(std::span<const Multiindex> elems);

}  // namespace fplab

#endif  // FPLAB_MULTIINDEX_HPP
