#ifndef FPLAB_ORDERING_HPP
#define FPLAB_ORDERING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/multiindex.hpp"

namespace fplab {

enum class OrderingKind { lex, graded_lex, graded_reverse_lex };

/// A monomial ordering together with a variable priority.
///
/// `priority()[0]` is the most significant variable (0-based). The default
/// priority is x1 > x2 > ... > xm.
class MonomialOrdering {
public:
    /// Throws std::invalid_argument if `priority` is not a permutation of 0..m-1.
    MonomialOrdering(OrderingKind kind, std::size_t num_vars, std::vector<std::size_t> priority = {});

    static MonomialOrdering lex(std::size_t m) { return {OrderingKind::lex, m}; }
    static MonomialOrdering grlex(std::size_t m) { return {OrderingKind::graded_lex, m}; }
    static MonomialOrdering grevlex(std::size_t m) { return {OrderingKind::graded_reverse_lex, m}; }

    OrderingKind kind() const { return kind_; }
    std::size_t num_vars() const { return priority_.size(); }
    const std::vector<std::size_t>& priority() const { return priority_; }

    std::strong_ordering compare(const Multiindex& a, const Multiindex& b) const;
    bool less(const Multiindex& a, const Multiindex& b) const { return compare(a, b) < 0; }

    std::string name() const;

    friend bool operator==(const MonomialOrdering&, const MonomialOrdering&) = default;

private:
    OrderingKind kind_;
    std::vector<std::size_t> priority_;
};

/// Parses "lex", "grlex" or "grevlex".
std::optional<OrderingKind> parse_ordering_kind(std::string_view name);

}  // namespace fplab

#endif  // FPLAB_ORDERING_HPP
