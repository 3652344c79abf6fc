#include "fplab/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fplab {

MonomialOrdering::MonomialOrdering(OrderingKind kind, std::size_t num_vars, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    if (priority_.empty()) {
        priority_.resize(num_vars);
        std::iota(priority_.begin(), priority_.end(), std::size_t{0});
    }
    if (priority_.size() != num_vars) throw std::invalid_argument("variable priority has wrong length");
    auto sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k) throw std::invalid_argument("variable priority is not a permutation");
    }
}

std::strong_ordering MonomialOrdering::compare(const Multiindex& a, const Multiindex& b) const {
    if (kind_ != OrderingKind::lex) {
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) return da <=> db;
    }
    if (kind_ == OrderingKind::graded_reverse_lex) {
        // Among equal degrees the monomial with the smaller exponent in the
        // least significant variable wins.
        for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        return std::strong_ordering::equal;
    }
    for (auto k : priority_) {
        if (a[k] != b[k]) return a[k] <=> b[k];
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrdering::name() const {
    switch (kind_) {
        case OrderingKind::lex: return "lex";
        case OrderingKind::graded_lex: return "grlex";
        case OrderingKind::graded_reverse_lex: return "grevlex";
    }
    return "?";
}

std::optional<OrderingKind> parse_ordering_kind(std::string_view name) {
    if (name == "lex") return OrderingKind::lex;
    if (name == "grlex") return OrderingKind::graded_lex;
    if (name == "grevlex") return OrderingKind::graded_reverse_lex;
    return std::nullopt;
}

}  // namespace fplab
