#include "fplab/decreasing_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace fplab {

DecreasingSet::DecreasingSet(std::size_t num_vars, std::vector<Multiindex> elements)
    : m_(num_vars), elems_(std::move(elements)) {
    if (m_ == 0) throw std::invalid_argument("decreasing set needs at least one variable");
    if (elems_.empty()) throw std::invalid_argument("decreasing set must be non-empty");
    for (const auto& e : elems_) {
        if (e.size() != m_) {
            throw std::invalid_argument("multiindex " + e.to_string() + " has wrong length");
        }
    }
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());

    // Downward closure is equivalent to closure under single-step decrements.
    for (const auto& e : elems_) {
        for (std::size_t k = 0; k < m_; ++k) {
            if (e[k] == 0) continue;
            Multiindex d = e;
            --d[k];
            if (!contains(d)) {
                throw std::invalid_argument("set is not decreasing: " + e.to_string() +
                                            " present but " + d.to_string() + " missing");
            }
        }
    }

    // i is minimal outside J iff i is not in J and every i - e_k (i_k > 0) is in J.
    // Every such i is either a unit vector or some element plus a unit vector.
    std::vector<Multiindex> candidates;
    for (std::size_t k = 0; k < m_; ++k) candidates.push_back(Multiindex::unit(m_, k));
    for (const auto& e : elems_) {
        for (std::size_t k = 0; k < m_; ++k) {
            Multiindex c = e;
            ++c[k];
            candidates.push_back(std::move(c));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
        if (contains(c)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < m_ && minimal; ++k) {
            if (c[k] == 0) continue;
            Multiindex d = c;
            --d[k];
            minimal = contains(d);
        }
        if (minimal) bj_.push_back(c);
    }
}

bool DecreasingSet::contains(const Multiindex& i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

std::uint32_t DecreasingSet::max_coordinate() const {
    std::uint32_t mx = 0;
    for (const auto& e : elems_) {
        for (auto v : e) mx = std::max(mx, v);
    }
    return mx;
}

std::vector<Multiindex> DecreasingSet::graded_elements() const {
    auto out = elems_;
    std::stable_sort(out.begin(), out.end(), [](const Multiindex& a, const Multiindex& b) {
        return a.total_degree() < b.total_degree();
    });
    return out;
}

DecreasingSet weighted_ball(const WeightVector& w, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("weighted ball radius must be positive");
    const std::size_t m = w.size();
    std::vector<Multiindex> elems;
    Multiindex cur(m);
    // Odometer over the box bounded by r / w_j in each coordinate.
    while (true) {
        if (weighted_order(cur, w) < r) elems.push_back(cur);
        std::size_t k = 0;
        for (; k < m; ++k) {
            ++cur[k];
            if (weighted_order(cur, w) < r) break;
            cur[k] = 0;
        }
        if (k == m) break;
    }
    return DecreasingSet(m, std::move(elems));
}

DecreasingSet coordinate_box(const Multiindex& r) {
    const std::size_t m = r.size();
    for (auto v : r) {
        if (v == 0) throw std::invalid_argument("box side lengths must be positive");
    }
    std::vector<Multiindex> elems;
    Multiindex cur(m);
    while (true) {
        elems.push_back(cur);
        std::size_t k = 0;
        for (; k < m; ++k) {
            if (++cur[k] < r[k]) break;
            cur[k] = 0;
        }
        if (k == m) break;
    }
    return DecreasingSet(m, std::move(elems));
}

DecreasingSet origin_only(std::size_t num_vars) {
    return DecreasingSet(num_vars, {Multiindex(num_vars)});
}

std::vector<Multiindex> grid_expand(const DecreasingSet& J, std::span<const std::size_t> sizes) {
    const std::size_t m = J.num_vars();
    if (sizes.size() != m) throw std::invalid_argument("grid dimension does not match decreasing set");
    for (auto s : sizes) {
        if (s == 0) throw std::invalid_argument("grid side lengths must be positive");
    }
    std::vector<Multiindex> out;
    for (const auto& p : J.elements()) {
        Multiindex t(m);
        while (true) {
            Multiindex i(m);
            for (std::size_t k = 0; k < m; ++k) {
                i[k] = static_cast<Multiindex::value_type>(p[k] * sizes[k] + t[k]);
            }
            out.push_back(std::move(i));
            std::size_t k = 0;
            for (; k < m; ++k) {
                if (++t[k] < sizes[k]) break;
                t[k] = 0;
            }
            if (k == m) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_grid_expansion(const Multiindex& i, const DecreasingSet& J, std::span<const std::size_t> sizes) {
    if (i.size() != J.num_vars() || sizes.size() != J.num_vars()) return false;
    Multiindex q(i.size());
    for (std::size_t k = 0; k < i.size(); ++k) {
        q[k] = static_cast<Multiindex::value_type>(i[k] / sizes[k]);
    }
    return J.contains(q);
}

}  // namespace fplab
