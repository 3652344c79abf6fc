#include "fplab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace fplab {

namespace {

struct OrderLess {
    const MonomialOrdering* ord;
    bool operator()(const Multiindex& a, const Multiindex& b) const { return ord->less(a, b); }
};

// Working polynomial keyed by the active ordering, so the leading term is
// the last entry.
class OrderedPoly {
public:
    OrderedPoly(const Polynomial& f, const MonomialOrdering& ord)
        : field_(f.field()), terms_(OrderLess{&ord}) {
        for (const auto& [e, v] : f.terms()) terms_.emplace(e, v);
    }

    bool empty() const { return terms_.empty(); }
    const Multiindex& lead_monomial() const { return std::prev(terms_.end())->first; }
    FieldElement lead_coefficient() const { return std::prev(terms_.end())->second; }
    void pop_lead() { terms_.erase(std::prev(terms_.end())); }

    // this -= c * x^shift * g
    void sub_multiple(const Polynomial& g, FieldElement c, const Multiindex& shift) {
        for (const auto& [e, v] : g.terms()) {
            FieldElement t = field_.mul(v, c);
            auto [it, inserted] = terms_.try_emplace(e + shift, field_.neg(t));
            if (!inserted) {
                it->second = field_.sub(it->second, t);
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
    }

private:
    PrimeField field_;
    std::map<Multiindex, FieldElement, OrderLess> terms_;
};

struct Divisor {
    const Polynomial* poly;
    Multiindex lm;
    FieldElement lc_inv;
};

std::vector<Divisor> prepare(std::span<const Polynomial> divisors, const MonomialOrdering& ord) {
    std::vector<Divisor> out;
    out.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
        out.push_back({&d, d.leading_monomial(ord), d.field().inv(d.leading_coefficient(ord))});
    }
    return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Divisor>& divs, const MonomialOrdering& ord,
                  std::vector<Polynomial>* quotients) {
    const auto& F = f.field();
    OrderedPoly p(f, ord);
    Polynomial r(F, f.num_vars());
    while (!p.empty()) {
        const Multiindex lm = p.lead_monomial();
        const FieldElement lc = p.lead_coefficient();
        bool divided = false;
        for (std::size_t k = 0; k < divs.size(); ++k) {
            if (!divs[k].lm.divides(lm)) continue;
            Multiindex shift = lm - divs[k].lm;
            FieldElement c = F.mul(lc, divs[k].lc_inv);
            if (quotients) (*quotients)[k].add_term(shift, c);
            p.sub_multiple(*divs[k].poly, c, shift);
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(lm, lc);
            p.pop_lead();
        }
    }
    return r;
}

void check_ordering(const Polynomial& f, const MonomialOrdering& ord) {
    if (f.num_vars() != ord.num_vars()) throw std::invalid_argument("ordering arity mismatch");
}

}  // namespace

IdealPresentation::IdealPresentation(std::vector<Polynomial> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("ideal presentation needs at least one generator");
    for (const auto& g : gens_) {
        if (g.is_zero()) throw std::invalid_argument("ideal generators must be non-zero");
        if (!(g.field() == gens_.front().field()) || g.num_vars() != gens_.front().num_vars()) {
            throw std::invalid_argument("ideal generators over different rings");
        }
    }
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& ord) {
    check_ordering(f, ord);
    auto divs = prepare(divisors, ord);
    std::vector<Polynomial> q(divisors.size(), Polynomial(f.field(), f.num_vars()));
    Polynomial r = reduce(f, divs, ord, &q);
    return {std::move(q), std::move(r)};
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& ord) {
    check_ordering(f, ord);
    return reduce(f, prepare(divisors, ord), ord, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord) {
    const auto& F = f.field();
    Multiindex lf = f.leading_monomial(ord);
    Multiindex lg = g.leading_monomial(ord);
    Multiindex l = lf.lcm(lg);
    Polynomial s(F, f.num_vars());
    s.add_multiple(f, F.inv(f.leading_coefficient(ord)), l - lf);
    s.add_multiple(g, F.neg(F.inv(g.leading_coefficient(ord))), l - lg);
    return s;
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrdering& ord) {
    auto divs = prepare(basis, ord);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (divs[i].lm.coprime(divs[j].lm)) continue;
            Polynomial s = s_polynomial(basis[i], basis[j], ord);
            if (!reduce(s, divs, ord, nullptr).is_zero()) return false;
        }
    }
    return true;
}

std::vector<Multiindex> GroebnerBasis::leading_monomials() const {
    std::vector<Multiindex> out;
    for (const auto& g : elems_) out.push_back(g.leading_monomial(ord_));
    return out;
}

bool GroebnerBasis::is_unit_ideal() const {
    return std::any_of(elems_.begin(), elems_.end(),
                       [&](const Polynomial& g) { return g.leading_monomial(ord_).is_zero(); });
}

GroebnerBasis make_reduced(std::span<const Polynomial> basis, const MonomialOrdering& ord) {
    std::vector<Polynomial> g;
    for (const auto& p : basis) {
        if (!p.is_zero()) g.push_back(p.monic(ord));
    }
    if (g.empty()) throw std::invalid_argument("empty Groebner basis");
    std::vector<Multiindex> lms;
    for (const auto& p : g) lms.push_back(p.leading_monomial(ord));

    // Minimal basis: keep g_i unless some other LM divides it (first copy of
    // a repeated LM wins).
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !lms[j].divides(lms[i])) continue;
            redundant = lms[j] != lms[i] || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Multiindex lm = minimal[i].leading_monomial(ord);
        Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].field(), lm);
        Polynomial r = Polynomial::monomial(minimal[i].field(), lm);
        if (!others.empty()) tail = normal_form(tail, others, ord);
        reduced.push_back(r + tail);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis(std::move(reduced), ord, true);
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrdering& ord) {
    const auto& F = ideal.field();
    const std::size_t m = ideal.num_vars();
    if (ord.num_vars() != m) throw std::invalid_argument("ordering arity mismatch");

    std::deque<Polynomial> g;  // stable addresses for Divisor::poly
    std::vector<Divisor> divs;
    auto add = [&](const Polynomial& p) {
        g.push_back(p.monic(ord));
        divs.push_back({&g.back(), g.back().leading_monomial(ord), F.one()});
    };
    for (const auto& p : ideal.generators()) {
        if (p.total_degree() == 0) return GroebnerBasis({Polynomial::constant(F, m, F.one())}, ord, true);
        add(p);
    }

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
    }

    while (!pairs.empty()) {
        // Normal strategy: smallest lcm first; std::set order breaks ties by index.
        auto best = pairs.begin();
        Multiindex best_lcm = divs[best->first].lm.lcm(divs[best->second].lm);
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Multiindex l = divs[it->first].lm.lcm(divs[it->second].lm);
            if (ord.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);

        if (divs[i].lm.coprime(divs[j].lm)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j || !divs[k].lm.divides(best_lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            chain = !pairs.contains(key(i, k)) && !pairs.contains(key(j, k));
        }
        if (chain) continue;

        Polynomial s = s_polynomial(g[i], g[j], ord);
        Polynomial r = reduce(s, divs, ord, nullptr);
        if (r.is_zero()) continue;
        if (r.total_degree() == 0) return GroebnerBasis({Polynomial::constant(F, m, F.one())}, ord, true);
        add(r);
        const std::size_t n = g.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pairs.emplace(k, n);
    }
    std::vector<Polynomial> out(g.begin(), g.end());
    return make_reduced(out, ord);
}

IdealPresentation augment_ideal(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid) {
    if (J.num_vars() != ideal.num_vars() || grid.num_vars() != ideal.num_vars()) {
        throw std::invalid_argument("ideal, decreasing set and grid disagree on the number of variables");
    }
    if (!(grid.field() == ideal.field())) throw std::invalid_argument("grid and ideal over different fields");
    std::vector<Polynomial> gens = ideal.generators();
    auto defining = grid_defining_polys(grid);
    for (const auto& r : J.minimal_complement()) gens.push_back(grid_product(defining, r));
    return IdealPresentation(std::move(gens));
}

Footprint footprint_of_monomial_ideal(std::span<const Multiindex> generators, std::size_t num_vars) {
    for (std::size_t k = 0; k < num_vars; ++k) {
        bool pure = std::any_of(generators.begin(), generators.end(), [&](const Multiindex& e) {
            for (std::size_t t = 0; t < num_vars; ++t) {
                if (t != k && e[t] != 0) return false;
            }
            return true;
        });
        if (!pure) {
            throw std::domain_error("infinite footprint: no pure power of x" + std::to_string(k + 1) +
                                    " among the leading monomials");
        }
    }
    auto in_ideal = [&](const Multiindex& e) {
        return std::any_of(generators.begin(), generators.end(), [&](const Multiindex& g) { return g.divides(e); });
    };
    Footprint fp;
    Multiindex origin(num_vars);
    if (in_ideal(origin)) return fp;
    std::set<Multiindex> seen{origin};
    std::deque<Multiindex> queue{origin};
    while (!queue.empty()) {
        Multiindex cur = std::move(queue.front());
        queue.pop_front();
        fp.standard_monomials.push_back(cur);
        for (std::size_t k = 0; k < num_vars; ++k) {
            Multiindex next = cur;
            ++next[k];
            if (in_ideal(next) || seen.contains(next)) continue;
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }
    std::sort(fp.standard_monomials.begin(), fp.standard_monomials.end());
    return fp;
}

Footprint footprint(const GroebnerBasis& basis) {
    auto lms = basis.leading_monomials();
    return footprint_of_monomial_ideal(lms, basis.ordering().num_vars());
}

GroebnerBasis grid_ideal_basis(const Grid& grid, const DecreasingSet& J, const MonomialOrdering& ord) {
    if (J.num_vars() != grid.num_vars() || ord.num_vars() != grid.num_vars()) {
        throw std::invalid_argument("grid, decreasing set and ordering disagree on the number of variables");
    }
    auto defining = grid_defining_polys(grid);
    std::vector<Polynomial> elems;
    for (const auto& r : J.minimal_complement()) elems.push_back(grid_product(defining, r));
    std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis(std::move(elems), ord, true);
}

GroebnerBasis vanishing_ideal(std::span<const Point> points, const DecreasingSet& J, const MonomialOrdering& ord,
                              const PrimeField& field) {
    const std::size_t m = J.num_vars();
    if (points.empty()) throw std::invalid_argument("vanishing ideal of an empty point set");
    if (ord.num_vars() != m) throw std::invalid_argument("ordering arity mismatch");
    for (std::size_t a = 0; a < points.size(); ++a) {
        if (points[a].size() != m) throw std::invalid_argument("point has wrong dimension");
        for (std::size_t b = 0; b < a; ++b) {
            if (points[a] == points[b]) throw std::invalid_argument("repeated point in vanishing ideal input");
        }
    }

    const auto derivs = J.graded_elements();
    const std::size_t n = points.size() * derivs.size();
    // (x^t)^(i)(a) = prod_k C(t_k, i_k) a_k^(t_k - i_k)
    auto evaluate = [&](const Multiindex& t) {
        std::vector<FieldElement> v(n);
        std::size_t col = 0;
        for (const auto& a : points) {
            for (const auto& i : derivs) {
                FieldElement c = field.one();
                for (std::size_t k = 0; k < m && !c.is_zero(); ++k) {
                    c = field.mul(c, binomial_mod_p(t[k], i[k], field));
                    if (t[k] > i[k]) c = field.mul(c, field.pow(a[k], t[k] - i[k]));
                }
                v[col++] = c;
            }
        }
        return v;
    };

    struct Row {
        std::vector<FieldElement> values;
        Polynomial combination;  // polynomial whose evaluation vector is `values`
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Polynomial> basis;
    std::vector<Multiindex> lms;
    std::set<Multiindex, OrderLess> candidates(OrderLess{&ord});
    candidates.insert(Multiindex(m));

    while (!candidates.empty()) {
        Multiindex t = *candidates.begin();
        candidates.erase(candidates.begin());
        if (std::any_of(lms.begin(), lms.end(), [&](const Multiindex& l) { return l.divides(t); })) continue;

        auto v = evaluate(t);
        Polynomial combo = Polynomial::monomial(field, t);
        for (const auto& row : rows) {
            FieldElement f = v[row.pivot];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] = field.sub(v[c], field.mul(f, row.values[c]));
            combo.add_multiple(row.combination, field.neg(f), Multiindex(m));
        }
        auto nz = std::find_if(v.begin(), v.end(), [](FieldElement e) { return !e.is_zero(); });
        if (nz == v.end()) {
            lms.push_back(t);
            basis.push_back(std::move(combo));
            continue;
        }
        const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
        FieldElement inv = field.inv(v[pivot]);
        for (auto& e : v) e = field.mul(e, inv);
        rows.push_back({std::move(v), combo.scaled(inv), pivot});
        for (std::size_t k = 0; k < m; ++k) {
            Multiindex next = t;
            ++next[k];
            candidates.insert(std::move(next));
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis(std::move(basis), ord, true);
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!(a.ordering() == b.ordering())) throw std::invalid_argument("comparing bases under different orderings");
    const auto ra = a.is_reduced() ? a : make_reduced(a.elements(), a.ordering());
    const auto rb = b.is_reduced() ? b : make_reduced(b.elements(), b.ordering());
    return ra.elements() == rb.elements();
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) {
    return normal_form(f, basis.elements(), basis.ordering()).is_zero();
}

}  // namespace fplab
