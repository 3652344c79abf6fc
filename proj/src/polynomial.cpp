#include "fplab/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fplab {

Polynomial Polynomial::constant(PrimeField field, std::size_t num_vars, FieldElement c) {
    Polynomial p(field, num_vars);
    p.add_term(Multiindex(num_vars), c);
    return p;
}

Polynomial Polynomial::variable(PrimeField field, std::size_t num_vars, std::size_t k) {
    if (k >= num_vars) throw std::invalid_argument("variable index out of range");
    return monomial(field, Multiindex::unit(num_vars, k), field.one());
}

Polynomial Polynomial::monomial(PrimeField field, const Multiindex& exps, FieldElement c) {
    Polynomial p(field, exps.size());
    p.add_term(exps, c);
    return p;
}

FieldElement Polynomial::coefficient(const Multiindex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::check_compatible(const Polynomial& g) const {
    if (!(field_ == g.field_)) throw std::invalid_argument("polynomials over different fields");
    if (m_ != g.m_) throw std::invalid_argument("polynomials in different numbers of variables");
}

void Polynomial::add_term(const Multiindex& i, FieldElement c) {
    if (i.size() != m_) throw std::invalid_argument("monomial " + i.to_string() + " has wrong arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::add_multiple(const Polynomial& g, FieldElement c, const Multiindex& shift) {
    check_compatible(g);
    if (c.is_zero()) return;
    for (const auto& [e, v] : g.terms_) add_term(e + shift, field_.mul(v, c));
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_compatible(g);
    for (const auto& [e, v] : g.terms_) add_term(e, v);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_compatible(g);
    for (const auto& [e, v] : g.terms_) add_term(e, field_.neg(v));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    Polynomial r = *this;
    r += g;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    Polynomial r = *this;
    r -= g;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, m_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_.neg(v));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_compatible(g);
    Polynomial r(field_, m_);
    for (const auto& [e, v] : terms_) r.add_multiple(g, v, e);
    return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
    Polynomial r(field_, m_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_.mul(v, c));
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = constant(field_, m_, field_.one());
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FieldElement Polynomial::evaluate(const Point& a) const {
    if (a.size() != m_) throw std::invalid_argument("point has wrong dimension");
    FieldElement acc = field_.zero();
    for (const auto& [e, v] : terms_) {
        FieldElement t = v;
        for (std::size_t k = 0; k < m_; ++k) {
            if (e[k]) t = field_.mul(t, field_.pow(a[k], e[k]));
        }
        acc = field_.add(acc, t);
    }
    return acc;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, v] : terms_) d = std::max(d, e.total_degree());
    return d;
}

std::uint32_t Polynomial::degree_in(std::size_t k) const {
    std::uint32_t d = 0;
    for (const auto& [e, v] : terms_) d = std::max(d, e[k]);
    return d;
}

Multiindex Polynomial::leading_monomial(const MonomialOrdering& ord) const {
    if (terms_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
    if (ord.num_vars() != m_) throw std::invalid_argument("ordering arity mismatch");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (ord.less(best->first, it->first)) best = it;
    }
    return best->first;
}

FieldElement Polynomial::leading_coefficient(const MonomialOrdering& ord) const {
    return terms_.at(leading_monomial(ord));
}

Polynomial Polynomial::monic(const MonomialOrdering& ord) const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(leading_coefficient(ord)));
}

std::vector<Multiindex> Polynomial::support_descending(const MonomialOrdering& ord) const {
    std::vector<Multiindex> s;
    s.reserve(terms_.size());
    for (const auto& [e, v] : terms_) s.push_back(e);
    std::sort(s.begin(), s.end(), [&](const Multiindex& a, const Multiindex& b) { return ord.less(b, a); });
    return s;
}

std::uint64_t Multiplicity::value() const {
    if (inf_) throw std::logic_error("value() of an infinite multiplicity");
    return v_;
}

Polynomial hasse_derivative(const Polynomial& f, const Multiindex& i) {
    if (i.size() != f.num_vars()) throw std::invalid_argument("derivative multiindex has wrong arity");
    const auto& F = f.field();
    Polynomial r(F, f.num_vars());
    for (const auto& [e, v] : f.terms()) {
        if (!i.divides(e)) continue;
        FieldElement c = v;
        for (std::size_t k = 0; k < e.size() && !c.is_zero(); ++k) {
            c = F.mul(c, binomial_mod_p(e[k], i[k], F));
        }
        r.add_term(e - i, c);
    }
    return r;
}

FieldElement hasse_derivative_at(const Polynomial& f, const Multiindex& i, const Point& a) {
    if (i.size() != f.num_vars() || a.size() != f.num_vars()) {
        throw std::invalid_argument("arity mismatch in derivative evaluation");
    }
    const auto& F = f.field();
    FieldElement acc = F.zero();
    for (const auto& [e, v] : f.terms()) {
        if (!i.divides(e)) continue;
        FieldElement c = v;
        for (std::size_t k = 0; k < e.size() && !c.is_zero(); ++k) {
            c = F.mul(c, binomial_mod_p(e[k], i[k], F));
            if (e[k] > i[k]) c = F.mul(c, F.pow(a[k], e[k] - i[k]));
        }
        acc = F.add(acc, c);
    }
    return acc;
}

Polynomial taylor_shift(const Polynomial& f, const Point& a) {
    const std::size_t m = f.num_vars();
    if (a.size() != m) throw std::invalid_argument("shift point has wrong dimension");
    const auto& F = f.field();
    Polynomial r(F, m);
    for (const auto& [e, v] : f.terms()) {
        // (x + a)^e = prod_k sum_{t <= e_k} C(e_k, t) a_k^{e_k - t} x_k^t
        Multiindex t(m);
        while (true) {
            FieldElement c = v;
            for (std::size_t k = 0; k < m && !c.is_zero(); ++k) {
                c = F.mul(c, binomial_mod_p(e[k], t[k], F));
                if (e[k] > t[k]) c = F.mul(c, F.pow(a[k], e[k] - t[k]));
            }
            r.add_term(t, c);
            std::size_t k = 0;
            for (; k < m; ++k) {
                if (++t[k] <= e[k]) break;
                t[k] = 0;
            }
            if (k == m) break;
        }
    }
    return r;
}

std::uint64_t weighted_degree(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw std::domain_error("weighted degree of the zero polynomial");
    std::uint64_t d = 0;
    for (const auto& [e, v] : f.terms()) d = std::max(d, weighted_order(e, w));
    return d;
}

Multiplicity weighted_multiplicity(const Polynomial& f, const Point& a, const WeightVector& w) {
    if (w.size() != f.num_vars()) throw std::invalid_argument("weight vector arity mismatch");
    if (f.is_zero()) return Multiplicity::infinite();
    Polynomial g = taylor_shift(f, a);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [e, v] : g.terms()) best = std::min(best, weighted_order(e, w));
    return Multiplicity::finite(best);
}

bool has_multiplicity_at_least(const Polynomial& f, const Point& a, const DecreasingSet& J) {
    if (J.num_vars() != f.num_vars()) throw std::invalid_argument("decreasing set arity mismatch");
    for (const auto& i : J.elements()) {
        if (!hasse_derivative_at(f, i, a).is_zero()) return false;
    }
    return true;
}

std::vector<Polynomial> grid_defining_polys(const Grid& grid) {
    const std::size_t m = grid.num_vars();
    const auto& F = grid.field();
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < m; ++j) {
        Polynomial g = Polynomial::constant(F, m, F.one());
        Polynomial x = Polynomial::variable(F, m, j);
        for (auto s : grid.coordinate_set(j)) {
            g = g * (x - Polynomial::constant(F, m, s));
        }
        out.push_back(std::move(g));
    }
    return out;
}

Polynomial grid_product(const std::vector<Polynomial>& defining, const Multiindex& r) {
    if (defining.empty() || defining.size() != r.size()) {
        throw std::invalid_argument("grid product exponent has wrong arity");
    }
    Polynomial p = Polynomial::constant(defining[0].field(), r.size(), defining[0].field().one());
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j]) p = p * defining[j].pow(r[j]);
    }
    return p;
}

}  // namespace fplab
