#ifndef FPLAB_POLYNOMIAL_HPP
#define FPLAB_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/field.hpp"
#include "fplab/grid.hpp"
#include "fplab/multiindex.hpp"
#include "fplab/ordering.hpp"

namespace fplab {

/// Sparse multivariate polynomial over a prime field.
///
/// Canonical form: no stored coefficient is zero and every exponent vector
/// has length num_vars(). Mixing fields or arities throws std::invalid_argument.
class Polynomial {
public:
    using Terms = std::map<Multiindex, FieldElement>;

    Polynomial(PrimeField field, std::size_t num_vars) : field_(field), m_(num_vars) {}

    static Polynomial constant(PrimeField field, std::size_t num_vars, FieldElement c);
    static Polynomial constant(PrimeField field, std::size_t num_vars, std::int64_t c) {
        return constant(field, num_vars, field.from_int(c));
    }
    /// The variable x_{k+1} (0-based k).
    static Polynomial variable(PrimeField field, std::size_t num_vars, std::size_t k);
    static Polynomial monomial(PrimeField field, const Multiindex& exps, FieldElement c);
    static Polynomial monomial(PrimeField field, const Multiindex& exps) {
        return monomial(field, exps, field.one());
    }

    const PrimeField& field() const { return field_; }
    std::size_t num_vars() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    FieldElement coefficient(const Multiindex& i) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial scaled(FieldElement c) const;
    Polynomial pow(std::uint32_t e) const;

    /// *this += c * x^shift * g, in place.
    void add_multiple(const Polynomial& g, FieldElement c, const Multiindex& shift);
    /// Adds c to the coefficient of x^i, keeping canonical form.
    void add_term(const Multiindex& i, FieldElement c);

    FieldElement evaluate(const Point& a) const;

    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t k) const;

    /// Throws std::domain_error on the zero polynomial.
    Multiindex leading_monomial(const MonomialOrdering& ord) const;
    FieldElement leading_coefficient(const MonomialOrdering& ord) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic(const MonomialOrdering& ord) const;

    /// Support ordered from the largest monomial down.
    std::vector<Multiindex> support_descending(const MonomialOrdering& ord) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& g) const;

    PrimeField field_;
    std::size_t m_;
    Terms terms_;
};

/// Weighted multiplicity, with a distinguished infinite value for the zero
/// polynomial. Callers must test is_infinite() before reading value().
class Multiplicity {
public:
    static Multiplicity finite(std::uint64_t v) { return Multiplicity(v, false); }
    static Multiplicity infinite() { return Multiplicity(0, true); }

    bool is_infinite() const { return inf_; }
    /// Throws std::logic_error if infinite.
    std::uint64_t value() const;

    /// Compares with a finite threshold; infinity is at least anything.
    bool at_least(std::uint64_t r) const { return inf_ || v_ >= r; }

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

private:
    Multiplicity(std::uint64_t v, bool inf) : v_(v), inf_(inf) {}
    std::uint64_t v_;
    bool inf_;
};

/// F^(i): termwise c * prod_k C(j_k, i_k) * x^(j - i).
Polynomial hasse_derivative(const Polynomial& f, const Multiindex& i);

/// F^(i)(a) without materialising the derivative.
FieldElement hasse_derivative_at(const Polynomial& f, const Multiindex& i, const Point& a);

/// G(x) = F(x + a); the coefficient of x^i in G is F^(i)(a).
Polynomial taylor_shift(const Polynomial& f, const Point& a);

/// max |i|_w over the support. Throws std::domain_error on zero.
std::uint64_t weighted_degree(const Polynomial& f, const WeightVector& w);

/// m_w(F, a): least |i|_w with F^(i)(a) != 0; infinite for F = 0.
Multiplicity weighted_multiplicity(const Polynomial& f, const Point& a, const WeightVector& w);

/// True iff F^(i)(a) = 0 for every i in J.
bool has_multiplicity_at_least(const Polynomial& f, const Point& a, const DecreasingSet& J);

/// G_j(x_j) = prod_{s in S_j} (x_j - s), embedded in m variables.
std::vector<Polynomial> grid_defining_polys(const Grid& grid);

/// prod_j G_j(x_j)^{r_j}.
Polynomial grid_product(const std::vector<Polynomial>& defining, const Multiindex& r);

}  // namespace fplab

#endif  // FPLAB_POLYNOMIAL_HPP
