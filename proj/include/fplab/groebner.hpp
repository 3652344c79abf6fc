#ifndef FPLAB_GROEBNER_HPP
#define FPLAB_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/ordering.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

/// A finite, non-empty generating set of an ideal. Zero generators and
/// mixed fields/arities are rejected.
class IdealPresentation {
public:
    explicit IdealPresentation(std::vector<Polynomial> generators);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const PrimeField& field() const { return gens_.front().field(); }
    std::size_t num_vars() const { return gens_.front().num_vars(); }

private:
    std::vector<Polynomial> gens_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum q_k d_k + r, where no monomial of r is
/// divisible by any LM(d_k) and LM(q_k d_k) <= LM(f). Divisors are tried in
/// the order given.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& ord);

/// The remainder of divide(), without tracking quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord);

/// True iff every pairwise S-polynomial reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrdering& ord);

class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> elements, MonomialOrdering ordering, bool reduced)
        : elems_(std::move(elements)), ord_(std::move(ordering)), reduced_(reduced) {}

    const std::vector<Polynomial>& elements() const { return elems_; }
    const MonomialOrdering& ordering() const { return ord_; }
    bool is_reduced() const { return reduced_; }
    std::vector<Multiindex> leading_monomials() const;
    bool is_unit_ideal() const;

private:
    std::vector<Polynomial> elems_;
    MonomialOrdering ord_;
    bool reduced_;
};

/// Turns any Groebner basis into the reduced one: drops elements whose LM is
/// divisible by another LM, inter-reduces tails, makes everything monic and
/// sorts by increasing LM.
GroebnerBasis make_reduced(std::span<const Polynomial> basis, const MonomialOrdering& ord);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties by pair index) and the coprime and chain criteria. Returns the
/// reduced basis.
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrdering& ord);

/// I_J = I + < prod_j G_j^{r_j} : r in B_J >.
IdealPresentation augment_ideal(const IdealPresentation& ideal, const DecreasingSet& J, const Grid& grid);

/// Standard monomials of a zero-dimensional leading-term ideal, sorted.
struct Footprint {
    std::vector<Multiindex> standard_monomials;
    std::size_t size() const { return standard_monomials.size(); }
};

/// Throws std::domain_error("infinite footprint") when some variable has no
/// pure power among the leading monomials.
Footprint footprint(const GroebnerBasis& basis);
Footprint footprint_of_monomial_ideal(std::span<const Multiindex> generators, std::size_t num_vars);

/// { prod_j G_j^{r_j} : r in B_J }, the reduced basis of I(S; J) for every ordering.
GroebnerBasis grid_ideal_basis(const Grid& grid, const DecreasingSet& J, const MonomialOrdering& ord);

/// Reduced basis of I(V; J) = { F : F^(i)(a) = 0 for all a in V, i in J },
/// computed Buchberger-Moller style: monomials are scanned in increasing
/// order and a basis element is emitted whenever a monomial's
/// derivative-evaluation vector depends on the standard monomials so far.
/// Throws std::invalid_argument on an empty V or repeated points.
GroebnerBasis vanishing_ideal(std::span<const Point> points, const DecreasingSet& J, const MonomialOrdering& ord,
                              const PrimeField& field);

/// Equality of ideals via their reduced bases. Throws std::invalid_argument
/// when the orderings differ.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// True iff f reduces to zero modulo the Groebner basis.
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);

}  // namespace fplab

#endif  // FPLAB_GROEBNER_HPP
