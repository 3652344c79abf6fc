#ifndef FPLAB_CODES_HPP
#define FPLAB_CODES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/hermite.hpp"
#include "fplab/linalg.hpp"

namespace fplab {

/// C(S, M, J): the image under Ev of the span of the monomials M. Codewords
/// have #S blocks of #J symbols; the generator has one row per monomial.
class EvaluationCode {
public:
    EvaluationCode(Grid grid, DecreasingSet J, std::vector<Multiindex> monomials, EvaluationMatrix generator);

    const Grid& grid() const { return grid_; }
    const DecreasingSet& derivatives() const { return J_; }
    const std::vector<Multiindex>& monomials() const { return monomials_; }
    const FieldMatrix& generator() const { return gen_.entries; }
    const EvaluationMatrix& evaluation() const { return gen_; }

    std::uint64_t length() const { return grid_.cardinality(); }
    std::size_t block_size() const { return J_.size(); }
    /// Rank of the generator matrix.
    std::size_t dimension() const { return rank(gen_.entries); }

    /// message * generator.
    std::vector<FieldElement> encode(std::span<const FieldElement> message) const;
    /// Number of blocks holding a non-zero symbol.
    std::uint64_t block_weight(std::span<const FieldElement> word) const;

private:
    Grid grid_;
    DecreasingSet J_;
    std::vector<Multiindex> monomials_;
    EvaluationMatrix gen_;
};

/// Throws std::invalid_argument if M is empty, repeats a monomial, or leaves J_S.
EvaluationCode build_code(const Grid& grid, std::vector<Multiindex> monomials, const DecreasingSet& J);

enum class DistanceMode { lower_bound, brute_force };

/// lower_bound: min over x^i in M of ceil(#{j in J_S : j >= i} / #J), since any
/// non-zero F in the span has its LM in M.
/// brute_force: minimum block weight over all non-zero codewords; throws
/// std::length_error when q^#M exceeds `max_codewords`.
std::uint64_t code_distance(const EvaluationCode& code, DistanceMode mode, std::uint64_t max_codewords = 1'000'000);

namespace serial {
std::uint64_t brute_force_distance(const EvaluationCode& code, std::uint64_t max_codewords = 1'000'000);
}

/// Row-major CSV of the generator matrix, integers in [0, p).
std::string generator_csv(const EvaluationCode& code);

}  // namespace fplab

#endif  // FPLAB_CODES_HPP
