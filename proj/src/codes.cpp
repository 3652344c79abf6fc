#include "fplab/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fplab/bounds.hpp"

namespace fplab {

EvaluationCode::EvaluationCode(Grid grid, DecreasingSet J, std::vector<Multiindex> monomials,
                               EvaluationMatrix generator)
    : grid_(std::move(grid)), J_(std::move(J)), monomials_(std::move(monomials)), gen_(std::move(generator)) {}

std::vector<FieldElement> EvaluationCode::encode(std::span<const FieldElement> message) const {
    const auto& G = gen_.entries;
    if (message.size() != G.rows()) throw std::invalid_argument("message length must equal the number of monomials");
    const auto& F = grid_.field();
    std::vector<FieldElement> word(G.cols(), F.zero());
    for (std::size_t r = 0; r < G.rows(); ++r) {
        if (message[r].is_zero()) continue;
        for (std::size_t c = 0; c < G.cols(); ++c) word[c] = F.add(word[c], F.mul(message[r], G(r, c)));
    }
    return word;
}

std::uint64_t EvaluationCode::block_weight(std::span<const FieldElement> word) const {
    const std::size_t b = J_.size();
    if (word.size() != length() * b) throw std::invalid_argument("word has the wrong length");
    std::uint64_t weight = 0;
    for (std::size_t start = 0; start < word.size(); start += b) {
        if (std::any_of(word.begin() + static_cast<std::ptrdiff_t>(start),
                        word.begin() + static_cast<std::ptrdiff_t>(start + b),
                        [](FieldElement e) { return !e.is_zero(); })) {
            ++weight;
        }
    }
    return weight;
}

EvaluationCode build_code(const Grid& grid, std::vector<Multiindex> monomials, const DecreasingSet& J) {
    if (monomials.empty()) throw std::invalid_argument("a code needs at least one monomial");
    if (J.num_vars() != grid.num_vars()) throw std::invalid_argument("decreasing set and grid arity mismatch");
    std::set<Multiindex> seen;
    for (const auto& m : monomials) {
        if (m.size() != grid.num_vars()) throw std::invalid_argument("monomial has the wrong number of variables");
        if (!in_grid_expansion(m, J, grid.sizes())) {
            throw std::invalid_argument("monomial " + m.to_string() + " lies outside J_S");
        }
        if (!seen.insert(m).second) throw std::invalid_argument("monomial " + m.to_string() + " is repeated");
    }
    auto points = grid.points();
    auto derivs = J.graded_elements();
    auto ev = evaluation_matrix(monomials, points, derivs, grid.field());
    return EvaluationCode(grid, J, std::move(monomials), std::move(ev));
}

namespace {

std::uint64_t message_count(const EvaluationCode& code, std::uint64_t max_codewords) {
    const std::uint64_t q = code.grid().field().modulus();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < code.monomials().size(); ++k) {
        if (total > max_codewords / q) {
            throw std::length_error("brute-force distance would enumerate more than " +
                                    std::to_string(max_codewords) + " codewords");
        }
        total *= q;
    }
    return total;
}

// Digits of idx in base q; returns false unless the first non-zero digit is 1,
// so each projective class of messages is visited once.
bool canonical_message(std::uint64_t idx, std::uint64_t q, std::vector<FieldElement>& msg) {
    bool leading_seen = false;
    bool canonical = true;
    for (std::size_t k = msg.size(); k-- > 0;) {
        msg[k] = FieldElement{static_cast<std::uint32_t>(idx % q)};
        idx /= q;
    }
    for (auto d : msg) {
        if (!d.is_zero() && !leading_seen) {
            leading_seen = true;
            canonical = d.value == 1;
        }
    }
    return leading_seen && canonical;
}

}  // namespace

namespace serial {
std::uint64_t brute_force_distance(const EvaluationCode& code, std::uint64_t max_codewords) {
    const std::uint64_t total = message_count(code, max_codewords);
    const std::uint64_t q = code.grid().field().modulus();
    std::vector<FieldElement> msg(code.monomials().size());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        if (!canonical_message(idx, q, msg)) continue;
        best = std::min(best, code.block_weight(code.encode(msg)));
    }
    return best;
}
}  // namespace serial

std::uint64_t code_distance(const EvaluationCode& code, DistanceMode mode, std::uint64_t max_codewords) {
    if (mode == DistanceMode::lower_bound) {
        const auto& J = code.derivatives();
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (const auto& m : code.monomials()) {
            const std::uint64_t removed = staircase_removed_count(m, J, code.grid().sizes());
            best = std::min(best, (removed + J.size() - 1) / J.size());
        }
        return best;
    }
    const std::uint64_t total = message_count(code, max_codewords);
    const std::uint64_t q = code.grid().field().modulus();
    const std::size_t k = code.monomials().size();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
    {
        std::vector<FieldElement> msg(k);
        std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static)
        for (std::int64_t i = 1; i < static_cast<std::int64_t>(total); ++i) {
            if (!canonical_message(static_cast<std::uint64_t>(i), q, msg)) continue;
            local = std::min(local, code.block_weight(code.encode(msg)));
        }
#pragma omp critical
        best = std::min(best, local);
    }
    return best;
}

std::string generator_csv(const EvaluationCode& code) {
    std::ostringstream out;
    const auto& G = code.generator();
    for (std::size_t r = 0; r < G.rows(); ++r) {
        for (std::size_t c = 0; c < G.cols(); ++c) out << (c ? "," : "") << G(r, c).value;
        out << '\n';
    }
    return out.str();
}

}  // namespace fplab
