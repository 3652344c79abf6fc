#ifndef FPLAB_LINALG_HPP
#define FPLAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

/// Dense row-major matrix over F_p. Exact elimination only.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

    static FieldMatrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<FieldElement> row(std::size_t r) const;

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

std::size_t rank(FieldMatrix a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<FieldMatrix> inverse(FieldMatrix a);

/// Solves x * A = b for a row vector x (A is rows x cols, b has cols
/// entries). Returns one solution, or nullopt if b is not in the row space.
std::optional<std::vector<FieldElement>> solve_left(const FieldMatrix& a, const std::vector<FieldElement>& b);

}  // namespace fplab

#endif  // FPLAB_LINALG_HPP
