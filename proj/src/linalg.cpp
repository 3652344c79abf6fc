#include "fplab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fplab {

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

std::vector<FieldElement> FieldMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    FieldMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            FieldElement a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
            }
        }
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& a) {
    const auto& F = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        }
        FieldElement inv = F.inv(a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            FieldElement f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(FieldMatrix a) { return row_reduce(a).size(); }

std::optional<FieldMatrix> inverse(FieldMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    FieldMatrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = a.field().one();
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    FieldMatrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    }
    return out;
}

std::optional<std::vector<FieldElement>> solve_left(const FieldMatrix& a, const std::vector<FieldElement>& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("right-hand side has wrong length");
    // x A = b  <=>  A^T x^T = b^T; eliminate on [A^T | b^T].
    const std::size_t n = a.rows();
    FieldMatrix aug(a.field(), a.cols(), n + 1);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
        aug(i, n) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<FieldElement> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

}  // namespace fplab
