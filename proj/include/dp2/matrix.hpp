#pragma once

#include <vector>

#include "dp2/field.hpp"

namespace dp2 {

/// Dense matrix over F_q; row-major. Only what the library needs:
/// rref, rank, kernel, inverse, products.
class MatFq {
public:
    MatFq(FieldPtr F, int rows, int cols);
    static MatFq identity(FieldPtr F, int n);

    FieldPtr field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const FieldElement& at(int r, int c) const {
        return data_[static_cast<size_t>(r * cols_ + c)];
    }

    MatFq operator*(const MatFq& o) const;
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    /// Reduced row echelon form in place; returns rank.
    int rref();
    int rank() const;
    /// Deterministic echelon basis of the right kernel.
    std::vector<std::vector<FieldElement>> kernel_basis() const;
    /// Inverse of a square matrix; throws DivisionByZero when singular.
    MatFq inverse() const;
    bool is_invertible() const;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<FieldElement> data_;
};

}  // namespace dp2
