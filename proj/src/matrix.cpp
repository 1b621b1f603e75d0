#include "dp2/matrix.hpp"

#include <algorithm>

namespace dp2 {

MatFq::MatFq(FieldPtr F, int rows, int cols)
    : field_(F), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows * cols), F->zero()) {}

MatFq MatFq::identity(FieldPtr F, int n) {
    MatFq m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
}

MatFq MatFq::operator*(const MatFq& o) const {
    MatFq r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

std::vector<FieldElement> MatFq::apply(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> r(static_cast<size_t>(rows_), field_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[static_cast<size_t>(i)] =
                r[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

int MatFq::rref() {
    int lead = 0;
    for (int r = 0; r < rows_ && lead < cols_; ++r) {
        int pr = -1;
        while (lead < cols_) {
            for (int i = r; i < rows_; ++i)
                if (!at(i, lead).is_zero()) {
                    pr = i;
                    break;
                }
            if (pr >= 0) break;
            ++lead;
        }
        if (lead >= cols_) return r;
        for (int j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
        FieldElement inv = dp2::inverse(at(r, lead));
        for (int j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, lead).is_zero()) continue;
            FieldElement f = at(i, lead);
            for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
        }
        ++lead;
    }
    int rank = 0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                ++rank;
                break;
            }
    return rank;
}

int MatFq::rank() const {
    MatFq copy = *this;
    return copy.rref();
}

std::vector<std::vector<FieldElement>> MatFq::kernel_basis() const {
    MatFq m = *this;
    m.rref();
    // pivot column of each nonzero row
    std::vector<int> pivot_of_col(static_cast<size_t>(cols_), -1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!m.at(i, j).is_zero()) {
                pivot_of_col[static_cast<size_t>(j)] = i;
                break;
            }
    std::vector<std::vector<FieldElement>> basis;
    for (int j = 0; j < cols_; ++j) {
        if (pivot_of_col[static_cast<size_t>(j)] >= 0) continue;  // pivot column
        std::vector<FieldElement> v(static_cast<size_t>(cols_), field_->zero());
        v[static_cast<size_t>(j)] = field_->one();
        for (int jj = 0; jj < j; ++jj) {
            int pr = pivot_of_col[static_cast<size_t>(jj)];
            if (pr >= 0) v[static_cast<size_t>(jj)] = -m.at(pr, j);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFq MatFq::inverse() const {
    if (rows_ != cols_) throw DivisionByZero("inverse of non-square matrix");
    MatFq aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_->one();
    }
    aug.rref();
    for (int i = 0; i < rows_; ++i)
        if (!aug.at(i, i).is_one()) throw DivisionByZero("matrix is singular");
    MatFq inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

bool MatFq::is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
}

}  // namespace dp2
