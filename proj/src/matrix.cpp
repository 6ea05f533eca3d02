#include "hbk/matrix.hpp"

#include <sstream>

namespace hbk {

Matrix::Matrix(const FieldCtx& ctx, int rows, int cols)
    : ctx_(ctx), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), FieldElem::zero(ctx)) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
}

Matrix Matrix::identity(const FieldCtx& ctx, int n) {
    Matrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(ctx);
    return m;
}

Matrix Matrix::diagonal(const FieldCtx& ctx, const std::vector<FieldElem>& diag) {
    Matrix m(ctx, static_cast<int>(diag.size()), static_cast<int>(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return m;
}

FieldElem& Matrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw index_error("matrix index out of range");
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const FieldElem& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw index_error("matrix index out of range");
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    Matrix r(ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const FieldElem& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

FieldElem Matrix::det() const {
    if (!is_square()) throw dimension_error("determinant of a non-square matrix");
    int n = rows_;
    Matrix w = *this;
    FieldElem d = FieldElem::one(ctx_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return FieldElem::zero(ctx_);
        if (pivot != col) {
            w.swap_rows(pivot, col);
            d = -d;
        }
        d = d * w.at(col, col);
        FieldElem inv = w.at(col, col).inv();
        for (int i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            FieldElem f = w.at(i, col) * inv;
            for (int j = col; j < n; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw dimension_error("inverse of a non-square matrix");
    int n = rows_;
    Matrix w = *this;
    Matrix r = identity(ctx_, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw rank_error("matrix is singular");
        if (pivot != col) {
            w.swap_rows(pivot, col);
            r.swap_rows(pivot, col);
        }
        FieldElem inv = w.at(col, col).inv();
        w.scale_row(col, inv);
        r.scale_row(col, inv);
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            FieldElem f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(col, j);
                r.at(i, j) = r.at(i, j) - f * r.at(col, j);
            }
        }
    }
    return r;
}

Matrix Matrix::adjugate() const {
    if (!is_square()) throw dimension_error("adjugate of a non-square matrix");
    int n = rows_;
    if (n == 1) {
        Matrix r(ctx_, 1, 1);
        r.at(0, 0) = FieldElem::one(ctx_);
        return r;
    }
    Matrix r(ctx_, n, n);
    Matrix minor(ctx_, n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int a = 0, ai = 0; a < n; ++a) {
                if (a == i) continue;
                for (int b = 0, bj = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor.at(ai, bj) = at(a, b);
                    ++bj;
                }
                ++ai;
            }
            FieldElem c = minor.det();
            if ((i + j) % 2 != 0) c = -c;
            r.at(j, i) = c; // transposed cofactor
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ctx_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void Matrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void Matrix::add_row_multiple(int target, int source, const FieldElem& c) {
    for (int k = 0; k < cols_; ++k)
        if (!at(source, k).is_zero()) at(target, k) = at(target, k) + c * at(source, k);
}

void Matrix::add_col_multiple(int target, int source, const FieldElem& c) {
    for (int k = 0; k < rows_; ++k)
        if (!at(k, source).is_zero()) at(k, target) = at(k, target) + c * at(k, source);
}

void Matrix::scale_row(int i, const FieldElem& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) = at(i, k) * c;
}

void Matrix::scale_col(int j, const FieldElem& c) {
    for (int k = 0; k < rows_; ++k) at(k, j) = at(k, j) * c;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace hbk
