#ifndef HBK_MATRIX_HPP
#define HBK_MATRIX_HPP

#include <string>
#include <vector>

#include "hbk/field.hpp"

namespace hbk {

// Dense matrix over a tower field.  Row-major storage; mostly square use.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const FieldCtx& ctx, int rows, int cols);

    static Matrix identity(const FieldCtx& ctx, int n);
    static Matrix diagonal(const FieldCtx& ctx, const std::vector<FieldElem>& diag);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldCtx& ctx() const { return ctx_; }

    FieldElem& at(int i, int j);
    const FieldElem& at(int i, int j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const FieldElem& c) const; // scalar
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    FieldElem det() const;     // square only
    Matrix inverse() const;    // rank_error when singular
    Matrix adjugate() const;   // adj(M) with M * adj(M) = det(M) * I
    Matrix transpose() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;

    // In-place elementary operations (used by the decomposition routines).
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int target, int source, const FieldElem& c);  // row_t += c*row_s
    void add_col_multiple(int target, int source, const FieldElem& c);  // col_t += c*col_s
    void scale_row(int i, const FieldElem& c);
    void scale_col(int j, const FieldElem& c);

    std::string str() const; // multi-line, for diagnostics

  private:
    FieldCtx ctx_{2, 2, 64};
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

} // namespace hbk

#endif
