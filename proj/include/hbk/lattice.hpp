#ifndef HBK_LATTICE_HPP
#define HBK_LATTICE_HPP

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hbk/matrix.hpp"

namespace hbk {

// Valuation context: the tower field together with the number s of leading
// valuation coordinates in force (s = field.d is the fine valuation; s < d
// is a coarsening, whose ring of integers contains the fine one).
struct ValCtx {
    FieldCtx field;
    int s;

    ValCtx(const FieldCtx& f, int s_) : field(f), s(s_) {
        if (s < 1 || s > f.d) throw index_error("valuation split index out of range");
    }
    static ValCtx fine(const FieldCtx& f) { return ValCtx(f, f.d); }

    bool operator==(const ValCtx& o) const { return field.same_field(o.field) && s == o.s; }

    // Effective valuation (first s coordinates of omega).
    LexVal val(const FieldElem& x) const { return x.val().project(s); }
    bool in_ring(const FieldElem& x) const { return val(x).is_nonneg(); }
    bool is_unit(const FieldElem& x) const { return !x.is_zero() && val(x).is_zero(); }
    // A monomial with the given effective valuation (finer coordinates 0).
    FieldElem monomial(const LexVal& mu) const {
        if (mu.dim() != s) throw dimension_error("monomial rank does not match valuation context");
        return FieldElem::monomial(field, mu.concat(LexVal::zero(field.d - s)));
    }
};

// A point of the standard apartment: an n-tuple of values in Z^s modulo the
// diagonal, stored with the first coordinate normalized to zero.
class ApartmentPoint {
  public:
    ApartmentPoint(std::vector<LexVal> coords); // canonicalizes

    static ApartmentPoint origin(int n, int dim);

    int n() const { return static_cast<int>(coords_.size()); }
    int dim() const { return dim_; }
    const std::vector<LexVal>& coords() const { return coords_; }
    const LexVal& coord(int i) const;

    // Root evaluation alpha_{i,j}(x) = x_j - x_i (1-based roots).
    LexVal alpha(int i, int j) const;

    bool operator==(const ApartmentPoint& o) const;
    bool operator!=(const ApartmentPoint& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int dim_;
    std::vector<LexVal> coords_;
};

// A conjunction of half-apartment constraints alpha(x) >= -lambda_alpha,
// one value per root (i,j); infinity means no constraint.
class HalfApartmentBound {
  public:
    HalfApartmentBound(int n, int dim);

    int n() const { return n_; }
    const LexVal& bound(int i, int j) const;       // lambda_{(i,j)}
    void set_bound(int i, int j, const LexVal& v);
    bool contains(const ApartmentPoint& x) const;  // all alpha(x) >= -lambda

    std::string str() const;

  private:
    int n_, dim_;
    std::vector<LexVal> lambda_; // (i,j), i != j, row-major without diagonal
    int index(int i, int j) const;
};

// A homothety class of lattices in K^n: the columns of an invertible basis
// matrix span the lattice over the ring of integers of the context.
class LatticeClass {
  public:
    LatticeClass(const ValCtx& vc, Matrix basis); // checks invertibility

    const ValCtx& vc() const { return vc_; }
    const Matrix& basis() const { return basis_; }
    int n() const { return basis_.rows(); }

    std::string str() const;

  private:
    ValCtx vc_;
    Matrix basis_;
};

// Pivot selection for the Smith form: deterministic (lexicographically
// smallest position among minimal-valuation entries) or randomized
// tie-breaking driven by an external RNG.
struct PivotRule {
    std::mt19937_64* rng = nullptr; // nullptr = deterministic
};

struct SmithResult {
    Matrix p;                     // in GL_n of the ring
    Matrix d;                     // diagonal, monomial entries
    Matrix q;                     // in GL_n of the ring
    std::vector<LexVal> invariants; // valuations of d, ascending
};

// M = P * D * Q with P, Q integral with unit determinant and D diagonal
// with monomial entries of ascending valuation.
SmithResult smith_form(const Matrix& m, const ValCtx& vc, const PivotRule& rule = {});

bool class_eq(const LatticeClass& a, const LatticeClass& b);

// Invariant valuations of B1^{-1} B2 shifted so the minimum is zero.
std::vector<LexVal> rel_position(const LatticeClass& a, const LatticeClass& b);

LexVal dist_max(const LatticeClass& a, const LatticeClass& b);
LexVal dist_sum(const LatticeClass& a, const LatticeClass& b);

struct CommonApartment {
    Matrix basis;       // both classes are diagonal in this basis
    ApartmentPoint x1;
    ApartmentPoint x2;
};

CommonApartment common_apartment(const LatticeClass& a, const LatticeClass& b);

// Apartment coordinates of a class whose basis is diagonal (shape_error
// otherwise), and the inverse monomial lift.
ApartmentPoint psi(const LatticeClass& l);
LatticeClass psi_inv(const ValCtx& vc, const ApartmentPoint& x);

// Minimal enclosed set containing the given points: lambda_alpha is the
// maximum of -alpha(x) over the points.
HalfApartmentBound enclosure(const std::vector<ApartmentPoint>& points);

// g . [L] for g in SL_n(K); membership_error when det g != 1.
LatticeClass act(const Matrix& g, const LatticeClass& l);

// Sum of positive-root gaps of a sorted tuple (helper shared with psi tests).
LexVal root_gap_sum(const std::vector<LexVal>& sorted_vals);

// The standard apartment distance: sum over i<j of |alpha_{i,j}(x) - alpha_{i,j}(y)|.
LexVal apartment_dist(const ApartmentPoint& x, const ApartmentPoint& y);

} // namespace hbk

#endif
