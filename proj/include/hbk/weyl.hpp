#ifndef HBK_WEYL_HPP
#define HBK_WEYL_HPP

#include <random>
#include <set>
#include <vector>

#include "hbk/lattice.hpp"

namespace hbk {

// An element of the affine Weyl group: coordinate permutation followed by a
// translation (mod the diagonal, stored first-coordinate-zero).  Acts on
// apartment points by x |-> perm.x + trans.
class AffineWeylElem {
  public:
    AffineWeylElem(std::vector<int> perm, std::vector<LexVal> trans);

    static AffineWeylElem identity(int n, int dim);

    int n() const { return static_cast<int>(perm_.size()); }
    int dim() const { return dim_; }
    const std::vector<int>& perm() const { return perm_; }          // perm_[j] = image of j (0-based)
    const std::vector<LexVal>& trans() const { return trans_; }     // canonical, first = 0

    ApartmentPoint apply(const ApartmentPoint& x) const;
    AffineWeylElem compose(const AffineWeylElem& o) const; // this after o
    AffineWeylElem inverse() const;
    bool is_translation() const;

    bool operator==(const AffineWeylElem& o) const;
    bool operator!=(const AffineWeylElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int dim_;
    std::vector<int> perm_;
    std::vector<LexVal> trans_;
};

// x_{alpha_{i,j}}(c) = 1 + c E_{i,j} for i < j, 1 - c E_{i,j} for i > j.
Matrix root_elem(const FieldCtx& ctx, int n, int i, int j, const FieldElem& c);

// m_{alpha_{i,j}}(c) = x_alpha(c) x_{-alpha}(c^{-1}) x_alpha(c), c != 0.
Matrix weyl_elem(const FieldCtx& ctx, int n, int i, int j, const FieldElem& c);

bool is_monomial_matrix(const Matrix& m);

// The affine transformation nu(m) induced by a monomial matrix on the
// standard apartment; membership_error if m is not monomial with det 1.
AffineWeylElem nu_action(const Matrix& m, const ValCtx& vc);

// Same action extended to monomial matrices of GL_n (the center acts
// trivially modulo the diagonal); used by the retraction.
AffineWeylElem nu_action_gl(const Matrix& m, const ValCtx& vc);

// g fixes the building point psi_inv(x)?
bool is_in_parahoric(const Matrix& g, const ApartmentPoint& x, const ValCtx& vc);

// Entries integral, strictly-lower entries of positive valuation, det 1.
bool is_in_iwahori(const Matrix& g, const ValCtx& vc);

struct IwasawaResult {
    Matrix u; // upper (or lower, per chamber) unitriangular
    Matrix m; // monomial in N
    Matrix k; // in SL_n of the ring
};

// g = u * m * k; chamber_plus selects the dominant (upper-unitriangular)
// chamber, false the antidominant one.  The optional RNG shuffles pivot
// tie-breaking; the recovered nu(m) must not depend on it.
IwasawaResult iwasawa(const Matrix& g, const ValCtx& vc, bool chamber_plus = true,
                      std::mt19937_64* tie_rng = nullptr);

struct BruhatResult {
    Matrix b1; // Iwahori
    Matrix m;  // monomial in N
    Matrix b2; // Iwahori
};

// g = b1 * m * b2 with both factors in the standard Iwahori subgroup.
BruhatResult bruhat(const Matrix& g, const ValCtx& vc, std::mt19937_64* tie_rng = nullptr);

// Retraction of a lattice class onto the standard apartment, centered at
// the sector-germ at infinity of the (anti)dominant chamber.
ApartmentPoint retract_to_apartment(const LatticeClass& l, bool chamber_plus = true);

// Exploratory: orbit classes of the SL_2 double affine Weyl group acting on
// the integral points of the apartment (identified with Z^2), enumerated by
// brute force on [-window, window]^2.  Returns one canonical representative
// per orbit met in the window.
std::vector<std::pair<long, long>> sl2_weyl_orbit_section(int window);

} // namespace hbk

#endif
