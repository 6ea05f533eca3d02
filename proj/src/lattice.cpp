#include "hbk/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hbk {

// ---------------------------------------------------------------------------
// ApartmentPoint

ApartmentPoint::ApartmentPoint(std::vector<LexVal> coords) {
    if (coords.empty()) throw dimension_error("apartment point needs at least one coordinate");
    dim_ = coords[0].dim();
    for (const auto& c : coords) {
        if (c.is_infinity()) throw value_error("apartment coordinates must be finite");
        if (c.dim() != dim_) throw dimension_error("mixed ranks in apartment point");
    }
    LexVal shift = coords[0];
    coords_.reserve(coords.size());
    for (const auto& c : coords) coords_.push_back(c - shift);
}

ApartmentPoint ApartmentPoint::origin(int n, int dim) {
    if (n < 1) throw dimension_error("apartment point needs at least one coordinate");
    return ApartmentPoint(std::vector<LexVal>(static_cast<size_t>(n), LexVal::zero(dim)));
}

const LexVal& ApartmentPoint::coord(int i) const {
    if (i < 0 || i >= n()) throw index_error("apartment coordinate index out of range");
    return coords_[static_cast<size_t>(i)];
}

// Root evaluation on coordinate tuples: alpha_{i,j}(x) = x_j - x_i, the
// convention under which the diagonal torus D(t) translates by (omega(t_i))
// and alpha_{i,i+1} takes successive differences.
LexVal ApartmentPoint::alpha(int i, int j) const {
    if (i < 1 || j < 1 || i > n() || j > n() || i == j)
        throw index_error("root indices out of range");
    return coord(j - 1) - coord(i - 1);
}

bool ApartmentPoint::operator==(const ApartmentPoint& o) const {
    if (n() != o.n() || dim_ != o.dim_) return false;
    for (int i = 0; i < n(); ++i)
        if (coords_[static_cast<size_t>(i)] != o.coords_[static_cast<size_t>(i)]) return false;
    return true;
}

std::string ApartmentPoint::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) os << ',';
        os << coords_[static_cast<size_t>(i)].str();
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// HalfApartmentBound

HalfApartmentBound::HalfApartmentBound(int n, int dim) : n_(n), dim_(dim) {
    if (n < 2) throw dimension_error("half-apartment bounds need n >= 2");
    lambda_.assign(static_cast<size_t>(n) * static_cast<size_t>(n - 1), LexVal::infinity(dim));
}

int HalfApartmentBound::index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
        throw index_error("root indices out of range");
    int row = i - 1;
    int col = j - 1 - (j > i ? 1 : 0);
    return row * (n_ - 1) + col;
}

const LexVal& HalfApartmentBound::bound(int i, int j) const {
    return lambda_[static_cast<size_t>(index(i, j))];
}

void HalfApartmentBound::set_bound(int i, int j, const LexVal& v) {
    lambda_[static_cast<size_t>(index(i, j))] = v;
}

bool HalfApartmentBound::contains(const ApartmentPoint& x) const {
    if (x.n() != n_) throw dimension_error("point size does not match bound");
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (i == j) continue;
            const LexVal& l = bound(i, j);
            if (l.is_infinity()) continue;
            if (x.alpha(i, j) < -l) return false;
        }
    return true;
}

std::string HalfApartmentBound::str() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (i == j) continue;
            os << "alpha(" << i << ',' << j << ") >= " << (bound(i, j).is_infinity()
                       ? std::string("-inf")
                       : ("-" + bound(i, j).str()))
               << '\n';
        }
    return os.str();
}

// ---------------------------------------------------------------------------
// LatticeClass

LatticeClass::LatticeClass(const ValCtx& vc, Matrix basis) : vc_(vc), basis_(std::move(basis)) {
    if (!basis_.is_square() || basis_.rows() < 2)
        throw dimension_error("lattice basis must be square of size >= 2");
    if (!basis_.ctx().same_field(vc_.field))
        throw dimension_error("basis field does not match valuation context");
    if (basis_.det().is_zero()) throw rank_error("lattice basis is singular");
}

std::string LatticeClass::str() const { return basis_.str(); }

// ---------------------------------------------------------------------------
// Smith form over the valuation ring

namespace {

struct MinEntry {
    int i, j;
    LexVal v;
};

// All positions of minimal effective valuation in the active submatrix.
std::vector<MinEntry> minimal_entries(const Matrix& m, const ValCtx& vc, int from) {
    std::vector<MinEntry> best;
    for (int i = from; i < m.rows(); ++i)
        for (int j = from; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            LexVal v = vc.val(m.at(i, j));
            if (best.empty() || v < best[0].v) {
                best.clear();
                best.push_back({i, j, v});
            } else if (v == best[0].v) {
                best.push_back({i, j, v});
            }
        }
    return best;
}

} // namespace

SmithResult smith_form(const Matrix& m, const ValCtx& vc, const PivotRule& rule) {
    if (!m.is_square()) throw dimension_error("smith form requires a square matrix");
    int n = m.rows();
    Matrix w = m;
    Matrix p = Matrix::identity(m.ctx(), n);
    Matrix q = Matrix::identity(m.ctx(), n);
    // Invariant: original = p * w * q.

    for (int step = 0; step < n; ++step) {
        auto mins = minimal_entries(w, vc, step);
        if (mins.empty()) throw rank_error("matrix is singular");
        MinEntry pick = mins[0];
        if (rule.rng && mins.size() > 1) {
            std::uniform_int_distribution<size_t> dist(0, mins.size() - 1);
            pick = mins[dist(*rule.rng)];
        }
        // Move pivot to (step, step).  Row swap on w is compensated in p,
        // column swap in q.
        if (pick.i != step) {
            w.swap_rows(pick.i, step);
            p.swap_cols(pick.i, step); // (swap)^-1 = swap
        }
        if (pick.j != step) {
            w.swap_cols(pick.j, step);
            q.swap_rows(pick.j, step);
        }
        const FieldElem pivot = w.at(step, step);
        FieldElem pivot_inv = pivot.inv();
        // Clear the column below/above with integral row operations.
        for (int i = 0; i < n; ++i) {
            if (i == step || w.at(i, step).is_zero()) continue;
            FieldElem f = w.at(i, step) * pivot_inv; // in the ring: pivot has minimal valuation
            w.add_row_multiple(i, step, -f);
            p.add_col_multiple(step, i, f); // inverse of the row operation
        }
        // Clear the row with integral column operations.
        for (int j = 0; j < n; ++j) {
            if (j == step || w.at(step, j).is_zero()) continue;
            FieldElem f = w.at(step, j) * pivot_inv;
            w.add_col_multiple(j, step, -f);
            q.add_row_multiple(step, j, f);
        }
    }

    // Normalize the diagonal to monomials, folding units into p.
    std::vector<LexVal> inv_vals;
    inv_vals.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const FieldElem& di = w.at(i, i);
        LexVal v = vc.val(di);
        FieldElem mono = vc.monomial(v);
        FieldElem unit = di / mono; // effective valuation zero
        if (!unit.is_one()) {
            w.scale_row(i, unit.inv());
            p.scale_col(i, unit);
        }
        inv_vals.push_back(v);
    }
    // Sort ascending by valuation with simultaneous permutations.
    for (int i = 0; i < n; ++i) {
        int best = i;
        for (int j = i + 1; j < n; ++j)
            if (inv_vals[static_cast<size_t>(j)] < inv_vals[static_cast<size_t>(best)]) best = j;
        if (best != i) {
            std::swap(inv_vals[static_cast<size_t>(i)], inv_vals[static_cast<size_t>(best)]);
            w.swap_rows(i, best);
            p.swap_cols(i, best);
            w.swap_cols(i, best);
            q.swap_rows(i, best);
        }
    }
    return SmithResult{std::move(p), std::move(w), std::move(q), std::move(inv_vals)};
}

// ---------------------------------------------------------------------------
// Distances and class comparison

namespace {

void check_compatible(const LatticeClass& a, const LatticeClass& b) {
    if (!(a.vc() == b.vc())) throw dimension_error("lattice classes from different valuation contexts");
    if (a.n() != b.n()) throw dimension_error("lattice classes of different rank");
}

// Minimal effective valuation over all entries (matrix nonzero somewhere).
LexVal min_entry_val(const Matrix& m, const ValCtx& vc) {
    std::optional<LexVal> best;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            LexVal v = vc.val(m.at(i, j));
            if (!best || v < *best) best = v;
        }
    if (!best) throw rank_error("zero matrix has no entry valuation");
    return *best;
}

} // namespace

bool class_eq(const LatticeClass& a, const LatticeClass& b) {
    check_compatible(a, b);
    // Work with adj(B1)*B2 = det(B1) * B1^-1 B2: the determinant factor is a
    // homothety and drops out of the class test, and no divisions occur.
    Matrix m = a.basis().adjugate() * b.basis();
    const ValCtx& vc = a.vc();
    LexVal mu = min_entry_val(m, vc);
    // After scaling by monomial(-mu) all entries are integral with minimal
    // valuation zero; the classes agree iff the determinant is then a unit.
    return vc.val(m.det()) == mu.scaled(m.rows());
}

std::vector<LexVal> rel_position(const LatticeClass& a, const LatticeClass& b) {
    check_compatible(a, b);
    // The common shift from det(B1) disappears in the min-zero normalization.
    Matrix m = a.basis().adjugate() * b.basis();
    auto smith = smith_form(m, a.vc());
    LexVal shift = smith.invariants[0];
    std::vector<LexVal> out;
    out.reserve(smith.invariants.size());
    for (const auto& v : smith.invariants) out.push_back(v - shift);
    return out;
}

LexVal dist_max(const LatticeClass& a, const LatticeClass& b) {
    return rel_position(a, b).back();
}

LexVal root_gap_sum(const std::vector<LexVal>& sorted_vals) {
    size_t n = sorted_vals.size();
    LexVal total = LexVal::zero(sorted_vals[0].dim());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) total = total + (sorted_vals[j] - sorted_vals[i]);
    return total;
}

LexVal dist_sum(const LatticeClass& a, const LatticeClass& b) {
    return root_gap_sum(rel_position(a, b));
}

LexVal apartment_dist(const ApartmentPoint& x, const ApartmentPoint& y) {
    if (x.n() != y.n() || x.dim() != y.dim())
        throw dimension_error("apartment points of different shapes");
    LexVal total = LexVal::zero(x.dim());
    for (int i = 1; i <= x.n(); ++i)
        for (int j = i + 1; j <= x.n(); ++j)
            total = total + (x.alpha(i, j) - y.alpha(i, j)).abs();
    return total;
}

CommonApartment common_apartment(const LatticeClass& a, const LatticeClass& b) {
    check_compatible(a, b);
    // adj(B1)*B2 differs from B1^-1 B2 by the scalar det(B1), which shifts
    // all invariants equally and is absorbed by the diagonal quotient.
    Matrix m = a.basis().adjugate() * b.basis();
    auto smith = smith_form(m, a.vc());
    Matrix basis = a.basis() * smith.p;
    // a = [basis] (P is integral with unit det), b = [basis * D].
    std::vector<LexVal> zero(static_cast<size_t>(a.n()), LexVal::zero(a.vc().s));
    return CommonApartment{std::move(basis), ApartmentPoint(zero), ApartmentPoint(smith.invariants)};
}

ApartmentPoint psi(const LatticeClass& l) {
    // A monomial basis represents a module of the form (+) O x_i e_i: the
    // column through row i contributes coordinate val(x_i).
    const Matrix& b = l.basis();
    int n = b.rows();
    std::vector<LexVal> coords(static_cast<size_t>(n), LexVal::zero(l.vc().s));
    std::vector<bool> row_used(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
        int nz = -1;
        for (int i = 0; i < n; ++i) {
            if (b.at(i, j).is_zero()) continue;
            if (nz >= 0)
                throw shape_error("psi needs a monomial representative; use common_apartment first");
            nz = i;
        }
        if (nz < 0 || row_used[static_cast<size_t>(nz)])
            throw shape_error("psi needs a monomial representative; use common_apartment first");
        row_used[static_cast<size_t>(nz)] = true;
        coords[static_cast<size_t>(nz)] = l.vc().val(b.at(nz, j));
    }
    return ApartmentPoint(std::move(coords));
}

LatticeClass psi_inv(const ValCtx& vc, const ApartmentPoint& x) {
    if (x.dim() != vc.s) throw dimension_error("apartment rank does not match valuation context");
    std::vector<FieldElem> diag;
    diag.reserve(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) diag.push_back(vc.monomial(x.coord(i)));
    return LatticeClass(vc, Matrix::diagonal(vc.field, diag));
}

HalfApartmentBound enclosure(const std::vector<ApartmentPoint>& points) {
    if (points.empty()) throw value_error("enclosure of an empty set is undefined");
    int n = points[0].n();
    int dim = points[0].dim();
    HalfApartmentBound bound(n, dim);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            std::optional<LexVal> lam;
            for (const auto& x : points) {
                if (x.n() != n || x.dim() != dim)
                    throw dimension_error("mixed point shapes in enclosure");
                LexVal v = -x.alpha(i, j);
                if (!lam || v > *lam) lam = v;
            }
            bound.set_bound(i, j, *lam);
        }
    return bound;
}

LatticeClass act(const Matrix& g, const LatticeClass& l) {
    if (!g.is_square() || g.rows() != l.n()) throw dimension_error("acting matrix has wrong shape");
    if (!g.det().is_one()) throw membership_error("matrix is not in SL_n");
    return LatticeClass(l.vc(), g * l.basis());
}

} // namespace hbk
