#include "hbk/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace hbk {

// ---------------------------------------------------------------------------
// AffineWeylElem

AffineWeylElem::AffineWeylElem(std::vector<int> perm, std::vector<LexVal> trans)
    : perm_(std::move(perm)), trans_(std::move(trans)) {
    int n = static_cast<int>(perm_.size());
    if (n < 1 || trans_.size() != perm_.size())
        throw dimension_error("permutation and translation sizes differ");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : perm_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw value_error("not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
    dim_ = trans_[0].dim();
    for (const auto& t : trans_) {
        if (t.is_infinity() || t.dim() != dim_)
            throw dimension_error("bad translation component");
    }
    LexVal shift = trans_[0];
    for (auto& t : trans_) t = t - shift;
}

AffineWeylElem AffineWeylElem::identity(int n, int dim) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    return AffineWeylElem(std::move(perm), std::vector<LexVal>(static_cast<size_t>(n), LexVal::zero(dim)));
}

ApartmentPoint AffineWeylElem::apply(const ApartmentPoint& x) const {
    if (x.n() != n() || x.dim() != dim_) throw dimension_error("point shape does not match Weyl element");
    std::vector<LexVal> y(static_cast<size_t>(n()), LexVal::zero(dim_));
    for (int j = 0; j < n(); ++j)
        y[static_cast<size_t>(perm_[static_cast<size_t>(j)])] = x.coord(j);
    for (int i = 0; i < n(); ++i)
        y[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] + trans_[static_cast<size_t>(i)];
    return ApartmentPoint(std::move(y));
}

AffineWeylElem AffineWeylElem::compose(const AffineWeylElem& o) const {
    if (n() != o.n() || dim_ != o.dim_) throw dimension_error("composing mismatched Weyl elements");
    std::vector<int> perm(static_cast<size_t>(n()));
    std::vector<LexVal> trans(static_cast<size_t>(n()), LexVal::zero(dim_));
    for (int j = 0; j < n(); ++j)
        perm[static_cast<size_t>(j)] = perm_[static_cast<size_t>(o.perm_[static_cast<size_t>(j)])];
    // trans = this.perm applied to o.trans, plus this.trans
    std::vector<int> inv(static_cast<size_t>(n()));
    for (int j = 0; j < n(); ++j) inv[static_cast<size_t>(perm_[static_cast<size_t>(j)])] = j;
    for (int i = 0; i < n(); ++i)
        trans[static_cast<size_t>(i)] =
            o.trans_[static_cast<size_t>(inv[static_cast<size_t>(i)])] + trans_[static_cast<size_t>(i)];
    return AffineWeylElem(std::move(perm), std::move(trans));
}

AffineWeylElem AffineWeylElem::inverse() const {
    std::vector<int> perm(static_cast<size_t>(n()));
    std::vector<LexVal> trans(static_cast<size_t>(n()), LexVal::zero(dim_));
    for (int j = 0; j < n(); ++j) perm[static_cast<size_t>(perm_[static_cast<size_t>(j)])] = j;
    for (int j = 0; j < n(); ++j)
        trans[static_cast<size_t>(j)] = -trans_[static_cast<size_t>(perm_[static_cast<size_t>(j)])];
    return AffineWeylElem(std::move(perm), std::move(trans));
}

bool AffineWeylElem::is_translation() const {
    for (int j = 0; j < n(); ++j)
        if (perm_[static_cast<size_t>(j)] != j) return false;
    return true;
}

bool AffineWeylElem::operator==(const AffineWeylElem& o) const {
    if (n() != o.n() || dim_ != o.dim_) return false;
    for (int j = 0; j < n(); ++j) {
        if (perm_[static_cast<size_t>(j)] != o.perm_[static_cast<size_t>(j)]) return false;
        if (trans_[static_cast<size_t>(j)] != o.trans_[static_cast<size_t>(j)]) return false;
    }
    return true;
}

std::string AffineWeylElem::str() const {
    std::ostringstream os;
    os << "perm=[";
    for (int j = 0; j < n(); ++j) {
        if (j) os << ',';
        os << perm_[static_cast<size_t>(j)] + 1;
    }
    os << "] trans=[";
    for (int j = 0; j < n(); ++j) {
        if (j) os << ',';
        os << trans_[static_cast<size_t>(j)].str();
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Root group elements

Matrix root_elem(const FieldCtx& ctx, int n, int i, int j, const FieldElem& c) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw value_error("root indices must be distinct and within range");
    Matrix m = Matrix::identity(ctx, n);
    m.at(i - 1, j - 1) = i < j ? c : -c;
    return m;
}

Matrix weyl_elem(const FieldCtx& ctx, int n, int i, int j, const FieldElem& c) {
    if (c.is_zero()) throw value_error("weyl_elem needs a nonzero parameter");
    Matrix a = root_elem(ctx, n, i, j, c);
    Matrix b = root_elem(ctx, n, j, i, c.inv());
    return a * b * a;
}

bool is_monomial_matrix(const Matrix& m) {
    if (!m.is_square()) return false;
    int n = m.rows();
    std::vector<bool> row_used(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
        int nz = -1;
        for (int i = 0; i < n; ++i) {
            if (m.at(i, j).is_zero()) continue;
            if (nz >= 0) return false;
            nz = i;
        }
        if (nz < 0 || row_used[static_cast<size_t>(nz)]) return false;
        row_used[static_cast<size_t>(nz)] = true;
    }
    return true;
}

AffineWeylElem nu_action(const Matrix& m, const ValCtx& vc) {
    if (!is_monomial_matrix(m)) throw membership_error("matrix is not monomial (not in N)");
    if (!m.det().is_one()) throw membership_error("matrix is not in SL_n");
    return nu_action_gl(m, vc);
}

AffineWeylElem nu_action_gl(const Matrix& m, const ValCtx& vc) {
    if (!is_monomial_matrix(m)) throw membership_error("matrix is not monomial (not in N)");
    int n = m.rows();
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<LexVal> trans(static_cast<size_t>(n), LexVal::zero(vc.s));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (m.at(i, j).is_zero()) continue;
            perm[static_cast<size_t>(j)] = i;
            trans[static_cast<size_t>(i)] = vc.val(m.at(i, j));
            break;
        }
    }
    return AffineWeylElem(std::move(perm), std::move(trans));
}

bool is_in_parahoric(const Matrix& g, const ApartmentPoint& x, const ValCtx& vc) {
    LatticeClass base = psi_inv(vc, x);
    return class_eq(act(g, base), base);
}

bool is_in_iwahori(const Matrix& g, const ValCtx& vc) {
    if (!g.is_square()) throw dimension_error("iwahori test needs a square matrix");
    if (!g.det().is_one()) throw membership_error("matrix is not in SL_n");
    int n = g.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g.at(i, j).is_zero()) continue;
            LexVal v = vc.val(g.at(i, j));
            if (!v.is_nonneg()) return false;
            if (i > j && !v.is_pos()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Iwasawa decomposition

namespace {

// Signed column swap keeping the determinant: col r <- col j0, col j0 <- -col r.
void signed_col_swap(Matrix& w, Matrix& k, int j0, int r) {
    if (j0 == r) return;
    w.swap_cols(j0, r);
    w.scale_col(j0, FieldElem::from_int(w.ctx(), -1));
    k.swap_rows(j0, r);
    k.scale_row(j0, FieldElem::from_int(k.ctx(), -1));
}

} // namespace

IwasawaResult iwasawa(const Matrix& g, const ValCtx& vc, bool chamber_plus,
                      std::mt19937_64* tie_rng) {
    if (!g.is_square()) throw dimension_error("iwasawa needs a square matrix");
    if (g.det().is_zero()) throw rank_error("matrix is singular");
    int n = g.rows();
    Matrix w = g;
    Matrix u = Matrix::identity(g.ctx(), n);
    Matrix k = Matrix::identity(g.ctx(), n);
    // Invariant: g = u * w * k.

    // Row processing order: bottom-up for the dominant chamber (upper
    // unitriangular u), top-down for the antidominant one.
    for (int step = 0; step < n; ++step) {
        int r = chamber_plus ? n - 1 - step : step;
        // Active columns for this row.
        std::vector<int> active;
        for (int j = 0; j < n; ++j) {
            bool done = chamber_plus ? j > r : j < r;
            if (!done) active.push_back(j);
        }
        // Minimal-valuation entry of the active part of row r.
        std::vector<int> best;
        LexVal best_val = LexVal::infinity(vc.s);
        for (int j : active) {
            if (w.at(r, j).is_zero()) continue;
            LexVal v = vc.val(w.at(r, j));
            if (v < best_val) {
                best_val = v;
                best.clear();
                best.push_back(j);
            } else if (v == best_val) {
                best.push_back(j);
            }
        }
        if (best.empty()) throw rank_error("matrix is singular");
        int j0 = best[0];
        if (tie_rng && best.size() > 1) {
            std::uniform_int_distribution<size_t> dist(0, best.size() - 1);
            j0 = best[dist(*tie_rng)];
        }
        signed_col_swap(w, k, j0, r);
        FieldElem pivot_inv = w.at(r, r).inv();
        // Clear the rest of row r with integral column operations.
        for (int j : active) {
            if (j == r || w.at(r, j).is_zero()) continue;
            FieldElem f = w.at(r, j) * pivot_inv;
            w.add_col_multiple(j, r, -f);
            k.add_row_multiple(r, j, f);
        }
        // Clear column r on the unfinished side with unitriangular row ops.
        for (int i = 0; i < n; ++i) {
            bool unfinished = chamber_plus ? i < r : i > r;
            if (!unfinished || w.at(i, r).is_zero()) continue;
            FieldElem f = w.at(i, r) * pivot_inv;
            w.add_row_multiple(i, r, -f);
            u.add_col_multiple(r, i, f);
        }
    }

    // w is now diagonal with det 1; normalize entries to monomials, folding
    // the units (a det-1 diagonal integral matrix) into k.
    for (int i = 0; i < n; ++i) {
        LexVal v = vc.val(w.at(i, i));
        FieldElem mono = vc.monomial(v);
        FieldElem unit = w.at(i, i) / mono;
        if (!unit.is_one()) {
            w.scale_col(i, unit.inv());
            k.scale_row(i, unit);
        }
    }
    return IwasawaResult{std::move(u), std::move(w), std::move(k)};
}

// ---------------------------------------------------------------------------
// Affine Bruhat decomposition

namespace {

struct BruhatPivot {
    int i, j;
};

// A pivot is admissible when every unfinished entry strictly below it in its
// column and strictly left of it in its row has strictly larger valuation;
// the Iwahori membership of the clearing operations is exactly that.
bool admissible_pivot(const Matrix& w, const ValCtx& vc, const std::vector<bool>& row_done,
                      const std::vector<bool>& col_done, int i, int j, const LexVal& v) {
    for (int i2 = i + 1; i2 < w.rows(); ++i2) {
        if (row_done[static_cast<size_t>(i2)] || w.at(i2, j).is_zero()) continue;
        if (!(vc.val(w.at(i2, j)) > v)) return false;
    }
    for (int j2 = 0; j2 < j; ++j2) {
        if (col_done[static_cast<size_t>(j2)] || w.at(i, j2).is_zero()) continue;
        if (!(vc.val(w.at(i, j2)) > v)) return false;
    }
    return true;
}

} // namespace

BruhatResult bruhat(const Matrix& g, const ValCtx& vc, std::mt19937_64* tie_rng) {
    if (!g.is_square()) throw dimension_error("bruhat needs a square matrix");
    if (g.det().is_zero()) throw rank_error("matrix is singular");
    int n = g.rows();
    Matrix w = g;
    Matrix b1 = Matrix::identity(g.ctx(), n);
    Matrix b2 = Matrix::identity(g.ctx(), n);
    std::vector<bool> row_done(static_cast<size_t>(n), false);
    std::vector<bool> col_done(static_cast<size_t>(n), false);
    // Invariant: g = b1 * w * b2 with b1, b2 in the Iwahori subgroup.

    for (int step = 0; step < n; ++step) {
        // Minimal valuation over unfinished entries.
        LexVal best_val = LexVal::infinity(vc.s);
        for (int i = 0; i < n; ++i) {
            if (row_done[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[static_cast<size_t>(j)] || w.at(i, j).is_zero()) continue;
                LexVal v = vc.val(w.at(i, j));
                if (v < best_val) best_val = v;
            }
        }
        if (best_val.is_infinity()) throw rank_error("matrix is singular");
        // Admissible pivots among minimal entries.  The bottom-most, then
        // left-most minimal entry is always admissible.
        std::vector<BruhatPivot> pivots;
        for (int i = n - 1; i >= 0; --i) {
            if (row_done[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[static_cast<size_t>(j)] || w.at(i, j).is_zero()) continue;
                if (vc.val(w.at(i, j)) != best_val) continue;
                if (admissible_pivot(w, vc, row_done, col_done, i, j, best_val))
                    pivots.push_back({i, j});
            }
        }
        if (pivots.empty()) throw rank_error("no admissible pivot"); // cannot happen
        BruhatPivot pick = pivots[0];
        if (tie_rng && pivots.size() > 1) {
            std::uniform_int_distribution<size_t> dist(0, pivots.size() - 1);
            pick = pivots[dist(*tie_rng)];
        }
        FieldElem pivot_inv = w.at(pick.i, pick.j).inv();
        // Clear the column with Iwahori row operations.
        for (int i2 = 0; i2 < n; ++i2) {
            if (i2 == pick.i || row_done[static_cast<size_t>(i2)] || w.at(i2, pick.j).is_zero())
                continue;
            FieldElem f = w.at(i2, pick.j) * pivot_inv;
            w.add_row_multiple(i2, pick.i, -f);
            b1.add_col_multiple(pick.i, i2, f);
        }
        // Clear the row with Iwahori column operations.
        for (int j2 = 0; j2 < n; ++j2) {
            if (j2 == pick.j || col_done[static_cast<size_t>(j2)] || w.at(pick.i, j2).is_zero())
                continue;
            FieldElem f = w.at(pick.i, j2) * pivot_inv;
            w.add_col_multiple(j2, pick.j, -f);
            b2.add_row_multiple(pick.j, j2, f);
        }
        row_done[static_cast<size_t>(pick.i)] = true;
        col_done[static_cast<size_t>(pick.j)] = true;
    }

    // Normalize the monomial w: entries become +-monomials, all signs +1
    // except one forced lower entry when the permutation is odd; the unit
    // diagonal folded into b2 has determinant 1 and lies in T_b.
    std::vector<int> row_of_col(static_cast<size_t>(n), -1);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!w.at(i, j).is_zero()) { row_of_col[static_cast<size_t>(j)] = i; break; }
    // Permutation parity.
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int parity = 1;
    for (int j = 0; j < n; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        int len = 0;
        int c = j;
        while (!seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = true;
            c = row_of_col[static_cast<size_t>(c)];
            ++len;
        }
        if (len % 2 == 0) parity = -parity;
    }
    int sign_col = -1;
    if (parity < 0) {
        // Pick the lower entry (row > col) with maximal row, then minimal col.
        for (int j = 0; j < n; ++j) {
            int i = row_of_col[static_cast<size_t>(j)];
            if (i > j && (sign_col < 0 || i > row_of_col[static_cast<size_t>(sign_col)] ||
                          (i == row_of_col[static_cast<size_t>(sign_col)] && j < sign_col)))
                sign_col = j;
        }
    }
    for (int j = 0; j < n; ++j) {
        int i = row_of_col[static_cast<size_t>(j)];
        LexVal v = vc.val(w.at(i, j));
        FieldElem target = vc.monomial(v);
        if (j == sign_col) target = -target;
        FieldElem unit = w.at(i, j) / target;
        if (!unit.is_one()) {
            w.scale_col(j, unit.inv());
            b2.scale_row(j, unit);
        }
    }
    return BruhatResult{std::move(b1), std::move(w), std::move(b2)};
}

// ---------------------------------------------------------------------------
// Retraction and the exploratory SL_2 orbit section

ApartmentPoint retract_to_apartment(const LatticeClass& l, bool chamber_plus) {
    auto dec = iwasawa(l.basis(), l.vc(), chamber_plus);
    return nu_action_gl(dec.m, l.vc()).apply(ApartmentPoint::origin(l.n(), l.vc().s));
}

std::vector<std::pair<long, long>> sl2_weyl_orbit_section(int window) {
    if (window < 1 || window > 16) throw value_error("orbit window out of supported range");
    const long big = 3L * window + 4;
    using Pt = std::pair<long, long>;
    auto inside = [&](const Pt& q) { return std::abs(q.first) <= big && std::abs(q.second) <= big; };
    auto orbit_min = [&](Pt start) {
        std::set<Pt> seen{start};
        std::queue<Pt> todo;
        todo.push(start);
        Pt best = start;
        while (!todo.empty()) {
            Pt q = todo.front();
            todo.pop();
            if (q < best) best = q;
            Pt nbrs[] = {
                {q.first + 2, q.second}, {q.first - 2, q.second},
                {q.first, q.second + 2}, {q.first, q.second - 2},
                {-q.first, -q.second},
            };
            for (const Pt& r : nbrs) {
                if (!inside(r) || seen.count(r)) continue;
                seen.insert(r);
                todo.push(r);
            }
        }
        return best;
    };
    std::set<Pt> section;
    for (long x = -window; x <= window; ++x)
        for (long y = -window; y <= window; ++y) section.insert(orbit_min({x, y}));
    return std::vector<Pt>(section.begin(), section.end());
}

} // namespace hbk
