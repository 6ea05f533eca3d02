#include "hbk/projections.hpp"

namespace hbk {

LatticeClass coarsen(const LatticeClass& l, const CoarseContext& ctx) {
    if (!l.vc().field.same_field(ctx.field) || l.vc().s != ctx.field.d)
        throw dimension_error("coarsen expects a class over the fine valuation of this tower");
    return LatticeClass(ctx.coarse(), l.basis());
}

bool in_fiber(const LatticeClass& lt, const LatticeClass& l, const CoarseContext& ctx) {
    if (!(l.vc() == ctx.coarse()))
        throw dimension_error("fiber base must live in the coarse context");
    return class_eq(coarsen(lt, ctx), l);
}

Matrix residue_matrix(const Matrix& m, const CoarseContext& ctx) {
    Matrix r(ctx.residue_field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).residue(ctx.s);
    return r;
}

Matrix embed_matrix(const Matrix& m, const FieldCtx& target) {
    Matrix r(target, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).embed(target);
    return r;
}

LatticeClass residue_class(const LatticeClass& lt, const LatticeClass& l, const CoarseContext& ctx) {
    if (!in_fiber(lt, l, ctx)) throw membership_error("class is not in the fiber over the base");
    ValCtx coarse = ctx.coarse();
    // adj(B_L)*B_Lt differs from B_L^-1 B_Lt by the scalar det(B_L), whose
    // coarse-unit part only moves the residue class by a homothety.
    Matrix m = l.basis().adjugate() * lt.basis();
    // All coarse invariants of m agree (same fiber); a monomial scalar with
    // the opposite coarse valuation puts a*O*Lt = L up to a coarse unit.
    auto smith = smith_form(m, coarse);
    LexVal delta = smith.invariants[0];
    FieldElem a = coarse.monomial(LexVal::zero(coarse.s) - delta);
    Matrix scaled = m * a;
    // scaled is in GL_n of the coarse ring; its entrywise residue is an
    // invertible matrix over the residue field.
    return LatticeClass(ctx.residue(), residue_matrix(scaled, ctx));
}

LatticeClass lift(const LatticeClass& r, const LatticeClass& l, const CoarseContext& ctx) {
    if (!(r.vc() == ctx.residue()))
        throw dimension_error("lift expects a class over the residue field");
    if (!(l.vc() == ctx.coarse()))
        throw dimension_error("fiber base must live in the coarse context");
    Matrix included = embed_matrix(r.basis(), ctx.field);
    return LatticeClass(ctx.fine(), l.basis() * included);
}

} // namespace hbk
