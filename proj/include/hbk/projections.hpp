#ifndef HBK_PROJECTIONS_HPP
#define HBK_PROJECTIONS_HPP

#include "hbk/lattice.hpp"

namespace hbk {

// Splitting of the value group Z^d into the s coarsest coordinates and the
// d-s remaining ones.  The coarse ring contains the fine one; the residue
// field of the coarse ring is the (d-s)-tower with the remaining valuation.
struct CoarseContext {
    FieldCtx field;
    int s;

    CoarseContext(const FieldCtx& f, int s_) : field(f), s(s_) {
        if (s < 1 || s >= f.d) throw index_error("coarse split index must satisfy 1 <= s < d");
    }

    ValCtx fine() const { return ValCtx::fine(field); }
    ValCtx coarse() const { return ValCtx(field, s); }
    FieldCtx residue_field() const { return FieldCtx{field.p, field.d - s, field.max_degree}; }
    ValCtx residue() const { return ValCtx::fine(residue_field()); }
};

// pi([L]) = [O.L]: the same basis matrix read in the coarse context.
LatticeClass coarsen(const LatticeClass& l, const CoarseContext& ctx);

// class_eq(coarsen(lt), l) in the coarse context.
bool in_fiber(const LatticeClass& lt, const LatticeClass& l, const CoarseContext& ctx);

// Res_L: a fiber member, scaled so its coarse span equals L, reduced
// entrywise modulo the coarse maximal ideal; a class over the residue field.
LatticeClass residue_class(const LatticeClass& lt, const LatticeClass& l, const CoarseContext& ctx);

// Section of Res_L: include a residue-field basis back into the tower and
// multiply into a basis of L.
LatticeClass lift(const LatticeClass& r, const LatticeClass& l, const CoarseContext& ctx);

// Entrywise iterated residue of an integral matrix (helpers shared with the
// boundary module).
Matrix residue_matrix(const Matrix& m, const CoarseContext& ctx);
Matrix embed_matrix(const Matrix& m, const FieldCtx& target);

} // namespace hbk

#endif
