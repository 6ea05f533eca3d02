#include "hbk/boundary.hpp"

namespace hbk {

void check_boundary_shape(const Matrix& m) {
    if (m.ctx().d != 2) throw unsupported_error("boundary operations need a rank-2 tower");
    if (m.rows() != 2 || m.cols() != 2) throw unsupported_error("boundary operations need n = 2");
    if (m.det().is_zero()) throw rank_error("degenerate basis");
}

End::End(Matrix b) : basis(std::move(b)) { check_boundary_shape(basis); }
BoundaryPoint::BoundaryPoint(Matrix b) : basis(std::move(b)) { check_boundary_shape(basis); }

CoarseContext End::ctx() const { return CoarseContext(basis.ctx(), 1); }
CoarseContext BoundaryPoint::ctx() const { return CoarseContext(basis.ctx(), 1); }

namespace {

// First valuation coordinate, or none for the zero element.
std::optional<Int> coarse_ord(const FieldElem& x) {
    if (x.is_zero()) return std::nullopt;
    return x.val().coord(0);
}

} // namespace

bool boundary_eq(const BoundaryPoint& pa, const BoundaryPoint& pb) {
    if (!pa.basis.ctx().same_field(pb.basis.ctx()))
        throw dimension_error("boundary points over different fields");
    CoarseContext ctx = pa.ctx();
    ValCtx coarse = ctx.coarse();
    Matrix h = pb.basis.inverse() * pa.basis;

    // The only possible scalar has coarse order the common coarse invariant.
    auto smith = smith_form(h, coarse);
    if (smith.invariants[0] != smith.invariants[1]) return false;
    Int a = smith.invariants[0].coord(0);

    Matrix hinv = h.inverse();
    auto ord_ge = [&](const FieldElem& x, const Int& bound) {
        auto o = coarse_ord(x);
        return !o || *o >= bound;
    };
    // Stabilizer conditions not involving the fine part of the scalar.
    if (!ord_ge(h.at(1, 0), a)) return false;      // k21 in O_coarse
    if (!ord_ge(h.at(0, 1), a + 1)) return false;  // k12 in t O_coarse
    if (!ord_ge(h.at(1, 1), a)) return false;      // k22 in O_coarse
    if (!ord_ge(hinv.at(1, 0), -a)) return false;
    if (!ord_ge(hinv.at(0, 1), -a + 1)) return false;
    if (!ord_ge(hinv.at(1, 1), -a)) return false;

    // Fine coordinate b of the scalar: k11 = h11 / (t^a u^b) must be
    // integral and (k^-1)11 = hinv11 * t^a u^b as well; each pins one side
    // of an integer window for b.
    std::optional<Int> upper, lower;
    if (!h.at(0, 0).is_zero()) {
        LexVal v = h.at(0, 0).val();
        if (v.coord(0) < a) return false;
        if (v.coord(0) == a) upper = v.coord(1);
    }
    if (!hinv.at(0, 0).is_zero()) {
        LexVal w = hinv.at(0, 0).val();
        if (w.coord(0) < -a) return false;
        if (w.coord(0) == -a) lower = -w.coord(1);
    }
    if (upper && lower && *lower > *upper) return false;
    return true;
}

BoundaryPoint lim(const End& e, bool plus) {
    const Matrix& b = e.basis;
    Matrix m(b.ctx(), 2, 2);
    if (plus) {
        // (b2, b1)
        m.at(0, 0) = b.at(0, 1);
        m.at(1, 0) = b.at(1, 1);
        m.at(0, 1) = b.at(0, 0);
        m.at(1, 1) = b.at(1, 0);
    } else {
        // (b1, t b2)
        FieldElem t = FieldElem::letter(b.ctx(), b.ctx().d);
        m.at(0, 0) = b.at(0, 0);
        m.at(1, 0) = b.at(1, 0);
        m.at(0, 1) = t * b.at(0, 1);
        m.at(1, 1) = t * b.at(1, 1);
    }
    return BoundaryPoint(std::move(m));
}

End glue(const End& e) {
    const Matrix& b = e.basis;
    FieldElem t = FieldElem::letter(b.ctx(), b.ctx().d);
    Matrix m(b.ctx(), 2, 2);
    m.at(0, 0) = t * b.at(0, 1);
    m.at(1, 0) = t * b.at(1, 1);
    m.at(0, 1) = b.at(0, 0);
    m.at(1, 1) = b.at(1, 0);
    return End(std::move(m));
}

bool end_eq(const End& a, const End& b) {
    return boundary_eq(lim(a, true), lim(b, true)) && boundary_eq(lim(a, false), lim(b, false));
}

LatticeClass end_base(const End& e) {
    return LatticeClass(e.ctx().coarse(), e.basis);
}

CoarseEdge upsilon(const BoundaryPoint& p) {
    CoarseContext ctx = p.ctx();
    FieldElem t = FieldElem::letter(p.basis.ctx(), p.basis.ctx().d);
    Matrix scaled = p.basis;
    scaled.scale_col(0, t); // (t c1, c2)
    return CoarseEdge{LatticeClass(ctx.coarse(), p.basis), LatticeClass(ctx.coarse(), scaled)};
}

CoarseEdge upsilon(const End& e, bool plus) { return upsilon(lim(e, plus)); }

bool coarse_edge_eq(const CoarseEdge& a, const CoarseEdge& b) {
    return class_eq(a.from, b.from) && class_eq(a.to, b.to);
}

std::vector<LatticeClass> fiber_neighbors(const LatticeClass& lt, const CoarseContext& ctx) {
    if (ctx.field.d != 2 || ctx.s != 1 || lt.n() != 2)
        throw unsupported_error("fiber exploration supports n = 2, d = 2 only");
    LatticeClass base = coarsen(lt, ctx);
    LatticeClass res = residue_class(lt, base, ctx);
    const FieldCtx rf = ctx.residue_field();
    FieldElem u = FieldElem::letter(rf, 1);

    // Neighbors of the residue class: one per line of R/uR over F_p.
    std::vector<LatticeClass> out;
    const Matrix& rb = res.basis();
    for (unsigned c = 0; c < ctx.field.p; ++c) {
        Matrix nb(rf, 2, 2);
        FieldElem fc = FieldElem::from_int(rf, static_cast<long>(c));
        nb.at(0, 0) = rb.at(0, 0) + fc * rb.at(0, 1);
        nb.at(1, 0) = rb.at(1, 0) + fc * rb.at(1, 1);
        nb.at(0, 1) = u * rb.at(0, 1);
        nb.at(1, 1) = u * rb.at(1, 1);
        out.push_back(lift(LatticeClass(ctx.residue(), nb), base, ctx));
    }
    Matrix nb(rf, 2, 2);
    nb.at(0, 0) = rb.at(0, 1);
    nb.at(1, 0) = rb.at(1, 1);
    nb.at(0, 1) = u * rb.at(0, 0);
    nb.at(1, 1) = u * rb.at(1, 0);
    out.push_back(lift(LatticeClass(ctx.residue(), nb), base, ctx));
    return out;
}

FiberBall fiber_ball(const LatticeClass& center, int radius, const CoarseContext& ctx) {
    if (radius < 0 || radius > 8) throw value_error("fiber ball radius out of supported range");
    FiberBall ball;
    ball.is_tree = true;
    ball.vertices.push_back({center, -1, 0, {}, false});
    size_t head = 0;
    while (head < ball.vertices.size()) {
        // Copy what we need: the vector may reallocate while growing.
        int depth = ball.vertices[head].depth;
        if (depth > radius) { ++head; continue; }
        LatticeClass cls = ball.vertices[head].cls;
        auto nbrs = fiber_neighbors(cls, ctx);
        bool parent_seen = false;
        for (const auto& nb : nbrs) {
            int found = -1;
            for (size_t i = 0; i < ball.vertices.size(); ++i)
                if (class_eq(ball.vertices[i].cls, nb)) { found = static_cast<int>(i); break; }
            if (found < 0) {
                ball.vertices.push_back({nb, static_cast<int>(head), depth + 1, {}, false});
                found = static_cast<int>(ball.vertices.size()) - 1;
            } else if (found == ball.vertices[head].parent && !parent_seen) {
                parent_seen = true; // the one legitimate back-edge
            } else {
                // Any other rediscovery is a cycle or a doubled edge.
                ball.is_tree = false;
            }
            ball.vertices[head].adj.push_back(found);
        }
        ball.vertices[head].expanded = true;
        ++head;
    }
    return ball;
}

} // namespace hbk
