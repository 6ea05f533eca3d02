#include <doctest.h>

#include "hbk/boundary.hpp"
#include "hbk/sampling.hpp"

using namespace hbk;

namespace {
const FieldCtx F2{2, 2, 256};
const CoarseContext CC(F2, 1);
const ValCtx FINE = CC.fine();

Matrix cols(const FieldElem& a1, const FieldElem& a2, const FieldElem& b1, const FieldElem& b2) {
    Matrix m(F2, 2, 2);
    m.at(0, 0) = a1;
    m.at(1, 0) = a2;
    m.at(0, 1) = b1;
    m.at(1, 1) = b2;
    return m;
}

const FieldElem ONE = FieldElem::one(F2);
const FieldElem ZERO = FieldElem::zero(F2);
const FieldElem T = FieldElem::letter(F2, 2);
const FieldElem U = FieldElem::letter(F2, 1);

End std_end() { return End(Matrix::identity(F2, 2)); }

// Independent oracle for monomial mixed modules with standard axes:
// [O x_lam e_i + O_coarse t^m e_j] with i != j.  Two same-order modules are
// homothetic iff the level difference matches the coarse part of the
// valuation difference; opposite orders are never homothetic.
struct MonomialModule {
    int axis; // O-part axis: 0 or 1
    LexVal lam;
    long m;

    BoundaryPoint build() const {
        FieldElem x = FieldElem::monomial(F2, lam);
        FieldElem y = T.pow(m);
        return BoundaryPoint(axis == 0 ? cols(x, ZERO, ZERO, y) : cols(ZERO, x, y, ZERO));
    }
};

bool oracle_eq(const MonomialModule& a, const MonomialModule& b) {
    if (a.axis != b.axis) return false;
    LexVal diff = b.lam - a.lam;
    return (b.m - a.m) == diff.coord(0).get_si();
}
} // namespace

TEST_CASE("boundary point equality matches the module oracle") {
    std::vector<MonomialModule> mods;
    for (int axis : {0, 1})
        for (long l1 = -1; l1 <= 1; ++l1)
            for (long l2 = -1; l2 <= 1; ++l2)
                for (long m = -1; m <= 1; ++m) mods.push_back({axis, LexVal({l1, l2}), m});
    for (const auto& a : mods)
        for (const auto& b : mods) {
            CAPTURE(a.axis);
            CAPTURE(b.axis);
            CHECK(boundary_eq(a.build(), b.build()) == oracle_eq(a, b));
        }
}

TEST_CASE("limits of ends") {
    End e = std_end();
    // lim-(E(e1,e2)) = [O e1 + O_coarse t e2], lim+ = [O_coarse e1 + O e2]
    CHECK(boundary_eq(lim(e, false), BoundaryPoint(cols(ONE, ZERO, ZERO, T))));
    CHECK(boundary_eq(lim(e, true), BoundaryPoint(cols(ZERO, ONE, ONE, ZERO))));
    CHECK_FALSE(boundary_eq(lim(e, true), lim(e, false)));

    // limits are invariant under the ray shift b2 -> u b2
    Sampler smp(F2, 21);
    for (int it = 0; it < 20; ++it) {
        Matrix b = smp.random_lattice(FINE, 2, 4, -2, 2).basis();
        End orig(b);
        Matrix shifted = b;
        shifted.scale_col(1, U);
        End shift_end(shifted);
        CHECK(boundary_eq(lim(orig, true), lim(shift_end, true)));
        CHECK(boundary_eq(lim(orig, false), lim(shift_end, false)));
        CHECK(end_eq(orig, shift_end));
        // scaling the whole basis is a homothety of every ray member
        Matrix scaled = b;
        scaled.scale_col(0, T);
        scaled.scale_col(1, T);
        CHECK(end_eq(orig, End(scaled)));
    }
}

TEST_CASE("end equality") {
    End e = std_end();
    CHECK(end_eq(e, e));
    End swapped(cols(ZERO, ONE, ONE, ZERO));
    CHECK_FALSE(end_eq(e, swapped));
}

TEST_CASE("gluing") {
    End e = std_end();
    End g = glue(e);
    CHECK(g.basis == cols(ZERO, T, ONE, ZERO));
    CHECK(boundary_eq(lim(e, false), lim(g, true)));
    CHECK(boundary_eq(lim(e, true), lim(g, false)));
    // glue lands in the fiber over pi(lim- E)
    CHECK(class_eq(end_base(g), LatticeClass(CC.coarse(), lim(e, false).basis)));
    // double glue returns the original end (a homothety shift of the ray)
    CHECK(end_eq(glue(g), e));

    Sampler smp(F2, 22);
    for (int it = 0; it < 20; ++it) {
        End r(smp.random_lattice(FINE, 2, 4, -2, 2).basis());
        End gr = glue(r);
        CHECK(boundary_eq(lim(r, false), lim(gr, true)));
        CHECK(boundary_eq(lim(r, true), lim(gr, false)));
        CHECK(end_eq(glue(gr), r));
    }
}

TEST_CASE("upsilon attaches the expected coarse edge") {
    End e = std_end();
    CoarseEdge edge = upsilon(e, true);
    LatticeClass base(CC.coarse(), Matrix::identity(F2, 2));
    LatticeClass next(CC.coarse(), cols(ONE, ZERO, ZERO, T));
    CHECK(class_eq(edge.from, base));
    CHECK(class_eq(edge.to, next));
    // the minus limit of the same end attaches the reversed edge
    CoarseEdge back = upsilon(e, false);
    CHECK(class_eq(back.from, next));
    CHECK(class_eq(back.to, base));
}

TEST_CASE("fiber neighbors over F_2") {
    LatticeClass center = psi_inv(FINE, ApartmentPoint::origin(2, 2));
    auto nbrs = fiber_neighbors(center, CC);
    REQUIRE(nbrs.size() == 3);
    // the expected classes from the index-u sublattice enumeration
    std::vector<Matrix> expect{cols(U, ZERO, ZERO, ONE), cols(ONE, ZERO, ZERO, U),
                               cols(ONE, ONE, ZERO, U)};
    for (const auto& m : expect) {
        LatticeClass cls(FINE, m);
        int hits = 0;
        for (const auto& nb : nbrs)
            if (class_eq(nb, cls)) ++hits;
        CHECK(hits == 1);
    }
    for (size_t i = 0; i < nbrs.size(); ++i) {
        CHECK(dist_max(center, nbrs[i]) == LexVal({0, 1}));
        for (size_t j = i + 1; j < nbrs.size(); ++j) CHECK_FALSE(class_eq(nbrs[i], nbrs[j]));
    }
    // adjacency is symmetric: a neighbor of a neighbor contains the center
    for (const auto& nb : nbrs) {
        auto back = fiber_neighbors(nb, CC);
        int hits = 0;
        for (const auto& b : back)
            if (class_eq(b, center)) ++hits;
        CHECK(hits == 1);
    }
    CHECK_THROWS_AS(fiber_neighbors(LatticeClass(FINE, Matrix::identity(F2, 3)), CC),
                    unsupported_error);
}

TEST_CASE("small fiber ball is a regular tree") {
    LatticeClass center = psi_inv(FINE, ApartmentPoint::origin(2, 2));
    FiberBall ball = fiber_ball(center, 2, CC);
    CHECK(ball.is_tree);
    // radius-2 ball: expanded 1+3+6 = 10 vertices, frontier 12
    int expanded = 0;
    for (const auto& v : ball.vertices)
        if (v.expanded) {
            ++expanded;
            CHECK(v.adj.size() == 3);
        }
    CHECK(expanded == 10);
    CHECK(ball.vertices.size() == 22);
}
