#ifndef HBK_BOUNDARY_HPP
#define HBK_BOUNDARY_HPP

#include "hbk/projections.hpp"

namespace hbk {

// Boundary structure of the Z^2-tree of SL_2 (n = 2, d = 2, s = 1 fixed).
// An End is the ray ([O b1 + O u^n b2])_{n>=0}; a BoundaryPoint is the
// mixed module O b1 + O_coarse b2, both up to homothety.

struct End {
    Matrix basis; // columns b1, b2

    End(Matrix b);
    CoarseContext ctx() const;
};

struct BoundaryPoint {
    Matrix basis; // columns b1 (fine ring), b2 (coarse ring)

    BoundaryPoint(Matrix b);
    CoarseContext ctx() const;
};

// Shape guard shared by the boundary operations (n = 2, d = 2).
void check_boundary_shape(const Matrix& m);

// Mixed-module equality up to homothety, decided by the stabilizer
// conditions of O e1 + O_coarse e2 on the change-of-basis matrix and its
// inverse, with the scalar pinned by the coarse invariants.
bool boundary_eq(const BoundaryPoint& a, const BoundaryPoint& b);

// lim+ (basis (b2, b1)) and lim- (basis (b1, t b2)) of an end.
BoundaryPoint lim(const End& e, bool plus);

// The unique end glued to e: lim-(e) = lim+(glue(e)) and vice versa.
End glue(const End& e);

// Ends are equal iff their two limits agree.
bool end_eq(const End& a, const End& b);

// The coarse base point of the fiber tree containing the end.
LatticeClass end_base(const End& e);

// Oriented edge of the coarse tree attached to a boundary point / an end.
struct CoarseEdge {
    LatticeClass from;
    LatticeClass to;
};

CoarseEdge upsilon(const BoundaryPoint& p);
CoarseEdge upsilon(const End& e, bool plus);

bool coarse_edge_eq(const CoarseEdge& a, const CoarseEdge& b);

// The p+1 neighbors of a class inside its fiber tree, via the residue tree
// over F_p(u) and back.  unsupported_error unless n = 2, d = 2.
std::vector<LatticeClass> fiber_neighbors(const LatticeClass& lt, const CoarseContext& ctx);

// Breadth-first ball of the fiber tree.
struct FiberBall {
    struct Vertex {
        LatticeClass cls;
        int parent; // -1 for the center
        int depth;
        std::vector<int> adj;
        bool expanded;
    };
    std::vector<Vertex> vertices;
    bool is_tree;
};

FiberBall fiber_ball(const LatticeClass& center, int radius, const CoarseContext& ctx);

} // namespace hbk

#endif
