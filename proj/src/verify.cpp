#include "hbk/verify.hpp"

#include <sstream>

#include "hbk/boundary.hpp"
#include "hbk/sampling.hpp"

namespace hbk {

namespace {

struct Failure {
    std::string detail;
};

bool is_unitriangular(const Matrix& m, bool upper) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j && !m.at(i, j).is_one()) return false;
            bool must_vanish = upper ? i > j : i < j;
            if (must_vanish && i != j && !m.at(i, j).is_zero()) return false;
        }
    return true;
}

bool is_integral(const Matrix& m, const ValCtx& vc) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !vc.in_ring(m.at(i, j))) return false;
    return true;
}

// --------------------------------------------------------------- criterion 1

CriterionResult crit_valuation(const VerifyOptions& opts) {
    CriterionResult r{1, "valuation law val(t^a u^b) = (a,b); ultrametric + multiplicativity", false, ""};
    for (unsigned p : {2u, 3u}) {
        FieldCtx ctx{p, 2, opts.max_degree};
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b) {
                LexVal lam({a, b});
                FieldElem x = FieldElem::monomial(ctx, lam);
                if (x.val() != lam) {
                    r.detail = "monomial valuation failed at (" + std::to_string(a) + "," +
                               std::to_string(b) + "), p=" + std::to_string(p);
                    return r;
                }
                std::string text = "t^" + std::to_string(a) + "*u^" + std::to_string(b);
                FieldElem y = FieldElem::parse(ctx, text);
                if (y != x || y.val() != lam) {
                    r.detail = "parsed monomial disagreed at " + text;
                    return r;
                }
            }
        Sampler smp(ctx, opts.seed + p);
        for (int it = 0; it < 250; ++it) {
            FieldElem f = smp.random_fraction(3, 0, 3);
            FieldElem g = smp.random_fraction(3, 0, 3);
            if ((f.val().is_infinity()) != f.is_zero() || (g.val().is_infinity()) != g.is_zero()) {
                r.detail = "val infinite but element nonzero";
                return r;
            }
            if ((f * g).val() != f.val() + g.val()) {
                r.detail = "multiplicativity failed: f=" + f.str() + " g=" + g.str();
                return r;
            }
            LexVal m = f.val() < g.val() ? f.val() : g.val();
            if ((f + g).val() < m) {
                r.detail = "ultrametric failed: f=" + f.str() + " g=" + g.str();
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = "98 monomials exact (p=2,3); 500 random pairs";
    return r;
}

// --------------------------------------------------------------- criterion 2

CriterionResult crit_stabilizer(const VerifyOptions& opts) {
    CriterionResult r{2, "stabilizer of the base vertex is SL_3 of the ring", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 17);
    LatticeClass base = psi_inv(vc, ApartmentPoint::origin(3, 2));
    for (int it = 0; it < 200; ++it) {
        Matrix g = smp.random_sl_integral(3, 10);
        if (!class_eq(act(g, base), base)) {
            r.detail = "integral element moved the base vertex (iteration " + std::to_string(it) + ")";
            return r;
        }
    }
    for (int it = 0; it < 200; ++it) {
        Matrix h = Matrix::identity(ctx, 3);
        bool found = false;
        for (int attempt = 0; attempt < 100 && !found; ++attempt) {
            int i = static_cast<int>(smp.uniform(1, 3));
            int j = static_cast<int>(smp.uniform(1, 2));
            if (j >= i) ++j;
            FieldElem c = smp.random_with_val(smp.random_lexval(2, -3, -1));
            h = smp.random_sl_integral(3, 4) * root_elem(ctx, 3, i, j, c) * smp.random_sl_integral(3, 4);
            for (int a = 0; a < 3 && !found; ++a)
                for (int b = 0; b < 3 && !found; ++b)
                    if (!h.at(a, b).is_zero() && !vc.in_ring(h.at(a, b))) found = true;
        }
        if (!found) {
            r.detail = "sampler failed to produce a negative-valuation entry";
            return r;
        }
        if (class_eq(act(h, base), base)) {
            r.detail = "element with negative-valuation entry fixed the base vertex";
            return r;
        }
        if (is_in_parahoric(h, ApartmentPoint::origin(3, 2), vc)) {
            r.detail = "parahoric test disagreed with the class test";
            return r;
        }
    }
    r.pass = true;
    r.detail = "200 integral fix + 200 non-integral move, exact";
    return r;
}

// --------------------------------------------------------------- criterion 3

CriterionResult crit_metric(const VerifyOptions& opts) {
    CriterionResult r{3, "dist_max and dist_sum are G-set metrics (n = 2, 3)", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 29);
    for (int n : {2, 3}) {
        for (int it = 0; it < 250; ++it) {
            LatticeClass a = smp.random_lattice(vc, n, 4, -2, 2);
            LatticeClass b = smp.random_lattice(vc, n, 4, -2, 2);
            LatticeClass c = smp.random_lattice(vc, n, 4, -2, 2);
            auto rel_ab = rel_position(a, b);
            auto rel_ba = rel_position(b, a);
            auto rel_bc = rel_position(b, c);
            auto rel_ac = rel_position(a, c);
            LexVal dmax_ab = rel_ab.back(), dmax_bc = rel_bc.back(), dmax_ac = rel_ac.back();
            LexVal dsum_ab = root_gap_sum(rel_ab), dsum_bc = root_gap_sum(rel_bc),
                   dsum_ac = root_gap_sum(rel_ac);
            if (dmax_ab != rel_ba.back() || dsum_ab != root_gap_sum(rel_ba)) {
                r.detail = "distance asymmetric (n=" + std::to_string(n) + ")";
                return r;
            }
            if (dmax_ac > dmax_ab + dmax_bc || dsum_ac > dsum_ab + dsum_bc) {
                r.detail = "triangle inequality failed (n=" + std::to_string(n) + ", it=" +
                           std::to_string(it) + ")";
                return r;
            }
            bool eq = class_eq(a, b);
            if (eq != dmax_ab.is_zero() || eq != dsum_ab.is_zero()) {
                r.detail = "zero distance did not match class equality";
                return r;
            }
            // A homothetic representative must sit at distance zero.
            Matrix scaled = a.basis() * vc.monomial(smp.random_lexval(2, -1, 1));
            LatticeClass a2(vc, scaled);
            if (!dist_max(a, a2).is_zero() || !dist_sum(a, a2).is_zero()) {
                r.detail = "homothetic representative at positive distance";
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = "500 triples, symmetry + triangle + identity, exact";
    return r;
}

// --------------------------------------------------------------- criterion 4

CriterionResult crit_sll(const VerifyOptions& opts) {
    CriterionResult r{4, "projection pi: equivariance, residue/lift bijection, kernel acts trivially",
                      false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    CoarseContext cc(ctx, 1);
    ValCtx fine = cc.fine();
    ValCtx coarse = cc.coarse();
    Sampler smp(ctx, opts.seed + 43);
    // Equivariance on 200 samples (n = 2 and 3).
    for (int n : {2, 3}) {
        for (int it = 0; it < 100; ++it) {
            LatticeClass l = smp.random_lattice(fine, n, 4, -2, 2);
            Matrix g = smp.random_sl(n, 4, -2, 2);
            if (!class_eq(coarsen(act(g, l), cc), act(g, coarsen(l, cc)))) {
                r.detail = "coarsen not equivariant (n=" + std::to_string(n) + ")";
                return r;
            }
        }
    }
    Sampler res_smp(cc.residue_field(), opts.seed + 47);
    ValCtx res_vc = cc.residue();
    // residue_class(lift(R)) = R exactly on 100 samples.
    for (int it = 0; it < 100; ++it) {
        LatticeClass base = smp.random_lattice(coarse, 2, 3, -2, 2);
        LatticeClass rcls = res_smp.random_lattice(res_vc, 2, 3, -2, 2);
        LatticeClass lifted = lift(rcls, base, cc);
        if (!in_fiber(lifted, base, cc)) {
            r.detail = "lift left its fiber";
            return r;
        }
        if (!class_eq(residue_class(lifted, base, cc), rcls)) {
            r.detail = "residue(lift(R)) != R";
            return r;
        }
    }
    // lift(residue(Lt)) is the same fine class on 100 samples.
    for (int it = 0; it < 100; ++it) {
        LatticeClass lt = smp.random_lattice(fine, 2, 4, -2, 2);
        LatticeClass base = coarsen(lt, cc);
        LatticeClass back = lift(residue_class(lt, base, cc), base, cc);
        if (!class_eq(back, lt)) {
            r.detail = "lift(residue(Lt)) differs from Lt";
            return r;
        }
    }
    // Elements congruent to 1 mod the coarse maximal ideal fix fiber members.
    LatticeClass std_base = psi_inv(coarse, ApartmentPoint::origin(2, 1));
    for (int it = 0; it < 100; ++it) {
        LatticeClass rcls = res_smp.random_lattice(res_vc, 2, 3, -2, 2);
        LatticeClass lt = lift(rcls, std_base, cc);
        Matrix g = smp.random_sl_congruent_identity(2, 1, 5);
        if (!class_eq(act(g, lt), lt)) {
            r.detail = "kernel element moved a fiber member";
            return r;
        }
    }
    r.pass = true;
    r.detail = "200 equivariance + 100 section + 100 retraction + 100 kernel, exact";
    return r;
}

// ------------------------------------------------------- criteria 5 and 6

CriterionResult crit_iwasawa(const VerifyOptions& opts) {
    CriterionResult r{5, "Iwasawa decomposition: memberships + coset invariance", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 59);
    for (int n : {2, 3}) {
        for (int it = 0; it < 100; ++it) {
            Matrix g = smp.random_sl(n, 8, -3, 3);
            auto dec = iwasawa(g, vc);
            if (!is_unitriangular(dec.u, true) || !is_monomial_matrix(dec.m) ||
                !is_integral(dec.k, vc) || !dec.k.det().is_one()) {
                r.detail = "factor membership failed (n=" + std::to_string(n) + ")";
                return r;
            }
            if (dec.u * dec.m * dec.k != g) {
                r.detail = "factors do not multiply back (n=" + std::to_string(n) + ")";
                return r;
            }
            AffineWeylElem w = nu_action(dec.m, vc);
            for (int rerun = 0; rerun < 5; ++rerun) {
                std::mt19937_64 tie(opts.seed * 977 + static_cast<std::uint64_t>(it * 5 + rerun));
                auto dec2 = iwasawa(g, vc, true, &tie);
                if (dec2.u * dec2.m * dec2.k != g || nu_action(dec2.m, vc) != w) {
                    r.detail = "coset changed under shuffled tie-breaking";
                    return r;
                }
            }
        }
    }
    r.pass = true;
    r.detail = "200 samples x 5 shuffled reruns, exact";
    return r;
}

CriterionResult crit_bruhat(const VerifyOptions& opts) {
    CriterionResult r{6, "affine Bruhat decomposition: Iwahori factors + coset invariance", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 61);
    for (int n : {2, 3}) {
        for (int it = 0; it < 100; ++it) {
            Matrix g = smp.random_sl(n, 8, -3, 3);
            auto dec = bruhat(g, vc);
            if (!is_in_iwahori(dec.b1, vc) || !is_in_iwahori(dec.b2, vc) ||
                !is_monomial_matrix(dec.m)) {
                r.detail = "factor membership failed (n=" + std::to_string(n) + ")";
                return r;
            }
            if (dec.b1 * dec.m * dec.b2 != g) {
                r.detail = "factors do not multiply back (n=" + std::to_string(n) + ")";
                return r;
            }
            AffineWeylElem w = nu_action(dec.m, vc);
            for (int rerun = 0; rerun < 5; ++rerun) {
                std::mt19937_64 tie(opts.seed * 1009 + static_cast<std::uint64_t>(it * 5 + rerun));
                auto dec2 = bruhat(g, vc, &tie);
                if (dec2.b1 * dec2.m * dec2.b2 != g || nu_action(dec2.m, vc) != w) {
                    r.detail = "coset changed under shuffled tie-breaking";
                    return r;
                }
            }
        }
    }
    r.pass = true;
    r.detail = "200 samples x 5 shuffled reruns, exact";
    return r;
}

// --------------------------------------------------------------- criterion 7

CriterionResult crit_psi(const VerifyOptions& opts) {
    CriterionResult r{7, "psi is an isometry; nu is compatible with the lattice action", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 71);
    for (int n : {2, 3}) {
        for (int it = 0; it < 100; ++it) {
            ApartmentPoint x = smp.random_point(n, 2, -3, 3);
            ApartmentPoint y = smp.random_point(n, 2, -3, 3);
            if (dist_sum(psi_inv(vc, x), psi_inv(vc, y)) != apartment_dist(x, y)) {
                r.detail = "dist_sum differs from the apartment root-sum";
                return r;
            }
        }
        for (int it = 0; it < 50; ++it) {
            Matrix m = smp.random_monomial_sl(n, -3, 3);
            ApartmentPoint x = smp.random_point(n, 2, -3, 3);
            if (psi(act(m, psi_inv(vc, x))) != nu_action(m, vc).apply(x)) {
                r.detail = "psi(act(n, .)) != nu(n)(psi(.))";
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = "200 diagonal pairs + 100 monomial actions, exact";
    return r;
}

// --------------------------------------------------------------- criterion 8

CriterionResult crit_boundary(const VerifyOptions& opts) {
    CriterionResult r{8, "SL_2/Z^2 boundary: limits, gluing, two-to-one Upsilon", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx fine = ValCtx::fine(ctx);
    CoarseContext cc(ctx, 1);
    Sampler smp(ctx, opts.seed + 83);
    for (int it = 0; it < 50; ++it) {
        End e(smp.random_lattice(fine, 2, 5, -2, 2).basis());
        BoundaryPoint plus = lim(e, true);
        BoundaryPoint minus = lim(e, false);
        if (boundary_eq(plus, minus)) {
            r.detail = "lim+ equals lim- for a sampled end";
            return r;
        }
        End g = glue(e);
        if (!boundary_eq(minus, lim(g, true)) || !boundary_eq(plus, lim(g, false))) {
            r.detail = "glued end fails the limit equations";
            return r;
        }
        if (!class_eq(end_base(g), LatticeClass(cc.coarse(), minus.basis))) {
            r.detail = "glued end is not in the fiber of pi(lim- E)";
            return r;
        }
    }
    // Upsilon is two-to-one over the apartment edges ]n, n+1[, n in [-2,2].
    FieldElem t = FieldElem::letter(ctx, 2);
    auto side = [&](long m) {
        Matrix b = Matrix::identity(ctx, 2);
        b.at(1, 1) = t.pow(m);
        return LatticeClass(cc.coarse(), b);
    };
    struct Labeled {
        End e;
        long level;
        bool up;
    };
    std::vector<Labeled> ends;
    for (long m = -3; m <= 3; ++m) {
        Matrix up(ctx, 2, 2);
        up.at(0, 0) = FieldElem::one(ctx);
        up.at(1, 1) = t.pow(m);
        ends.push_back({End(up), m, true});
        Matrix down(ctx, 2, 2);
        down.at(1, 0) = t.pow(m);
        down.at(0, 1) = FieldElem::one(ctx);
        ends.push_back({End(down), m, false});
    }
    for (long n = -2; n <= 2; ++n) {
        LatticeClass a = side(n), b = side(n + 1);
        std::vector<const Labeled*> hits;
        for (const auto& le : ends) {
            CoarseEdge edge = upsilon(le.e, true);
            bool same = (class_eq(edge.from, a) && class_eq(edge.to, b)) ||
                        (class_eq(edge.from, b) && class_eq(edge.to, a));
            if (same) hits.push_back(&le);
        }
        if (hits.size() != 2) {
            r.detail = "edge ]" + std::to_string(n) + "," + std::to_string(n + 1) + "[ has " +
                       std::to_string(hits.size()) + " preimages";
            return r;
        }
        bool pattern = (hits[0]->up && hits[0]->level == n && !hits[1]->up && hits[1]->level == n + 1) ||
                       (hits[1]->up && hits[1]->level == n && !hits[0]->up && hits[0]->level == n + 1);
        if (!pattern) {
            r.detail = "preimages of ]n,n+1[ are not {(n,+inf),(n+1,-inf)}";
            return r;
        }
        if (boundary_eq(lim(hits[0]->e, true), lim(hits[1]->e, true))) {
            r.detail = "the two preimages coincide as boundary points";
            return r;
        }
    }
    r.pass = true;
    r.detail = "50 ends + gluing + two-to-one over 5 edges, exact";
    return r;
}

// --------------------------------------------------------------- criterion 9

CriterionResult crit_fiber_tree(const VerifyOptions& opts) {
    CriterionResult r{9, "fiber tree over F_2 is 3-regular and acyclic to radius 3", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    CoarseContext cc(ctx, 1);
    LatticeClass center = psi_inv(cc.fine(), ApartmentPoint::origin(2, 2));
    FiberBall ball = fiber_ball(center, 3, cc);
    if (!ball.is_tree) {
        r.detail = "ball contains a cycle or doubled edge";
        return r;
    }
    int expanded = 0;
    for (const auto& v : ball.vertices) {
        if (!v.expanded) continue;
        ++expanded;
        if (v.adj.size() != 3) {
            r.detail = "vertex with " + std::to_string(v.adj.size()) + " neighbors";
            return r;
        }
        for (size_t i = 0; i < v.adj.size(); ++i)
            for (size_t j = i + 1; j < v.adj.size(); ++j)
                if (v.adj[i] == v.adj[j]) {
                    r.detail = "repeated neighbor";
                    return r;
                }
    }
    if (expanded != 22 || ball.vertices.size() != 46) {
        r.detail = "unexpected ball size: " + std::to_string(ball.vertices.size()) + " vertices, " +
                   std::to_string(expanded) + " expanded";
        return r;
    }
    r.pass = true;
    r.detail = "22 interior vertices, 46 discovered, tree check exact";
    return r;
}

// -------------------------------------------------------------- criterion 10

CriterionResult crit_retraction(const VerifyOptions& opts) {
    CriterionResult r{10, "retraction onto the standard apartment does not increase dist_sum", false, ""};
    FieldCtx ctx{2, 2, opts.max_degree};
    ValCtx vc = ValCtx::fine(ctx);
    Sampler smp(ctx, opts.seed + 97);
    for (int n : {2, 3}) {
        for (int it = 0; it < 100; ++it) {
            LatticeClass a = smp.random_lattice(vc, n, 4, -2, 2);
            LatticeClass b = smp.random_lattice(vc, n, 4, -2, 2);
            ApartmentPoint ra = retract_to_apartment(a, true);
            ApartmentPoint rb = retract_to_apartment(b, true);
            LexVal lhs = apartment_dist(ra, rb);
            LexVal rhs = dist_sum(a, b);
            if (lhs > rhs) {
                std::ostringstream os;
                os << "counterexample: d(rho L, rho L') = " << lhs.str() << " > " << rhs.str()
                   << " = d(L, L'); L basis:\n"
                   << a.basis().str() << "L' basis:\n"
                   << b.basis().str();
                r.detail = os.str();
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = "200 sampled pairs, exact comparison";
    return r;
}

} // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    switch (id) {
        case 1: return crit_valuation(opts);
        case 2: return crit_stabilizer(opts);
        case 3: return crit_metric(opts);
        case 4: return crit_sll(opts);
        case 5: return crit_iwasawa(opts);
        case 6: return crit_bruhat(opts);
        case 7: return crit_psi(opts);
        case 8: return crit_boundary(opts);
        case 9: return crit_fiber_tree(opts);
        case 10: return crit_retraction(opts);
        default: throw index_error("criterion id out of range");
    }
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, const std::vector<int>& ids) {
    std::vector<int> todo = ids;
    if (todo.empty())
        for (int i = 1; i <= 10; ++i) todo.push_back(i);
    std::vector<CriterionResult> out;
    out.reserve(todo.size());
    for (int id : todo) out.push_back(run_criterion(id, opts));
    return out;
}

} // namespace hbk
