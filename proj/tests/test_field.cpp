#include <doctest.h>

#include "hbk/sampling.hpp"

using namespace hbk;

namespace {
const FieldCtx F2{2, 2, 64};
const FieldCtx F3{3, 2, 64};

FieldElem parse2(const std::string& s) { return FieldElem::parse(F2, s); }
} // namespace

TEST_CASE("basic arithmetic") {
    FieldElem t = FieldElem::letter(F2, 2);
    FieldElem u = FieldElem::letter(F2, 1);
    CHECK(t + u == parse2("t+u"));
    CHECK(t * t.inv() == FieldElem::one(F2));
    FieldElem w = FieldElem::one(F2) / (FieldElem::one(F2) + t);
    CHECK(w * (FieldElem::one(F2) + t) == FieldElem::one(F2));
    CHECK_THROWS_AS((void)(t / FieldElem::zero(F2)), arithmetic_error);
    CHECK_THROWS_AS((void)FieldElem::zero(F2).inv(), arithmetic_error);

    // characteristic
    CHECK((FieldElem::one(F2) + FieldElem::one(F2)).is_zero());
    CHECK((FieldElem::one(F3) + FieldElem::one(F3) + FieldElem::one(F3)).is_zero());
}

TEST_CASE("valuation of monomials and sums") {
    CHECK(parse2("t^2*u^-3").val() == LexVal({2, -3}));
    CHECK(FieldElem::zero(F2).val().is_infinity());
    // leading-term oracle: distinct monomial valuations compare lexicographically
    FieldElem t = FieldElem::letter(F2, 2);
    FieldElem u = FieldElem::letter(F2, 1);
    LexVal vt = t.val(), vu = u.val();
    CHECK(vt == LexVal({1, 0}));
    CHECK(vu == LexVal({0, 1}));
    CHECK((t + u).val() == (vt < vu ? vt : vu));
    CHECK((t + u).val() == LexVal({0, 1}));
    CHECK(parse2("t^2 + t*u + u^5").val() == LexVal({0, 5}));
    CHECK(parse2("t^2 + t*u").val() == LexVal({1, 1}));
    CHECK(parse2("(1+t)/(u+u^2)").val() == LexVal({0, -1}));
}

TEST_CASE("monomial section of the valuation") {
    CHECK(FieldElem::monomial(F2, LexVal({2, -1})) == parse2("t^2*u^-1"));
    CHECK(FieldElem::monomial(F2, LexVal({0, 0})).is_one());
    CHECK(FieldElem::monomial(F2, LexVal({0, 1})) == FieldElem::letter(F2, 1));
    CHECK_THROWS_AS(FieldElem::monomial(F2, LexVal::infinity(2)), value_error);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            LexVal lam({a, b});
            CHECK(FieldElem::monomial(F2, lam).val() == lam);
        }
    // multiplicativity of the section
    FieldCtx f3d{3, 3, 64};
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                LexVal lam({a, b, c});
                CHECK(FieldElem::monomial(f3d, lam).val() == lam);
            }
    LexVal x({1, -2}), y({-3, 1});
    CHECK(FieldElem::monomial(F2, x) * FieldElem::monomial(F2, y) ==
          FieldElem::monomial(F2, x + y));
}

TEST_CASE("residue modulo the coarse ideal") {
    CHECK(parse2("1+t").residue() == FieldElem::one(FieldCtx{2, 1, 64}));
    CHECK(parse2("u/(1+t)").residue() == FieldElem::letter(FieldCtx{2, 1, 64}, 1));
    CHECK(parse2("t").residue().is_zero());
    CHECK_THROWS_AS((void)parse2("t^-1").residue(), membership_error);
    CHECK_THROWS_AS((void)parse2("(1+u)/t").residue(), membership_error);

    // residue(f) is the constant term of the series: f - residue(f) has
    // strictly positive coarse valuation
    Sampler smp(F2, 2024);
    int checked = 0;
    for (int it = 0; it < 400 && checked < 120; ++it) {
        FieldElem f = smp.random_fraction(3, 0, 3);
        if (f.is_zero() || f.val().coord(0) < 0) continue;
        ++checked;
        FieldElem r = f.residue();
        FieldElem diff = f - r.embed(F2);
        if (!diff.is_zero()) CHECK(diff.val().coord(0) >= 1);
        CHECK((r.is_zero()) == (f.val().coord(0) > 0));
        // tail coordinates of the valuation survive when the lead is zero
        if (f.val().coord(0) == 0) CHECK(r.val() == f.val().tail(1));
    }
    CHECK(checked >= 120);

    // ring homomorphism on integral samples
    for (int it = 0; it < 200; ++it) {
        FieldElem f = smp.random_elem(0, 2);
        FieldElem g = smp.random_elem(0, 2);
        CHECK((f + g).residue() == f.residue() + g.residue());
        CHECK((f * g).residue() == f.residue() * g.residue());
    }
}

TEST_CASE("valuation axioms on random pairs") {
    Sampler smp(F3, 99);
    for (int it = 0; it < 200; ++it) {
        FieldElem f = smp.random_fraction(3, 0, 3);
        FieldElem g = smp.random_fraction(3, 0, 3);
        CHECK((f * g).val() == f.val() + g.val());
        LexVal m = f.val() < g.val() ? f.val() : g.val();
        CHECK((f + g).val() >= m);
        if (f.val() != g.val()) CHECK((f + g).val() == m);
        CHECK(f.is_zero() == f.val().is_infinity());
    }
}

TEST_CASE("print/parse round trip") {
    Sampler smp(F2, 5);
    for (int it = 0; it < 120; ++it) {
        FieldElem f = smp.random_fraction(4, 0, 4);
        CHECK(FieldElem::parse(F2, f.str()) == f);
    }
    Sampler smp3(FieldCtx{3, 3, 64}, 6);
    for (int it = 0; it < 60; ++it) {
        FieldElem f = smp3.random_fraction(3, 0, 2);
        CHECK(FieldElem::parse(FieldCtx{3, 3, 64}, f.str()) == f);
    }
    // operator precedence
    CHECK(parse2("1/(1+t)") * parse2("1+t") == FieldElem::one(F2));
    CHECK(parse2("1/u*t") == parse2("t/u"));
    CHECK(parse2("t^-1") == FieldElem::letter(F2, 2).inv());
    CHECK(parse2("-t") == -FieldElem::letter(F2, 2));
    CHECK_THROWS_AS(parse2("t+"), parse_error);
    CHECK_THROWS_AS(parse2("w"), parse_error);
    CHECK_THROWS_AS(parse2("u3"), parse_error);
}

TEST_CASE("degree guard") {
    CHECK_THROWS_AS(FieldElem::monomial(F2, LexVal({65, 0})), arithmetic_error);
    FieldElem big = FieldElem::letter(F2, 2).pow(60);
    CHECK_THROWS_AS((void)big.pow(3), arithmetic_error);
    FieldCtx wide{2, 2, 512};
    CHECK(FieldElem::monomial(wide, LexVal({65, 0})).val() == LexVal({65, 0}));
}

TEST_CASE("tower embedding") {
    FieldCtx k1{2, 1, 64};
    FieldElem u1 = FieldElem::letter(k1, 1);
    FieldElem lifted = u1.embed(F2);
    CHECK(lifted == FieldElem::letter(F2, 1));
    CHECK(lifted.val() == LexVal({0, 1}));
    CHECK(lifted.residue() == u1);
}
