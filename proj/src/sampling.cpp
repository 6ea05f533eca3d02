#include "hbk/sampling.hpp"

namespace hbk {

long Sampler::uniform(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
}

LexVal Sampler::random_lexval(int dim, long lo, long hi) {
    std::vector<Int> c;
    c.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) c.emplace_back(uniform(lo, hi));
    return LexVal(std::move(c));
}

FieldElem Sampler::random_unit() {
    FieldElem u = FieldElem::from_int(ctx_, uniform(1, static_cast<long>(ctx_.p) - 1));
    if (coin()) {
        // add a strictly positive tail so the unit is not a constant
        LexVal tail = random_lexval(ctx_.d, 0, 2);
        if (!tail.is_pos()) tail = tail + LexVal::zero(ctx_.d - 1).concat(LexVal({1}));
        long c = uniform(1, static_cast<long>(ctx_.p) - 1);
        u = u + FieldElem::from_int(ctx_, c) * FieldElem::monomial(ctx_, tail);
    }
    return u;
}

FieldElem Sampler::random_with_val(const LexVal& v) {
    return FieldElem::monomial(ctx_, v) * random_unit();
}

FieldElem Sampler::random_elem(long lo, long hi, bool allow_zero) {
    if (allow_zero && uniform(0, 9) == 0) return FieldElem::zero(ctx_);
    return random_with_val(random_lexval(ctx_.d, lo, hi));
}

FieldElem Sampler::random_fraction(int max_terms, long deg_lo, long deg_hi) {
    auto random_poly = [&](bool nonzero) {
        FieldElem acc = FieldElem::zero(ctx_);
        int terms = static_cast<int>(uniform(nonzero ? 1 : 0, max_terms));
        for (int i = 0; i < terms; ++i) {
            long c = uniform(1, static_cast<long>(ctx_.p) - 1);
            acc = acc + FieldElem::from_int(ctx_, c) *
                            FieldElem::monomial(ctx_, random_lexval(ctx_.d, deg_lo, deg_hi));
        }
        if (nonzero && acc.is_zero()) acc = FieldElem::one(ctx_);
        return acc;
    };
    FieldElem num = random_poly(false);
    FieldElem den = random_poly(true);
    return num / den;
}

Matrix Sampler::random_sl(int n, int max_factors, long lo, long hi) {
    Matrix g = Matrix::identity(ctx_, n);
    int factors = static_cast<int>(uniform(1, max_factors));
    for (int f = 0; f < factors; ++f) {
        switch (uniform(0, 2)) {
            case 0: {
                int i = static_cast<int>(uniform(1, n));
                int j = static_cast<int>(uniform(1, n - 1));
                if (j >= i) ++j;
                g = g * root_elem(ctx_, n, i, j, random_elem(lo, hi, false));
                break;
            }
            case 1: {
                // torus element diag(m, m^-1) in a random pair of slots
                int i = static_cast<int>(uniform(0, n - 1));
                int j = static_cast<int>(uniform(0, n - 2));
                if (j >= i) ++j;
                FieldElem m = random_with_val(random_lexval(ctx_.d, lo, hi));
                Matrix d = Matrix::identity(ctx_, n);
                d.at(i, i) = m;
                d.at(j, j) = m.inv();
                g = g * d;
                break;
            }
            default: {
                int i = static_cast<int>(uniform(1, n));
                int j = static_cast<int>(uniform(1, n - 1));
                if (j >= i) ++j;
                g = g * weyl_elem(ctx_, n, i, j, random_with_val(random_lexval(ctx_.d, lo, hi)));
                break;
            }
        }
    }
    return g;
}

Matrix Sampler::random_sl_integral(int n, int max_factors, long hi) {
    Matrix g = Matrix::identity(ctx_, n);
    int factors = static_cast<int>(uniform(1, max_factors));
    for (int f = 0; f < factors; ++f) {
        switch (uniform(0, 2)) {
            case 0: {
                int i = static_cast<int>(uniform(1, n));
                int j = static_cast<int>(uniform(1, n - 1));
                if (j >= i) ++j;
                g = g * root_elem(ctx_, n, i, j, random_elem(0, hi, false));
                break;
            }
            case 1: {
                int i = static_cast<int>(uniform(0, n - 1));
                int j = static_cast<int>(uniform(0, n - 2));
                if (j >= i) ++j;
                FieldElem w = random_unit();
                Matrix d = Matrix::identity(ctx_, n);
                d.at(i, i) = w;
                d.at(j, j) = w.inv();
                g = g * d;
                break;
            }
            default: {
                int i = static_cast<int>(uniform(1, n));
                int j = static_cast<int>(uniform(1, n - 1));
                if (j >= i) ++j;
                g = g * weyl_elem(ctx_, n, i, j, random_unit());
                break;
            }
        }
    }
    return g;
}

Matrix Sampler::random_sl_congruent_identity(int n, int s, int max_factors, long hi) {
    // Generators congruent to the identity modulo the coarse maximal ideal:
    // root elements with coarse-positive parameters and torus pairs with
    // units of the form 1 + (coarse-positive).
    Matrix g = Matrix::identity(ctx_, n);
    int factors = static_cast<int>(uniform(1, max_factors));
    for (int f = 0; f < factors; ++f) {
        LexVal v = random_lexval(ctx_.d, 0, hi);
        {
            // force the coarse part to be strictly positive
            std::vector<Int> c = v.coords();
            if (c[0] < 1) c[0] = 1;
            for (int k = 1; k < s; ++k)
                if (c[static_cast<size_t>(k)] < 0) c[static_cast<size_t>(k)] = 0;
            v = LexVal(std::move(c));
        }
        if (coin()) {
            int i = static_cast<int>(uniform(1, n));
            int j = static_cast<int>(uniform(1, n - 1));
            if (j >= i) ++j;
            g = g * root_elem(ctx_, n, i, j, random_with_val(v));
        } else {
            int i = static_cast<int>(uniform(0, n - 1));
            int j = static_cast<int>(uniform(0, n - 2));
            if (j >= i) ++j;
            FieldElem w = FieldElem::one(ctx_) + random_with_val(v);
            Matrix d = Matrix::identity(ctx_, n);
            d.at(i, i) = w;
            d.at(j, j) = w.inv();
            g = g * d;
        }
    }
    return g;
}

Matrix Sampler::random_monomial_sl(int n, long lo, long hi) {
    // Random permutation.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(uniform(0, i));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    // Valuations summing to zero.
    std::vector<LexVal> vals;
    LexVal total = LexVal::zero(ctx_.d);
    for (int i = 0; i < n - 1; ++i) {
        LexVal v = random_lexval(ctx_.d, lo, hi);
        vals.push_back(v);
        total = total + v;
    }
    vals.push_back(-total);
    Matrix m(ctx_, n, n);
    for (int j = 0; j < n; ++j)
        m.at(perm[static_cast<size_t>(j)], j) = FieldElem::monomial(ctx_, vals[static_cast<size_t>(j)]);
    // Fix the sign so det = 1.
    if (!m.det().is_one()) {
        m.scale_col(0, FieldElem::from_int(ctx_, -1));
        if (!m.det().is_one()) throw arithmetic_error("monomial sampler sign fix failed");
    }
    return m;
}

ApartmentPoint Sampler::random_point(int n, int dim, long lo, long hi) {
    std::vector<LexVal> coords;
    coords.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) coords.push_back(random_lexval(dim, lo, hi));
    return ApartmentPoint(std::move(coords));
}

LatticeClass Sampler::random_lattice(const ValCtx& vc, int n, int max_factors, long lo, long hi) {
    Matrix g = random_sl(n, max_factors, lo, hi);
    LatticeClass base = psi_inv(vc, random_point(n, vc.s, lo, hi));
    return LatticeClass(vc, g * base.basis());
}

} // namespace hbk
