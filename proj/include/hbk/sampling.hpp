#ifndef HBK_SAMPLING_HPP
#define HBK_SAMPLING_HPP

#include <random>

#include "hbk/weyl.hpp"

namespace hbk {

// Seeded generators for the property tests and the acceptance suite.
// Deterministic for a fixed seed and build.
class Sampler {
  public:
    Sampler(const FieldCtx& ctx, std::uint64_t seed) : ctx_(ctx), rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    const FieldCtx& ctx() const { return ctx_; }

    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    LexVal random_lexval(int dim, long lo, long hi);

    // A unit of the ring of integers: nonzero constant plus an optional
    // positive-valuation tail.
    FieldElem random_unit();
    // monomial(v) times a random unit.
    FieldElem random_with_val(const LexVal& v);
    // Valuation in the box [lo,hi]^d, or zero with small probability.
    FieldElem random_elem(long lo, long hi, bool allow_zero = true);
    // A nonzero ratio of small random polynomials (denser than random_elem).
    FieldElem random_fraction(int max_terms, long deg_lo, long deg_hi);

    // Product of <= max_factors random generators (root elements, torus
    // monomials, Weyl elements) with valuations in [lo, hi].
    Matrix random_sl(int n, int max_factors, long lo, long hi);
    // Same with integral parameters only: lands in SL_n(O).
    Matrix random_sl_integral(int n, int max_factors, long hi = 3);
    // SL_n element congruent to the identity modulo the coarse maximal ideal.
    Matrix random_sl_congruent_identity(int n, int s, int max_factors, long hi = 3);
    // Monomial matrix with determinant 1 and valuations in [lo, hi].
    Matrix random_monomial_sl(int n, long lo, long hi);

    ApartmentPoint random_point(int n, int dim, long lo, long hi);
    LatticeClass random_lattice(const ValCtx& vc, int n, int max_factors, long lo, long hi);

  private:
    FieldCtx ctx_;
    std::mt19937_64 rng_;
};

} // namespace hbk

#endif
