#ifndef HBK_FIELD_HPP
#define HBK_FIELD_HPP

#include <string>
#include <vector>

#include "hbk/lexval.hpp"

namespace hbk {

// Context of a tower field K_d = F_p(u_1)(u_2)...(u_d).  Level 0 is the
// prime field F_p.  The letter u_d is the coarsest uniformizer: the first
// coordinate of the valuation counts powers of u_d.  max_degree bounds the
// numerator/denominator degree of normalized elements (blowup guard).
struct FieldCtx {
    unsigned p = 2;
    int d = 2;
    int max_degree = 64;

    bool same_field(const FieldCtx& o) const { return p == o.p && d == o.d; }
    FieldCtx lower() const { return FieldCtx{p, d - 1, max_degree}; }
};

// An exact element of K_d, stored as a reduced fraction of polynomials in
// u_d whose coefficients live in K_{d-1}.  Canonical form: numerator and
// denominator coprime, denominator monic in u_d, coefficients recursively
// canonical.  Equality is syntactic on this form.  Values are immutable.
class FieldElem {
  public:
    FieldElem() = default; // zero of F_2, level 0; reassign before use

    static FieldElem zero(const FieldCtx& ctx);
    static FieldElem one(const FieldCtx& ctx);
    static FieldElem from_int(const FieldCtx& ctx, long v);
    // The letter u_k, 1 <= k <= ctx.d (u_1 finest, u_d coarsest).
    static FieldElem letter(const FieldCtx& ctx, int k);
    // x_lambda = prod u_i^{lambda_i} with val(x_lambda) = lambda exactly;
    // coordinate j of lambda (coarsest first) is the exponent of u_{d+1-j}.
    static FieldElem monomial(const FieldCtx& ctx, const LexVal& lambda);

    const FieldCtx& ctx() const { return ctx_; }
    int level() const { return ctx_.d; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const; // arithmetic_error on 0
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(long e) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // The valuation omega: K_d* -> Z^d (lexicographic), omega(0) = inf.
    LexVal val() const;

    // Reduction modulo the coarse maximal ideal: evaluate u_d = 0, landing
    // in K_{d-1}.  Requires the first valuation coordinate to be >= 0.
    FieldElem residue() const;
    // Iterated residue: evaluates the s coarsest letters at 0.
    FieldElem residue(int s) const;

    // The inclusion K_e -> K_d for e <= d (letters keep their names).
    FieldElem embed(const FieldCtx& target) const;

    std::string str() const;
    static FieldElem parse(const FieldCtx& ctx, const std::string& text);

  private:
    friend struct PolyOps;
    FieldCtx ctx_{2, 0, 64};
    unsigned scalar_ = 0;          // level-0 payload, 0 <= scalar_ < p
    std::vector<FieldElem> num_;   // level>=1: coefficients, ascending degree
    std::vector<FieldElem> den_;   // nonzero, monic, coprime to num_

    void normalize();
    void check_ctx(const FieldElem& o) const;
};

} // namespace hbk

#endif
