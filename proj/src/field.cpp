#include "hbk/field.hpp"

#include <cctype>
#include <sstream>

namespace hbk {

namespace {

unsigned mod_add(unsigned a, unsigned b, unsigned p) { return (a + b) % p; }
unsigned mod_sub(unsigned a, unsigned b, unsigned p) { return (a + p - b % p) % p; }
unsigned mod_mul(unsigned a, unsigned b, unsigned p) {
    return static_cast<unsigned>((static_cast<unsigned long long>(a) * b) % p);
}

unsigned mod_inv(unsigned a, unsigned p) {
    if (a % p == 0) throw arithmetic_error("division by zero in F_p");
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<unsigned>(t);
}

} // namespace

// Internal (unguarded) element arithmetic and polynomial helpers.  The
// degree guard applies to operands of the public operators only; the
// remainder sequences inside normalization run through these freely.
struct PolyOps {
    using Poly = std::vector<FieldElem>;

    static FieldElem make_zero(const FieldCtx& ctx) {
        FieldElem e;
        e.ctx_ = ctx;
        if (ctx.d > 0) e.den_.push_back(make_one(ctx.lower()));
        return e;
    }

    static FieldElem make_one(const FieldCtx& ctx) {
        FieldElem e;
        e.ctx_ = ctx;
        if (ctx.d == 0) {
            e.scalar_ = 1 % ctx.p;
        } else {
            e.num_.push_back(make_one(ctx.lower()));
            e.den_.push_back(make_one(ctx.lower()));
        }
        return e;
    }

    static FieldElem make_rational(const FieldCtx& ctx, Poly num, Poly den) {
        FieldElem e;
        e.ctx_ = ctx;
        e.num_ = std::move(num);
        e.den_ = std::move(den);
        e.normalize();
        return e;
    }

    static void trim(Poly& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    }

    static Poly padd(const Poly& a, const Poly& b) {
        Poly r(std::max(a.size(), b.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.size() && i < b.size()) r[i] = add(a[i], b[i]);
            else if (i < a.size()) r[i] = a[i];
            else r[i] = b[i];
        }
        trim(r);
        return r;
    }

    static Poly pneg(const Poly& a) {
        Poly r(a);
        for (auto& c : r) c = neg(c);
        return r;
    }

    static Poly psub(const Poly& a, const Poly& b) { return padd(a, pneg(b)); }

    static Poly pmul(const FieldCtx& coeff_ctx, const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, make_zero(coeff_ctx));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] = add(r[i + j], mul(a[i], b[j]));
            }
        }
        trim(r);
        return r;
    }

    static Poly pmul_scalar(const Poly& a, const FieldElem& c) {
        Poly r(a);
        for (auto& x : r) x = mul(x, c);
        trim(r);
        return r;
    }

    static void pdivmod(const FieldCtx& coeff_ctx, Poly a, const Poly& b, Poly& q, Poly& r) {
        q.clear();
        trim(a);
        if (b.empty()) throw arithmetic_error("polynomial division by zero");
        FieldElem lc_inv = inv(b.back());
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, make_zero(coeff_ctx));
        while (a.size() >= b.size()) {
            size_t shift = a.size() - b.size();
            FieldElem f = mul(a.back(), lc_inv);
            q[shift] = f;
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = sub(a[shift + i], mul(f, b[i]));
            trim(a); // the leading coefficient cancels exactly
        }
        trim(q);
        r = std::move(a);
    }

    static Poly pmonic(const Poly& a) {
        if (a.empty() || a.back().is_one()) return a;
        return pmul_scalar(a, inv(a.back()));
    }

    static Poly pgcd(const FieldCtx& coeff_ctx, Poly a, Poly b) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly q, r;
            pdivmod(coeff_ctx, a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return pmonic(a);
    }

    static FieldElem add(const FieldElem& a, const FieldElem& b) {
        if (a.ctx_.d == 0) {
            FieldElem r = a;
            r.scalar_ = mod_add(a.scalar_, b.scalar_, a.ctx_.p);
            return r;
        }
        const FieldCtx lo = a.ctx_.lower();
        return make_rational(a.ctx_,
                             padd(pmul(lo, a.num_, b.den_), pmul(lo, b.num_, a.den_)),
                             pmul(lo, a.den_, b.den_));
    }

    static FieldElem sub(const FieldElem& a, const FieldElem& b) { return add(a, neg(b)); }

    static FieldElem neg(const FieldElem& a) {
        FieldElem r = a;
        if (a.ctx_.d == 0) r.scalar_ = mod_sub(0, a.scalar_, a.ctx_.p);
        else r.num_ = pneg(a.num_);
        return r;
    }

    static FieldElem mul(const FieldElem& a, const FieldElem& b) {
        if (a.ctx_.d == 0) {
            FieldElem r = a;
            r.scalar_ = mod_mul(a.scalar_, b.scalar_, a.ctx_.p);
            return r;
        }
        const FieldCtx lo = a.ctx_.lower();
        return make_rational(a.ctx_, pmul(lo, a.num_, b.num_), pmul(lo, a.den_, b.den_));
    }

    static FieldElem inv(const FieldElem& a) {
        if (a.is_zero()) throw arithmetic_error("division by zero");
        if (a.ctx_.d == 0) {
            FieldElem r = a;
            r.scalar_ = mod_inv(a.scalar_, a.ctx_.p);
            return r;
        }
        return make_rational(a.ctx_, a.den_, a.num_);
    }

    static FieldElem div(const FieldElem& a, const FieldElem& b) { return mul(a, inv(b)); }

    static void guard(const FieldElem& a) {
        if (a.ctx_.d == 0) return;
        int bound = a.ctx_.max_degree;
        if (static_cast<int>(a.num_.size()) - 1 > bound ||
            static_cast<int>(a.den_.size()) - 1 > bound)
            throw arithmetic_error("degree guard exceeded (bound " + std::to_string(bound) + ")");
    }

    static unsigned scalar(const FieldElem& e) { return e.scalar_; }
    static const Poly& num(const FieldElem& e) { return e.num_; }
    static const Poly& den(const FieldElem& e) { return e.den_; }
};

using P = PolyOps;

void FieldElem::normalize() {
    if (ctx_.d == 0) {
        scalar_ %= ctx_.p;
        return;
    }
    P::trim(num_);
    P::trim(den_);
    if (den_.empty()) throw arithmetic_error("division by zero");
    if (num_.empty()) {
        den_.clear();
        den_.push_back(P::make_one(ctx_.lower()));
        return;
    }
    const FieldCtx lo = ctx_.lower();
    // Single-term denominator c*x^k: the gcd is x^min(ord num, k), so the
    // reduction is a shift plus a scalar division.
    size_t den_ord = 0;
    while (den_[den_ord].is_zero()) ++den_ord;
    if (den_ord + 1 == den_.size()) {
        size_t num_ord = 0;
        while (num_[num_ord].is_zero()) ++num_ord;
        size_t shift = std::min(num_ord, den_ord);
        if (shift > 0) {
            num_.erase(num_.begin(), num_.begin() + static_cast<long>(shift));
            den_.erase(den_.begin(), den_.begin() + static_cast<long>(shift));
        }
        if (!den_.back().is_one()) {
            FieldElem lc_inv = P::inv(den_.back());
            num_ = P::pmul_scalar(num_, lc_inv);
            den_ = P::pmul_scalar(den_, lc_inv);
        }
        return;
    }
    auto g = P::pgcd(lo, num_, den_);
    if (g.size() > 1 || !g[0].is_one()) {
        std::vector<FieldElem> q, r;
        P::pdivmod(lo, num_, g, q, r);
        num_ = q;
        P::pdivmod(lo, den_, g, q, r);
        den_ = q;
    }
    if (!den_.back().is_one()) {
        FieldElem lc_inv = P::inv(den_.back());
        num_ = P::pmul_scalar(num_, lc_inv);
        den_ = P::pmul_scalar(den_, lc_inv);
    }
}

void FieldElem::check_ctx(const FieldElem& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw dimension_error("field elements from different tower contexts");
}

FieldElem FieldElem::zero(const FieldCtx& ctx) { return P::make_zero(ctx); }
FieldElem FieldElem::one(const FieldCtx& ctx) { return P::make_one(ctx); }

FieldElem FieldElem::from_int(const FieldCtx& ctx, long v) {
    long m = v % static_cast<long>(ctx.p);
    if (m < 0) m += ctx.p;
    if (ctx.d == 0) {
        FieldElem r = P::make_zero(ctx);
        r.scalar_ = static_cast<unsigned>(m);
        return r;
    }
    if (m == 0) return P::make_zero(ctx);
    FieldElem r = P::make_zero(ctx);
    r.num_.push_back(from_int(ctx.lower(), m));
    return r;
}

FieldElem FieldElem::letter(const FieldCtx& ctx, int k) {
    if (k < 1 || k > ctx.d) throw index_error("letter index out of range for this tower");
    if (k == ctx.d) {
        FieldElem r = P::make_zero(ctx);
        r.num_.push_back(P::make_zero(ctx.lower()));
        r.num_.push_back(P::make_one(ctx.lower()));
        return r;
    }
    return letter(ctx.lower(), k).embed(ctx);
}

FieldElem FieldElem::monomial(const FieldCtx& ctx, const LexVal& lambda) {
    if (lambda.is_infinity()) throw value_error("monomial of infinity is undefined");
    if (lambda.dim() != ctx.d) throw dimension_error("monomial exponent rank does not match tower rank");
    if (ctx.d == 0) return one(ctx);
    const Int& e = lambda.coord(0); // exponent of the coarsest letter u_d
    if (!e.fits_slong_p()) throw arithmetic_error("monomial exponent too large");
    long el = e.get_si();
    long mag = el < 0 ? -el : el;
    if (mag > ctx.max_degree) throw arithmetic_error("degree guard exceeded by monomial exponent");
    FieldElem rest = monomial(ctx.lower(), lambda.tail(ctx.d - 1)).embed(ctx);
    if (el == 0) return rest;
    std::vector<FieldElem> mono(static_cast<size_t>(mag) + 1, P::make_zero(ctx.lower()));
    mono.back() = P::make_one(ctx.lower());
    FieldElem pw;
    pw.ctx_ = ctx;
    if (el > 0) {
        pw.num_ = std::move(mono);
        pw.den_ = {P::make_one(ctx.lower())};
    } else {
        pw.num_ = {P::make_one(ctx.lower())};
        pw.den_ = std::move(mono);
    }
    return P::mul(pw, rest);
}

bool FieldElem::is_zero() const {
    if (ctx_.d == 0) return scalar_ % ctx_.p == 0;
    return num_.empty();
}

bool FieldElem::is_one() const {
    if (ctx_.d == 0) return scalar_ % ctx_.p == 1 % ctx_.p;
    return num_.size() == 1 && den_.size() == 1 && num_[0].is_one() && den_[0].is_one();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_ctx(o);
    P::guard(*this);
    P::guard(o);
    return P::add(*this, o);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_ctx(o);
    P::guard(*this);
    P::guard(o);
    return P::sub(*this, o);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_ctx(o);
    P::guard(*this);
    P::guard(o);
    return P::mul(*this, o);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_ctx(o);
    P::guard(*this);
    P::guard(o);
    return P::div(*this, o);
}

FieldElem FieldElem::operator-() const { return P::neg(*this); }

FieldElem FieldElem::inv() const {
    P::guard(*this);
    return P::inv(*this);
}

FieldElem FieldElem::pow(long e) const {
    P::guard(*this);
    if (e == 0) return one(ctx_);
    FieldElem base = e < 0 ? P::inv(*this) : *this;
    unsigned long k;
    if (e < 0) k = static_cast<unsigned long>(-(e + 1)) + 1ul;
    else k = static_cast<unsigned long>(e);
    FieldElem acc = one(ctx_);
    while (k) {
        if (k & 1ul) acc = P::mul(acc, base);
        base = P::mul(base, base);
        k >>= 1;
    }
    P::guard(acc);
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_ctx(o);
    if (ctx_.d == 0) return scalar_ % ctx_.p == o.scalar_ % o.ctx_.p;
    if (num_.size() != o.num_.size() || den_.size() != o.den_.size()) return false;
    for (size_t i = 0; i < num_.size(); ++i)
        if (!(num_[i] == o.num_[i])) return false;
    for (size_t i = 0; i < den_.size(); ++i)
        if (!(den_[i] == o.den_[i])) return false;
    return true;
}

LexVal FieldElem::val() const {
    if (is_zero()) return LexVal::infinity(ctx_.d);
    if (ctx_.d == 0) return LexVal::zero(0);
    size_t a = 0;
    while (num_[a].is_zero()) ++a;
    size_t b = 0;
    while (den_[b].is_zero()) ++b;
    std::vector<Int> head{Int(static_cast<long>(a) - static_cast<long>(b))};
    return LexVal(std::move(head)).concat(num_[a].val() - den_[b].val());
}

FieldElem FieldElem::residue() const {
    if (ctx_.d == 0) throw unsupported_error("residue is undefined at tower level 0");
    const FieldCtx lo = ctx_.lower();
    if (is_zero()) return P::make_zero(lo);
    if (den_[0].is_zero())
        throw membership_error("element is not in the coarse valuation ring");
    if (num_[0].is_zero()) return P::make_zero(lo);
    return P::div(num_[0], den_[0]);
}

FieldElem FieldElem::residue(int s) const {
    if (s < 0 || s > ctx_.d) throw index_error("residue depth out of range");
    FieldElem r = *this;
    for (int i = 0; i < s; ++i) r = r.residue();
    return r;
}

FieldElem FieldElem::embed(const FieldCtx& target) const {
    if (target.p != ctx_.p) throw dimension_error("embedding into a tower over a different prime");
    if (target.d < ctx_.d) throw dimension_error("cannot embed into a lower tower");
    FieldElem r = *this;
    r.ctx_.max_degree = target.max_degree;
    while (r.ctx_.d < target.d) {
        FieldElem up;
        up.ctx_ = r.ctx_;
        up.ctx_.d += 1;
        if (!r.is_zero()) up.num_ = {r};
        up.den_ = {P::make_one(r.ctx_)};
        r = std::move(up);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Parsing and printing.

namespace {

struct ElemParser {
    const FieldCtx& ctx;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    long parse_int_exponent() {
        skip();
        bool negative = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            negative = s[pos] == '-';
            ++pos;
        }
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw parse_error("exponent too large");
            ++pos;
        }
        return negative ? -v : v;
    }

    FieldElem parse_expr() {
        FieldElem acc = parse_term();
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    FieldElem parse_term() {
        FieldElem acc = parse_factor();
        while (true) {
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) acc = acc / parse_factor();
            else return acc;
        }
    }

    FieldElem parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        FieldElem a = parse_atom();
        if (eat('^')) return a.pow(parse_int_exponent());
        return a;
    }

    FieldElem parse_atom() {
        skip();
        if (pos >= s.size()) throw parse_error("unexpected end of element expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElem e = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = (v * 10 + static_cast<unsigned long>(s[pos] - '0')) % ctx.p;
                ++pos;
            }
            return FieldElem::from_int(ctx, static_cast<long>(v));
        }
        if (c == 'u' || c == 't') {
            ++pos;
            if (ctx.d < 1) throw parse_error("letters are not available at tower level 0");
            if (c == 't') return FieldElem::letter(ctx, ctx.d);
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                int k = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    k = k * 10 + (s[pos] - '0');
                    if (k > 100) throw parse_error("letter index too large");
                    ++pos;
                }
                if (k < 1 || k > ctx.d) throw parse_error("letter index out of range");
                return FieldElem::letter(ctx, k);
            }
            return FieldElem::letter(ctx, 1);
        }
        throw parse_error(std::string("unexpected character '") + c + "' in element expression");
    }
};

// Letter naming relative to the ambient tower rank: a rank-2 tower prints
// u_1 as "u" and u_2 as "t"; a rank-1 tower prints its letter as "u"
// (residue fields of 2-local fields are u-series); higher ranks use u1..ud.
std::string letter_name(int level, int ambient) {
    if (ambient == 1) return "u";
    if (ambient == 2) return level == 2 ? "t" : "u";
    return "u" + std::to_string(level);
}

bool has_toplevel(const std::string& s, const char* chars) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0) {
            for (const char* q = chars; *q; ++q)
                if (c == *q) return true;
        }
    }
    return false;
}

std::string print_elem(const FieldElem& e, int ambient);

std::string term_str(const FieldElem& coeff, int k, const std::string& var, int ambient) {
    std::string cs = print_elem(coeff, ambient);
    if (k == 0) {
        if (has_toplevel(cs, "+")) return "(" + cs + ")";
        return cs;
    }
    std::string power = k == 1 ? var : var + "^" + std::to_string(k);
    if (coeff.is_one()) return power;
    if (has_toplevel(cs, "+")) cs = "(" + cs + ")";
    return cs + "*" + power;
}

std::string poly_str(const std::vector<FieldElem>& poly, int level, int ambient) {
    std::string var = letter_name(level, ambient);
    std::string out;
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) {
        if (poly[static_cast<size_t>(k)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term_str(poly[static_cast<size_t>(k)], k, var, ambient);
    }
    return out.empty() ? "0" : out;
}

std::string print_elem(const FieldElem& e, int ambient) {
    if (e.level() == 0) return std::to_string(P::scalar(e) % e.ctx().p);
    const auto& num = P::num(e);
    const auto& den = P::den(e);
    if (num.empty()) return "0";
    std::string ns = poly_str(num, e.level(), ambient);
    bool den_is_one = den.size() == 1 && den[0].is_one();
    if (den_is_one) return ns;
    std::string ds = poly_str(den, e.level(), ambient);
    if (has_toplevel(ns, "+")) ns = "(" + ns + ")";
    if (has_toplevel(ds, "+*/")) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace

FieldElem FieldElem::parse(const FieldCtx& ctx, const std::string& text) {
    ElemParser p{ctx, text};
    FieldElem e = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) throw parse_error("trailing characters in element expression");
    return e;
}

std::string FieldElem::str() const { return print_elem(*this, ctx_.d); }

} // namespace hbk
