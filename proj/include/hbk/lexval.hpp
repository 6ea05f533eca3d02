#ifndef HBK_LEXVAL_HPP
#define HBK_LEXVAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hbk/errors.hpp"

namespace hbk {

using Int = mpz_class;

// An element of the value group Z^d with the lexicographic order, or the
// distinguished value infinity.  Coordinates are arbitrary-precision
// integers; the coarsest coordinate comes first.  Values are immutable.
class LexVal {
  public:
    // Finite value with the given coordinates (dimension = coords.size()).
    explicit LexVal(std::vector<Int> coords);
    LexVal(std::initializer_list<long> coords);

    static LexVal zero(int dim);
    static LexVal infinity(int dim);

    bool is_infinity() const { return infinite_; }
    int dim() const { return dim_; }

    // Coordinates of a finite value; throws value_error on infinity.
    const std::vector<Int>& coords() const;
    const Int& coord(int i) const; // 0-based

    bool is_zero() const;
    bool is_nonneg() const; // >= 0; infinity counts as nonnegative
    bool is_pos() const;    // > 0

    LexVal operator-() const; // finite only
    LexVal operator+(const LexVal& o) const; // infinity absorbs
    LexVal operator-(const LexVal& o) const; // o must be finite
    LexVal scaled(long k) const;             // finite only
    LexVal abs() const;                      // finite only

    // First s coordinates ("<=s" mode) or first s-1 ("<s" mode), 1 <= s <= dim.
    LexVal project(int s, bool strict = false) const;
    // Last k coordinates (used when splitting off a coarse part).
    LexVal tail(int k) const;
    // Concatenation (this coarser, o finer).
    LexVal concat(const LexVal& o) const;

    bool operator==(const LexVal& o) const;
    bool operator!=(const LexVal& o) const { return !(*this == o); }
    bool operator<(const LexVal& o) const { return cmp(o) < 0; }
    bool operator<=(const LexVal& o) const { return cmp(o) <= 0; }
    bool operator>(const LexVal& o) const { return cmp(o) > 0; }
    bool operator>=(const LexVal& o) const { return cmp(o) >= 0; }

    // -1, 0, 1; infinity is the maximum.  Mismatched dimensions throw.
    int cmp(const LexVal& o) const;

    // Text form "(a1,a2,...,ad)" or "inf".
    std::string str() const;
    // Parses the text form; if expected_dim >= 0 the dimension is checked.
    static LexVal parse(const std::string& text, int expected_dim = -1);

  private:
    LexVal(int dim, bool infinite) : dim_(dim), infinite_(infinite) {}
    void check_dim(const LexVal& o) const;

    int dim_ = 0;
    bool infinite_ = false;
    std::vector<Int> coords_;
};

// Ordering result helper used by the CLI ("LT" | "EQ" | "GT").
std::string ordering_name(int cmp);

} // namespace hbk

#endif
