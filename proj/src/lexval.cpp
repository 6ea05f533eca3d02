#include "hbk/lexval.hpp"

#include <cctype>
#include <sstream>

namespace hbk {

LexVal::LexVal(std::vector<Int> coords)
    : dim_(static_cast<int>(coords.size())), infinite_(false), coords_(std::move(coords)) {}

LexVal::LexVal(std::initializer_list<long> coords) : infinite_(false) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
    dim_ = static_cast<int>(coords_.size());
}

LexVal LexVal::zero(int dim) {
    if (dim < 0) throw dimension_error("LexVal dimension must be >= 0");
    return LexVal(std::vector<Int>(dim, Int(0)));
}

LexVal LexVal::infinity(int dim) {
    if (dim < 0) throw dimension_error("LexVal dimension must be >= 0");
    return LexVal(dim, true);
}

const std::vector<Int>& LexVal::coords() const {
    if (infinite_) throw value_error("coordinates of infinity are undefined");
    return coords_;
}

const Int& LexVal::coord(int i) const {
    if (infinite_) throw value_error("coordinates of infinity are undefined");
    if (i < 0 || i >= dim_) throw index_error("LexVal coordinate index out of range");
    return coords_[static_cast<size_t>(i)];
}

void LexVal::check_dim(const LexVal& o) const {
    if (dim_ != o.dim_) throw dimension_error("mismatched value-group ranks");
}

bool LexVal::is_zero() const {
    if (infinite_) return false;
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool LexVal::is_nonneg() const {
    if (infinite_) return true;
    for (const auto& c : coords_) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return true;
}

bool LexVal::is_pos() const { return is_nonneg() && !is_zero(); }

LexVal LexVal::operator-() const {
    if (infinite_) throw value_error("cannot negate infinity");
    std::vector<Int> r(coords_);
    for (auto& c : r) c = -c;
    return LexVal(std::move(r));
}

LexVal LexVal::operator+(const LexVal& o) const {
    check_dim(o);
    if (infinite_ || o.infinite_) return infinity(dim_);
    std::vector<Int> r(coords_);
    for (int i = 0; i < dim_; ++i) r[static_cast<size_t>(i)] += o.coords_[static_cast<size_t>(i)];
    return LexVal(std::move(r));
}

LexVal LexVal::operator-(const LexVal& o) const {
    if (o.infinite_) throw value_error("cannot subtract infinity");
    return *this + (-o);
}

LexVal LexVal::scaled(long k) const {
    if (infinite_) throw value_error("cannot scale infinity");
    std::vector<Int> r(coords_);
    for (auto& c : r) c *= k;
    return LexVal(std::move(r));
}

LexVal LexVal::abs() const {
    if (infinite_) throw value_error("absolute value of infinity is undefined");
    return is_nonneg() ? *this : -*this;
}

LexVal LexVal::project(int s, bool strict) const {
    if (s < 1 || s > dim_) throw index_error("projection index out of range");
    int keep = strict ? s - 1 : s;
    if (infinite_) return infinity(keep);
    std::vector<Int> r(coords_.begin(), coords_.begin() + keep);
    return LexVal(std::move(r));
}

LexVal LexVal::tail(int k) const {
    if (k < 0 || k > dim_) throw index_error("tail length out of range");
    if (infinite_) return infinity(k);
    std::vector<Int> r(coords_.end() - k, coords_.end());
    return LexVal(std::move(r));
}

LexVal LexVal::concat(const LexVal& o) const {
    if (infinite_ || o.infinite_) return infinity(dim_ + o.dim_);
    std::vector<Int> r(coords_);
    r.insert(r.end(), o.coords_.begin(), o.coords_.end());
    return LexVal(std::move(r));
}

bool LexVal::operator==(const LexVal& o) const {
    check_dim(o);
    if (infinite_ != o.infinite_) return false;
    if (infinite_) return true;
    return coords_ == o.coords_;
}

int LexVal::cmp(const LexVal& o) const {
    check_dim(o);
    if (infinite_ && o.infinite_) return 0;
    if (infinite_) return 1;
    if (o.infinite_) return -1;
    for (int i = 0; i < dim_; ++i) {
        int c = ::cmp(coords_[static_cast<size_t>(i)], o.coords_[static_cast<size_t>(i)]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string LexVal::str() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim_; ++i) {
        if (i) os << ',';
        os << coords_[static_cast<size_t>(i)].get_str();
    }
    os << ')';
    return os.str();
}

LexVal LexVal::parse(const std::string& text, int expected_dim) {
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip();
    if (text.compare(pos, 3, "inf") == 0) {
        pos += 3;
        skip();
        if (pos != text.size()) throw parse_error("trailing characters after 'inf'");
        return infinity(expected_dim >= 0 ? expected_dim : 0);
    }
    if (pos >= text.size() || text[pos] != '(') throw parse_error("expected '(' in value tuple");
    ++pos;
    std::vector<Int> coords;
    while (true) {
        skip();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer in value tuple");
        coords.emplace_back(text.substr(start, pos - start));
        skip();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        if (pos < text.size() && text[pos] == ')') { ++pos; break; }
        throw parse_error("expected ',' or ')' in value tuple");
    }
    skip();
    if (pos != text.size()) throw parse_error("trailing characters after value tuple");
    LexVal v{std::move(coords)};
    if (expected_dim >= 0 && v.dim() != expected_dim)
        throw dimension_error("value tuple has rank " + std::to_string(v.dim()) +
                              ", expected " + std::to_string(expected_dim));
    return v;
}

std::string ordering_name(int cmp) {
    if (cmp < 0) return "LT";
    if (cmp > 0) return "GT";
    return "EQ";
}

} // namespace hbk
