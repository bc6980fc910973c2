#include "supcone/extreal.hpp"

#include <cstddef>
#include <ostream>
#include <sstream>

namespace supcone {

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return ExtReal(a.value_ + b.value_);
    if (a.is_pos_inf() && b.is_neg_inf()) throw UndefinedSum("(+inf) + (-inf)");
    if (a.is_neg_inf() && b.is_pos_inf()) throw UndefinedSum("(-inf) + (+inf)");
    return a.is_infinite() ? a : b;
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return ExtReal(a.value_ * b.value_);
    int s = a.sign() * b.sign();
    if (s == 0) return ExtReal(0);  // 0 * inf = 0
    return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

ExtReal operator-(const ExtReal& a) {
    if (a.is_pos_inf()) return ExtReal::neg_inf();
    if (a.is_neg_inf()) return ExtReal::pos_inf();
    return ExtReal(-a.value_);
}

ExtReal xr_min(const ExtReal& a, const ExtReal& b) { return a <= b ? a : b; }
ExtReal xr_max(const ExtReal& a, const ExtReal& b) { return a >= b ? a : b; }
ExtReal xr_abs(const ExtReal& a) { return a.sign() < 0 ? -a : a; }

std::string ExtReal::str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return rational_str(value_);
}

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

Integer rational_floor(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

Integer rational_ceil(const Rational& q) { return -rational_floor(Rational(-q)); }

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t slash = text.find('/', pos);
    std::size_t num_end = slash == std::string::npos ? text.size() : slash;
    if (!all_digits(text, pos, num_end)) throw ParseError(pos, "digits");
    Integer num(text.substr(pos, num_end - pos));
    Integer den(1);
    if (slash != std::string::npos) {
        if (!all_digits(text, slash + 1, text.size()))
            throw ParseError(slash + 1, "digits");
        den = Integer(text.substr(slash + 1));
        if (den == 0) throw ParseError(slash + 1, "nonzero denominator");
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

ExtReal parse_extreal(const std::string& text) {
    if (text == "+inf") return ExtReal::pos_inf();
    if (text == "-inf") return ExtReal::neg_inf();
    return ExtReal(parse_rational(text));
}

}  // namespace supcone
