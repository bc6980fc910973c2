#ifndef SUPCONE_EXTREAL_HPP
#define SUPCONE_EXTREAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "supcone/errors.hpp"

namespace supcone {

// Exact arbitrary-precision rational, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An exact extended rational: a rational together with -inf and +inf,
/// totally ordered as -inf < q < +inf. Addition is partial
/// ((+inf) + (-inf) throws UndefinedSum); multiplication is total with
/// the convention 0 * (+/-inf) = 0.
class ExtReal {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    ExtReal() : kind_(Kind::Finite), value_(0) {}
    ExtReal(const Rational& q) : kind_(Kind::Finite), value_(q) {}  // NOLINT: implicit by design
    ExtReal(long n) : kind_(Kind::Finite), value_(n) {}             // NOLINT
    ExtReal(int n) : kind_(Kind::Finite), value_(n) {}              // NOLINT

    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_infinite() const { return kind_ != Kind::Finite; }

    // Finite value; only meaningful when is_finite().
    const Rational& value() const { return value_; }

    int sign() const {
        if (kind_ == Kind::PosInf) return 1;
        if (kind_ == Kind::NegInf) return -1;
        return value_.sign();
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
        if (a.kind_ != b.kind_)
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ == b.value_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    // Partial: throws UndefinedSum on (+inf) + (-inf).
    friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
    // Total: 0 * inf = 0, sign rules otherwise.
    friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator-(const ExtReal& a);

    std::string str() const;

private:
    explicit ExtReal(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

ExtReal xr_min(const ExtReal& a, const ExtReal& b);
ExtReal xr_max(const ExtReal& a, const ExtReal& b);
ExtReal xr_abs(const ExtReal& a);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

// Parses the textual form: integers, fractions "p/q", "+inf", "-inf".
// Throws ParseError on anything else (including a zero denominator).
ExtReal parse_extreal(const std::string& text);
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& q);

Integer rational_ceil(const Rational& q);
Integer rational_floor(const Rational& q);

}  // namespace supcone

#endif  // SUPCONE_EXTREAL_HPP
