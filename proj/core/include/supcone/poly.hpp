#ifndef SUPCONE_POLY_HPP
#define SUPCONE_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "supcone/extreal.hpp"

namespace supcone {

/// A polynomial in one integer variable with exact rational coefficients,
/// stored low-to-high with no trailing zeros (the zero polynomial is the
/// empty coefficient list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT
    Poly(long constant) : coeffs_{Rational(constant)} { trim(); }   // NOLINT

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // Degree of the zero polynomial is 0 for our purposes (constant).
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rational constant_value() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(std::int64_t k) const;
    Rational eval(const Rational& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// The polynomial k -> p(k + delta).
    Poly shifted(std::int64_t delta) const;

    /// Limit as k -> +inf: the constant for constant polynomials, otherwise
    /// +/-inf by the sign of the leading coefficient.
    ExtReal limit() const;

    /// An index K >= floor from which sign(p(k)) is constant (all real roots
    /// lie strictly below K). Returns `floor` itself for constants.
    std::int64_t sign_threshold(std::int64_t floor = 0) const;

    /// The constant value of sign(p(k)) for large k: -1, 0 (zero poly), or 1.
    int eventual_sign() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace supcone

#endif  // SUPCONE_POLY_HPP
