#include "supcone/poly.hpp"

#include <algorithm>

namespace supcone {

Rational Poly::eval(std::int64_t k) const { return eval(Rational(k)); }

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
    std::vector<Rational> r(p.coeffs_);
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Poly Poly::shifted(std::int64_t delta) const {
    if (coeffs_.size() <= 1 || delta == 0) return *this;
    // Taylor shift: repeated synthetic division by (k - delta).
    std::vector<Rational> c(coeffs_);
    Rational t(delta);
    std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j-- > i;) c[j] += t * c[j + 1];
    return Poly(std::move(c));
}

ExtReal Poly::limit() const {
    if (is_constant()) return ExtReal(constant_value());
    return leading() > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

std::int64_t Poly::sign_threshold(std::int64_t floor) const {
    if (is_constant()) return floor;
    // Cauchy bound: every real root x satisfies |x| <= 1 + max |a_i| / |a_n|.
    Rational lead = boost::multiprecision::abs(leading());
    Rational maxratio(0);
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        Rational r = boost::multiprecision::abs(coeffs_[i]) / lead;
        if (r > maxratio) maxratio = r;
    }
    Rational bound = 1 + maxratio;
    Integer k = numerator(bound) / denominator(bound) + 1;
    std::int64_t kk = k.convert_to<std::int64_t>();
    return std::max(kk, floor);
}

int Poly::eventual_sign() const {
    if (is_zero()) return 0;
    if (is_constant()) return constant_value().sign();
    return leading().sign();
}

}  // namespace supcone
