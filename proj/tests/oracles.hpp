// Test-only oracles, kept independent of the implementation paths they check.
#ifndef SUPCONE_TESTS_ORACLES_HPP
#define SUPCONE_TESTS_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "supcone/extreal.hpp"
#include "supcone/func.hpp"
#include "supcone/poly.hpp"
#include "supcone/stone.hpp"

namespace supcone::oracles {

/// Every canonical eventually-constant address with prefix length <= depth.
/// This family separates tree functions of any depth that occurs in the
/// suites and contains an interior point of every cell up to `depth`.
inline std::vector<BranchPoint> sample_points(std::size_t depth) {
    std::vector<BranchPoint> out;
    std::vector<std::string> words{""};
    std::size_t begin = 0;
    for (std::size_t l = 1; l <= depth; ++l) {
        std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i) {
            words.push_back(words[i] + "0");
            words.push_back(words[i] + "1");
        }
        begin = end;
    }
    for (const auto& w : words)
        for (char tail : {'0', '1'}) {
            if (!w.empty() && w.back() == tail) continue;
            out.emplace_back(w, tail);
        }
    return out;
}

/// First sampled point where the two functions disagree, if any.
inline std::optional<BranchPoint> pointwise_mismatch(const TreeFn& a, const TreeFn& b,
                                                     std::size_t depth) {
    for (const BranchPoint& p : sample_points(depth))
        if (!(eval_at(a, p) == eval_at(b, p))) return p;
    return std::nullopt;
}

/// Rung value of a pure ramp read off the unfolded subcell structure: the
/// value on [w] at a non-spine address is the polynomial at the length of the
/// leading direction run. Independent of the TreeFn evaluator.
inline std::optional<Rational> unfolded_ramp_value(bool dir, const Poly& rungs,
                                                   const std::string& cell_suffix) {
    char d = dir ? '1' : '0';
    std::size_t k = 0;
    while (k < cell_suffix.size() && cell_suffix[k] == d) ++k;
    if (k == cell_suffix.size()) return std::nullopt;  // still on the spine
    return rungs.eval(static_cast<std::int64_t>(k));
}

/// The branch value of an eventually-polynomial rung sequence, computed as
/// the exact order limit of its tail: past max(depth, all real roots of the
/// difference polynomial) the rungs are monotone, so the limit is the least
/// upper bound of the tail (the infimum over its constant majorants) when
/// they increase, and the greatest lower bound (supremum over constant
/// minorants) when they decrease. Avoids the leading-coefficient rule.
inline ExtReal branch_value_oracle(const Poly& rungs, std::int64_t depth = 12) {
    if (rungs.is_constant()) return ExtReal(rungs.constant_value());
    Poly delta = rungs.shifted(1) - rungs;
    std::int64_t start = delta.sign_threshold(depth);
    int step = delta.eval(start).sign();
    if (step == 0) return ExtReal(rungs.eval(start));  // constant tail
    if (step > 0) {
        // Strictly increasing tail of a polynomial: no finite constant
        // majorizes it. Witness that any finite candidate is overtaken.
        Rational candidate = rungs.eval(start) + 1;
        Poly gap = rungs - Poly(candidate);
        std::int64_t k = gap.sign_threshold(start);
        if (!(gap.eval(k) > 0)) throw std::logic_error("increasing tail stayed bounded");
        return ExtReal::pos_inf();
    }
    Rational candidate = rungs.eval(start) - 1;
    Poly gap = Poly(candidate) - rungs;
    std::int64_t k = gap.sign_threshold(start);
    if (!(gap.eval(k) > 0)) throw std::logic_error("decreasing tail stayed bounded");
    return ExtReal::neg_inf();
}

}  // namespace supcone::oracles

#endif  // SUPCONE_TESTS_ORACLES_HPP
