#ifndef SUPCONE_ISO_HPP
#define SUPCONE_ISO_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "supcone/func.hpp"
#include "supcone/supcomp.hpp"

namespace supcone {

/// A locally constant function given by one value per depth-d cell; the
/// second, "flat" encoding of the same completion. values are indexed by the
/// cell word read as a binary number (word bits high to low).
struct FlatFn {
    std::size_t depth = 0;
    std::vector<ExtReal> values{ExtReal(0)};

    friend bool operator==(const FlatFn&, const FlatFn&) = default;
};

/// The canonical bijection between the two encodings. Tree-to-flat is only
/// defined on ramp-free trees of depth at most `depth`.
struct JMap {
    enum class Direction { FlatToTree, TreeToFlat };
    Direction direction = Direction::FlatToTree;
    std::size_t depth = 0;  // target depth for TreeToFlat
};

/// Same-depth re-expression onto a finer grid.
FlatFn flat_refine(const FlatFn& u, std::size_t depth);
FlatFn flat_add(const FlatFn& a, const FlatFn& b);
FlatFn flat_scalar(const Rational& lambda, const FlatFn& a);
bool flat_le(const FlatFn& a, const FlatFn& b);

TreeFn j_transport(const FlatFn& u);
/// Throws NotRepresentable when u has a ramp leaf or exceeds the depth.
FlatFn j_inverse(const TreeFn& u, std::size_t depth);

struct JFormulaCheck {
    bool ok = false;
    std::optional<Cell> separating_cell;
};

/// Checks that the defining supremum formula for the transport map holds on
/// a budgeted family of X elements below u: finite cells must be reached
/// exactly and +inf cells must keep climbing with the budget.
JFormulaCheck j_formula_check(const FlatFn& u, ModelX model, long budget);

}  // namespace supcone

#endif  // SUPCONE_ISO_HPP
