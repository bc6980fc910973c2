#ifndef SUPCONE_FUNC_HPP
#define SUPCONE_FUNC_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "supcone/extreal.hpp"
#include "supcone/poly.hpp"
#include "supcone/stone.hpp"

namespace supcone {

/// A ramp leaf on cell [w]: rung k (the subcell [w b^k (1-b)], b = dir) has
/// the value poly(k), and the branch point w(b)^w carries `limit`. Canonical
/// trees only keep ramps whose polynomial has degree >= 1 (an eventually
/// constant value sequence is an ordinary finite subtree); the limit is then
/// +/-inf and must match the polynomial. `limit` is unset on partial trees
/// that have not been run through extend_from_dense yet.
struct RampLeaf {
    bool dir = true;
    Poly poly;
    std::optional<ExtReal> limit;

    char dir_char() const { return dir ? '1' : '0'; }
    friend bool operator==(const RampLeaf&, const RampLeaf&) = default;
};

/// Constant-on-the-cell, or a ramp.
using LeafRule = std::variant<ExtReal, RampLeaf>;

/// A finitely-presented element of C(K, [-inf, inf]): a finite binary tree
/// whose internal nodes split a cell into its two halves and whose leaves are
/// Const or Ramp. Value semantics with structural sharing; all operations
/// return canonical trees, so equal functions compare equal.
class TreeFn {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        std::variant<LeafRule, std::array<NodePtr, 2>> v;
    };

    TreeFn();  // the zero function
    static TreeFn constant(const ExtReal& value);
    static TreeFn ramp(bool dir, Poly rungs);
    /// Like ramp() but with the branch value left unassigned.
    static TreeFn ramp_unextended(bool dir, Poly rungs);
    /// General rung sequence: value prefix[k] for k < prefix.size(), then
    /// tail(k). Reified into canonical form (explicit subcells plus at most
    /// one genuine ramp).
    static TreeFn ramp_sequence(bool dir, const std::vector<ExtReal>& prefix, Poly tail);
    /// Canonicalizing join of the two subtrees.
    static TreeFn split(const TreeFn& zero_side, const TreeFn& one_side);

    explicit TreeFn(NodePtr n) : root_(std::move(n)) {}
    const NodePtr& node() const { return root_; }

    bool is_leaf() const;
    const LeafRule* leaf() const;  // nullptr on internal nodes
    /// The function restricted to [w·bit], as a tree rooted at that subcell.
    TreeFn child(bool bit) const;
    std::size_t depth() const;

    bool operator==(const TreeFn& other) const;

private:
    NodePtr root_;
};

struct Classification {
    bool in_CK = false;
    bool in_Cinfty = false;
    bool neg_inf_interior_empty = false;
    ClopenSet pos_inf_interior;
    ClopenSet neg_inf_interior;
};

/// Exact value at a cell that lies inside a single constant region; throws
/// CellNotResolved if the cell straddles distinct values (descend further).
ExtReal eval_at(const TreeFn& u, const Cell& where);
/// Exact value at an eventually-constant point; always defined.
ExtReal eval_at(const TreeFn& u, const BranchPoint& where);
ExtReal eval_at(const TreeFn& u, const PointRef& where);

/// Both functions re-expressed on a common tree skeleton (the outputs are
/// refinements, not canonical forms). Opposite-direction ramp pairs are
/// resolved by one level of unfolding.
std::pair<TreeFn, TreeFn> align(const TreeFn& u, const TreeFn& v);

/// The unique continuous function agreeing with the pointwise sum on the
/// dense set where both summands exceed -inf. Throws SumUndefined if either
/// function is -inf on a whole cell.
TreeFn fn_add(const TreeFn& a, const TreeFn& b);

/// Pointwise nonnegative scalar multiple; 0 * u = 0 even where u is infinite.
TreeFn fn_scalar(const Rational& lambda, const TreeFn& u);

/// Negation; defined only for finite-a.e. functions (throws NotNegatable on
/// a cell identically +/-inf).
TreeFn fn_neg(const TreeFn& u);

/// Pointwise order reversal on all of C(K, [-inf, inf]); flips infinite cells
/// too. The additive inverse candidate for the C0 = X check.
TreeFn fn_neg_total(const TreeFn& u);

TreeFn fn_abs(const TreeFn& u);

TreeFn fn_meet(const TreeFn& a, const TreeFn& b);
TreeFn fn_join(const TreeFn& a, const TreeFn& b);
TreeFn fn_sup(const std::vector<TreeFn>& elems);
TreeFn fn_inf(const std::vector<TreeFn>& elems);

/// Pointwise a.e. product with the 0 * inf = 0 convention; branch values are
/// limits of the rung product sequences (the same extension mechanism as
/// addition).
TreeFn fn_mul(const TreeFn& a, const TreeFn& b);

Classification classify(const TreeFn& u);

/// Fills every unassigned ramp limit with the exact limit of its rung
/// sequence; the unique continuous extension from the open dense set of
/// non-branch points.
TreeFn extend_from_dense(const TreeFn& partial);

/// First point where a > b, if any. Violations always admit a cell witness.
std::optional<PointRef> leq_violation(const TreeFn& a, const TreeFn& b);
bool fn_le(const TreeFn& a, const TreeFn& b);

TreeFn restrict_to_cell(const TreeFn& u, const std::string& word);

/// inside on `region`, outside off it.
TreeFn select(const ClopenSet& region, const TreeFn& inside, const TreeFn& outside);
TreeFn indicator(const ClopenSet& region);

void for_each_leaf(const TreeFn& u,
                   const std::function<void(const std::string&, const LeafRule&)>& f);

/// Rebuilds the tree with each leaf replaced by an arbitrary subtree;
/// the result is re-canonicalized.
TreeFn transform_leaves(const TreeFn& u,
                        const std::function<TreeFn(const std::string&, const LeafRule&)>& f);

}  // namespace supcone

#endif  // SUPCONE_FUNC_HPP
