#ifndef SUPCONE_STONE_HPP
#define SUPCONE_STONE_HPP

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "supcone/errors.hpp"

namespace supcone {

/// A dyadic cell of the Stone space K of the free binary Boolean algebra,
/// named by a finite binary word; the empty word is all of K. [w0] and [w1]
/// partition [w].
struct Cell {
    std::string word;  // over '0'/'1'

    Cell() = default;
    explicit Cell(std::string w) : word(std::move(w)) {}

    std::size_t depth() const { return word.size(); }
    bool is_prefix_of(const std::string& other) const {
        return other.size() >= word.size() && other.compare(0, word.size(), word) == 0;
    }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;

    std::string str() const { return word.empty() ? "e" : word; }
};

/// An eventually-constant point of K: the address prefix . tail tail tail...
/// Canonical form absorbs trailing copies of `tail` from the prefix.
struct BranchPoint {
    std::string prefix;
    char tail = '1';  // '0' or '1'

    BranchPoint() = default;
    BranchPoint(std::string p, char t) : prefix(std::move(p)), tail(t) { normalize(); }

    void normalize() {
        while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
    }

    /// The bit of the address at position i (0-based).
    char bit(std::size_t i) const { return i < prefix.size() ? prefix[i] : tail; }

    friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
    friend auto operator<=>(const BranchPoint&, const BranchPoint&) = default;

    std::string str() const { return prefix + "(" + tail + ")^w"; }
};

/// A point descriptor: either a cell (deep enough to resolve) or a branch point.
using PointRef = std::variant<Cell, BranchPoint>;

std::string point_str(const PointRef& p);

/// A canonical finite union of cells: an antichain under the prefix order with
/// no two sibling cells both present (siblings merge into the parent). The
/// empty set is {} and the full space is {[e]}.
class ClopenSet {
public:
    ClopenSet() = default;

    static ClopenSet empty_set() { return ClopenSet(); }
    static ClopenSet full_space() { return of({Cell("")}); }
    /// Canonicalizes an arbitrary finite cell list.
    static ClopenSet of(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    bool is_empty() const { return cells_.empty(); }
    bool is_full() const { return cells_.size() == 1 && cells_[0].word.empty(); }

    /// True iff [word] is entirely inside the set. For words at least as deep
    /// as every member cell this coincides with nonempty intersection.
    bool contains_cell(const std::string& word) const;
    /// True iff [word] meets the set.
    bool intersects_cell(const std::string& word) const;
    bool contains(const BranchPoint& p) const;

    friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

    std::string str() const;

private:
    std::vector<Cell> cells_;  // sorted lexicographically, canonical
};

ClopenSet clopen_complement(const ClopenSet& u);
ClopenSet clopen_meet(const ClopenSet& u, const ClopenSet& v);
ClopenSet clopen_join(const ClopenSet& u, const ClopenSet& v);
ClopenSet clopen_diff(const ClopenSet& u, const ClopenSet& v);

inline bool branch_in_clopen(const BranchPoint& p, const ClopenSet& u) {
    return u.contains(p);
}

/// Coarsest common refinement of two partitions of K. Throws NotAPartition
/// if either input overlaps or fails to cover.
std::vector<ClopenSet> partition_meet(const std::vector<ClopenSet>& p,
                                      const std::vector<ClopenSet>& q);

/// K minus finitely many branch points; always open and dense. The dense-set
/// class on which partial functions are specified before extension.
struct OpenDense {
    std::vector<BranchPoint> excluded;

    bool contains(const BranchPoint& p) const {
        for (const auto& q : excluded)
            if (q == p) return false;
        return true;
    }
};

}  // namespace supcone

#endif  // SUPCONE_STONE_HPP
