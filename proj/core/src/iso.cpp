#include "supcone/iso.hpp"

#include <stdexcept>

#include "supcone/errors.hpp"

namespace supcone {

namespace {

TreeFn build_slice(const FlatFn& u, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return TreeFn::constant(u.values[lo]);
    std::size_t mid = lo + (hi - lo) / 2;
    return TreeFn::split(build_slice(u, lo, mid), build_slice(u, mid, hi));
}

std::string index_word(std::size_t index, std::size_t depth) {
    std::string w(depth, '0');
    for (std::size_t i = 0; i < depth; ++i)
        if (index & (std::size_t{1} << (depth - 1 - i))) w[i] = '1';
    return w;
}

}  // namespace

FlatFn flat_refine(const FlatFn& u, std::size_t depth) {
    if (depth < u.depth)
        throw std::invalid_argument("flat_refine: target depth is coarser");
    FlatFn r;
    r.depth = depth;
    r.values.assign(std::size_t{1} << depth, ExtReal(0));
    std::size_t copies = std::size_t{1} << (depth - u.depth);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        for (std::size_t j = 0; j < copies; ++j) r.values[i * copies + j] = u.values[i];
    return r;
}

FlatFn flat_add(const FlatFn& a, const FlatFn& b) {
    std::size_t d = std::max(a.depth, b.depth);
    FlatFn x = flat_refine(a, d), y = flat_refine(b, d);
    for (std::size_t i = 0; i < x.values.size(); ++i) x.values[i] = x.values[i] + y.values[i];
    return x;
}

FlatFn flat_scalar(const Rational& lambda, const FlatFn& a) {
    if (lambda < 0) throw std::invalid_argument("flat_scalar: negative scalar");
    FlatFn x = a;
    ExtReal l(lambda);
    for (auto& v : x.values) v = l * v;
    return x;
}

bool flat_le(const FlatFn& a, const FlatFn& b) {
    std::size_t d = std::max(a.depth, b.depth);
    FlatFn x = flat_refine(a, d), y = flat_refine(b, d);
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (x.values[i] > y.values[i]) return false;
    return true;
}

TreeFn j_transport(const FlatFn& u) {
    if (u.values.size() != (std::size_t{1} << u.depth))
        throw std::invalid_argument("flat function with wrong value count");
    return build_slice(u, 0, u.values.size());
}

FlatFn j_inverse(const TreeFn& u, std::size_t depth) {
    if (u.depth() > depth)
        throw NotRepresentable("tree splits below depth " + std::to_string(depth));
    FlatFn r;
    r.depth = depth;
    r.values.assign(std::size_t{1} << depth, ExtReal(0));
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        Cell cell(index_word(i, depth));
        try {
            r.values[i] = eval_at(u, cell);
        } catch (const CellNotResolved&) {
            throw NotRepresentable("ramp behaviour inside cell " + cell.str());
        }
    }
    return r;
}

JFormulaCheck j_formula_check(const FlatFn& u, ModelX model, long budget) {
    TreeFn t = j_transport(u);
    MemberCheck m = member(t, model);
    if (!m.witness) throw NotInCone(m.certificate);

    TreeFn capped = fn_meet(t, TreeFn::constant(ExtReal(budget)));
    TreeFn previous = fn_meet(t, TreeFn::constant(ExtReal(budget - 1)));
    JFormulaCheck result;
    result.ok = true;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        Cell cell(index_word(i, u.depth));
        const ExtReal& val = u.values[i];
        bool good;
        if (val.is_pos_inf())
            good = eval_at(capped, cell) == ExtReal(budget) &&
                   eval_at(previous, cell) == ExtReal(budget - 1);
        else
            good = eval_at(capped, cell) == val;
        if (!good) {
            result.ok = false;
            result.separating_cell = cell;
            return result;
        }
    }
    return result;
}

}  // namespace supcone
