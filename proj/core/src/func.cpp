#include "supcone/func.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace supcone {

namespace {

using NodePtr = TreeFn::NodePtr;
using Node = TreeFn::Node;

NodePtr make_leaf(LeafRule l) {
    return std::make_shared<const Node>(Node{std::move(l)});
}
NodePtr make_const(ExtReal v) { return make_leaf(LeafRule(std::move(v))); }
NodePtr make_ramp(bool dir, Poly p, std::optional<ExtReal> limit) {
    return make_leaf(LeafRule(RampLeaf{dir, std::move(p), std::move(limit)}));
}
NodePtr make_split_raw(NodePtr zero, NodePtr one) {
    return std::make_shared<const Node>(
        Node{std::array<NodePtr, 2>{std::move(zero), std::move(one)}});
}

const LeafRule* as_leaf(const NodePtr& n) { return std::get_if<LeafRule>(&n->v); }
const ExtReal* as_const(const LeafRule& l) { return std::get_if<ExtReal>(&l); }
const RampLeaf* as_ramp(const LeafRule& l) { return std::get_if<RampLeaf>(&l); }

const std::array<NodePtr, 2>& children(const NodePtr& n) {
    return std::get<std::array<NodePtr, 2>>(n->v);
}

// Canonicalizing split. Merges equal constant siblings; folds a ramp leaf
// whose sibling constant continues its rung polynomial one index earlier
// (the ramp then starts one cell higher). Children must already be canonical.
NodePtr canon_split(NodePtr zero, NodePtr one) {
    const LeafRule* l0 = as_leaf(zero);
    const LeafRule* l1 = as_leaf(one);
    if (l0 && l1) {
        const ExtReal* c0 = as_const(*l0);
        const ExtReal* c1 = as_const(*l1);
        if (c0 && c1 && *c0 == *c1) return zero;
        const RampLeaf* r0 = as_ramp(*l0);
        const RampLeaf* r1 = as_ramp(*l1);
        if (r0 && !r0->dir && c1 && *c1 == ExtReal(r0->poly.eval(-1)))
            return make_ramp(false, r0->poly.shifted(-1), r0->limit);
        if (r1 && r1->dir && c0 && *c0 == ExtReal(r1->poly.eval(-1)))
            return make_ramp(true, r1->poly.shifted(-1), r1->limit);
    }
    return make_split_raw(std::move(zero), std::move(one));
}

// The function restricted to the child cell, rooted there.
NodePtr restrict_node(const NodePtr& n, bool bit) {
    if (const auto* kids = std::get_if<std::array<NodePtr, 2>>(&n->v))
        return (*kids)[bit ? 1 : 0];
    const LeafRule& l = std::get<LeafRule>(n->v);
    if (const RampLeaf* r = as_ramp(l)) {
        if (bit == r->dir) return make_ramp(r->dir, r->poly.shifted(1), r->limit);
        return make_const(ExtReal(r->poly.eval(0)));
    }
    return n;  // constant leaf covers both halves
}

// An eventually-polynomial rung sequence produced by a leafwise operation:
// explicit values for k < prefix.size(), then either finite polynomial
// values or a constant infinite tail.
struct CombSeq {
    std::vector<ExtReal> prefix;
    std::variant<Poly, ExtReal> tail;

    // The tail formula evaluated at k (also meaningful below prefix.size()).
    ExtReal tail_at(std::int64_t k) const {
        if (const Poly* p = std::get_if<Poly>(&tail)) return ExtReal(p->eval(k));
        return std::get<ExtReal>(tail);
    }
};

CombSeq seq_tail(ExtReal c) {
    if (c.is_finite()) return CombSeq{{}, Poly(c.value())};
    return CombSeq{{}, std::move(c)};
}
CombSeq seq_tail(Poly p) { return CombSeq{{}, std::move(p)}; }

// Canonical reification on a cell: trim prefix entries that already follow
// the tail formula, then unfold the rest as explicit rung subcells along the
// `dir` spine with a constant or a genuine (degree >= 1) ramp at the bottom.
NodePtr reify(CombSeq s, bool dir) {
    while (!s.prefix.empty() &&
           s.prefix.back() == s.tail_at(static_cast<std::int64_t>(s.prefix.size()) - 1))
        s.prefix.pop_back();
    if (s.prefix.empty()) {
        if (const Poly* p = std::get_if<Poly>(&s.tail)) {
            if (p->is_constant()) return make_const(ExtReal(p->constant_value()));
            return make_ramp(dir, *p, p->limit());
        }
        return make_const(std::get<ExtReal>(s.tail));
    }
    ExtReal rung0 = s.prefix.front();
    s.prefix.erase(s.prefix.begin());
    if (Poly* p = std::get_if<Poly>(&s.tail)) *p = p->shifted(1);
    NodePtr deep = reify(std::move(s), dir);
    NodePtr flat = make_const(std::move(rung0));
    return dir ? canon_split(std::move(flat), std::move(deep))
               : canon_split(std::move(deep), std::move(flat));
}

// A leaf viewed as a rung sequence: a constant or a pure polynomial.
using SeqView = std::variant<ExtReal, Poly>;

SeqView leaf_view(const LeafRule& l) {
    if (const RampLeaf* r = as_ramp(l)) return r->poly;
    return *as_const(l);
}

CombSeq comb_add(const SeqView& a, const SeqView& b) {
    const ExtReal* ca = std::get_if<ExtReal>(&a);
    const ExtReal* cb = std::get_if<ExtReal>(&b);
    if (ca && cb) return seq_tail(*ca + *cb);
    if (ca || cb) {
        const ExtReal& c = ca ? *ca : *cb;
        const Poly& p = std::get<Poly>(ca ? b : a);
        if (c.is_finite()) return seq_tail(p + Poly(c.value()));
        return seq_tail(c);  // the polynomial side is finite on every rung
    }
    return seq_tail(std::get<Poly>(a) + std::get<Poly>(b));
}

CombSeq comb_mul(const SeqView& a, const SeqView& b) {
    const ExtReal* ca = std::get_if<ExtReal>(&a);
    const ExtReal* cb = std::get_if<ExtReal>(&b);
    if (ca && cb) return seq_tail(*ca * *cb);
    if (ca || cb) {
        const ExtReal& c = ca ? *ca : *cb;
        const Poly& p = std::get<Poly>(ca ? b : a);
        if (p.is_zero() || c.sign() == 0) return seq_tail(Poly());
        if (c.is_finite()) return seq_tail(c.value() * p);
        // Infinite constant times finitely many sign exceptions, then a
        // constant infinite tail.
        std::int64_t cut = p.sign_threshold();
        CombSeq s = seq_tail(c * ExtReal(p.eval(cut)));
        for (std::int64_t k = 0; k < cut; ++k)
            s.prefix.push_back(c * ExtReal(p.eval(k)));
        return s;
    }
    return seq_tail(std::get<Poly>(a) * std::get<Poly>(b));
}

CombSeq comb_order(const SeqView& a, const SeqView& b, bool take_min) {
    auto pick = [take_min](const ExtReal& x, const ExtReal& y) {
        return take_min ? xr_min(x, y) : xr_max(x, y);
    };
    const ExtReal* ca = std::get_if<ExtReal>(&a);
    const ExtReal* cb = std::get_if<ExtReal>(&b);
    if (ca && cb) return seq_tail(pick(*ca, *cb));
    if (ca || cb) {
        const ExtReal& c = ca ? *ca : *cb;
        const Poly& p = std::get<Poly>(ca ? b : a);
        if (c.is_pos_inf()) return take_min ? seq_tail(p) : seq_tail(c);
        if (c.is_neg_inf()) return take_min ? seq_tail(c) : seq_tail(p);
        Poly d = p - Poly(c.value());
        if (d.is_zero()) return seq_tail(p);
        std::int64_t cut = d.sign_threshold();
        int tail_sign = d.eval(cut).sign();  // constant from `cut` on
        bool tail_is_poly = take_min ? tail_sign < 0 : tail_sign > 0;
        CombSeq s = tail_is_poly ? seq_tail(p) : seq_tail(c);
        for (std::int64_t k = 0; k < cut; ++k)
            s.prefix.push_back(pick(c, ExtReal(p.eval(k))));
        return s;
    }
    const Poly& p1 = std::get<Poly>(a);
    const Poly& p2 = std::get<Poly>(b);
    Poly d = p1 - p2;
    if (d.is_zero()) return seq_tail(p1);
    std::int64_t cut = d.sign_threshold();
    int tail_sign = d.eval(cut).sign();
    bool first_wins = take_min ? tail_sign < 0 : tail_sign > 0;
    CombSeq s = seq_tail(first_wins ? p1 : p2);
    for (std::int64_t k = 0; k < cut; ++k)
        s.prefix.push_back(pick(ExtReal(p1.eval(k)), ExtReal(p2.eval(k))));
    return s;
}

using CombFn = CombSeq (*)(const SeqView&, const SeqView&);

NodePtr zip(const NodePtr& a, const NodePtr& b, CombFn comb) {
    const LeafRule* la = as_leaf(a);
    const LeafRule* lb = as_leaf(b);
    if (la && lb) {
        const RampLeaf* ra = as_ramp(*la);
        const RampLeaf* rb = as_ramp(*lb);
        if (!(ra && rb && ra->dir != rb->dir)) {
            bool dir = ra ? ra->dir : (rb ? rb->dir : true);
            return reify(comb(leaf_view(*la), leaf_view(*lb)), dir);
        }
        // opposite-direction ramps: one unfolding level resolves the pair
    }
    return canon_split(zip(restrict_node(a, false), restrict_node(b, false), comb),
                       zip(restrict_node(a, true), restrict_node(b, true), comb));
}

NodePtr map_leaves(const NodePtr& n, const std::function<LeafRule(const LeafRule&)>& f) {
    if (const LeafRule* l = as_leaf(n)) return make_leaf(f(*l));
    return canon_split(map_leaves(children(n)[0], f), map_leaves(children(n)[1], f));
}

bool node_eq(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    const LeafRule* la = as_leaf(a);
    const LeafRule* lb = as_leaf(b);
    if (la || lb) return la && lb && *la == *lb;
    return node_eq(children(a)[0], children(b)[0]) &&
           node_eq(children(a)[1], children(b)[1]);
}

void walk_leaves(const NodePtr& n, std::string& word,
                 const std::function<void(const std::string&, const LeafRule&)>& f) {
    if (const LeafRule* l = as_leaf(n)) {
        f(word, *l);
        return;
    }
    for (int b = 0; b < 2; ++b) {
        word.push_back(static_cast<char>('0' + b));
        walk_leaves(children(n)[b], word, f);
        word.pop_back();
    }
}

std::size_t node_depth(const NodePtr& n) {
    if (as_leaf(n)) return 0;
    return 1 + std::max(node_depth(children(n)[0]), node_depth(children(n)[1]));
}

}  // namespace

TreeFn::TreeFn() : root_(make_const(ExtReal(0))) {}

TreeFn TreeFn::constant(const ExtReal& value) { return TreeFn(make_const(value)); }

TreeFn TreeFn::ramp(bool dir, Poly rungs) {
    return TreeFn(reify(seq_tail(std::move(rungs)), dir));
}

TreeFn TreeFn::ramp_unextended(bool dir, Poly rungs) {
    if (rungs.is_constant()) return constant(ExtReal(rungs.constant_value()));
    return TreeFn(make_ramp(dir, std::move(rungs), std::nullopt));
}

TreeFn TreeFn::ramp_sequence(bool dir, const std::vector<ExtReal>& prefix, Poly tail) {
    return TreeFn(reify(CombSeq{prefix, std::move(tail)}, dir));
}

TreeFn TreeFn::split(const TreeFn& zero_side, const TreeFn& one_side) {
    return TreeFn(canon_split(zero_side.root_, one_side.root_));
}

bool TreeFn::is_leaf() const { return as_leaf(root_) != nullptr; }
const LeafRule* TreeFn::leaf() const { return as_leaf(root_); }
TreeFn TreeFn::child(bool bit) const { return TreeFn(restrict_node(root_, bit)); }
std::size_t TreeFn::depth() const { return node_depth(root_); }
bool TreeFn::operator==(const TreeFn& other) const { return node_eq(root_, other.root_); }

ExtReal eval_at(const TreeFn& u, const Cell& where) {
    NodePtr n = u.node();
    std::size_t i = 0;
    const std::string& w = where.word;
    for (;;) {
        if (const LeafRule* l = as_leaf(n)) {
            if (const ExtReal* c = as_const(*l)) return *c;
            const RampLeaf& r = *as_ramp(*l);
            std::int64_t rung = 0;
            std::size_t pos = i;
            while (pos < w.size() && w[pos] == r.dir_char()) {
                ++pos;
                ++rung;
            }
            if (pos == w.size())
                throw CellNotResolved("cell [" + where.str() +
                                      "] contains the ramp branch point");
            return ExtReal(r.poly.eval(rung));
        }
        if (i >= w.size())
            throw CellNotResolved("cell [" + where.str() + "] straddles a split");
        n = children(n)[w[i] - '0'];
        ++i;
    }
}

ExtReal eval_at(const TreeFn& u, const BranchPoint& where) {
    NodePtr n = u.node();
    std::size_t i = 0;
    for (;;) {
        if (const LeafRule* l = as_leaf(n)) {
            if (const ExtReal* c = as_const(*l)) return *c;
            const RampLeaf& r = *as_ramp(*l);
            // Count leading `dir` bits of the address past position i.
            std::size_t pos = i;
            while (pos < where.prefix.size() && where.prefix[pos] == r.dir_char()) ++pos;
            bool in_tail = pos >= where.prefix.size();
            if (in_tail && where.tail == r.dir_char()) {
                if (!r.limit)
                    throw std::logic_error("eval_at on an unextended ramp");
                return *r.limit;
            }
            std::size_t first_nondir = in_tail ? std::max(where.prefix.size(), i) : pos;
            return ExtReal(r.poly.eval(static_cast<std::int64_t>(first_nondir - i)));
        }
        n = children(n)[where.bit(i) - '0'];
        ++i;
    }
}

ExtReal eval_at(const TreeFn& u, const PointRef& where) {
    if (const Cell* c = std::get_if<Cell>(&where)) return eval_at(u, *c);
    return eval_at(u, std::get<BranchPoint>(where));
}

namespace {

std::pair<NodePtr, NodePtr> align_nodes(const NodePtr& a, const NodePtr& b) {
    const LeafRule* la = as_leaf(a);
    const LeafRule* lb = as_leaf(b);
    if (la && lb) {
        const RampLeaf* ra = as_ramp(*la);
        const RampLeaf* rb = as_ramp(*lb);
        if (!(ra && rb && ra->dir != rb->dir)) return {a, b};
    }
    auto [l0, r0] = align_nodes(restrict_node(a, false), restrict_node(b, false));
    auto [l1, r1] = align_nodes(restrict_node(a, true), restrict_node(b, true));
    return {make_split_raw(std::move(l0), std::move(l1)),
            make_split_raw(std::move(r0), std::move(r1))};
}

}  // namespace

std::pair<TreeFn, TreeFn> align(const TreeFn& u, const TreeFn& v) {
    auto [a, b] = align_nodes(u.node(), v.node());
    return {TreeFn(std::move(a)), TreeFn(std::move(b))};
}

TreeFn fn_add(const TreeFn& a, const TreeFn& b) {
    for (const TreeFn* f : {&a, &b}) {
        Classification c = classify(*f);
        if (!c.neg_inf_interior_empty)
            throw SumUndefined("summand is identically -inf on " +
                               c.neg_inf_interior.str());
    }
    return TreeFn(zip(a.node(), b.node(), comb_add));
}

TreeFn fn_meet(const TreeFn& a, const TreeFn& b) {
    return TreeFn(zip(a.node(), b.node(),
                      [](const SeqView& x, const SeqView& y) { return comb_order(x, y, true); }));
}

TreeFn fn_join(const TreeFn& a, const TreeFn& b) {
    return TreeFn(zip(a.node(), b.node(),
                      [](const SeqView& x, const SeqView& y) { return comb_order(x, y, false); }));
}

TreeFn fn_mul(const TreeFn& a, const TreeFn& b) {
    return TreeFn(zip(a.node(), b.node(), comb_mul));
}

TreeFn fn_scalar(const Rational& lambda, const TreeFn& u) {
    if (lambda < 0) throw std::invalid_argument("fn_scalar: negative scalar");
    return fn_mul(TreeFn::constant(ExtReal(lambda)), u);
}

TreeFn fn_neg(const TreeFn& u) {
    Classification c = classify(u);
    if (!c.in_Cinfty) {
        ClopenSet bad = clopen_join(c.pos_inf_interior, c.neg_inf_interior);
        throw NotNegatable("function is infinite on " + bad.str());
    }
    return fn_neg_total(u);
}

TreeFn fn_neg_total(const TreeFn& u) {
    return TreeFn(map_leaves(u.node(), [](const LeafRule& l) -> LeafRule {
        if (const ExtReal* c = as_const(l)) return LeafRule(-*c);
        const RampLeaf& r = *as_ramp(l);
        std::optional<ExtReal> lim;
        if (r.limit) lim = -*r.limit;
        return LeafRule(RampLeaf{r.dir, -r.poly, std::move(lim)});
    }));
}

TreeFn fn_abs(const TreeFn& u) { return fn_join(u, fn_neg_total(u)); }

TreeFn fn_sup(const std::vector<TreeFn>& elems) {
    if (elems.empty()) throw std::invalid_argument("fn_sup: empty family");
    TreeFn acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) acc = fn_join(acc, elems[i]);
    return acc;
}

TreeFn fn_inf(const std::vector<TreeFn>& elems) {
    if (elems.empty()) throw std::invalid_argument("fn_inf: empty family");
    TreeFn acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) acc = fn_meet(acc, elems[i]);
    return acc;
}

Classification classify(const TreeFn& u) {
    Classification result;
    std::vector<Cell> pos, neg;
    bool ramp_seen = false;
    for_each_leaf(u, [&](const std::string& word, const LeafRule& l) {
        if (const ExtReal* c = as_const(l)) {
            if (c->is_pos_inf()) pos.push_back(Cell(word));
            if (c->is_neg_inf()) neg.push_back(Cell(word));
        } else {
            ramp_seen = true;
        }
    });
    result.pos_inf_interior = ClopenSet::of(std::move(pos));
    result.neg_inf_interior = ClopenSet::of(std::move(neg));
    result.in_Cinfty =
        result.pos_inf_interior.is_empty() && result.neg_inf_interior.is_empty();
    result.in_CK = result.in_Cinfty && !ramp_seen;
    result.neg_inf_interior_empty = result.neg_inf_interior.is_empty();
    return result;
}

TreeFn extend_from_dense(const TreeFn& partial) {
    return TreeFn(map_leaves(partial.node(), [](const LeafRule& l) -> LeafRule {
        const RampLeaf* r = as_ramp(l);
        if (!r) return l;
        ExtReal forced = r->poly.limit();
        if (r->limit && *r->limit != forced)
            throw std::logic_error("stored branch value contradicts the rung limit");
        return LeafRule(RampLeaf{r->dir, r->poly, forced});
    }));
}

namespace {

// First rung index where the (finite-tail) sequences violate a <= b, if any.
std::optional<std::int64_t> first_rung_violation(const SeqView& a, const SeqView& b) {
    const ExtReal* ca = std::get_if<ExtReal>(&a);
    const ExtReal* cb = std::get_if<ExtReal>(&b);
    if (ca && ca->is_neg_inf()) return std::nullopt;
    if (cb && cb->is_pos_inf()) return std::nullopt;
    if (ca && ca->is_pos_inf()) return 0;   // dominates any finite rung of b
    if (cb && cb->is_neg_inf()) return 0;
    Poly pa = ca ? Poly(ca->value()) : std::get<Poly>(a);
    Poly pb = cb ? Poly(cb->value()) : std::get<Poly>(b);
    Poly d = pa - pb;
    if (d.is_zero()) return std::nullopt;
    std::int64_t cut = d.sign_threshold();
    for (std::int64_t k = 0; k < cut; ++k)
        if (d.eval(k) > 0) return k;
    if (d.eval(cut) > 0) return cut;
    return std::nullopt;
}

std::optional<PointRef> leq_walk(const NodePtr& a, const NodePtr& b, std::string& word) {
    const LeafRule* la = as_leaf(a);
    const LeafRule* lb = as_leaf(b);
    if (la && lb) {
        const RampLeaf* ra = as_ramp(*la);
        const RampLeaf* rb = as_ramp(*lb);
        if (!ra && !rb) {
            if (*as_const(*la) > *as_const(*lb)) return PointRef(Cell(word));
            return std::nullopt;
        }
        if (!(ra && rb && ra->dir != rb->dir)) {
            bool dir = ra ? ra->dir : rb->dir;
            auto k = first_rung_violation(leaf_view(*la), leaf_view(*lb));
            if (!k) return std::nullopt;
            std::string rung = word;
            rung.append(static_cast<std::size_t>(*k), dir ? '1' : '0');
            rung.push_back(dir ? '0' : '1');
            return PointRef(Cell(rung));
        }
    }
    for (int bit = 0; bit < 2; ++bit) {
        word.push_back(static_cast<char>('0' + bit));
        auto v = leq_walk(restrict_node(a, bit != 0), restrict_node(b, bit != 0), word);
        word.pop_back();
        if (v) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PointRef> leq_violation(const TreeFn& a, const TreeFn& b) {
    std::string word;
    return leq_walk(a.node(), b.node(), word);
}

bool fn_le(const TreeFn& a, const TreeFn& b) { return !leq_violation(a, b); }

TreeFn restrict_to_cell(const TreeFn& u, const std::string& word) {
    NodePtr n = u.node();
    for (char c : word) n = restrict_node(n, c == '1');
    return TreeFn(std::move(n));
}

namespace {

NodePtr select_node(const ClopenSet& region, const NodePtr& in, const NodePtr& out,
                    std::string& word) {
    if (region.contains_cell(word)) return in;
    if (!region.intersects_cell(word)) return out;
    word.push_back('0');
    NodePtr zero = select_node(region, restrict_node(in, false), restrict_node(out, false), word);
    word.back() = '1';
    NodePtr one = select_node(region, restrict_node(in, true), restrict_node(out, true), word);
    word.pop_back();
    return canon_split(std::move(zero), std::move(one));
}

}  // namespace

TreeFn select(const ClopenSet& region, const TreeFn& inside, const TreeFn& outside) {
    std::string word;
    return TreeFn(select_node(region, inside.node(), outside.node(), word));
}

TreeFn indicator(const ClopenSet& region) {
    return select(region, TreeFn::constant(ExtReal(1)), TreeFn::constant(ExtReal(0)));
}

void for_each_leaf(const TreeFn& u,
                   const std::function<void(const std::string&, const LeafRule&)>& f) {
    std::string word;
    walk_leaves(u.node(), word, f);
}

namespace {

NodePtr transform_node(const NodePtr& n, std::string& word,
                       const std::function<TreeFn(const std::string&, const LeafRule&)>& f) {
    if (const LeafRule* l = as_leaf(n)) return f(word, *l).node();
    word.push_back('0');
    NodePtr zero = transform_node(children(n)[0], word, f);
    word.back() = '1';
    NodePtr one = transform_node(children(n)[1], word, f);
    word.pop_back();
    return canon_split(std::move(zero), std::move(one));
}

}  // namespace

TreeFn transform_leaves(const TreeFn& u,
                        const std::function<TreeFn(const std::string&, const LeafRule&)>& f) {
    std::string word;
    return TreeFn(transform_node(u.node(), word, f));
}

}  // namespace supcone
