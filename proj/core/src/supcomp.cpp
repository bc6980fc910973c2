#include "supcone/supcomp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "supcone/errors.hpp"

namespace supcone {

namespace {

const ExtReal kZero(0);
const ExtReal kOne(1);

// Exact infimum of a ramp's rung values over all k >= 0, branch value
// included: -inf when the rungs eventually decrease, otherwise the minimum
// over the finitely many indices before the tail turns monotone increasing.
ExtReal rung_inf(const Poly& p) {
    if (p.is_constant()) return ExtReal(p.constant_value());
    Poly delta = p.shifted(1) - p;
    std::int64_t cut = delta.sign_threshold();
    if (delta.eval(cut) < 0) return ExtReal::neg_inf();
    Rational best = p.eval(0);
    for (std::int64_t k = 1; k <= cut; ++k) best = std::min(best, p.eval(k));
    return ExtReal(best);
}

void require_same_model(const SupElement& a, const SupElement& b) {
    if (a.model() != b.model())
        throw std::invalid_argument("elements live over different ground lattices");
}

void require_nonneg(const SupElement& a, const char* who) {
    if (auto bad = leq_violation(TreeFn(), a.fn()))
        throw NotPositive(std::string(who) + " is negative at " + point_str(*bad));
}

std::string rung_word(const std::string& word, const RampLeaf& r, std::int64_t k) {
    std::string w = word;
    w.append(static_cast<std::size_t>(k), r.dir_char());
    w.push_back(r.dir ? '0' : '1');
    return w;
}

}  // namespace

std::string model_name(ModelX model) {
    return model == ModelX::Bounded ? "bounded" : "full";
}

bool in_model(const TreeFn& f, ModelX model) {
    Classification c = classify(f);
    return model == ModelX::Bounded ? c.in_CK : c.in_Cinfty;
}

MemberCheck member(const TreeFn& u, ModelX model) {
    MemberCheck result;
    bool ok = true;
    bool any_finite = false;
    ExtReal low = ExtReal::pos_inf();
    for_each_leaf(u, [&](const std::string& word, const LeafRule& l) {
        if (!ok) return;
        if (const ExtReal* c = std::get_if<ExtReal>(&l)) {
            if (c->is_neg_inf()) {
                ok = false;
                result.certificate = "cell " + Cell(word).str() + " const -inf";
                return;
            }
            if (c->is_finite()) {
                any_finite = true;
                low = xr_min(low, *c);
            }
            return;
        }
        const RampLeaf& r = std::get<RampLeaf>(l);
        ExtReal inf = rung_inf(r.poly);
        if (model == ModelX::Bounded && inf.is_neg_inf()) {
            ok = false;
            result.certificate = "branch " + BranchPoint(word, r.dir_char()).str() +
                                 " limit -inf";
            return;
        }
        any_finite = true;
        low = xr_min(low, inf);
    });
    if (!ok) return result;

    if (model == ModelX::Bounded) {
        result.witness =
            TreeFn::constant(any_finite ? low : ExtReal(0));
        return result;
    }
    // Full model: keep u, truncating every +inf cell and +inf-limit ramp at 0.
    result.witness = transform_leaves(u, [](const std::string&, const LeafRule& l) {
        if (const ExtReal* c = std::get_if<ExtReal>(&l))
            return c->is_pos_inf() ? TreeFn::constant(kZero) : TreeFn::constant(*c);
        const RampLeaf& r = std::get<RampLeaf>(l);
        TreeFn ramp = TreeFn::ramp(r.dir, r.poly);
        if (r.limit && r.limit->is_pos_inf())
            return fn_meet(ramp, TreeFn::constant(kZero));
        return ramp;
    });
    return result;
}

SupElement::SupElement(TreeFn fn, TreeFn witness, ModelX model)
    : fn_(std::move(fn)), witness_(std::move(witness)), model_(model) {
    if (!in_model(witness_, model_))
        throw std::invalid_argument("witness is not an element of X (" +
                                    model_name(model_) + " model)");
    if (auto bad = leq_violation(witness_, fn_))
        throw std::invalid_argument("witness exceeds the element at " + point_str(*bad));
}

SupElement SupElement::adopt(TreeFn fn, ModelX model) {
    MemberCheck m = member(fn, model);
    if (!m.witness) throw NotInCone(m.certificate);
    return SupElement(std::move(fn), std::move(*m.witness), model);
}

SupElement cone_add(const SupElement& a, const SupElement& b) {
    require_same_model(a, b);
    return SupElement(fn_add(a.fn(), b.fn()), fn_add(a.witness(), b.witness()),
                      a.model());
}

SupElement cone_meet(const SupElement& a, const SupElement& b) {
    require_same_model(a, b);
    return SupElement(fn_meet(a.fn(), b.fn()), fn_meet(a.witness(), b.witness()),
                      a.model());
}

SupElement cone_join(const SupElement& a, const SupElement& b) {
    require_same_model(a, b);
    return SupElement(fn_join(a.fn(), b.fn()), a.witness(), a.model());
}

SupElement cone_sup(const std::vector<SupElement>& elems) {
    if (elems.empty()) throw std::invalid_argument("cone_sup: empty family");
    std::vector<TreeFn> fns;
    fns.reserve(elems.size());
    for (const auto& e : elems) {
        require_same_model(elems.front(), e);
        fns.push_back(e.fn());
    }
    return SupElement(fn_sup(fns), elems.front().witness(), elems.front().model());
}

SupElement cone_inf(const std::vector<SupElement>& elems, const SupElement& lower_bound) {
    if (elems.empty()) throw std::invalid_argument("cone_inf: empty family");
    std::vector<TreeFn> fns;
    fns.reserve(elems.size());
    for (const auto& e : elems) {
        require_same_model(lower_bound, e);
        if (auto bad = leq_violation(lower_bound.fn(), e.fn()))
            throw NoLowerBound("bound exceeds a family member at " + point_str(*bad));
        fns.push_back(e.fn());
    }
    return SupElement(fn_inf(fns), lower_bound.witness(), lower_bound.model());
}

SupElement cone_inf(const std::vector<SupElement>& elems) {
    if (elems.empty()) throw std::invalid_argument("cone_inf: empty family");
    TreeFn bound = elems.front().witness();
    for (std::size_t i = 1; i < elems.size(); ++i)
        bound = fn_meet(bound, elems[i].witness());
    return cone_inf(elems, SupElement(bound, bound, elems.front().model()));
}

namespace {

// Greatest lower bound of all values the function takes on its cell.
ExtReal tree_inf(const TreeFn& t) {
    ExtReal best = ExtReal::pos_inf();
    for_each_leaf(t, [&](const std::string&, const LeafRule& l) {
        if (const ExtReal* c = std::get_if<ExtReal>(&l))
            best = xr_min(best, *c);
        else
            best = xr_min(best, rung_inf(std::get<RampLeaf>(l).poly));
    });
    return best;
}

// Replaces every depth-d subtree by its greatest constant minorant; subtrees
// that dive to -inf are kept verbatim (a constant cannot minorize them in X).
TreeFn lower_flatten(const TreeFn& t, std::size_t d) {
    if (t.is_leaf()) return t;
    if (d == 0) {
        ExtReal m = tree_inf(t);
        if (m.is_finite()) return TreeFn::constant(m);
        return t;
    }
    return TreeFn::split(lower_flatten(t.child(false), d - 1),
                         lower_flatten(t.child(true), d - 1));
}

}  // namespace

std::vector<TreeFn> order_dense_witness(const SupElement& a, std::size_t depth,
                                        long height) {
    if (in_model(a.fn(), a.model())) return {a.fn()};
    std::vector<TreeFn> family;
    family.reserve(static_cast<std::size_t>(std::max(height, 0L)));
    for (long j = 1; j <= height; ++j) {
        TreeFn cap = fn_meet(TreeFn::constant(ExtReal(j)), a.fn());
        family.push_back(lower_flatten(cap, depth));
    }
    return family;
}

TreeFn band_project(const ClopenSet& u_set, const TreeFn& u) {
    return select(u_set, u, TreeFn());
}

SupElement band_project(const ClopenSet& u_set, const SupElement& a) {
    return SupElement(band_project(u_set, a.fn()), band_project(u_set, a.witness()),
                      a.model());
}

ClopenSet support_closure(const TreeFn& a) {
    ClopenSet acc;
    for_each_leaf(a, [&](const std::string& word, const LeafRule& l) {
        if (const ExtReal* c = std::get_if<ExtReal>(&l)) {
            if (c->sign() != 0) acc = clopen_join(acc, ClopenSet::of({Cell(word)}));
            return;
        }
        const RampLeaf& r = std::get<RampLeaf>(l);
        // Infinitely many rungs are nonzero, so the branch point stays in the
        // closure; only the finitely many zero rungs drop out.
        std::vector<Cell> zeros;
        std::int64_t cut = r.poly.sign_threshold();
        for (std::int64_t k = 0; k < cut; ++k)
            if (r.poly.eval(k) == 0) zeros.push_back(Cell(rung_word(word, r, k)));
        ClopenSet cell = ClopenSet::of({Cell(word)});
        acc = clopen_join(acc, clopen_diff(cell, ClopenSet::of(std::move(zeros))));
    });
    return acc;
}

TreeFn principal_band_project(const TreeFn& a, const TreeFn& x) {
    return band_project(support_closure(a), x);
}

Decomposition fin_inf_decompose(const SupElement& a) {
    Classification c = classify(a.fn());
    ClopenSet carrier = clopen_complement(c.pos_inf_interior);
    Decomposition d;
    d.carrier = carrier;
    d.finite_part = band_project(carrier, a.fn());
    d.infinite_part = select(carrier, TreeFn(), TreeFn::constant(ExtReal::pos_inf()));
    return d;
}

std::pair<SupElement, SupElement> riesz_decompose(const SupElement& x,
                                                  const SupElement& u,
                                                  const SupElement& v) {
    require_same_model(x, u);
    require_same_model(x, v);
    if (auto bad = leq_violation(TreeFn(), v.fn()))
        throw PreconditionFailed("v is negative at " + point_str(*bad));
    SupElement sum = cone_add(u, v);
    if (auto bad = leq_violation(x.fn(), sum.fn()))
        throw PreconditionFailed("x > u + v at " + point_str(*bad));

    // Split along the carrier of u's finite part: where u is identically
    // +inf take (y, z) = (x, 0); on the rest y = x /\ u and z = x - y, the
    // subtraction living in C^inf.
    ClopenSet carrier = clopen_complement(classify(u.fn()).pos_inf_interior);
    TreeFn finite_meet = band_project(carrier, fn_meet(x.fn(), u.fn()));
    TreeFn y = fn_add(finite_meet, band_project(clopen_complement(carrier), x.fn()));
    TreeFn z = fn_add(band_project(carrier, x.fn()), fn_neg(finite_meet));

    if (!(fn_add(y, z) == x.fn()) || !fn_le(y, u.fn()) || !fn_le(z, v.fn()))
        throw std::logic_error("riesz_decompose postcondition failed");
    return {SupElement::adopt(y, x.model()), SupElement::adopt(z, x.model())};
}

TruncationCert truncation_check(const SupElement& a) {
    require_nonneg(a, "element");
    const TreeFn& u = a.fn();
    TruncationCert cert;
    long max_finite = 1;
    auto note_finite = [&](PointRef where, const Rational& value) {
        long n = static_cast<long>(
            std::max<std::int64_t>(1, rational_ceil(value).convert_to<std::int64_t>()));
        cert.data.push_back(TruncationDatum{std::move(where), false, n, ExtReal(value)});
        max_finite = std::max(max_finite, n);
    };
    for_each_leaf(u, [&](const std::string& word, const LeafRule& l) {
        if (const ExtReal* c = std::get_if<ExtReal>(&l)) {
            if (c->is_pos_inf())
                cert.data.push_back(
                    TruncationDatum{PointRef(Cell(word)), true, 0, *c});
            else
                note_finite(PointRef(Cell(word)), c->value());
            return;
        }
        const RampLeaf& r = std::get<RampLeaf>(l);
        // u >= 0 forces the branch value of every genuine ramp to +inf.
        cert.data.push_back(TruncationDatum{
            PointRef(BranchPoint(word, r.dir_char())), true, 0, ExtReal::pos_inf()});
        std::int64_t cut = r.poly.sign_threshold();
        for (std::int64_t k = 0; k <= cut; ++k)
            note_finite(PointRef(Cell(rung_word(word, r, k))), r.poly.eval(k));
    });

    long n0 = max_finite + 1;
    cert.checked_height = n0;
    TreeFn t0 = fn_meet(TreeFn::constant(ExtReal(n0)), u);
    TreeFn t1 = fn_meet(TreeFn::constant(ExtReal(n0 + 1)), u);
    bool ok = fn_le(t0, t1) && fn_le(t1, u);
    for (const auto& datum : cert.data) {
        ExtReal v0 = eval_at(t0, datum.where);
        ExtReal v1 = eval_at(t1, datum.where);
        if (datum.diverges)
            ok = ok && v0 == ExtReal(n0) && v1 == ExtReal(n0 + 1);
        else
            ok = ok && v0 == datum.value && v1 == datum.value &&
                 eval_at(u, datum.where) == datum.value;
    }
    cert.verified = ok;
    return cert;
}

InfinityTest infinity_test(const SupElement& a) {
    require_nonneg(a, "element");
    const TreeFn& u = a.fn();
    Classification c = classify(u);

    InfinityTest result;
    result.v = indicator(c.pos_inf_interior);
    result.in_Xu = c.in_Cinfty;

    // Critical lambdas: the finite constants of u and one value past every
    // ramp crossover; v_lambda is piecewise constant in lambda between them.
    std::vector<Rational> lambdas{Rational(1)};
    for_each_leaf(u, [&](const std::string&, const LeafRule& l) {
        if (const ExtReal* cv = std::get_if<ExtReal>(&l)) {
            if (cv->is_finite() && cv->value() > 0) lambdas.push_back(cv->value());
            return;
        }
        const RampLeaf& r = std::get<RampLeaf>(l);
        Rational past = r.poly.eval(r.poly.sign_threshold()) + 1;
        if (past > 0) lambdas.push_back(past);
    });
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    const TreeFn e = TreeFn::constant(kOne);
    for (const Rational& lambda : lambdas) {
        TreeFn shifted = fn_add(u, TreeFn::constant(ExtReal(-lambda)));
        TreeFn pos_part = fn_join(shifted, TreeFn());
        TreeFn v_lambda = principal_band_project(pos_part, e);
        if (!result.lambda_trace.empty() &&
            !fn_le(v_lambda, result.lambda_trace.back().second))
            throw std::logic_error("lambda sweep is not decreasing");
        if (!fn_le(result.v, v_lambda))
            throw std::logic_error("closed-form infimum exceeds a sweep member");
        result.lambda_trace.emplace_back(lambda, std::move(v_lambda));
    }

    // Cross-checks: v = P_w e for the infinite part w, and membership in X^u
    // agrees with the finite-a.e. classification.
    Decomposition dec = fin_inf_decompose(a);
    if (!(result.v == principal_band_project(dec.infinite_part, e)))
        throw std::logic_error("lambda sweep disagrees with the infinite part");
    if (result.in_Xu != (result.v == TreeFn()))
        throw std::logic_error("membership flag disagrees with the sweep infimum");
    return result;
}

SupElement pos_product(const SupElement& a, const SupElement& b) {
    require_same_model(a, b);
    require_nonneg(a, "left factor");
    require_nonneg(b, "right factor");
    return SupElement(fn_mul(a.fn(), b.fn()), TreeFn(), a.model());
}

}  // namespace supcone
