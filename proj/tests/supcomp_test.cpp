#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supcone/axioms.hpp"
#include "supcone/errors.hpp"
#include "supcone/supcomp.hpp"
#include "supcone/text.hpp"

#include "oracles.hpp"

using namespace supcone;

namespace {

const ExtReal pinf = ExtReal::pos_inf();

TreeFn konst(long v) { return TreeFn::constant(ExtReal(v)); }

Poly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

TreeFn ramp_k(bool dir = true) { return TreeFn::ramp(dir, poly({0, 1})); }

SupElement adopt(const TreeFn& t, ModelX m = ModelX::Full) {
    return SupElement::adopt(t, m);
}

}  // namespace

TEST_CASE("membership and witnesses") {
    MemberCheck top = member(TreeFn::constant(pinf), ModelX::Bounded);
    REQUIRE(top.witness.has_value());
    CHECK(*top.witness == konst(0));

    TreeFn down = TreeFn::ramp(false, poly({0, -1}));  // -k towards (0)^w
    MemberCheck bad = member(down, ModelX::Bounded);
    CHECK(!bad.witness.has_value());
    CHECK(bad.certificate == "branch (0)^w limit -inf");

    MemberCheck full = member(down, ModelX::Full);
    REQUIRE(full.witness.has_value());
    CHECK(*full.witness == down);  // u itself lies in C^inf(K)

    TreeFn neg_cell = TreeFn::split(TreeFn::constant(ExtReal::neg_inf()), konst(0));
    CHECK(!member(neg_cell, ModelX::Full).witness.has_value());
    CHECK(member(neg_cell, ModelX::Full).certificate == "cell 0 const -inf");

    // mixed tree: witness truncates the infinite leaves, keeps the rest
    TreeFn mixed = TreeFn::split(TreeFn::constant(pinf), ramp_k());
    MemberCheck m = member(mixed, ModelX::Full);
    REQUIRE(m.witness.has_value());
    CHECK(in_model(*m.witness, ModelX::Full));
    CHECK(fn_le(*m.witness, mixed));
    CHECK(eval_at(*m.witness, Cell("0")) == ExtReal(0));

    CHECK_THROWS_AS(SupElement::adopt(neg_cell, ModelX::Full), NotInCone);
    CHECK_THROWS_AS(SupElement(mixed, mixed, ModelX::Full), std::invalid_argument);
}

TEST_CASE("cone addition propagates witnesses") {
    SupElement a(konst(5), konst(-1), ModelX::Bounded);
    SupElement b(TreeFn::split(TreeFn::constant(pinf), konst(1)), konst(-2),
                 ModelX::Bounded);
    SupElement s = cone_add(a, b);
    CHECK(s.witness() == konst(-3));
    CHECK(s.fn() == TreeFn::split(TreeFn::constant(pinf), konst(6)));
    CHECK(cone_add(a, adopt(TreeFn(), ModelX::Bounded)).fn() == a.fn());
}

TEST_CASE("cone lattice and finite sup/inf") {
    SupElement top = adopt(TreeFn::constant(pinf));
    SupElement r = adopt(ramp_k());
    CHECK(cone_inf({top, r}).fn() == ramp_k());
    CHECK(cone_sup({r}).fn() == ramp_k());

    std::vector<SupElement> family;
    for (long n = 1; n <= 4; ++n)
        family.push_back(adopt(TreeFn::split(konst(n), konst(0))));
    CHECK(cone_sup(family).fn() == TreeFn::split(konst(4), konst(0)));

    // an explicit bound that majorizes a member somewhere is rejected
    SupElement bogus = adopt(konst(100));
    CHECK_THROWS_AS(cone_inf({r, adopt(konst(1))}, bogus), NoLowerBound);
    SupElement fine = adopt(konst(-5));
    CHECK(cone_inf({r, adopt(konst(1))}, fine).witness() == fine.witness());
}

TEST_CASE("order-dense truncations") {
    SupElement top = adopt(TreeFn::constant(pinf), ModelX::Bounded);
    std::vector<TreeFn> family = order_dense_witness(top, 0, 5);
    REQUIRE(family.size() == 5);
    for (long n = 1; n <= 5; ++n) CHECK(family[static_cast<std::size_t>(n - 1)] == konst(n));

    SupElement r = adopt(ramp_k(), ModelX::Bounded);
    std::size_t deep = fn_meet(konst(4), ramp_k()).depth();
    std::vector<TreeFn> ramps = order_dense_witness(r, deep, 4);
    for (std::size_t i = 0; i < ramps.size(); ++i) {
        CHECK(in_model(ramps[i], ModelX::Bounded));
        CHECK(fn_le(ramps[i], ramp_k()));
        if (i) CHECK(fn_le(ramps[i - 1], ramps[i]));
    }
    CHECK(ramps.back() == fn_meet(konst(4), ramp_k()));

    SupElement ground = adopt(konst(3), ModelX::Bounded);
    std::vector<TreeFn> self = order_dense_witness(ground, 2, 9);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == konst(3));
}

TEST_CASE("band projections") {
    TreeFn u = TreeFn::split(konst(7), ramp_k());
    CHECK(band_project(ClopenSet::full_space(), u) == u);
    CHECK(band_project(ClopenSet::of({Cell("0")}), konst(3)) ==
          TreeFn::split(konst(3), konst(0)));

    ClopenSet one = ClopenSet::of({Cell("1")});
    TreeFn projected = band_project(one, u);
    CHECK(projected == TreeFn::split(konst(0), ramp_k()));
    for (const BranchPoint& p : oracles::sample_points(8)) {
        ExtReal expected = one.contains(p) ? eval_at(u, p) : ExtReal(0);
        CHECK(eval_at(projected, p) == expected);
    }

    // projecting an element projects its witness
    SupElement e = adopt(u, ModelX::Bounded);
    SupElement pe = band_project(one, e);
    CHECK(fn_le(pe.witness(), pe.fn()));
    CHECK(in_model(pe.witness(), ModelX::Bounded));
    CHECK(band_project(one, band_project(one, u)) == projected);  // idempotent
}

TEST_CASE("support closure") {
    CHECK(support_closure(TreeFn()).is_empty());
    CHECK(principal_band_project(TreeFn(), konst(9)) == TreeFn());
    CHECK(support_closure(TreeFn::split(TreeFn::split(konst(0), konst(1)), konst(0))) ==
          ClopenSet::of({Cell("01")}));

    // prefix (0, 5) then the zero tail: only the rung carrying 5 survives,
    // the branch point is excluded
    TreeFn a = TreeFn::ramp_sequence(true, {ExtReal(0), ExtReal(5)}, Poly(Rational(0)));
    CHECK(support_closure(a) == ClopenSet::of({Cell("10")}));

    // a genuine ramp keeps its branch point but drops its zero rungs
    TreeFn r = ramp_k();
    ClopenSet s = support_closure(r);
    CHECK(s == ClopenSet::of({Cell("1")}));  // rung 0 = [0] carries the value 0
    for (const BranchPoint& p : oracles::sample_points(12)) {
        if (!(eval_at(r, p) == ExtReal(0))) CHECK(s.contains(p));
    }
}

TEST_CASE("finite and infinite parts") {
    SupElement plain = adopt(konst(3));
    Decomposition d0 = fin_inf_decompose(plain);
    CHECK(d0.finite_part == konst(3));
    CHECK(d0.infinite_part == TreeFn());
    CHECK(d0.carrier.is_full());

    SupElement mixed = adopt(TreeFn::split(TreeFn::constant(pinf), ramp_k()));
    Decomposition d1 = fin_inf_decompose(mixed);
    CHECK(d1.carrier == ClopenSet::of({Cell("1")}));
    CHECK(d1.finite_part == TreeFn::split(konst(0), ramp_k()));
    CHECK(d1.infinite_part == TreeFn::split(TreeFn::constant(pinf), konst(0)));
    CHECK(fn_add(d1.finite_part, d1.infinite_part) == mixed.fn());
    CHECK(fn_meet(fn_abs(d1.finite_part), d1.infinite_part) == TreeFn());
    CHECK(classify(d1.finite_part).in_Cinfty);

    // an unbounded ramp is entirely finite part: its infinity is nowhere dense
    SupElement r = adopt(ramp_k());
    Decomposition d2 = fin_inf_decompose(r);
    CHECK(d2.finite_part == ramp_k());
    CHECK(d2.infinite_part == TreeFn());
    CHECK(d2.carrier.is_full());
}

TEST_CASE("riesz decomposition") {
    auto b = [](const TreeFn& t) { return adopt(t, ModelX::Bounded); };
    auto [y0, z0] = riesz_decompose(b(konst(4)), b(konst(2)), b(konst(3)));
    CHECK(y0.fn() == konst(2));
    CHECK(z0.fn() == konst(2));
    // the proof identity: v - z = v /\ (u + v - x)
    TreeFn v_minus_z = fn_add(konst(3), fn_neg(z0.fn()));
    TreeFn identity = fn_meet(konst(3), fn_add(fn_add(konst(2), konst(3)), konst(-4)));
    CHECK(v_minus_z == identity);
    CHECK(fn_le(TreeFn(), v_minus_z));

    auto [y1, z1] = riesz_decompose(adopt(konst(9)), adopt(TreeFn::constant(pinf)),
                                    adopt(konst(0)));
    CHECK(y1.fn() == konst(9));
    CHECK(z1.fn() == TreeFn());

    auto [y2, z2] = riesz_decompose(adopt(ramp_k()), adopt(TreeFn()), adopt(ramp_k()));
    CHECK(y2.fn() == TreeFn());
    CHECK(z2.fn() == ramp_k());

    CHECK_THROWS_AS(riesz_decompose(adopt(konst(9)), adopt(konst(1)), adopt(konst(2))),
                    PreconditionFailed);
    CHECK_THROWS_AS(riesz_decompose(adopt(konst(0)), adopt(konst(1)), adopt(konst(-2))),
                    PreconditionFailed);
}

TEST_CASE("riesz decomposition on random inputs") {
    GenConfig cfg;
    cfg.seed = 4242;
    for (ModelX model : {ModelX::Bounded, ModelX::Full}) {
        cfg.model = model;
        SplitMix64 rng(cfg.seed + (model == ModelX::Full));
        for (int i = 0; i < 60; ++i) {
            SupElement u = gen_element(cfg, rng);
            SupElement v = adopt(gen_positive_fn(cfg, rng), model);
            // x below u + v by construction
            SupElement x = cone_meet(gen_element(cfg, rng), cone_add(u, v));
            auto [y, z] = riesz_decompose(x, u, v);
            CHECK(fn_add(y.fn(), z.fn()) == x.fn());
            CHECK(fn_le(y.fn(), u.fn()));
            CHECK(fn_le(z.fn(), v.fn()));
        }
    }
}

TEST_CASE("truncation certificates") {
    TruncationCert top = truncation_check(adopt(TreeFn::constant(pinf)));
    REQUIRE(top.data.size() == 1);
    CHECK(top.data[0].diverges);
    CHECK(top.verified);

    TruncationCert c3 = truncation_check(adopt(konst(3)));
    REQUIRE(c3.data.size() == 1);
    CHECK(!c3.data[0].diverges);
    CHECK(c3.data[0].stabilizes_at == 3);
    CHECK(c3.verified);

    TruncationCert cr = truncation_check(adopt(ramp_k()));
    CHECK(cr.verified);
    bool branch_diverges = false;
    for (const auto& d : cr.data)
        if (d.diverges && std::holds_alternative<BranchPoint>(d.where))
            branch_diverges = true;
    CHECK(branch_diverges);

    CHECK_THROWS_AS(truncation_check(adopt(konst(-1))), NotPositive);
}

TEST_CASE("infinity test") {
    InfinityTest plain = infinity_test(adopt(konst(3)));
    CHECK(plain.v == TreeFn());
    CHECK(plain.in_Xu);

    InfinityTest half = infinity_test(adopt(TreeFn::split(TreeFn::constant(pinf), TreeFn())));
    CHECK(half.v == TreeFn::split(konst(1), konst(0)));
    CHECK(!half.in_Xu);

    // unbounded but finite a.e.: every sweep member is nonzero, the lattice
    // infimum is still zero
    InfinityTest ramp = infinity_test(adopt(ramp_k()));
    CHECK(ramp.v == TreeFn());
    CHECK(ramp.in_Xu);
    REQUIRE(!ramp.lambda_trace.empty());
    for (const auto& [lambda, v_lambda] : ramp.lambda_trace)
        CHECK(!(v_lambda == TreeFn()));

    CHECK_THROWS_AS(infinity_test(adopt(konst(-2))), NotPositive);
}

TEST_CASE("positive-cone product") {
    SupElement e = adopt(konst(1));
    SupElement r = adopt(ramp_k());
    CHECK(pos_product(e, r).fn() == ramp_k());
    CHECK(pos_product(r, e).fn() == ramp_k());

    SupElement left = adopt(TreeFn::split(konst(1), konst(0)));
    SupElement right = adopt(TreeFn::split(konst(0), TreeFn::constant(pinf)));
    CHECK(pos_product(left, right).fn() == TreeFn());  // 0 * inf = 0 on both halves

    CHECK(pos_product(r, r).fn() == TreeFn::ramp(true, poly({0, 0, 1})));
    CHECK_THROWS_AS(pos_product(adopt(konst(-1)), e), NotPositive);
}

TEST_CASE("product is an f-algebra on random positive elements") {
    GenConfig cfg;
    cfg.seed = 99177;
    SplitMix64 rng(cfg.seed);
    SupElement e = adopt(konst(1));
    for (int i = 0; i < 60; ++i) {
        SupElement a = adopt(gen_positive_fn(cfg, rng));
        SupElement b = adopt(gen_positive_fn(cfg, rng));
        SupElement c = adopt(gen_positive_fn(cfg, rng));
        CHECK(pos_product(a, b).fn() == pos_product(b, a).fn());
        CHECK(pos_product(pos_product(a, b), c).fn() ==
              pos_product(a, pos_product(b, c)).fn());
        CHECK(pos_product(a, cone_add(b, c)).fn() ==
              fn_add(pos_product(a, b).fn(), pos_product(a, c).fn()));
        CHECK(pos_product(a, e).fn() == a.fn());
        // disjointness is preserved by multiplication
        ClopenSet left = ClopenSet::of({Cell("0")});
        SupElement u = adopt(band_project(left, a.fn()));
        SupElement v = adopt(band_project(clopen_complement(left), b.fn()));
        CHECK(fn_meet(u.fn(), v.fn()) == TreeFn());
        CHECK(fn_meet(pos_product(u, c).fn(), v.fn()) == TreeFn());
    }
}
