#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supcone/axioms.hpp"
#include "supcone/errors.hpp"
#include "supcone/iso.hpp"

using namespace supcone;

namespace {

FlatFn flat(std::size_t depth, std::vector<ExtReal> values) {
    return FlatFn{depth, std::move(values)};
}

TreeFn konst(long v) { return TreeFn::constant(ExtReal(v)); }

}  // namespace

TEST_CASE("transport between the encodings") {
    CHECK(j_transport(flat(1, {ExtReal(2), ExtReal(5)})) ==
          TreeFn::split(konst(2), konst(5)));
    CHECK(j_transport(flat(0, {ExtReal(3)})) == konst(3));

    FlatFn round = j_inverse(konst(3), 2);
    CHECK(round == flat(2, {ExtReal(3), ExtReal(3), ExtReal(3), ExtReal(3)}));

    CHECK_THROWS_AS(j_inverse(TreeFn::ramp(true, Poly(std::vector<Rational>{
                                                     Rational(0), Rational(1)})),
                              6),
                    NotRepresentable);
}

TEST_CASE("inverse composes to the identity") {
    SplitMix64 rng(606);
    GenConfig cfg;
    cfg.seed = 606;
    for (int i = 0; i < 200; ++i) {
        FlatFn u = gen_flatfn(cfg, rng);
        TreeFn t = j_transport(u);
        FlatFn back = j_inverse(t, u.depth);
        CHECK(j_transport(back) == t);  // same function, canonical both ways
        CHECK(flat_le(back, u));
        CHECK(flat_le(u, back));
    }
}

TEST_CASE("transport preserves the full structure") {
    SplitMix64 rng(707);
    GenConfig cfg;
    cfg.seed = 707;
    for (int i = 0; i < 200; ++i) {
        FlatFn u = gen_flatfn(cfg, rng);
        FlatFn v = gen_flatfn(cfg, rng);
        TreeFn tu = j_transport(u), tv = j_transport(v);
        CHECK(j_transport(flat_add(u, v)) == fn_add(tu, tv));
        Rational lambda(rng.int_in(0, 6), rng.int_in(1, 3));
        CHECK(j_transport(flat_scalar(lambda, u)) == fn_scalar(lambda, tu));
        CHECK(flat_le(u, v) == fn_le(tu, tv));
        CHECK(flat_le(v, u) == fn_le(tv, tu));
        // identity on X: ramp-free finite functions re-encode to themselves
        if (in_model(tu, ModelX::Full)) {
            FlatFn back = j_inverse(tu, u.depth);
            CHECK(j_transport(back) == tu);
        }
    }
}

TEST_CASE("the defining supremum formula") {
    CHECK(j_formula_check(flat(0, {ExtReal(4)}), ModelX::Bounded, 4).ok);
    CHECK(j_formula_check(flat(0, {ExtReal(4)}), ModelX::Bounded, 9).ok);
    CHECK(!j_formula_check(flat(0, {ExtReal(4)}), ModelX::Bounded, 3).ok);

    JFormulaCheck plateau =
        j_formula_check(flat(1, {ExtReal::pos_inf(), ExtReal(1)}), ModelX::Full, 7);
    CHECK(plateau.ok);

    JFormulaCheck failing =
        j_formula_check(flat(1, {ExtReal(9), ExtReal(1)}), ModelX::Full, 5);
    CHECK(!failing.ok);
    REQUIRE(failing.separating_cell.has_value());
    CHECK(failing.separating_cell->word == "0");
}
