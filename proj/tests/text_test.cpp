#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supcone/axioms.hpp"
#include "supcone/errors.hpp"
#include "supcone/text.hpp"

using namespace supcone;

TEST_CASE("parsing the function grammar") {
    CHECK(parse_treefn("const 3") == TreeFn::constant(ExtReal(3)));
    CHECK(parse_treefn("  const   -2/4 ") == TreeFn::constant(ExtReal(Rational(-1, 2))));
    TreeFn split = parse_treefn("split(const -inf, ramp(1; ; poly[0,1]))");
    CHECK(split == TreeFn::split(TreeFn::constant(ExtReal::neg_inf()),
                                 TreeFn::ramp(true, Poly(std::vector<Rational>{
                                                        Rational(0), Rational(1)}))));
    // prefixes are reified into explicit subcells
    CHECK(parse_treefn("ramp(1; 0, 5; poly[0])") ==
          parse_treefn("split(const 0, split(const 5, const 0))"));

    CHECK_THROWS_AS(parse_treefn("const 3/0"), ParseError);
    CHECK_THROWS_AS(parse_treefn("konst 3"), ParseError);
    CHECK_THROWS_AS(parse_treefn("split(const 1)"), ParseError);
    CHECK_THROWS_AS(parse_treefn("const 1 const 2"), ParseError);
    try {
        parse_treefn("split(const 1; const 2)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 14);
        CHECK(e.expected == "','");
    }
}

TEST_CASE("canonical print round trip") {
    for (const char* s : {
             "const 0",
             "const -22/7",
             "const +inf",
             "split(const 1, const 2)",
             "ramp(0; ; poly[2, -1/3, 1])",
             "split(const -inf, ramp(1; ; poly[0, 1]))",
         }) {
        CHECK(print_fn(parse_treefn(s)) == s);
    }
    CHECK(print_fn(parse_flatfn("flat d=1 [2, 5]")) == "flat d=1 [2, 5]");
    CHECK(print_fn(parse_treefn("split( const 1 ,const 1 )")) == "const 1");
}

TEST_CASE("clopen sets and points") {
    CHECK(parse_clopen("{0,10}").str() == "{0,10}");
    CHECK(parse_clopen("{}").is_empty());
    CHECK(parse_clopen("{e}").is_full());
    CHECK(parse_clopen("{00, 01}").str() == "{0}");

    CHECK(point_str(parse_point("0110")) == "0110");
    CHECK(point_str(parse_point("e")) == "e");
    CHECK(point_str(parse_point("01(1)^w")) == "01(1)^w");
    CHECK(point_str(parse_point("(0)^w")) == "(0)^w");
    CHECK(point_str(parse_point("011(1)^w")) == "01(1)^w");  // normalized
    CHECK_THROWS_AS(parse_point("01(2)^w"), ParseError);
}

TEST_CASE("generated serializations round trip byte-identically") {
    GenConfig cfg;
    cfg.seed = 11;
    SplitMix64 rng(cfg.seed);
    for (int i = 0; i < 400; ++i) {
        TreeFn t = gen_member_fn(cfg, rng);
        std::string s = print_fn(t);
        CHECK(parse_treefn(s) == t);
        CHECK(print_fn(parse_treefn(s)) == s);
    }
    for (int i = 0; i < 100; ++i) {
        FlatFn f = gen_flatfn(cfg, rng);
        std::string s = print_fn(f);
        CHECK(parse_flatfn(s) == f);
        CHECK(print_fn(parse_flatfn(s)) == s);
    }
}
