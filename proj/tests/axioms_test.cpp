#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supcone/axioms.hpp"
#include "supcone/text.hpp"

using namespace supcone;

TEST_CASE("splitmix64 is the documented sequence") {
    SplitMix64 rng(1234567ULL);
    // frozen first outputs of the reference mixer
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("generation is deterministic per config") {
    GenConfig cfg;
    cfg.seed = 42;
    SupElement a = gen_element(cfg);
    SupElement b = gen_element(cfg);
    CHECK(a.fn() == b.fn());
    CHECK(a.witness() == b.witness());

    cfg.seed = 43;
    CHECK(!(gen_element(cfg).fn() == a.fn()));
}

TEST_CASE("structural generation knobs") {
    GenConfig cfg;
    cfg.seed = 1;
    cfg.max_depth = 0;
    cfg.ramp_probability = Rational(0);
    SupElement c = gen_element(cfg);
    CHECK(c.fn().is_leaf());

    cfg.model = ModelX::Bounded;
    cfg.inf_probability = Rational(0);
    cfg.ramp_probability = Rational(0);
    cfg.max_depth = 3;
    SplitMix64 rng(9);
    for (int i = 0; i < 50; ++i)
        CHECK(classify(gen_element(cfg, rng).fn()).in_CK);
}

TEST_CASE("suite passes on a healthy build") {
    GenConfig cfg;
    cfg.seed = 5;
    SuiteReport report = run_suite(cfg, 25);
    CHECK(report.all_passed());
    CHECK(report.checks.size() == suite_check_names().size());
    for (const auto& check : report.checks) CHECK(check.trials == 25);
}

TEST_CASE("a corrupted meet is caught with a working reproducer") {
    GenConfig cfg;
    cfg.seed = 17;
    SuiteReport bad = run_suite(cfg, 20, FaultInjection::CorruptMeet);
    CHECK(!bad.all_passed());

    const Failure* failure = nullptr;
    for (const auto& check : bad.checks)
        if (!check.failures.empty()) failure = &check.failures.front();
    REQUIRE(failure != nullptr);

    // replaying the failing trial reproduces exactly one failure
    SuiteReport replay = run_suite(cfg, 1, FaultInjection::CorruptMeet, failure->check,
                                   failure->trial);
    REQUIRE(replay.checks.size() == 1);
    REQUIRE(replay.checks[0].failures.size() == 1);
    CHECK(replay.checks[0].failures[0].message == failure->message);

    // and the report carries the one-line replay command
    CHECK(bad.str().find("--check " + failure->check) != std::string::npos);

    // the healthy path on the same seeds stays green
    CHECK(run_suite(cfg, 20).all_passed());
}
