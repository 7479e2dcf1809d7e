#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmaj/random_instances.hpp"
#include "test_support.hpp"

using namespace gmaj;
using testsup::mk;

namespace {

const decision_trace_entry& trace_entry_for(const sd_result& sd, element_origin origin,
                                            long long index) {
    for (const auto& e : sd.trace)
        if (e.origin == origin && e.index == index) return e;
    REQUIRE(false);
    return sd.trace.front();
}

} // namespace

TEST_CASE("selection walkthrough: both singleton entries selected") {
    const instance inst = mk({1}, {2}, {2}, {3});
    const sd_result sd = classify(inst);
    CHECK(sd.S == std::vector<long long>{1});
    CHECK(sd.Delta == std::vector<long long>{1});
    CHECK(sd.c_sel == std::vector<long long>{2});
    CHECK(sd.d_sel == std::vector<long long>{3});

    // The c entry is processed first (smaller value) and enters by exceeding
    // the bound; the d entry then fails the window test and the surplus test.
    REQUIRE(sd.trace.size() == 2);
    const auto& first = sd.trace[0];
    CHECK(first.origin == element_origin::c_list);
    CHECK(first.q == ext_int(2));
    CHECK(first.branch == decision_branch::q_exceeds);
    CHECK(first.member);
    CHECK(!first.snapshot.window.has_value());

    const auto& second = sd.trace[1];
    CHECK(second.origin == element_origin::d_list);
    CHECK(second.q == ext_int(1));
    CHECK(second.branch == decision_branch::part_b_failed);
    CHECK(second.member);
    CHECK(second.snapshot.in_set_below == 1);
    REQUIRE(second.snapshot.window.has_value());
    CHECK(*second.snapshot.window == 0); // the window test could not accept
}

TEST_CASE("selection walkthrough: window acceptance keeps the c entry out") {
    const instance inst = mk({0}, {5}, {2}, {1});
    const sd_result sd = classify(inst);
    CHECK(sd.S.empty());
    CHECK(sd.Delta == std::vector<long long>{1});

    const auto& dstep = trace_entry_for(sd, element_origin::d_list, 1);
    CHECK(dstep.q == ext_int(2));
    CHECK(dstep.branch == decision_branch::q_exceeds);

    const auto& cstep = trace_entry_for(sd, element_origin::c_list, 1);
    CHECK(cstep.q == ext_int(1));
    CHECK(cstep.branch == decision_branch::part_a_accepted);
    CHECK(!cstep.member);
    REQUIRE(cstep.snapshot.window.has_value());
    CHECK(*cstep.snapshot.window == 1);
}

TEST_CASE("window acceptance is value-insensitive on the a side") {
    const instance inst = mk({5}, {5}, {2}, {1});
    const sd_result sd = classify(inst);
    CHECK(sd.S.empty());
    CHECK(sd.Delta == std::vector<long long>{1});
}

TEST_CASE("derived tables: fixtures") {
    {
        const instance inst = mk({1}, {2}, {2}, {3});
        const sd_result sd = classify(inst);
        const derived_tables tb = compute_tables(inst, sd);
        CHECK(tb.h == 1);
        CHECK(tb.h_prime == 1);
        CHECK(tb.t0 == 0);
        CHECK(tb.m[1] == 0);
        CHECK(tb.t[1] == 1);
        CHECK(tb.z[1] == 1);
        CHECK(tb.mp[1] == 0);
        CHECK(tb.tp[1] == 1);
        CHECK(tb.zp[1] == 0);
        // boundary rows
        CHECK(tb.m[0] == 0);
        CHECK(tb.z[0] == 0);
        CHECK(tb.t[2] == inst.s() + 1);
        CHECK(tb.z[2] == inst.m());
        CHECK(tb.tp[0] == inst.n() + inst.k() - tb.h - tb.h_prime);
    }
    {
        const instance inst = mk({0}, {5}, {2}, {1});
        const sd_result sd = classify(inst);
        const derived_tables tb = compute_tables(inst, sd);
        CHECK(tb.h == 1);
        CHECK(tb.h_prime == 0);
        CHECK(tb.t0 == 1);
        CHECK(tb.mp[1] == 1);
        CHECK(tb.tp[1] == 1);
        CHECK(tb.zp[1] == 1);
    }
}

TEST_CASE("agreement with the literal reference selection") {
    long long count = 0;
    testsup::for_each_sweep_instance([&count](const instance& inst) {
        const sd_result sd = classify(inst);
        const testsup::ref_sets ref = testsup::reference_classify(inst);
        const std::vector<long long> refS(ref.S.begin(), ref.S.end());
        const std::vector<long long> refD(ref.Delta.begin(), ref.Delta.end());
        REQUIRE_MESSAGE(sd.S == refS, inst.str());
        REQUIRE_MESSAGE(sd.Delta == refD, inst.str());
        ++count;
    });
    CHECK(count == 8430);

    std::mt19937_64 rng(2024);
    instance_gen_params params; // lengths up to 5, values in [-3, 6]
    for (int iter = 0; iter < 3000; ++iter) {
        const instance inst = random_instance(rng, params);
        const sd_result sd = classify(inst);
        const testsup::ref_sets ref = testsup::reference_classify(inst);
        REQUIRE_MESSAGE(sd.S == std::vector<long long>(ref.S.begin(), ref.S.end()),
                        inst.str());
        REQUIRE_MESSAGE(sd.Delta ==
                            std::vector<long long>(ref.Delta.begin(), ref.Delta.end()),
                        inst.str());
    }
}

TEST_CASE("table invariants hold on random instances") {
    std::mt19937_64 rng(7);
    instance_gen_params params;
    for (int iter = 0; iter < 3000; ++iter) {
        const instance inst = random_instance(rng, params);
        const sd_result sd = classify(inst);
        const derived_tables tb = compute_tables(inst, sd);
        for (const auto& msg : testsup::table_invariant_violations(inst, sd, tb))
            FAIL_CHECK(msg);
    }
}

TEST_CASE("trace replay reproduces every decision") {
    std::mt19937_64 rng(11);
    instance_gen_params params;
    for (int iter = 0; iter < 2000; ++iter) {
        const instance inst = random_instance(rng, params);
        const sd_result sd = classify(inst);
        for (const auto& msg : testsup::trace_replay_violations(inst, sd))
            FAIL_CHECK(msg);
    }
}

TEST_CASE("incremental decisions agree with their final-table forms") {
    std::mt19937_64 rng(13);
    instance_gen_params params;
    for (int iter = 0; iter < 2000; ++iter) {
        const instance inst = random_instance(rng, params);
        const sd_result sd = classify(inst);
        const derived_tables tb = compute_tables(inst, sd);
        for (const auto& msg : testsup::rewritten_form_violations(inst, sd, tb))
            FAIL_CHECK(msg);
    }
}

TEST_CASE("trace invariants: branch vs membership") {
    std::mt19937_64 rng(17);
    instance_gen_params params;
    for (int iter = 0; iter < 1000; ++iter) {
        const instance inst = random_instance(rng, params);
        const sd_result sd = classify(inst);
        for (const auto& e : sd.trace) {
            if (e.branch == decision_branch::q_exceeds) CHECK(e.member);
            if (e.branch == decision_branch::part_a_accepted) CHECK(!e.member);
            if (e.branch == decision_branch::part_b_passed) CHECK(!e.member);
            if (e.branch == decision_branch::part_b_failed) CHECK(e.member);
        }
    }
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(mk({}, {}, {2}, {2}), precondition_violated);
    CHECK_THROWS_AS(mk({1}, {}, {2}, {3}), precondition_violated); // 1+1 != 1+0
    CHECK_THROWS_AS(instance(testsup::P({}), testsup::P({}), testsup::P({}),
                             testsup::P({1})),
                    precondition_violated);
    CHECK_NOTHROW(mk({}, {}, {2}, {3}));
    CHECK_NOTHROW(mk({-1}, {-2}, {0}, {-5})); // negative entries are legal
}
