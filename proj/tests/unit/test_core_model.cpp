#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nwfs/delay_matrix.hpp"
#include "nwfs/instance.hpp"
#include "nwfs/permutation.hpp"

using namespace nwfs;

namespace {

Instance two_by_two() { return Instance::from_rows({{2, 3}, {1, 2}}); }

// Values below come from a brute-force earliest-start Gantt search (no delay formula).
Instance three_by_three() { return Instance::from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}); }

}  // namespace

TEST(Instance, RejectsNonPositiveTimes) {
    EXPECT_THROW(Instance(2, 2, {1, 2, 0, 4}), InputError);
    EXPECT_THROW(Instance(2, 2, {1, 2, -3, 4}), InputError);
}

TEST(Instance, RejectsDimensionMismatch) {
    EXPECT_THROW(Instance(2, 2, {1, 2, 3}), InputError);
    EXPECT_THROW(Instance::from_rows({{1, 2}, {3}}), InputError);
    EXPECT_THROW(Instance(0, 2, {}), InputError);
}

TEST(Instance, Totals) {
    const auto inst = two_by_two();
    EXPECT_EQ(inst.job_total(0), 5);
    EXPECT_EQ(inst.job_total(1), 3);
    EXPECT_EQ(inst.total_work(), 8);
    EXPECT_EQ(inst.proc(1, 1), 2);
}

TEST(Permutation, ValidatesBijection) {
    EXPECT_NO_THROW(Permutation({2, 0, 1}));
    EXPECT_THROW(Permutation({0, 0, 1}), InputError);
    EXPECT_THROW(Permutation({0, 3, 1}), InputError);
    EXPECT_THROW(Permutation({-1, 0}), InputError);
    EXPECT_EQ(Permutation::identity(3).order(), (std::vector<JobId>{0, 1, 2}));
    const auto pos = Permutation({2, 0, 1}).position_of();
    EXPECT_EQ(pos, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Delay, TwoJobExample) {
    const auto inst = two_by_two();
    EXPECT_EQ(delay(inst, 0, 1), 4);
    EXPECT_EQ(delay(inst, 1, 0), 1);
}

TEST(Delay, SingleMachineIsFirstOperation) {
    const auto inst = Instance::from_rows({{7}, {3}, {9}});
    EXPECT_EQ(delay(inst, 0, 1), 7);
    EXPECT_EQ(delay(inst, 2, 0), 9);
    EXPECT_EQ(delay(inst, 1, 2), 3);
}

TEST(Delay, Errors) {
    const auto inst = two_by_two();
    EXPECT_THROW(delay(inst, 0, 0), InputError);
    EXPECT_THROW(delay(inst, 0, 2), InputError);
    EXPECT_THROW(delay(inst, -1, 1), InputError);
}

TEST(DelayMatrix, ThreeJobFrozenValues) {
    const DelayMatrix dm(three_by_three());
    EXPECT_EQ(dm.delay(0, 1), 3);
    EXPECT_EQ(dm.delay(0, 2), 3);
    EXPECT_EQ(dm.delay(1, 0), 11);
    EXPECT_EQ(dm.delay(1, 2), 7);
    EXPECT_EQ(dm.delay(2, 0), 9);
    EXPECT_EQ(dm.delay(2, 1), 7);
    const std::vector<std::pair<std::vector<JobId>, Time>> expected = {
        {{0, 1, 2}, 23}, {{0, 2, 1}, 25}, {{1, 0, 2}, 27}, {{1, 2, 0}, 24}, {{2, 0, 1}, 27}, {{2, 1, 0}, 26}};
    for (const auto& [seq, mk] : expected)
        EXPECT_EQ(makespan(dm, Permutation(seq)).makespan, mk);
}

TEST(DelayMatrix, TwoJobMatrixAndTotals) {
    const DelayMatrix dm = build_delay_matrix(two_by_two());
    EXPECT_EQ(dm.delay(0, 1), 4);
    EXPECT_EQ(dm.delay(1, 0), 1);
    EXPECT_EQ(dm.job_total(0), 5);
    EXPECT_EQ(dm.job_total(1), 3);
}

TEST(DelayMatrix, SingleJob) {
    const DelayMatrix dm(Instance::from_rows({{4, 5, 6}}));
    EXPECT_EQ(dm.size(), 1u);
    EXPECT_EQ(dm.job_total(0), 15);
    EXPECT_EQ(makespan(dm, Permutation({0})).makespan, 15);
}

TEST(DelayMatrix, BoundsHoldOnRandomInstances) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = fixtures::random_instance(rng, 2 + trial % 15, 1 + trial % 7);
        const DelayMatrix dm(inst);
        for (std::size_t i = 0; i < inst.n_jobs(); ++i)
            for (std::size_t k = 0; k < inst.n_jobs(); ++k) {
                if (i == k)
                    continue;
                const Time d = dm.delay(JobId(i), JobId(k));
                EXPECT_GE(d, inst.proc(i, 0));
                EXPECT_LE(d, inst.job_total(i));
                EXPECT_EQ(d, delay(inst, JobId(i), JobId(k)));
            }
    }
}

TEST(Makespan, TwoJobExample) {
    const DelayMatrix dm(two_by_two());
    EXPECT_EQ(makespan(dm, Permutation({0, 1})).makespan, 7);
    EXPECT_EQ(makespan(dm, Permutation({1, 0})).makespan, 6);
    EXPECT_EQ(makespan_simulate(two_by_two(), Permutation({0, 1})).makespan, 7);
    EXPECT_EQ(makespan_simulate(two_by_two(), Permutation({1, 0})).makespan, 6);
}

TEST(Makespan, CompletionTimes) {
    const DelayMatrix dm(three_by_three());
    const auto ev = makespan(dm, Permutation({0, 1, 2}), true);
    ASSERT_TRUE(ev.completion.has_value());
    // start times 0, 3, 10; totals 8, 15, 13
    EXPECT_EQ(*ev.completion, (std::vector<Time>{8, 18, 23}));
    EXPECT_EQ(ev.completion->back(), ev.makespan);
    const auto sim = makespan_simulate(three_by_three(), Permutation({0, 1, 2}));
    EXPECT_EQ(sim.makespan, 23);
}

TEST(Makespan, SizeMismatchIsInputError) {
    const DelayMatrix dm(two_by_two());
    EXPECT_THROW(makespan(dm, Permutation({0, 1, 2})), InputError);
    EXPECT_THROW(makespan_simulate(two_by_two(), Permutation({0})), InputError);
}

TEST(Makespan, ExhaustiveAgreementWithSimulation6x4) {
    Rng rng(2024);
    const auto inst = fixtures::random_instance(rng, 6, 4);
    const DelayMatrix dm(inst);
    std::vector<JobId> seq{0, 1, 2, 3, 4, 5};
    int count = 0;
    do {
        const Permutation p(seq);
        ASSERT_EQ(makespan(dm, p).makespan, makespan_simulate(inst, p).makespan) << p.to_string();
        ++count;
    } while (std::next_permutation(seq.begin(), seq.end()));
    EXPECT_EQ(count, 720);
}

TEST(Makespan, PositionIndependenceOfAdjacentPair) {
    // Moving the block (a b) elsewhere changes only the junction terms; the pair keeps d[a][b].
    Rng rng(5);
    const auto inst = fixtures::random_instance(rng, 7, 3);
    const DelayMatrix dm(inst);
    for (int t = 0; t < 30; ++t) {
        const auto p = fixtures::random_permutation(rng, 7);
        const auto seq = p.order();
        Time sum = 0;
        for (std::size_t k = 1; k < seq.size(); ++k)
            sum += dm.delay(seq[k - 1], seq[k]);
        EXPECT_EQ(sum + dm.job_total(seq.back()), makespan(dm, p).makespan);
    }
}

TEST(Makespan, Deterministic) {
    Rng rng(8);
    const auto inst = fixtures::random_instance(rng, 9, 4);
    const DelayMatrix a(inst);
    const DelayMatrix b(inst);
    const auto p = fixtures::random_permutation(rng, 9);
    EXPECT_EQ(makespan(a, p).makespan, makespan(b, p).makespan);
    EXPECT_TRUE(std::equal(a.data(), a.data() + 81, b.data()));
}
