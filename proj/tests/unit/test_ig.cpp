#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "nwfs/delay_matrix.hpp"
#include "nwfs/ig.hpp"
#include "nwfs/neighborhood.hpp"

using namespace nwfs;

TEST(Temperature, DefaultRule) {
    const auto inst = Instance::from_rows({{2, 3}, {1, 2}});
    EXPECT_DOUBLE_EQ(default_temperature(inst), 0.4 * 8.0 / 40.0);
    EXPECT_DOUBLE_EQ(default_temperature(inst, 0.0), 0.0);
}

TEST(Destruct, PartitionsTheSequence) {
    Rng rng(101);
    const auto p = fixtures::random_permutation(rng, 12);
    for (std::size_t d = 1; d < 12; ++d) {
        const auto r = destruct(p.order(), d, rng);
        EXPECT_EQ(r.removed.size(), d);
        EXPECT_EQ(r.partial.size(), 12 - d);
        std::set<JobId> all(r.partial.begin(), r.partial.end());
        all.insert(r.removed.begin(), r.removed.end());
        EXPECT_EQ(all.size(), 12u);
        // survivors keep their relative order
        auto pos = p.position_of();
        for (std::size_t i = 1; i < r.partial.size(); ++i)
            EXPECT_LT(pos[r.partial[i - 1]], pos[r.partial[i]]);
    }
}

TEST(Destruct, NMinusOneLeavesOneJob) {
    Rng rng(103);
    const auto p = fixtures::random_permutation(rng, 6);
    EXPECT_EQ(destruct(p.order(), 5, rng).partial.size(), 1u);
}

TEST(Destruct, RangeErrors) {
    Rng rng(107);
    const auto p = fixtures::random_permutation(rng, 5);
    EXPECT_THROW(destruct(p.order(), 0, rng), InputError);
    EXPECT_THROW(destruct(p.order(), 5, rng), InputError);
}

TEST(Destruct, DeterministicForSeed) {
    Rng data(109);
    const auto p = fixtures::random_permutation(data, 20);
    Rng a(7);
    Rng b(7);
    const auto x = destruct(p.order(), 4, a);
    const auto y = destruct(p.order(), 4, b);
    EXPECT_EQ(x.partial, y.partial);
    EXPECT_EQ(x.removed, y.removed);
}

TEST(Construct, Degenerate) {
    const DelayMatrix dm(Instance::from_rows({{2, 3}, {1, 2}, {4, 1}}));
    const std::vector<JobId> none;
    EXPECT_EQ(construct(dm, {2, 0, 1}, none), (std::vector<JobId>{2, 0, 1}));
    const std::vector<JobId> one{1};
    const DelayMatrix single(Instance::from_rows({{5}, {6}}));
    EXPECT_EQ(construct(single, {}, one), (std::vector<JobId>{1}));
}

TEST(Construct, OverlapThrows) {
    const DelayMatrix dm(Instance::from_rows({{2, 3}, {1, 2}, {4, 1}}));
    const std::vector<JobId> removed{0};
    EXPECT_THROW(construct(dm, {0, 1}, removed), InputError);
}

TEST(Construct, NoWorseThanWorstReinsertionChoice) {
    Rng rng(113);
    for (int t = 0; t < 30; ++t) {
        const DelayMatrix dm(fixtures::random_instance(rng, 7, 4));
        const Permutation opt = local_search(dm, fixtures::random_permutation(rng, 7), rng);
        const auto cut = destruct(opt.order(), 2, rng);
        const auto rebuilt = construct(dm, cut.partial, cut.removed);
        EXPECT_TRUE(Permutation::is_valid(rebuilt));
        Time worst = 0;
        for (std::size_t p0 = 0; p0 <= cut.partial.size(); ++p0) {
            auto a = cut.partial;
            a.insert(a.begin() + static_cast<std::ptrdiff_t>(p0), cut.removed[0]);
            for (std::size_t p1 = 0; p1 <= a.size(); ++p1) {
                auto b = a;
                b.insert(b.begin() + static_cast<std::ptrdiff_t>(p1), cut.removed[1]);
                worst = std::max(worst, dm.evaluate(b));
            }
        }
        EXPECT_LE(dm.evaluate(rebuilt), worst);
    }
}

TEST(Accept, Rules) {
    Rng rng(127);
    EXPECT_TRUE(accept(90, 100, 0.0, rng));
    EXPECT_TRUE(accept(100, 100, 0.0, rng));
    for (int i = 0; i < 1000; ++i)
        EXPECT_FALSE(accept(101, 100, 0.0, rng));
    for (int i = 0; i < 1000; ++i)
        EXPECT_TRUE(accept(50, 100, 3.0, rng));
}

TEST(Accept, MonteCarloRateAtDeltaEqualTemperature) {
    Rng rng(131);
    const int trials = 100000;
    int hits = 0;
    for (int i = 0; i < trials; ++i)
        hits += accept(110, 100, 10.0, rng) ? 1 : 0;
    EXPECT_NEAR(static_cast<double>(hits) / trials, std::exp(-1.0), 0.01);
}

TEST(IteratedGreedy, RequiresAStopRule) {
    Rng rng(137);
    const DelayMatrix dm(fixtures::random_instance(rng, 8, 3));
    IgConfig cfg;
    EXPECT_THROW(iterated_greedy(dm, Permutation::identity(8), cfg), InputError);
}

TEST(IteratedGreedy, ZeroBudgetReturnsLocalSearchOfInit) {
    Rng rng(139);
    const DelayMatrix dm(fixtures::random_instance(rng, 12, 4));
    const auto init = fixtures::random_permutation(rng, 12);
    IgConfig cfg;
    cfg.max_iterations = 0;
    cfg.seed = 5;
    const auto r = iterated_greedy(dm, init, cfg);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_TRUE(is_local_optimum(dm, r.best.order()));
    EXPECT_LE(r.best_makespan, makespan(dm, init).makespan);
    ASSERT_EQ(r.improvement_trace.size(), 1u);
    EXPECT_EQ(r.improvement_trace.front().iteration, 0);
}

TEST(IteratedGreedy, InvariantsAndDeterminism) {
    Rng rng(149);
    const auto inst = fixtures::random_instance(rng, 25, 5);
    const DelayMatrix dm(inst);
    IgConfig cfg;
    cfg.temperature = default_temperature(inst);
    cfg.max_no_improve = 200;
    cfg.seed = 42;
    const auto init = fixtures::random_permutation(rng, 25);
    const auto a = iterated_greedy(dm, init, cfg);
    const auto b = iterated_greedy(dm, init, cfg);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.iterations, b.iterations);
    EXPECT_EQ(a.improvement_trace, b.improvement_trace);
    EXPECT_EQ(a.best_makespan, makespan(dm, a.best).makespan);
    EXPECT_TRUE(is_local_optimum(dm, a.best.order()));
    for (std::size_t i = 1; i < a.improvement_trace.size(); ++i)
        EXPECT_LT(a.improvement_trace[i].makespan, a.improvement_trace[i - 1].makespan);
    EXPECT_EQ(a.improvement_trace.back().makespan, a.best_makespan);
}

TEST(IteratedGreedy, DestructionSizeClampedOnTinyProblems) {
    const DelayMatrix dm(Instance::from_rows({{2, 3}, {1, 2}, {3, 1}}));
    IgConfig cfg;
    cfg.destruction_size = 10;
    cfg.max_iterations = 20;
    const auto r = iterated_greedy(dm, Permutation::identity(3), cfg);
    EXPECT_EQ(r.iterations, 20);
}

TEST(IteratedGreedy, BestEverAcceptanceVariantRuns) {
    Rng rng(151);
    const auto inst = fixtures::random_instance(rng, 15, 5);
    const DelayMatrix dm(inst);
    IgConfig cfg;
    cfg.temperature = default_temperature(inst);
    cfg.acceptance = Acceptance::best_ever;
    cfg.max_iterations = 300;
    const auto r = iterated_greedy(dm, Permutation::identity(15), cfg);
    EXPECT_EQ(r.best_makespan, makespan(dm, r.best).makespan);
}

TEST(IteratedGreedy, ReachesEnumeratedOptimumOnSmallInstance) {
    Rng rng(157);
    const auto inst = fixtures::random_instance(rng, 8, 5);
    const DelayMatrix dm(inst);
    Time best = -1;
    std::vector<JobId> seq(8);
    std::iota(seq.begin(), seq.end(), JobId{0});
    do {
        const Time c = dm.evaluate(seq);
        best = best < 0 ? c : std::min(best, c);
    } while (std::next_permutation(seq.begin(), seq.end()));
    IgConfig cfg;
    cfg.temperature = default_temperature(inst);
    cfg.max_iterations = 2000;
    EXPECT_EQ(iterated_greedy(dm, neh_start(dm), cfg).best_makespan, best);
}

TEST(NehStart, OrdersByDecreasingTotal) {
    // With one job the start is trivially that job; with equal delays order only follows totals.
    const DelayMatrix dm(Instance::from_rows({{1}, {5}, {3}}));
    const auto p = neh_start(dm);
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(makespan(dm, p).makespan, 9);
}
