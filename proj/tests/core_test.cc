// Copyright 2026 The qtransduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "qtd/core/random_stream.h"
#include "qtd/core/sim_time.h"
#include "qtd/core/timeline.h"

namespace qtd {
namespace {

using IntTimeline = Timeline<int>;

SimTime ps(SimTime::rep v) {
    return SimTime::from_ps(v);
}

TEST(SimTime, RejectsNegative) {
    EXPECT_THROW(SimTime::from_ps(-1), std::invalid_argument);
    EXPECT_THROW(ps(3).plus_ps(-1), std::invalid_argument);
}

TEST(SimTime, AdditionSaturates) {
    EXPECT_EQ(ps(5).plus_ps(7).ps(), 12);
    EXPECT_EQ(SimTime::max().plus_ps(1), SimTime::max());
}

TEST(Timeline, EventAtTimeZeroFiresFirst) {
    IntTimeline tl;
    std::vector<int> log;
    auto c = tl.add_component("c", [&](const IntTimeline::EventType &e) { log.push_back(e.payload); });
    tl.schedule(ps(3), c, 3);
    tl.schedule(ps(0), c, 0);
    RunStats stats = tl.run_until(ps(10));
    EXPECT_EQ(stats.events_processed, 2u);
    EXPECT_EQ(log, (std::vector<int>{0, 3}));
}

TEST(Timeline, EqualTimesDeliverInSchedulingOrder) {
    IntTimeline tl;
    std::vector<int> log;
    auto c = tl.add_component("c", [&](const IntTimeline::EventType &e) { log.push_back(e.payload); });
    for (int i = 0; i < 10; ++i) {
        tl.schedule(ps(42), c, i);
    }
    tl.run_until(ps(42));
    EXPECT_EQ(log, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Timeline, PastSchedulingIsCausalityError) {
    IntTimeline tl;
    auto c = tl.add_component("c", [](const IntTimeline::EventType &) {});
    tl.run_until(ps(10));
    EXPECT_THROW(tl.schedule(ps(5), c, 0), CausalityError);
    EXPECT_NO_THROW(tl.schedule(ps(10), c, 0));
}

TEST(Timeline, EmptyQueueAdvancesClock) {
    IntTimeline tl;
    RunStats stats = tl.run_until(ps(1'000'000'000));
    EXPECT_EQ(stats.events_processed, 0u);
    EXPECT_EQ(stats.final_time, ps(1'000'000'000));
}

TEST(Timeline, HandlersCanCascade) {
    IntTimeline tl;
    std::vector<std::pair<SimTime::rep, int>> log;
    ComponentId c = tl.add_component("c");
    tl.set_handler(c, [&](const IntTimeline::EventType &e) {
        log.emplace_back(tl.now().ps(), e.payload);
        if (e.payload == 5) {
            tl.schedule(ps(7), c, 7);
        }
    });
    tl.schedule(ps(5), c, 5);
    RunStats stats = tl.run_until(ps(10));
    EXPECT_EQ(stats.events_processed, 2u);
    ASSERT_EQ(log.size(), 2u);
    EXPECT_EQ(log[0], std::make_pair(SimTime::rep{5}, 5));
    EXPECT_EQ(log[1], std::make_pair(SimTime::rep{7}, 7));
}

TEST(Timeline, EventsPastHorizonStayQueued) {
    IntTimeline tl;
    auto c = tl.add_component("c", [](const IntTimeline::EventType &) {});
    tl.schedule(ps(20), c, 0);
    EXPECT_EQ(tl.run_until(ps(10)).events_processed, 0u);
    EXPECT_EQ(tl.pending(), 1u);
    EXPECT_EQ(tl.run_until(ps(20)).events_processed, 1u);
}

TEST(Timeline, UnknownTargetAndMissingHandler) {
    IntTimeline tl;
    EXPECT_THROW(tl.schedule(ps(0), ComponentId{3}, 0), std::out_of_range);
    auto c = tl.add_component("mute");
    tl.schedule(ps(0), c, 0);
    EXPECT_THROW(tl.run_until(ps(0)), std::logic_error);
}

TEST(TimelineProperty, DeliveryIsTotallyOrdered) {
    std::mt19937_64 gen(12345);
    for (int round = 0; round < 50; ++round) {
        IntTimeline tl;
        struct Seen {
            SimTime time;
            EventId sequence;
        };
        std::vector<Seen> seen;
        SimTime last_clock;
        bool clock_went_back = false;
        ComponentId c = tl.add_component("c");
        std::uniform_int_distribution<int> small(0, 20);
        tl.set_handler(c, [&](const IntTimeline::EventType &e) {
            if (tl.now() < last_clock) {
                clock_went_back = true;
            }
            last_clock = tl.now();
            seen.push_back({e.fire_time, e.sequence});
            if (e.payload > 0) {
                tl.schedule(tl.now().plus_ps(small(gen)), c, e.payload - 1);
            }
        });
        int n = 1 + static_cast<int>(gen() % 200);
        std::set<EventId> ids;
        for (int i = 0; i < n; ++i) {
            ids.insert(tl.schedule(ps(small(gen)), c, static_cast<int>(gen() % 3)));
        }
        EXPECT_EQ(ids.size(), static_cast<std::size_t>(n));
        tl.run_until(SimTime::max());
        EXPECT_FALSE(clock_went_back);
        for (std::size_t i = 1; i < seen.size(); ++i) {
            bool ordered = seen[i - 1].time < seen[i].time ||
                           (seen[i - 1].time == seen[i].time &&
                            seen[i - 1].sequence < seen[i].sequence);
            ASSERT_TRUE(ordered) << "round " << round << " position " << i;
        }
    }
}

TEST(RandomStream, SameSeedAndIdRepeat) {
    RandomStream a(7, "x.y");
    RandomStream b(7, "x.y");
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.draw_unit(), b.draw_unit());
    }
    EXPECT_EQ(a.draws(), 1000u);
}

TEST(RandomStream, DistinctIdsAreIndependent) {
    RandomStream a(0, "source.transducer.upconv");
    RandomStream b(0, "fiber.loss");
    double sa = 0.0;
    double sb = 0.0;
    double sab = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        double x = a.draw_unit();
        double y = b.draw_unit();
        sa += x;
        sb += y;
        sab += x * y;
    }
    EXPECT_NEAR(sa / n, 0.5, 0.02);
    EXPECT_NEAR(sb / n, 0.5, 0.02);
    // Covariance of independent U(0,1) is 0 with sd 1/(12 sqrt(n)).
    EXPECT_NEAR(sab / n - (sa / n) * (sb / n), 0.0, 4.0 / (12.0 * 100.0));
}

TEST(RandomStream, DrawsStayInUnitInterval) {
    RandomStream s(99, "range");
    for (int i = 0; i < 100000; ++i) {
        double u = s.draw_unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(RandomStream, BernoulliLimits) {
    RandomStream s(1, "limits");
    for (int i = 0; i < 1000; ++i) {
        ASSERT_TRUE(s.bernoulli(1.0));
        ASSERT_FALSE(s.bernoulli(0.0));
    }
}

TEST(RandomStream, SeedMixingSeparatesNeighbours) {
    RandomStream a(0, "s");
    RandomStream b(1, "s");
    EXPECT_NE(a.draw_unit(), b.draw_unit());
    EXPECT_NE(mix_seed(1, 2), mix_seed(2, 1));
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(StreamRegistry, StreamsAreStableAndIsolated) {
    StreamRegistry reg(5);
    RandomStream &first = reg.stream("alpha");
    double first_draw = first.draw_unit();
    reg.stream("beta").draw_unit();
    EXPECT_EQ(&first, &reg.stream("alpha"));
    RandomStream fresh(5, "alpha");
    EXPECT_EQ(first_draw, fresh.draw_unit());
    EXPECT_EQ(reg.ids(), (std::vector<std::string>{"alpha", "beta"}));
}

TEST(StreamRegistry, AddingAStreamDoesNotPerturbAnother) {
    StreamRegistry lone(3);
    StreamRegistry crowded(3);
    crowded.stream("other").draw_unit();
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(lone.stream("target").draw_unit(), crowded.stream("target").draw_unit());
    }
}

}  // namespace
}  // namespace qtd
