#include "partact/tuple_space.hpp"

#include "battery.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace partact;
using partact::testing::make_group;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All subsets of G of size n containing 0, by bitmask.
std::set<Tuple> brute_tuples(const FiniteGroup& g, std::size_t n) {
    std::set<Tuple> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.order()); ++mask) {
        if (!(mask & 1) || static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
        std::vector<Element> m;
        for (Element e = 0; e < g.order(); ++e)
            if (mask >> e & 1) m.push_back(e);
        out.insert(Tuple(m));
    }
    return out;
}

}  // namespace

TEST(TupleSpace, Enumerate) {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto z3 = FiniteGroup::cyclic(3);
    EXPECT_EQ(enumerate_tuples(z2, 2), (std::vector<Tuple>{Tuple({0, 1})}));
    EXPECT_EQ(enumerate_tuples(z3, 2), (std::vector<Tuple>{Tuple({0, 1}), Tuple({0, 2})}));
    EXPECT_TRUE(enumerate_tuples(z2, 3).empty());
}

TEST(TupleSpace, MatchesBruteForceEnumeration) {
    for (const auto& [name, g] : partact::testing::catalog_groups())
        for (std::size_t n = 1; n <= g->order() + 1; ++n) {
            const auto tuples = enumerate_tuples(*g, n);
            EXPECT_EQ(std::set<Tuple>(tuples.begin(), tuples.end()), brute_tuples(*g, n)) << name << " n=" << n;
            EXPECT_TRUE(std::is_sorted(tuples.begin(), tuples.end()));
            EXPECT_EQ(tuple_count(*g, n), binomial(g->order() - 1, n - 1));
        }
}

TEST(TupleSpace, StreamingStopsEarly) {
    std::size_t seen = 0;
    for_each_tuple(FiniteGroup::symmetric(4), 3, [&](const Tuple&) { return ++seen < 5; });
    EXPECT_EQ(seen, 5u);
}

TEST(TupleAction, Examples) {
    const auto z3 = make_group("family:cyclic:3");
    const auto t = tuple_action(z3, 2);
    EXPECT_EQ(t.action.point_count(), 2u);
    EXPECT_EQ(orbits(t.action).blocks.size(), 1u);
    for (const auto& [name, g] : partact::testing::catalog_groups()) {
        const auto one = tuple_action(g, 1).action;
        EXPECT_EQ(one.point_count(), 1u);
        for (Element e = 1; e < g->order(); ++e) EXPECT_TRUE(one.domain(e).empty());
        const auto all = tuple_action(g, g->order()).action;
        EXPECT_EQ(all.point_count(), 1u);
        EXPECT_TRUE(all.is_global());
    }
}

TEST(TupleAction, DomainsAreLeftTranslation) {
    for (const auto& [name, g] : partact::testing::catalog_groups())
        for (std::size_t n = 1; n <= std::min<std::size_t>(g->order(), 4); ++n) {
            const auto t = tuple_action(g, n);
            EXPECT_TRUE(validate_partial_action(t.action).valid()) << name;
            for (Element e = 0; e < g->order(); ++e)
                for (Point x = 0; x < t.action.point_count(); ++x) {
                    EXPECT_EQ(t.action.in_domain(e, x), t.tuples[x].contains(e));
                    const Point y = t.action.image(e, x);
                    if (y != kNoPoint) EXPECT_EQ(t.tuples[y], t.tuples[x].translate(*g, e));
                }
        }
}

TEST(OrbitData, Examples) {
    const auto z4 = FiniteGroup::cyclic(4);
    const auto a = orbit_data(z4, Tuple({0, 2}));
    EXPECT_EQ(a.stabilizer.members(), (std::vector<Element>{0, 2}));
    EXPECT_EQ(a.m, 0u);
    const auto b = orbit_data(z4, Tuple({0, 1}));
    EXPECT_EQ(b.stabilizer.order(), 1u);
    EXPECT_EQ(b.m, 1u);
    EXPECT_EQ(b.reps, (std::vector<Element>{0, 1}));
    const auto c = orbit_data(z4, Tuple({0, 1, 2, 3}));
    EXPECT_EQ(c.stabilizer.order(), 4u);
    EXPECT_EQ(c.m, 0u);
    EXPECT_THROW(orbit_data_with_reps(z4, Tuple({0, 1}), {1, 0}), std::invalid_argument);
    EXPECT_THROW(orbit_data_with_reps(z4, Tuple({0, 1}), {0, 3}), std::invalid_argument);
    EXPECT_EQ(orbit_data_with_reps(z4, Tuple({0, 2}), {0}).m, 0u);
}

TEST(RepresentativeAction, Examples) {
    const auto z4 = make_group("family:cyclic:4");
    const auto a = representative_action(z4, Tuple({0, 2}));
    EXPECT_EQ(a.point_count(), 1u);
    for (Element e = 0; e < 4; ++e) EXPECT_EQ(!a.domain(e).empty(), e == 0 || e == 2);
    const auto s3 = make_group("family:symmetric:3");
    EXPECT_TRUE(representative_action(s3, Tuple({0, 1, 2, 3, 4, 5})).is_global());
    const auto z3 = make_group("family:cyclic:3");
    const auto r = representative_action(z3, Tuple({0, 1}));
    EXPECT_EQ(r.point_count(), 2u);
    EXPECT_TRUE(validate_partial_action(r).valid());
    // Brute force: sigma_g(x) = y iff g in y^-1 H x with H trivial, i.e. y = x g^-1.
    const Element reps[] = {0, 1};
    for (Element g = 0; g < 3; ++g)
        for (Point x = 0; x < 2; ++x) {
            const Point y = r.image(g, x);
            if (y == kNoPoint) continue;
            EXPECT_EQ(z3->mul(z3->inv(reps[y]), reps[x]), g);
        }
    EXPECT_EQ(r.image(1, 0), kNoPoint);
}
