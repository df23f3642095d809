#include "partact/instance_format.hpp"
#include "partact/partial_action.hpp"
#include "partact/tuple_space.hpp"

#include "battery.hpp"

#include <gtest/gtest.h>

using namespace partact;
using partact::testing::make_group;

namespace {

bool has_kind(const ValidationReport& r, ViolationKind kind) {
    for (const auto& v : r.violations)
        if (v.kind == kind) return true;
    return false;
}

PartialAction swap_z2() { return regular_action(make_group("family:cyclic:2")); }

}  // namespace

TEST(Validate, GlobalActionsAreValid) {
    for (const auto& [name, g] : partact::testing::catalog_groups()) {
        EXPECT_TRUE(validate_partial_action(regular_action(g)).valid()) << name;
        EXPECT_TRUE(validate_partial_action(trivial_action(g, 3)).valid()) << name;
    }
}

TEST(Validate, HalfDefinedMapIsNotABijection) {
    PartialAction pa(make_group("family:cyclic:2"), 2);
    pa.set_domain(1, {0, 1});
    pa.set_map(1, 0, 1);
    const auto r = validate_partial_action(pa);
    ASSERT_FALSE(r.valid());
    EXPECT_TRUE(has_kind(r, ViolationKind::map_missing));
    bool named = false;
    for (const auto& v : r.violations) named |= v.message.find("not a bijection") != std::string::npos;
    EXPECT_TRUE(named);
}

TEST(Validate, DeletedCompositeBreaksExtension) {
    // Z4 on two points: odd elements swap, 2 fixes. Dropping sigma_2 leaves
    // sigma_1 o sigma_1 without an extension.
    PartialAction pa(make_group("family:cyclic:4"), 2);
    for (Element g : {1, 3}) {
        pa.set_domain(g, {0, 1});
        pa.set_map(g, 0, 1);
        pa.set_map(g, 1, 0);
    }
    auto full = pa;
    full.set_domain(2, {0, 1});
    full.set_map(2, 0, 0);
    full.set_map(2, 1, 1);
    EXPECT_TRUE(validate_partial_action(full).valid());
    const auto r = validate_partial_action(pa);
    ASSERT_FALSE(r.valid());
    EXPECT_TRUE(has_kind(r, ViolationKind::extension));
    EXPECT_NE(r.violations.front().message.find("(g,h,x)"), std::string::npos);
}

TEST(Validate, InverseMismatch) {
    PartialAction pa(make_group("family:cyclic:3"), 2);
    pa.set_domain(1, {0, 1});
    pa.set_domain(2, {0, 1});
    pa.set_map(1, 0, 1);
    pa.set_map(1, 1, 0);
    pa.set_map(2, 0, 0);
    pa.set_map(2, 1, 1);
    EXPECT_TRUE(has_kind(validate_partial_action(pa), ViolationKind::inverse_mismatch));
}

TEST(Validate, RestrictionsOfGlobalActionsAreValid) {
    std::mt19937_64 rng(3);
    for (const auto& [name, g] : partact::testing::catalog_groups())
        for (int i = 0; i < 10; ++i) {
            const auto pa = partact::testing::random_restriction(g, rng);
            EXPECT_TRUE(validate_partial_action(pa).valid()) << name;
        }
}

TEST(PointType, Examples) {
    const auto g = make_group("family:symmetric:3");
    const auto global = regular_action(g);
    for (Point x = 0; x < 6; ++x) EXPECT_EQ(point_type(global, x).tau.size(), 6u);
    const auto triv = trivial_action(g, 2);
    EXPECT_EQ(point_type(triv, 1).tau, Tuple({0}));
    const auto t = tuple_action(make_group("family:cyclic:3"), 2);
    for (Point x = 0; x < 2; ++x) EXPECT_EQ(point_type(t.action, x).tau, t.tuples[x]);
}

TEST(Orbits, Examples) {
    const auto triv = trivial_action(make_group("family:cyclic:3"), 4);
    EXPECT_EQ(orbits(triv).blocks.size(), 4u);
    const auto t = tuple_action(make_group("family:cyclic:3"), 2);
    EXPECT_EQ(orbits(t.action).blocks, (std::vector<std::vector<Point>>{{0, 1}}));
    EXPECT_EQ(orbits(swap_z2()).blocks.size(), 1u);
}

TEST(Freeness, Examples) {
    EXPECT_TRUE(is_free(swap_z2()).free);
    EXPECT_TRUE(is_free(trivial_action(make_group("family:cyclic:2"), 3)).free);
    const auto fixed = global_action(make_group("family:cyclic:2"), 1, [](Element, Point x) { return x; });
    const auto v = is_free(fixed);
    EXPECT_FALSE(v.free);
    EXPECT_EQ(v.witness_element, Element{1});
    EXPECT_EQ(v.witness_point, Point{0});
}

TEST(QuotientAndFixed, Examples) {
    const auto triv = quotient_and_fixed(trivial_action(make_group("family:cyclic:2"), 3));
    EXPECT_EQ(triv.orbit_count, 3u);
    EXPECT_EQ(triv.basis.size(), 3u);
    const auto t = quotient_and_fixed(tuple_action(make_group("family:cyclic:3"), 2).action);
    EXPECT_EQ(t.orbit_count, 1u);
    EXPECT_EQ(t.left_fixed_dimension, 1u);
    const auto s = quotient_and_fixed(swap_z2());
    ASSERT_EQ(s.basis.size(), 1u);
    EXPECT_EQ(s.basis[0], (Vector{1, 1}));
    for (const auto& q : {triv, t, s}) {
        EXPECT_TRUE(q.left_right_agree);
        EXPECT_TRUE(q.matches_orbit_indicators);
    }
}

TEST(QuotientAndFixed, FixedDimensionIsOrbitCountOnRandomInstances) {
    for (const auto& inst : partact::testing::random_instances(21, 24)) {
        const auto q = quotient_and_fixed(inst.action);
        EXPECT_EQ(q.left_fixed_dimension, q.orbit_count) << inst.name;
        EXPECT_EQ(q.right_fixed_dimension, q.orbit_count) << inst.name;
        EXPECT_TRUE(q.matches_orbit_indicators) << inst.name;
    }
}

TEST(Alpha, ComposesAsFunctionTransport) {
    const auto t = tuple_action(make_group("family:cyclic:3"), 2);
    const auto& pa = t.action;
    for (Element g = 0; g < 3; ++g) {
        const Vector f = indicator(2, pa.domain(pa.group().inv(g)));
        EXPECT_EQ(alpha(pa, g, f), indicator(2, pa.domain(g)));
    }
    EXPECT_THROW(alpha(pa, 1, Vector{1, 1}), std::logic_error);
}

TEST(Restrict, RenumbersPoints) {
    const auto swap = swap_z2();
    const auto one = restrict_action(swap, {1});
    EXPECT_EQ(one.point_count(), 1u);
    EXPECT_TRUE(one.domain(1).empty());
    const auto both = disjoint_union(swap, trivial_action(swap.group_ptr(), 1));
    EXPECT_EQ(both.point_count(), 3u);
    EXPECT_EQ(both.domain(1), (std::vector<Point>{0, 1}));
}

TEST(InstanceFormat, TupleSpaceFile) {
    const std::string text =
        "# T_2(Z3)\n"
        "group family:cyclic:3\n"
        "points 2\n"
        "domain g=1: 1\n"
        "domain g=2: 0\n"
        "map g=1: 0->1\n"
        "map g=2: 1->0\n";
    const auto pa = parse_instance(text);
    EXPECT_EQ(pa.point_count(), 2u);
    EXPECT_TRUE(validate_partial_action(pa).valid());
    EXPECT_EQ(parse_instance(serialize_instance(pa)), pa);
}

TEST(InstanceFormat, IdentityDomainDefaultsToAllPoints) {
    const auto pa = parse_instance("group family:cyclic:2\npoints 3\n");
    EXPECT_EQ(pa.domain(0), (std::vector<Point>{0, 1, 2}));
    EXPECT_EQ(pa.image(0, 2), 2u);
}

TEST(InstanceFormat, MapPairOutOfRange) {
    try {
        parse_instance_unchecked("group family:cyclic:2\npoints 3\ndomain g=1: 0\nmap g=1: 5->0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("(5,0)"), std::string::npos);
    }
}

TEST(InstanceFormat, Errors) {
    EXPECT_THROW(parse_instance_unchecked("points 2\n"), ParseError);
    EXPECT_THROW(parse_instance_unchecked("group family:cyclic:2\n"), ParseError);
    EXPECT_THROW(parse_instance_unchecked("group family:cyclic:2\npoints 2\nfrobnicate\n"), ParseError);
    EXPECT_THROW(parse_instance_unchecked("group family:cyclic:2\npoints 2\ndomain g=7: 0\n"), ParseError);
    EXPECT_THROW(parse_instance_unchecked("group family:cyclic:2\npoints 2\ndomain g=1: 0 0\n"), ParseError);
    EXPECT_THROW(parse_instance("group family:cyclic:2\npoints 2\ndomain g=1: 0 1\nmap g=1: 0->1\n"),
                 InvalidInstanceError);
}

TEST(InstanceFormat, TableGroup) {
    const auto pa = parse_instance("group table 2\n0 1\n1 0\npoints 1\n");
    EXPECT_EQ(pa.group().order(), 2u);
    EXPECT_THROW(parse_instance_unchecked("group table 2\n0 1\n1 1\npoints 1\n"), ParseError);
}

TEST(InstanceFormat, RoundTripsRandomInstances) {
    for (const auto& inst : partact::testing::random_instances(5, 30)) {
        const auto text = serialize_instance(inst.action);
        EXPECT_EQ(parse_instance(text), inst.action) << inst.name;
        EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    }
}
