#include "partact/decomposition.hpp"

#include "battery.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace partact;
using partact::testing::make_group;

namespace {

// Z2 on {a, b} with X_g = {a} and sigma_g the identity there.
PartialAction half_fixed() {
    PartialAction pa(make_group("family:cyclic:2"), 2);
    pa.set_domain(1, {0});
    pa.set_map(1, 0, 0);
    return pa;
}

PartialAction fixed_point_z2() {
    return global_action(make_group("family:cyclic:2"), 1, [](Element, Point x) { return x; });
}

// Point-type sizes by direct domain membership.
std::set<std::size_t> type_sizes(const PartialAction& pa) {
    std::set<std::size_t> out;
    for (Point x = 0; x < pa.point_count(); ++x) {
        std::size_t k = 0;
        for (Element g = 0; g < pa.group().order(); ++g) k += pa.in_domain(g, x);
        out.insert(k);
    }
    return out;
}

}  // namespace

TEST(Decomposition, Examples) {
    const auto t = tuple_action(make_group("family:cyclic:3"), 2).action;
    const auto r = check_decomposition(t, 2);
    ASSERT_TRUE(std::holds_alternative<DecompositionCertificate>(r));
    EXPECT_EQ(std::get<DecompositionCertificate>(r).summands.size(), 1u);
    EXPECT_TRUE(std::holds_alternative<DecompositionCertificate>(
        check_decomposition(trivial_action(make_group("family:cyclic:4"), 3), 1)));
    EXPECT_TRUE(std::holds_alternative<DecompositionCertificate>(
        check_decomposition(regular_action(make_group("family:cyclic:2")), 2)));
}

TEST(Decomposition, RefutationNamesWitness) {
    const auto r = check_decomposition(half_fixed(), 2);
    ASSERT_TRUE(std::holds_alternative<DecompositionRefutation>(r));
    const auto& ref = std::get<DecompositionRefutation>(r);
    EXPECT_EQ(ref.witness, 1u);
    EXPECT_EQ(ref.witness_type_size, 1u);
    EXPECT_FALSE(decomposition_parameter(half_fixed()));
    EXPECT_THROW(require_decomposable(half_fixed()), NotDecomposableError);
}

TEST(Decomposition, ParameterIsTheUniqueTypeSize) {
    for (const auto& inst : partact::testing::random_instances(17, 40)) {
        const auto sizes = type_sizes(inst.action);
        const auto n = decomposition_parameter(inst.action);
        EXPECT_EQ(n.has_value(), sizes.size() == 1) << inst.name;
        if (n) EXPECT_EQ(*n, *sizes.begin());
        for (std::size_t k = 1; k <= inst.action.group().order(); ++k) {
            const auto form = check_ideal_form(inst.action, k);
            const bool cert = std::holds_alternative<DecompositionCertificate>(check_decomposition(inst.action, k));
            EXPECT_EQ(form.covers && form.disjoint, cert) << inst.name << " k=" << k;
        }
    }
}

TEST(Decomposition, SummandsPartitionThePoints) {
    for (const auto& inst : partact::testing::decomposable_battery(2)) {
        const auto cert = require_decomposable(inst.action);
        std::vector<int> seen(inst.action.point_count(), 0);
        for (const auto& s : cert.summands) {
            for (Point x : s.points) ++seen[x];
            for (Point x : s.base_points) EXPECT_EQ(point_type(inst.action, x).tau, s.data.tuple) << inst.name;
            for (std::size_t i = 0; i < s.points.size(); ++i)
                EXPECT_EQ(point_type(inst.action, s.points[i]).tau, s.tuple_orbit[s.component[i]]) << inst.name;
        }
        for (int c : seen) EXPECT_EQ(c, 1) << inst.name;
    }
}

TEST(Stratify, HalfFixedSplitsIntoTwoStrata) {
    const auto pa = half_fixed();
    const auto s = stratify(pa);
    ASSERT_EQ(s.strata.size(), 2u);
    EXPECT_EQ(s.strata[0].k, 2u);
    EXPECT_EQ(s.strata[0].points, (std::vector<Point>{0}));
    EXPECT_TRUE(s.strata[0].action.is_global());
    EXPECT_EQ(s.strata[1].k, 1u);
    EXPECT_EQ(s.strata[1].points, (std::vector<Point>{1}));
    EXPECT_TRUE(verify_stratification(pa, s).ok());
}

TEST(Stratify, DisjointTupleSpaces) {
    const auto z4 = make_group("family:cyclic:4");
    const auto pa = disjoint_union(tuple_action(z4, 2).action, tuple_action(z4, 3).action);
    const auto s = stratify(pa);
    ASSERT_EQ(s.strata.size(), 2u);
    EXPECT_EQ(s.strata[0].k, 3u);
    EXPECT_EQ(s.strata[1].k, 2u);
    EXPECT_EQ(s.strata[0].points.size(), 3u);
    EXPECT_EQ(s.strata[1].points.size(), 3u);
    EXPECT_TRUE(verify_stratification(pa, s).ok());
}

TEST(Stratify, DecomposableHasOneStratumAndEmptyHasNone) {
    const auto t = tuple_action(make_group("family:symmetric:3"), 3).action;
    EXPECT_EQ(stratify(t).strata.size(), 1u);
    const auto empty = trivial_action(make_group("family:cyclic:2"), 0);
    EXPECT_TRUE(stratify(empty).strata.empty());
    EXPECT_TRUE(verify_stratification(empty, stratify(empty)).ok());
}

TEST(Stratify, RandomInstances) {
    for (const auto& inst : partact::testing::random_instances(41, 50)) {
        const auto s = stratify(inst.action);
        const auto check = verify_stratification(inst.action, s);
        EXPECT_TRUE(check.ok()) << inst.name;
        EXPECT_EQ(s.strata.size(), type_sizes(inst.action).size()) << inst.name;
        for (const auto& st : s.strata) EXPECT_TRUE(is_invariant(inst.action, st.points)) << inst.name;
    }
}

TEST(Globalize, TrivialPointBecomesSwap) {
    const auto pa = trivial_action(make_group("family:cyclic:2"), 1);
    const auto glob = globalize(pa);
    EXPECT_EQ(glob.envelope.point_count(), 2u);
    EXPECT_TRUE(glob.envelope.is_global());
    EXPECT_NE(glob.envelope.apply(1, glob.embedding[0]), glob.embedding[0]);
    EXPECT_TRUE(check_enveloping(pa, glob).ok());
}

TEST(Globalize, GlobalActionIsItsOwnEnvelope) {
    const auto pa = regular_action(make_group("family:symmetric:3"));
    const auto glob = globalize(pa);
    EXPECT_EQ(glob.envelope.point_count(), 6u);
    EXPECT_TRUE(check_enveloping(pa, glob).ok());
    const auto fixed = fixed_point_z2();
    const auto g2 = globalize(fixed);
    EXPECT_EQ(g2.envelope, fixed);
    EXPECT_EQ(g2.embedding, (std::vector<Point>{0}));
}

TEST(Globalize, TupleSpaceZ3IsRegular) {
    const auto pa = tuple_action(make_group("family:cyclic:3"), 2).action;
    const auto glob = globalize(pa);
    EXPECT_EQ(glob.envelope.point_count(), 3u);
    EXPECT_TRUE(glob.envelope.is_global());
    EXPECT_TRUE(is_free(glob.envelope).free);
    EXPECT_TRUE(check_enveloping(pa, glob).ok());
}

TEST(Globalize, ExtraFixedPointIsNotCovered) {
    const auto pa = tuple_action(make_group("family:cyclic:3"), 2).action;
    auto glob = globalize(pa);
    glob.envelope = disjoint_union(glob.envelope,
                                   global_action(pa.group_ptr(), 1, [](Element, Point x) { return x; }));
    const auto check = check_enveloping(pa, glob);
    EXPECT_FALSE(check.translates_cover);
    EXPECT_FALSE(check.ok());
    EXPECT_NE(check.violation.find("(3)"), std::string::npos);
}

TEST(Globalize, BrokenEmbeddingIsCaught) {
    const auto pa = tuple_action(make_group("family:cyclic:3"), 2).action;
    auto glob = globalize(pa);
    std::swap(glob.embedding[0], glob.embedding[1]);
    EXPECT_FALSE(check_enveloping(pa, glob).ok());
}

TEST(Globalize, RefusesNonDecomposable) {
    EXPECT_THROW(globalize(half_fixed()), NotDecomposableError);
    const auto glob = globalize_stratified(half_fixed());
    EXPECT_TRUE(check_enveloping(half_fixed(), glob).ok());
    EXPECT_EQ(glob.envelope.point_count(), 3u);
}

TEST(Globalize, SizesAndUniquenessOverBattery) {
    for (const auto& inst : partact::testing::decomposable_battery(3)) {
        const auto& pa = inst.action;
        const auto glob = globalize(pa);
        EXPECT_TRUE(check_enveloping(pa, glob).ok()) << inst.name;
        const auto cert = require_decomposable(pa);
        ASSERT_EQ(glob.summands.size(), cert.summands.size());
        std::size_t total = 0;
        for (std::size_t i = 0; i < cert.summands.size(); ++i) {
            const auto& s = cert.summands[i];
            const std::size_t expect = pa.group().order() / s.data.stabilizer.order() * s.base_points.size();
            EXPECT_EQ(glob.summands[i].size(), expect) << inst.name;
            total += expect;
        }
        EXPECT_EQ(glob.envelope.point_count(), total);
        const auto other = globalize(pa, SectionChoice::maximal);
        EXPECT_TRUE(envelope_isomorphism(glob, other).has_value()) << inst.name;
    }
}

TEST(UnitSystem, Examples) {
    const auto global = equivariant_unit_system(regular_action(make_group("family:cyclic:3")));
    EXPECT_TRUE(global.ok());
    for (const auto& e : global.units) EXPECT_EQ(e, (Vector{1, 1, 1}));
    const auto t = tuple_action(make_group("family:cyclic:3"), 2);
    const auto u = equivariant_unit_system(t.action);
    EXPECT_TRUE(u.ok());
    EXPECT_EQ(u.relations_checked, 9u);
    for (Element g = 0; g < 3; ++g)
        for (Point x = 0; x < 2; ++x) EXPECT_EQ(u.units[g][x], t.tuples[x].contains(g) ? 1 : 0);
    const auto triv = equivariant_unit_system(trivial_action(make_group("family:cyclic:2"), 2));
    EXPECT_TRUE(triv.ok());
    EXPECT_TRUE(is_zero(triv.units[1]));
}

TEST(UnitSystem, HoldsOverBattery) {
    for (const auto& inst : partact::testing::decomposable_battery(4)) {
        const auto u = equivariant_unit_system(inst.action);
        const std::size_t n = inst.action.group().order();
        EXPECT_TRUE(u.ok()) << inst.name;
        EXPECT_EQ(u.relations_checked, n * n);
    }
}
