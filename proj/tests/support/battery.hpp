#pragma once

// Instance battery shared by the property tests and the acceptance runner.

#include "partact/partial_action.hpp"
#include "partact/tuple_space.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace partact::testing {

struct NamedInstance {
    std::string name;
    PartialAction action;
};

GroupPtr make_group(const std::string& spec);

/// Z2, Z3, Z4, Z5, Z6, S3, D4 (order 8), Q8.
std::vector<std::pair<std::string, GroupPtr>> catalog_groups();

/// Restriction of a random global action (disjoint union of coset actions)
/// to a random subset; at most `max_points` points.
PartialAction random_restriction(const GroupPtr& g, std::mt19937_64& rng, std::size_t max_points = 24);

/// At least `count` randomized valid instances over groups of order <= 8.
std::vector<NamedInstance> random_instances(std::uint64_t seed, std::size_t count);

/// Tuple actions T_n(G) over the catalog.
std::vector<NamedInstance> tuple_instances(std::size_t max_points = 1000);

/// Decomposable instances with |G| <= 8 and |X| <= 24: tuple actions,
/// global and trivial actions, and strata of the random instances.
std::vector<NamedInstance> decomposable_battery(std::uint64_t seed);

/// The small worked examples: trivial Z2 on a point, global trivial Z2 on
/// a point, regular Z2 (the global swap), T_2(Z3).
std::vector<NamedInstance> worked_examples();

}  // namespace partact::testing
