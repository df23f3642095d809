#pragma once

// The tuple spaces T_n(G): n-subsets of G containing the identity, with the
// partial left-translation action Lt_g(t) = g t defined when g^-1 is in t.

#include "partact/group.hpp"
#include "partact/partial_action.hpp"
#include "partact/tuple.hpp"

#include <functional>
#include <vector>

namespace partact {

/// Visits T_n(G) in lexicographic order without materializing it. The
/// visitor may return false to stop early.
void for_each_tuple(const FiniteGroup& g, std::size_t n, const std::function<bool(const Tuple&)>& visit);
std::vector<Tuple> enumerate_tuples(const FiniteGroup& g, std::size_t n);
/// |T_n(G)| = C(|G|-1, n-1).
std::size_t tuple_count(const FiniteGroup& g, std::size_t n);

/// A partial action whose points are labelled by tuples.
struct TupleSpaceAction {
    PartialAction action;
    std::vector<Tuple> tuples;  // point index -> tuple
};

/// Lt on T_n(G).
TupleSpaceAction tuple_action(GroupPtr g, std::size_t n);
/// Lt on T(G), the disjoint union of T_n(G) for n = 1..|G|.
TupleSpaceAction full_tuple_action(GroupPtr g);

/// Stabilizer H = {h : h t = t}, representatives x_0 = 1, x_1..x_m with
/// t = H x_0 u ... u H x_m, and m = n/|H| - 1.
struct OrbitData {
    Tuple tuple;
    Subgroup stabilizer;
    std::vector<Element> reps;
    std::size_t m = 0;
};

Subgroup tuple_stabilizer(const FiniteGroup& g, const Tuple& t);
/// Representatives are the minimal element of each H-coset inside t.
OrbitData orbit_data(const FiniteGroup& g, const Tuple& t);
/// Uses caller-supplied representatives; throws std::invalid_argument unless
/// reps[0] = 1 and the cosets H reps[j] partition t.
OrbitData orbit_data_with_reps(const FiniteGroup& g, const Tuple& t, std::vector<Element> reps);

/// Index j of the coset H x_j containing `element`, or npos.
std::size_t rep_index(const FiniteGroup& g, const OrbitData& od, Element element);

/// The orbit {x_j^-1 t : j = 0..m} of t under Lt, indexed by j.
std::vector<Tuple> tuple_orbit(const FiniteGroup& g, const OrbitData& od);

/// Partial action on the representatives {x_0..x_m} (point j <-> x_j):
/// X_g = {x : g in x^-1 t} and sigma_g(x) is the unique y in X_g with g in y^-1 H x.
PartialAction representative_action(GroupPtr g, const Tuple& t);

}  // namespace partact
