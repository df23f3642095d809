#pragma once

// Partial actions of a finite group on a finite discrete set {0..N-1}.
//
// For each group element g the action stores a domain X_g and a partial
// bijection sigma_g : X_{g^-1} -> X_g. At the function-algebra level this
// is the partial action on C(X) with ideals C(X_g) and
// alpha_g(f) = f o sigma_{g^-1}.

#include "partact/group.hpp"
#include "partact/rational.hpp"
#include "partact/tuple.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace partact {

using Point = std::uint32_t;
inline constexpr Point kNoPoint = std::numeric_limits<Point>::max();

class PartialAction {
public:
    /// The identity acts on every point; every other domain starts empty.
    PartialAction(GroupPtr group, std::size_t points);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    std::size_t point_count() const { return points_; }

    /// Replaces X_g. Indices must be in range; duplicates are rejected.
    void set_domain(Element g, std::vector<Point> domain);
    /// Sets sigma_g(from) = to. Throws if sigma_g(from) was already set.
    void set_map(Element g, Point from, Point to);
    void clear_map(Element g, Point from);
    void clear_maps(Element g);

    const std::vector<Point>& domain(Element g) const { return domains_[g]; }
    bool in_domain(Element g, Point x) const { return member_[index(g, x)] != 0; }
    /// sigma_g(x) or kNoPoint.
    Point image(Element g, Point x) const { return maps_[index(g, x)]; }
    /// sigma_g(x); throws std::logic_error if undefined.
    Point apply(Element g, Point x) const;

    /// True when every X_g is the whole point set.
    bool is_global() const;

    bool operator==(const PartialAction& other) const;

private:
    std::size_t index(Element g, Point x) const { return static_cast<std::size_t>(g) * points_ + x; }
    void check_element(Element g) const;
    void check_point(Point x) const;

    GroupPtr group_;
    std::size_t points_;
    std::vector<std::vector<Point>> domains_;
    std::vector<std::uint8_t> member_;
    std::vector<Point> maps_;
};

/// Global action from a point map (g, x) -> g.x.
PartialAction global_action(GroupPtr group, std::size_t points, const std::function<Point(Element, Point)>& act);
/// X_g empty for g != 1.
PartialAction trivial_action(GroupPtr group, std::size_t points);
/// Left translation of G on itself.
PartialAction regular_action(GroupPtr group);
/// G acting on the cosets Kx (ordered as left_cosets) by Kx -> Kxg^-1.
PartialAction coset_action(GroupPtr group, const Subgroup& k);

/// Restriction to an arbitrary subset S (sorted, distinct): X'_g = {x in S cap X_g : sigma_{g^-1}(x) in S}.
/// Points are renumbered by their position in `subset`.
PartialAction restrict_action(const PartialAction& pa, const std::vector<Point>& subset);
/// Points of `b` are shifted by a.point_count().
PartialAction disjoint_union(const PartialAction& a, const PartialAction& b);

enum class ViolationKind {
    identity_domain,
    identity_map,
    map_outside_domain,
    map_missing,
    image_outside_domain,
    not_injective,
    inverse_mismatch,
    extension,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    Element g = 0;
    Element h = 0;
    Point x = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks sigma_1 = id on X_1 = X, that each sigma_g is a bijection
/// X_{g^-1} -> X_g with sigma_{g^-1} = sigma_g^-1, and the extension axiom.
ValidationReport validate_partial_action(const PartialAction& pa);

struct PointType {
    Point point = 0;
    Tuple tau;  // {g : x in X_g}
};

PointType point_type(const PartialAction& pa, Point x);
std::vector<Tuple> point_types(const PartialAction& pa);

/// Orbit partition; blocks sorted, ordered by minimal point.
struct Orbits {
    std::vector<std::vector<Point>> blocks;
    std::vector<std::size_t> block_of;  // point -> block index
};
Orbits orbits(const PartialAction& pa);

struct FreenessVerdict {
    bool free = true;
    std::optional<Element> witness_element;
    std::optional<Point> witness_point;
};
FreenessVerdict is_free(const PartialAction& pa);

/// G-invariant functions on X. The fixed subspace is computed from both
/// one-sided forms of the invariance condition by exact elimination and
/// compared with the span of orbit indicators.
struct QuotientAndFixed {
    std::size_t orbit_count = 0;
    std::vector<Vector> basis;  // orbit indicator functions, in orbit order
    std::size_t left_fixed_dimension = 0;
    std::size_t right_fixed_dimension = 0;
    bool left_right_agree = false;
    bool matches_orbit_indicators = false;
};
QuotientAndFixed quotient_and_fixed(const PartialAction& pa);

/// Fixed subspace as a kernel basis; `left` selects the form
/// alpha_{g^-1}(f b) = f alpha_{g^-1}(b) versus alpha_{g^-1}(b f) = alpha_{g^-1}(b) f.
std::vector<Vector> invariant_functions(const PartialAction& pa, bool left);

/// alpha_g(f) = f o sigma_{g^-1} for f supported in X_{g^-1}; throws
/// std::logic_error when f has support outside X_{g^-1}.
Vector alpha(const PartialAction& pa, Element g, const Vector& f);
/// Pointwise product of functions on X.
Vector pointwise(const Vector& a, const Vector& b);
Vector indicator(std::size_t points, const std::vector<Point>& subset);

}  // namespace partact
