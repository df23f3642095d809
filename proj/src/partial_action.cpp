#include "partact/partial_action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partact {

PartialAction::PartialAction(GroupPtr group, std::size_t points)
    : group_(std::move(group)), points_(points) {
    if (!group_) throw std::invalid_argument("PartialAction: null group");
    const std::size_t n = group_->order();
    domains_.assign(n, {});
    member_.assign(n * points_, 0);
    maps_.assign(n * points_, kNoPoint);
    for (Point x = 0; x < points_; ++x) {
        domains_[0].push_back(x);
        member_[index(0, x)] = 1;
        maps_[index(0, x)] = x;
    }
}

void PartialAction::check_element(Element g) const {
    if (g >= group_->order())
        throw std::out_of_range("group element " + std::to_string(g) + " out of range");
}

void PartialAction::check_point(Point x) const {
    if (x >= points_) throw std::out_of_range("point " + std::to_string(x) + " out of range");
}

void PartialAction::set_domain(Element g, std::vector<Point> domain) {
    check_element(g);
    std::sort(domain.begin(), domain.end());
    for (std::size_t i = 0; i < domain.size(); ++i) {
        check_point(domain[i]);
        if (i > 0 && domain[i] == domain[i - 1])
            throw std::invalid_argument("duplicate point " + std::to_string(domain[i]) + " in domain of " +
                                        std::to_string(g));
    }
    for (Point x : domains_[g]) member_[index(g, x)] = 0;
    for (Point x : domain) member_[index(g, x)] = 1;
    domains_[g] = std::move(domain);
}

void PartialAction::set_map(Element g, Point from, Point to) {
    check_element(g);
    check_point(from);
    check_point(to);
    Point& slot = maps_[index(g, from)];
    if (slot != kNoPoint && !(g == 0 && slot == to))
        throw std::invalid_argument("duplicate map pair for element " + std::to_string(g) + " at point " +
                                    std::to_string(from));
    slot = to;
}

void PartialAction::clear_map(Element g, Point from) {
    check_element(g);
    check_point(from);
    maps_[index(g, from)] = kNoPoint;
}

void PartialAction::clear_maps(Element g) {
    check_element(g);
    for (Point x = 0; x < points_; ++x) maps_[index(g, x)] = kNoPoint;
}

Point PartialAction::apply(Element g, Point x) const {
    const Point y = image(g, x);
    if (y == kNoPoint)
        throw std::logic_error("sigma_" + std::to_string(g) + " undefined at " + std::to_string(x));
    return y;
}

bool PartialAction::is_global() const {
    for (const auto& d : domains_)
        if (d.size() != points_) return false;
    return true;
}

bool PartialAction::operator==(const PartialAction& other) const {
    return *group_ == *other.group_ && points_ == other.points_ && domains_ == other.domains_ &&
           maps_ == other.maps_;
}

PartialAction global_action(GroupPtr group, std::size_t points, const std::function<Point(Element, Point)>& act) {
    PartialAction pa(group, points);
    std::vector<Point> all(points);
    std::iota(all.begin(), all.end(), 0);
    for (Element g = 1; g < group->order(); ++g) {
        pa.set_domain(g, all);
        for (Point x = 0; x < points; ++x) pa.set_map(g, x, act(g, x));
    }
    return pa;
}

PartialAction trivial_action(GroupPtr group, std::size_t points) { return PartialAction(std::move(group), points); }

PartialAction regular_action(GroupPtr group) {
    const auto& g = *group;
    return global_action(group, g.order(), [&g](Element e, Point x) { return g.mul(e, x); });
}

PartialAction coset_action(GroupPtr group, const Subgroup& k) {
    const auto& g = *group;
    const auto reps = coset_representatives(g, k);
    std::vector<Point> position(g.order());
    for (std::size_t i = 0; i < reps.size(); ++i) position[reps[i]] = static_cast<Point>(i);
    return global_action(group, reps.size(), [&](Element e, Point c) {
        return position[coset_representative(g, k, g.mul(reps[c], g.inv(e)))];
    });
}

PartialAction restrict_action(const PartialAction& pa, const std::vector<Point>& subset) {
    std::vector<Point> position(pa.point_count(), kNoPoint);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= pa.point_count()) throw std::out_of_range("restrict_action: point out of range");
        if (position[subset[i]] != kNoPoint) throw std::invalid_argument("restrict_action: duplicate point");
        position[subset[i]] = static_cast<Point>(i);
    }
    const auto& g = pa.group();
    PartialAction out(pa.group_ptr(), subset.size());
    for (Element e = 1; e < g.order(); ++e) {
        const Element inv = g.inv(e);
        std::vector<Point> dom;
        for (Point x : pa.domain(e)) {
            if (position[x] == kNoPoint) continue;
            const Point pre = pa.image(inv, x);
            if (pre != kNoPoint && position[pre] != kNoPoint) dom.push_back(position[x]);
        }
        out.set_domain(e, std::move(dom));
        for (Point x : subset) {
            const Point y = pa.image(e, x);
            if (y != kNoPoint && position[y] != kNoPoint && pa.in_domain(inv, x))
                out.set_map(e, position[x], position[y]);
        }
    }
    return out;
}

PartialAction disjoint_union(const PartialAction& a, const PartialAction& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("disjoint_union: different groups");
    const auto shift = static_cast<Point>(a.point_count());
    PartialAction out(a.group_ptr(), a.point_count() + b.point_count());
    for (Element e = 1; e < a.group().order(); ++e) {
        std::vector<Point> dom = a.domain(e);
        for (Point x : b.domain(e)) dom.push_back(x + shift);
        out.set_domain(e, std::move(dom));
        for (Point x = 0; x < a.point_count(); ++x)
            if (a.image(e, x) != kNoPoint) out.set_map(e, x, a.image(e, x));
        for (Point x = 0; x < b.point_count(); ++x)
            if (b.image(e, x) != kNoPoint) out.set_map(e, x + shift, b.image(e, x) + shift);
    }
    return out;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::identity_domain: return "identity_domain";
        case ViolationKind::identity_map: return "identity_map";
        case ViolationKind::map_outside_domain: return "map_outside_domain";
        case ViolationKind::map_missing: return "map_missing";
        case ViolationKind::image_outside_domain: return "image_outside_domain";
        case ViolationKind::not_injective: return "not_injective";
        case ViolationKind::inverse_mismatch: return "inverse_mismatch";
        case ViolationKind::extension: return "extension";
    }
    return "unknown";
}

ValidationReport validate_partial_action(const PartialAction& pa) {
    ValidationReport report;
    const auto& G = pa.group();
    const std::size_t n = pa.point_count();
    auto add = [&](ViolationKind kind, Element g, Element h, Point x, std::string msg) {
        report.violations.push_back({kind, g, h, x, std::move(msg)});
    };

    if (pa.domain(0).size() != n) add(ViolationKind::identity_domain, 0, 0, 0, "X_1 is not the whole point set");
    for (Point x = 0; x < n; ++x)
        if (pa.image(0, x) != x)
            add(ViolationKind::identity_map, 0, 0, x, "sigma_1 is not the identity at point " + std::to_string(x));

    // sigma_g must be a bijection X_{g^-1} -> X_g.
    for (Element g = 0; g < G.order(); ++g) {
        const Element gi = G.inv(g);
        std::vector<Point> hits(n, kNoPoint);
        bool bijection = true;
        for (Point x = 0; x < n; ++x) {
            const Point y = pa.image(g, x);
            const bool in_source = pa.in_domain(gi, x);
            if (y == kNoPoint) {
                if (in_source) {
                    bijection = false;
                    add(ViolationKind::map_missing, g, 0, x,
                        "sigma_g not a bijection X_{g^-1}->X_g: undefined at point " + std::to_string(x) +
                            " of X_{g^-1} (g=" + std::to_string(g) + ")");
                }
                continue;
            }
            if (!in_source) {
                bijection = false;
                add(ViolationKind::map_outside_domain, g, 0, x,
                    "sigma_g defined at point " + std::to_string(x) + " outside X_{g^-1} (g=" + std::to_string(g) +
                        ")");
            }
            if (!pa.in_domain(g, y)) {
                bijection = false;
                add(ViolationKind::image_outside_domain, g, 0, x,
                    "sigma_g maps point " + std::to_string(x) + " to " + std::to_string(y) +
                        " outside X_g (g=" + std::to_string(g) + ")");
            }
            if (hits[y] != kNoPoint) {
                bijection = false;
                add(ViolationKind::not_injective, g, 0, x,
                    "sigma_g not injective: points " + std::to_string(hits[y]) + " and " + std::to_string(x) +
                        " both map to " + std::to_string(y) + " (g=" + std::to_string(g) + ")");
            } else {
                hits[y] = x;
            }
        }
        if (bijection) {
            // Injective with image inside X_g; onto iff |X_{g^-1}| = |X_g|.
            if (pa.domain(gi).size() != pa.domain(g).size()) {
                for (Point y : pa.domain(g))
                    if (hits[y] == kNoPoint) {
                        add(ViolationKind::map_missing, g, 0, y,
                            "sigma_g not a bijection X_{g^-1}->X_g: point " + std::to_string(y) +
                                " of X_g is not hit (g=" + std::to_string(g) + ")");
                        break;
                    }
            }
        }
    }

    for (Element g = 0; g < G.order(); ++g) {
        const Element gi = G.inv(g);
        for (Point x = 0; x < n; ++x) {
            const Point y = pa.image(g, x);
            if (y == kNoPoint) continue;
            if (pa.image(gi, y) != x)
                add(ViolationKind::inverse_mismatch, g, gi, x,
                    "sigma_{g^-1} is not the inverse of sigma_g at point " + std::to_string(x) +
                        " (g=" + std::to_string(g) + ")");
        }
    }

    // Extension: x in X_{g^-1}, sigma_g(x) in X_{h^-1} => x in X_{(hg)^-1}, sigma_hg(x) = sigma_h(sigma_g(x)).
    for (Element g = 0; g < G.order(); ++g)
        for (Point x : pa.domain(G.inv(g))) {
            const Point y = pa.image(g, x);
            if (y == kNoPoint) continue;
            for (Element h = 0; h < G.order(); ++h) {
                if (!pa.in_domain(G.inv(h), y)) continue;
                const Point z = pa.image(h, y);
                const Element hg = G.mul(h, g);
                std::ostringstream os;
                os << "extension axiom fails for (g,h,x)=(" << g << "," << h << "," << x << "): ";
                if (!pa.in_domain(G.inv(hg), x)) {
                    os << "x not in X_{(hg)^-1}";
                    add(ViolationKind::extension, g, h, x, os.str());
                } else if (z == kNoPoint || pa.image(hg, x) != z) {
                    os << "sigma_hg(x) != sigma_h(sigma_g(x))";
                    add(ViolationKind::extension, g, h, x, os.str());
                }
            }
        }
    return report;
}

PointType point_type(const PartialAction& pa, Point x) {
    if (x >= pa.point_count()) throw std::out_of_range("point_type: point out of range");
    std::vector<Element> tau;
    for (Element g = 0; g < pa.group().order(); ++g)
        if (pa.in_domain(g, x)) tau.push_back(g);
    return {x, Tuple(std::move(tau))};
}

std::vector<Tuple> point_types(const PartialAction& pa) {
    std::vector<Tuple> out;
    out.reserve(pa.point_count());
    for (Point x = 0; x < pa.point_count(); ++x) out.push_back(point_type(pa, x).tau);
    return out;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // root is the minimal point
    }
    std::vector<std::size_t> parent;
};

}  // namespace

Orbits orbits(const PartialAction& pa) {
    const std::size_t n = pa.point_count();
    UnionFind uf(n);
    for (Element g = 1; g < pa.group().order(); ++g)
        for (Point x = 0; x < n; ++x) {
            const Point y = pa.image(g, x);
            if (y != kNoPoint) uf.unite(x, y);
        }
    Orbits out;
    out.block_of.assign(n, 0);
    std::vector<std::size_t> block_of_root(n, static_cast<std::size_t>(-1));
    for (Point x = 0; x < n; ++x) {
        const std::size_t r = uf.find(x);
        if (block_of_root[r] == static_cast<std::size_t>(-1)) {
            block_of_root[r] = out.blocks.size();
            out.blocks.emplace_back();
        }
        out.block_of[x] = block_of_root[r];
        out.blocks[block_of_root[r]].push_back(x);
    }
    return out;
}

FreenessVerdict is_free(const PartialAction& pa) {
    for (Element g = 1; g < pa.group().order(); ++g)
        for (Point x : pa.domain(pa.group().inv(g)))
            if (pa.image(g, x) == x) return {false, g, x};
    return {};
}

Vector indicator(std::size_t points, const std::vector<Point>& subset) {
    Vector v = zero_vector(points);
    for (Point x : subset) v.at(x) = 1;
    return v;
}

Vector pointwise(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pointwise: size mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Vector alpha(const PartialAction& pa, Element g, const Vector& f) {
    if (f.size() != pa.point_count()) throw std::invalid_argument("alpha: size mismatch");
    const Element gi = pa.group().inv(g);
    Vector out = zero_vector(f.size());
    for (Point x = 0; x < f.size(); ++x) {
        if (sgn(f[x]) == 0) continue;
        if (!pa.in_domain(gi, x))
            throw std::logic_error("alpha_" + std::to_string(g) + ": argument not supported in X_{g^-1}");
        out[pa.apply(g, x)] = f[x];
    }
    return out;
}

std::vector<Vector> invariant_functions(const PartialAction& pa, bool left) {
    const auto& G = pa.group();
    const std::size_t n = pa.point_count();
    // Constraint rows: for every g, every b = delta_y with y in X_g, and every
    // output coordinate, the difference of the two sides is linear in f.
    std::vector<Vector> columns;
    columns.reserve(n);
    for (Point x = 0; x < n; ++x) {
        const Vector f = unit_vector(n, x);
        Vector col;
        for (Element g = 0; g < G.order(); ++g) {
            const Element gi = G.inv(g);
            for (Point y : pa.domain(g)) {
                const Vector b = unit_vector(n, y);
                const Vector fb = left ? pointwise(f, b) : pointwise(b, f);
                const Vector lhs = alpha(pa, gi, fb);
                const Vector ab = alpha(pa, gi, b);
                const Vector rhs = left ? pointwise(f, ab) : pointwise(ab, f);
                for (std::size_t i = 0; i < n; ++i) col.push_back(lhs[i] - rhs[i]);
            }
        }
        columns.push_back(std::move(col));
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    QMatrix m(rows, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    if (n == 0) return {};
    return kernel(m);
}

QuotientAndFixed quotient_and_fixed(const PartialAction& pa) {
    QuotientAndFixed out;
    const auto orb = orbits(pa);
    out.orbit_count = orb.blocks.size();
    for (const auto& block : orb.blocks) out.basis.push_back(indicator(pa.point_count(), block));
    const auto left = invariant_functions(pa, true);
    const auto right = invariant_functions(pa, false);
    out.left_fixed_dimension = left.size();
    out.right_fixed_dimension = right.size();
    out.left_right_agree = same_span(left, right, pa.point_count());
    out.matches_orbit_indicators = same_span(left, out.basis, pa.point_count());
    return out;
}

}  // namespace partact
