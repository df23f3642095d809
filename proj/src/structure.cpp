#include "partact/structure.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace partact {

namespace {

std::vector<std::vector<Point>> h_orbits(const PartialAction& pa, const Subgroup& h, const std::vector<Point>& xs) {
    std::vector<std::vector<Point>> out;
    std::vector<Point> seen;
    for (Point y : xs) {
        if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
        std::vector<Point> orbit;
        for (Element e : h.members()) orbit.push_back(pa.apply(e, y));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        seen.insert(seen.end(), orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

Subgroup point_stabilizer(const PartialAction& pa, const Subgroup& h, Point y) {
    std::vector<Element> k;
    for (Element e : h.members())
        if (pa.apply(e, y) == y) k.push_back(e);
    return Subgroup(std::move(k));
}

bool invariant_function(const PartialAction& pa, const Vector& f) {
    for (Element e = 1; e < pa.group().order(); ++e)
        for (Point x : pa.domain(pa.group().inv(e)))
            if (f[pa.apply(e, x)] != f[x]) return false;
    return true;
}

void finish(StructureReport& r) {
    r.total_dimension = 0;
    r.k0_rank = 0;
    for (const auto& b : r.blocks) {
        r.total_dimension += b.dimension();
        r.k0_rank += b.simple_count;
    }
    r.k1 = 0;
}

}  // namespace

std::string Block::label() const {
    return "M_" + std::to_string(matrix_size) + "[" + coefficient_label + "]";
}

std::string StructureReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? " ⊕ " : "") << blocks[i].label();
    if (blocks.empty()) os << "0";
    os << ", dim " << total_dimension;
    return os.str();
}

StructureReport crossed_product_structure(const PartialAction& pa) {
    const auto& g = pa.group();
    StructureReport r;
    for (Element e = 0; e < g.order(); ++e) r.basis_dimension += pa.domain(e).size();
    const auto strat = stratify(pa);
    for (const auto& st : strat.strata) {
        for (const auto& s : st.certificate.summands) {
            const Subgroup& h = s.data.stabilizer;
            for (const auto& orbit : h_orbits(st.action, h, s.base_points)) {
                Block b;
                b.stratum = st.k;
                b.orbit_key = s.key();
                b.base = s.data.tuple;
                b.point_orbit_key = st.points[orbit.front()];
                b.point_orbit_size = orbit.size();
                b.matrix_size = (s.data.m + 1) * orbit.size();
                b.coefficient = point_stabilizer(st.action, h, orbit.front());
                b.coefficient_label = describe_subgroup(g, b.coefficient);
                b.simple_count = conjugacy_class_count(g, b.coefficient);
                r.blocks.push_back(std::move(b));
            }
        }
    }
    finish(r);
    return r;
}

StructureReport partial_group_algebra(const FiniteGroup& g, std::size_t max_order) {
    if (g.order() > max_order)
        throw GroupTooLargeError("group order " + std::to_string(g.order()) + " exceeds the cap " +
                                 std::to_string(max_order));
    StructureReport r;
    for (std::size_t n = 1; n <= g.order(); ++n) {
        for_each_tuple(g, n, [&](const Tuple& t) {
            // Only the minimal tuple of each orbit contributes a block.
            for (Element x : t.members())
                if (t.translate(g, g.inv(x)) < t) return true;
            const OrbitData od = orbit_data(g, t);
            Block b;
            b.stratum = n;
            b.orbit_key = t;
            b.base = t;
            b.point_orbit_size = 1;
            b.matrix_size = od.m + 1;
            b.coefficient = od.stabilizer;
            b.coefficient_label = describe_subgroup(g, b.coefficient);
            b.simple_count = conjugacy_class_count(g, b.coefficient);
            r.blocks.push_back(std::move(b));
            return true;
        });
        for (Element e = 0; e < g.order(); ++e) {
            // |T_n(G)_e| = C(N-2, n-2) for e != 1, C(N-1, n-1) for e = 1.
            if (e == 0) r.basis_dimension += tuple_count(g, n);
            else if (n >= 2) {
                std::size_t c = 1;
                const std::size_t top = g.order() - 2, k = n - 2;
                for (std::size_t i = 1; i <= k; ++i) c = c * (top - k + i) / i;
                r.basis_dimension += c;
            }
        }
    }
    finish(r);
    return r;
}

std::size_t partial_group_algebra_dimension(std::size_t group_order) {
    if (group_order == 0) return 0;
    if (group_order == 1) return 1;
    return (std::size_t{1} << (group_order - 1)) + (group_order - 1) * (std::size_t{1} << (group_order - 2));
}

FixedPointReport fixed_point_structure(const PartialAction& pa) {
    const auto& g = pa.group();
    FixedPointReport out;
    const auto strat = stratify(pa);
    std::vector<Vector> all;
    for (const auto& st : strat.strata) {
        for (const auto& s : st.certificate.summands) {
            FixedPointSummand fs;
            fs.stratum = st.k;
            fs.orbit_key = s.key();
            fs.base = s.data.tuple;
            fs.stabilizer = s.data.stabilizer;
            for (const auto& orbit : h_orbits(st.action, s.data.stabilizer, s.base_points)) {
                const Vector a = indicator(st.action.point_count(), orbit);
                Vector local = zero_vector(st.action.point_count());
                for (Element x : s.data.reps) axpy(local, Rational(1), alpha(st.action, g.inv(x), a));
                Vector f = zero_vector(pa.point_count());
                for (Point y = 0; y < st.points.size(); ++y) f[st.points[y]] = local[y];
                fs.inclusions.push_back(f);
                all.push_back(std::move(f));
            }
            fs.fixed_dimension = fs.inclusions.size();
            out.total_dimension += fs.fixed_dimension;
            out.summands.push_back(std::move(fs));
        }
    }
    const auto qf = quotient_and_fixed(pa);
    out.orbit_count = qf.orbit_count;
    out.inclusions_invariant =
        std::all_of(all.begin(), all.end(), [&](const Vector& f) { return invariant_function(pa, f); });
    out.matches_quotient = all.size() == qf.basis.size() && same_span(all, qf.basis, pa.point_count());
    return out;
}

KTheory k_theory(const StructureReport& report) {
    KTheory k;
    for (const auto& b : report.blocks) k.k0_rank += b.simple_count;
    return k;
}

MoritaCheck morita_consistency(const PartialAction& pa) {
    const auto& g = pa.group();
    MoritaCheck out;
    const auto strat = stratify(pa);
    for (const auto& st : strat.strata) {
        const GlobalizedAction glob = globalize(st.action);
        const PartialAction& env = glob.envelope;
        for (const auto& s : st.certificate.summands) {
            const Subgroup& h = s.data.stabilizer;
            const std::size_t index = g.order() / h.order();
            for (const auto& orbit : h_orbits(st.action, h, s.base_points)) {
                ++out.orbits_checked;
                const Point y = orbit.front();
                const Point p = glob.embedding[y];
                std::vector<Element> stab;
                for (Element e = 0; e < g.order(); ++e)
                    if (env.apply(e, p) == p) stab.push_back(e);
                std::vector<bool> seen(env.point_count(), false);
                std::size_t orbit_size = 0;
                for (Element e = 0; e < g.order(); ++e) {
                    const Point q = env.apply(e, p);
                    if (!seen[q]) {
                        seen[q] = true;
                        ++orbit_size;
                    }
                }
                std::ostringstream os;
                if (Subgroup(stab) != point_stabilizer(st.action, h, y))
                    os << "stabilizer mismatch at point " << st.points[y];
                else if (orbit_size != index * orbit.size())
                    os << "envelope orbit of point " << st.points[y] << " has " << orbit_size << " points, expected "
                       << index * orbit.size();
                if (out.violation.empty()) out.violation = os.str();
            }
        }
    }
    return out;
}

}  // namespace partact
