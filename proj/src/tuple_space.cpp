#include "partact/tuple_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace partact {

void for_each_tuple(const FiniteGroup& g, std::size_t n, const std::function<bool(const Tuple&)>& visit) {
    const std::size_t order = g.order();
    if (n == 0 || n > order) return;
    // Choose n-1 elements from {1..order-1}; combinations in lexicographic order.
    const std::size_t k = n - 1;
    std::vector<Element> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Element>(i + 1);
    while (true) {
        std::vector<Element> members{0};
        members.insert(members.end(), pick.begin(), pick.end());
        if (!visit(Tuple(std::move(members)))) return;
        // Advance to the next combination.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == order - k + (i - 1)) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<Tuple> enumerate_tuples(const FiniteGroup& g, std::size_t n) {
    std::vector<Tuple> out;
    for_each_tuple(g, n, [&](const Tuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::size_t tuple_count(const FiniteGroup& g, std::size_t n) {
    if (n == 0 || n > g.order()) return 0;
    std::size_t r = 1;
    const std::size_t top = g.order() - 1, k = n - 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

namespace {

TupleSpaceAction tuple_action_on(GroupPtr group, std::vector<Tuple> tuples) {
    const auto& g = *group;
    std::map<Tuple, Point> position;
    for (std::size_t i = 0; i < tuples.size(); ++i) position.emplace(tuples[i], static_cast<Point>(i));
    PartialAction pa(group, tuples.size());
    for (Element e = 1; e < g.order(); ++e) {
        std::vector<Point> dom;
        for (std::size_t i = 0; i < tuples.size(); ++i)
            if (tuples[i].contains(e)) dom.push_back(static_cast<Point>(i));
        pa.set_domain(e, std::move(dom));
        const Element ei = g.inv(e);
        for (std::size_t i = 0; i < tuples.size(); ++i)
            if (tuples[i].contains(ei)) pa.set_map(e, static_cast<Point>(i), position.at(tuples[i].translate(g, e)));
    }
    return {std::move(pa), std::move(tuples)};
}

}  // namespace

TupleSpaceAction tuple_action(GroupPtr g, std::size_t n) {
    if (n == 0 || n > g->order()) throw std::invalid_argument("tuple_action: need 1 <= n <= |G|");
    return tuple_action_on(g, enumerate_tuples(*g, n));
}

TupleSpaceAction full_tuple_action(GroupPtr g) {
    std::vector<Tuple> all;
    for (std::size_t n = 1; n <= g->order(); ++n)
        for_each_tuple(*g, n, [&](const Tuple& t) {
            all.push_back(t);
            return true;
        });
    return tuple_action_on(g, std::move(all));
}

Subgroup tuple_stabilizer(const FiniteGroup& g, const Tuple& t) {
    std::vector<Element> h;
    // h t = t forces h = h*1 in t.
    for (Element e : t.members())
        if (t.translate(g, e) == t) h.push_back(e);
    return Subgroup(std::move(h));
}

OrbitData orbit_data(const FiniteGroup& g, const Tuple& t) {
    if (!t.valid()) throw std::invalid_argument("orbit_data: tuple must contain the identity");
    OrbitData od;
    od.tuple = t;
    od.stabilizer = tuple_stabilizer(g, t);
    std::vector<bool> used(g.order(), false);
    for (Element x : t.members()) {
        if (used[x]) continue;
        od.reps.push_back(x);  // members ascend, so x is minimal in H x
        for (Element h : od.stabilizer.members()) used[g.mul(h, x)] = true;
    }
    od.m = od.reps.size() - 1;
    return od;
}

OrbitData orbit_data_with_reps(const FiniteGroup& g, const Tuple& t, std::vector<Element> reps) {
    OrbitData od;
    od.tuple = t;
    od.stabilizer = tuple_stabilizer(g, t);
    if (reps.empty() || reps.front() != 0) throw std::invalid_argument("representatives must start with 1");
    std::vector<Element> covered;
    for (Element x : reps)
        for (Element h : od.stabilizer.members()) covered.push_back(g.mul(h, x));
    std::sort(covered.begin(), covered.end());
    if (covered != t.members()) throw std::invalid_argument("representatives do not partition the tuple");
    od.reps = std::move(reps);
    od.m = od.reps.size() - 1;
    return od;
}

std::size_t rep_index(const FiniteGroup& g, const OrbitData& od, Element element) {
    for (std::size_t j = 0; j < od.reps.size(); ++j)
        if (od.stabilizer.contains(g.mul(element, g.inv(od.reps[j])))) return j;
    return static_cast<std::size_t>(-1);
}

std::vector<Tuple> tuple_orbit(const FiniteGroup& g, const OrbitData& od) {
    std::vector<Tuple> out;
    for (Element x : od.reps) out.push_back(od.tuple.translate(g, g.inv(x)));
    return out;
}

PartialAction representative_action(GroupPtr group, const Tuple& t) {
    const auto& g = *group;
    const OrbitData od = orbit_data(g, t);
    const std::size_t count = od.reps.size();
    PartialAction pa(group, count);
    auto in_domain = [&](Element e, std::size_t j) { return t.contains(g.mul(od.reps[j], e)); };  // e in x^-1 t
    for (Element e = 1; e < g.order(); ++e) {
        std::vector<Point> dom;
        for (std::size_t j = 0; j < count; ++j)
            if (in_domain(e, j)) dom.push_back(static_cast<Point>(j));
        pa.set_domain(e, std::move(dom));
    }
    for (Element e = 1; e < g.order(); ++e) {
        const Element ei = g.inv(e);
        for (std::size_t j = 0; j < count; ++j) {
            if (!in_domain(ei, j)) continue;
            // Unique k with x_k in X_e and e in x_k^-1 H x_j, found by search.
            std::size_t found = count;
            for (std::size_t k = 0; k < count; ++k) {
                if (!in_domain(e, k)) continue;
                const Element w = g.mul(g.mul(od.reps[k], e), g.inv(od.reps[j]));  // x_k e x_j^-1
                if (od.stabilizer.contains(w)) {
                    if (found != count) throw std::logic_error("representative_action: image not unique");
                    found = k;
                }
            }
            if (found == count) throw std::logic_error("representative_action: no image");
            pa.set_map(e, static_cast<Point>(j), static_cast<Point>(found));
        }
    }
    return pa;
}

}  // namespace partact
