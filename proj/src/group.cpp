#include "partact/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace partact {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::string name) {
    const std::size_t n = table.size();
    if (n == 0) throw GroupError("empty multiplication table");
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n)
            throw GroupError("row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                             " entries, expected " + std::to_string(n));
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] >= n)
                throw GroupError("not closed: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                 std::to_string(table[a][b]) + " is out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a)
            throw GroupError("element 0 is not an identity: witness " + std::to_string(a));

    FiniteGroup g;
    g.order_ = n;
    g.name_ = std::move(name);
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];

    g.inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) {
            if (table[a][b] == 0) {
                if (table[b][a] != 0)
                    throw GroupError("no two-sided inverse for element " + std::to_string(a));
                g.inverse_[a] = static_cast<Element>(b);
                found = true;
            }
        }
        if (!found) throw GroupError("no inverse for element " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw GroupError("not associative: witness " + triple(a, b, c));
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw GroupError("cyclic group needs n >= 1");
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
    return from_table(std::move(t), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) throw GroupError("dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
            // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
            const std::size_t rot = e == 0 ? (a + b) % n : (a + n - b) % n;
            t[x][y] = static_cast<Element>(rot + n * ((e + f) % 2));
        }
    return from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0) throw GroupError("symmetric group needs n >= 1");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t order = perms.size();
    std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
    std::vector<std::size_t> composed(n);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
            const auto it = std::lower_bound(perms.begin(), perms.end(), composed);
            t[a][b] = static_cast<Element>(it - perms.begin());
        }
    return from_table(std::move(t), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion8() {
    // Unit i,j,k with sign: index = 2*unit + (negative ? 1 : 0), unit 0 = 1.
    // Products of units: u*v = sign * w.
    static const int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int u = x / 2, v = y / 2;
            int sign = unit_sign[u][v] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
            t[x][y] = static_cast<Element>(2 * unit_product[u][v] + (sign < 0 ? 1 : 0));
        }
    return from_table(std::move(t), "Q8");
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
    std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
}

Subgroup::Subgroup(std::vector<Element> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Element g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<Element> members{0};
    in[0] = true;
    for (Element s : gens) {
        if (s >= g.order()) throw GroupError("generator " + std::to_string(s) + " out of range");
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    }
    // Finite group: closure under products suffices.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (Element p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
                if (!in[p]) {
                    in[p] = true;
                    members.push_back(p);
                }
    return Subgroup(std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& members) {
    Subgroup h(members);
    if (!h.contains(0)) return false;
    for (Element a : h.members()) {
        if (!h.contains(g.inv(a))) return false;
        for (Element b : h.members())
            if (!h.contains(g.mul(a, b))) return false;
    }
    return true;
}

Element coset_representative(const FiniteGroup& g, const Subgroup& h, Element x) {
    Element best = g.mul(h.members().front(), x);
    for (Element k : h.members()) best = std::min(best, g.mul(k, x));
    return best;
}

std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<Element>> out;
    for (Element x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<Element> block;
        for (Element k : h.members()) {
            const Element y = g.mul(k, x);
            seen[y] = true;
            block.push_back(y);
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

std::vector<Element> coset_representatives(const FiniteGroup& g, const Subgroup& h) {
    std::vector<Element> reps;
    for (const auto& block : left_cosets(g, h)) reps.push_back(block.front());
    return reps;
}

std::size_t conjugacy_class_count(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> seen(g.order(), false);
    std::size_t classes = 0;
    for (Element x : h.members()) {
        if (seen[x]) continue;
        ++classes;
        for (Element y : h.members()) seen[g.conj(y, x)] = true;
    }
    return classes;
}

std::size_t conjugacy_class_count(const FiniteGroup& g) {
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return conjugacy_class_count(g, Subgroup(std::move(all)));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element by) {
    std::vector<Element> out;
    for (Element x : h.members()) out.push_back(g.conj(by, x));
    return Subgroup(std::move(out));
}

std::string describe_subgroup(const FiniteGroup& g, const Subgroup& h) {
    const std::size_t n = h.order();
    if (n == 1) return "triv";
    std::size_t involutions = 0;
    bool abelian = true;
    for (Element a : h.members()) {
        if (g.element_order(a) == n) return "C" + std::to_string(n);
        if (g.element_order(a) == 2) ++involutions;
        for (Element b : h.members())
            if (g.mul(a, b) != g.mul(b, a)) abelian = false;
    }
    if (n == 4) return "V4";
    if (n == 6 && !abelian) return "S3";
    if (n == 8) {
        if (abelian) return involutions == 7 ? "C2^3" : "C2xC4";
        return involutions == 5 ? "D4" : "Q8";
    }
    const std::size_t classes = conjugacy_class_count(g, h);
    if (n == 12 && classes == 4) return "A4";
    if (n == 24 && classes == 5) return "S4";
    return "G" + std::to_string(n) + "c" + std::to_string(classes);
}

FiniteGroup group_from_family(const std::string& spec) {
    const std::string prefix = "family:";
    if (spec.rfind(prefix, 0) != 0) throw GroupError("group spec must start with 'family:': " + spec);
    const auto rest = spec.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw GroupError("group spec missing ':<n>': " + spec);
    const std::string family = rest.substr(0, colon);
    const std::string arg = rest.substr(colon + 1);
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(arg, &used);
        if (used != arg.size() || arg.empty() || arg[0] == '-') throw std::invalid_argument(arg);
        n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw GroupError("bad family parameter '" + arg + "' in " + spec);
    }
    if (family == "cyclic") return FiniteGroup::cyclic(n);
    if (family == "dihedral") return FiniteGroup::dihedral(n);
    if (family == "symmetric") {
        if (n > 5) throw GroupError("symmetric:" + std::to_string(n) + " is too large");
        return FiniteGroup::symmetric(n);
    }
    if (family == "quaternion") {
        if (n != 8) throw GroupError("only quaternion:8 is supported");
        return FiniteGroup::quaternion8();
    }
    throw GroupError("unknown group family '" + family + "'");
}

}  // namespace partact
