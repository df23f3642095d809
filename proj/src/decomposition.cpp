#include "partact/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace partact {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool any_bit(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

Tuple section_of(const FiniteGroup& g, const Tuple& t, SectionChoice section) {
    Tuple best = t;
    for (Element x : t.members()) {
        Tuple c = t.translate(g, g.inv(x));
        if (section == SectionChoice::minimal ? c < best : best < c) best = std::move(c);
    }
    return best;
}

Tuple orbit_key(const FiniteGroup& g, const Tuple& t) { return section_of(g, t, SectionChoice::minimal); }

std::string point_list(const std::vector<Point>& pts) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
    os << "}";
    return os.str();
}

}  // namespace

Tuple OrbitSummand::key() const {
    return *std::min_element(tuple_orbit.begin(), tuple_orbit.end());
}

std::size_t OrbitSummand::component_of(Point x) const {
    const auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it == points.end() || *it != x) throw std::out_of_range("point not in summand");
    return component[static_cast<std::size_t>(it - points.begin())];
}

OrbitSummand make_summand(const PartialAction& pa, const std::vector<Tuple>& types, const OrbitData& data) {
    OrbitSummand s;
    s.data = data;
    s.tuple_orbit = tuple_orbit(pa.group(), data);
    for (Point x = 0; x < pa.point_count(); ++x) {
        const auto it = std::find(s.tuple_orbit.begin(), s.tuple_orbit.end(), types[x]);
        if (it == s.tuple_orbit.end()) continue;
        const auto j = static_cast<std::size_t>(it - s.tuple_orbit.begin());
        s.points.push_back(x);
        s.component.push_back(j);
        if (j == 0) s.base_points.push_back(x);
    }
    return s;
}

IdealFormCheck check_ideal_form(const PartialAction& pa, std::size_t n) {
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    std::vector<Bits> dom(g.order(), make_bits(points));
    for (Element e = 0; e < g.order(); ++e)
        for (Point x : pa.domain(e)) set_bit(dom[e], x);

    IdealFormCheck out;
    out.disjoint = true;
    Bits covered = make_bits(points);
    for_each_tuple(g, n, [&](const Tuple& t) {
        Bits xt = dom[0];
        for (Element e : t.members())
            for (std::size_t w = 0; w < xt.size(); ++w) xt[w] &= dom[e][w];
        if (!any_bit(xt)) return true;
        for (std::size_t w = 0; w < xt.size(); ++w) covered[w] |= xt[w];
        for (Element e = 0; e < g.order() && out.disjoint; ++e) {
            if (t.contains(e)) continue;
            for (std::size_t w = 0; w < xt.size(); ++w)
                if (xt[w] & dom[e][w]) {
                    out.disjoint = false;
                    break;
                }
        }
        return true;
    });
    Bits all = make_bits(points);
    for (std::size_t x = 0; x < points; ++x) set_bit(all, x);
    out.covers = covered == all;
    return out;
}

DecompositionResult check_decomposition(const PartialAction& pa, std::size_t n, SectionChoice section) {
    const auto& g = pa.group();
    const auto types = point_types(pa);
    for (Point x = 0; x < pa.point_count(); ++x)
        if (types[x].size() != n) return DecompositionRefutation{n, x, types[x].size()};

    const IdealFormCheck literal = check_ideal_form(pa, n);
    if (!literal.covers || !literal.disjoint)
        throw std::logic_error("pointwise and ideal-form decomposition checks disagree");

    std::map<Tuple, Tuple> base_of_key;
    for (const Tuple& t : types) {
        Tuple key = orbit_key(g, t);
        if (!base_of_key.contains(key)) base_of_key.emplace(std::move(key), section_of(g, t, section));
    }
    DecompositionCertificate cert;
    cert.n = n;
    for (const auto& [key, base] : base_of_key) cert.summands.push_back(make_summand(pa, types, orbit_data(g, base)));
    return cert;
}

std::optional<std::size_t> decomposition_parameter(const PartialAction& pa) {
    if (pa.point_count() == 0) return 1;
    std::optional<std::size_t> n;
    for (Point x = 0; x < pa.point_count(); ++x) {
        const std::size_t k = point_type(pa, x).tau.size();
        if (n && *n != k) return std::nullopt;
        n = k;
    }
    return n;
}

DecompositionCertificate require_decomposable(const PartialAction& pa, SectionChoice section) {
    const auto n = decomposition_parameter(pa);
    if (!n) throw NotDecomposableError("partial action is not decomposable: point types have different sizes");
    return std::get<DecompositionCertificate>(check_decomposition(pa, *n, section));
}

bool is_invariant(const PartialAction& pa, const std::vector<Point>& subset) {
    std::vector<bool> in(pa.point_count(), false);
    for (Point x : subset) in[x] = true;
    for (Element e = 0; e < pa.group().order(); ++e)
        for (Point x : subset) {
            const Point y = pa.image(e, x);
            if (y != kNoPoint && !in[y]) return false;
        }
    return true;
}

Stratification stratify(const PartialAction& pa) {
    const std::size_t order = pa.group().order();
    std::vector<std::size_t> size(pa.point_count());
    for (Point x = 0; x < pa.point_count(); ++x) size[x] = point_type(pa, x).tau.size();

    Stratification s;
    for (std::size_t k = order; k >= 1; --k) {
        std::vector<Point> pts;
        for (Point x = 0; x < pa.point_count(); ++x)
            if (size[x] == k) pts.push_back(x);
        if (pts.empty()) continue;
        PartialAction restricted = restrict_action(pa, pts);
        auto cert = std::get<DecompositionCertificate>(check_decomposition(restricted, k));
        s.strata.push_back(Stratum{k, std::move(pts), std::move(restricted), std::move(cert)});
    }
    for (std::size_t k = order; k >= 2; --k) {
        ExtensionStep step;
        step.k = k;
        for (Point x = 0; x < pa.point_count(); ++x) {
            if (size[x] > k) continue;
            step.support.push_back(x);
            (size[x] == k ? step.kernel : step.quotient).push_back(x);
        }
        s.extension_chain.push_back(std::move(step));
    }
    return s;
}

StratificationCheck verify_stratification(const PartialAction& pa, const Stratification& s) {
    StratificationCheck out;
    const std::size_t points = pa.point_count();
    std::vector<std::size_t> size(points);
    for (Point x = 0; x < points; ++x) size[x] = point_type(pa, x).tau.size();

    std::vector<int> hits(points, 0);
    bool sizes_ok = true;
    for (const auto& st : s.strata)
        for (Point x : st.points) {
            if (x >= points) return out;
            ++hits[x];
            if (size[x] != st.k) sizes_ok = false;
        }
    out.partition = sizes_ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });

    out.invariant = std::all_of(s.strata.begin(), s.strata.end(),
                                [&](const Stratum& st) { return is_invariant(pa, st.points); });

    out.strata_decomposable = std::all_of(s.strata.begin(), s.strata.end(), [](const Stratum& st) {
        return std::holds_alternative<DecompositionCertificate>(check_decomposition(st.action, st.k)) &&
               st.certificate.n == st.k;
    });

    bool chain = true;
    bool split = true;
    std::vector<Point> expected_support(points);
    for (Point x = 0; x < points; ++x) expected_support[x] = x;
    for (const auto& step : s.extension_chain) {
        // A^(k) must consist of the points left after removing all larger strata.
        std::vector<Point> support;
        for (Point x : expected_support)
            if (size[x] <= step.k) support.push_back(x);
        if (step.support != support || !is_invariant(pa, step.support) || !is_invariant(pa, step.kernel) ||
            !is_invariant(pa, step.quotient))
            chain = false;
        std::vector<Point> merged = step.kernel;
        merged.insert(merged.end(), step.quotient.begin(), step.quotient.end());
        std::sort(merged.begin(), merged.end());
        if (merged != step.support) chain = false;
        if (!step.kernel.empty() &&
            !std::holds_alternative<DecompositionCertificate>(
                check_decomposition(restrict_action(pa, step.kernel), step.k)))
            chain = false;
        for (Point x : step.quotient)
            if (size[x] >= step.k) chain = false;

        std::vector<Point> stratum_pts;
        for (const auto& st : s.strata)
            if (st.k == step.k) stratum_pts = st.points;
        if (stratum_pts != step.kernel) split = false;
        expected_support = step.quotient;
    }
    // The final quotient A^(1) carries the trivial partial action.
    const PartialAction last = restrict_action(pa, expected_support);
    for (Element e = 1; e < pa.group().order(); ++e)
        if (!last.domain(e).empty()) chain = false;
    std::vector<Point> stratum1;
    for (const auto& st : s.strata)
        if (st.k == 1) stratum1 = st.points;
    if (stratum1 != expected_support) split = false;
    out.chain_conditions = chain;
    out.split_consistent = split;

    PartialAction rebuilt(pa.group_ptr(), points);
    for (Element e = 1; e < pa.group().order(); ++e) {
        std::vector<Point> dom;
        for (const auto& st : s.strata)
            for (Point y : st.action.domain(e)) dom.push_back(st.points[y]);
        rebuilt.set_domain(e, std::move(dom));
        for (const auto& st : s.strata)
            for (Point y = 0; y < st.action.point_count(); ++y) {
                const Point z = st.action.image(e, y);
                if (z != kNoPoint) rebuilt.set_map(e, st.points[y], st.points[z]);
            }
    }
    out.reassembles = out.partition && rebuilt == pa;
    return out;
}

namespace {

void append_summand(const PartialAction& pa, const OrbitSummand& s, std::vector<EnvelopeSummand>& summands,
                    std::vector<std::vector<Point>>& beta, std::vector<Point>& embedding) {
    const auto& g = pa.group();
    const Subgroup& h = s.data.stabilizer;
    EnvelopeSummand env;
    env.base = s.data.tuple;
    env.stabilizer = h;
    env.coset_reps = coset_representatives(g, h);
    env.base_points = s.base_points;
    env.offset = beta.empty() ? 0 : beta[0].size();
    const std::size_t width = env.base_points.size();

    std::map<Element, std::size_t> coset_index;
    for (std::size_t c = 0; c < env.coset_reps.size(); ++c) coset_index[env.coset_reps[c]] = c;
    std::map<Point, std::size_t> base_index;
    for (std::size_t i = 0; i < width; ++i) base_index[env.base_points[i]] = i;

    // [k, y] in normal form: k = u r with u in H, so [k, y] = [r, sigma_{u^-1}(y)].
    auto normalize = [&](Element k, Point y) {
        const Element r = coset_representative(g, h, k);
        const Element u = g.mul(k, g.inv(r));
        const Point y2 = pa.apply(g.inv(u), y);
        return env.offset + coset_index.at(r) * width + base_index.at(y2);
    };

    for (Element e = 0; e < g.order(); ++e)
        for (std::size_t c = 0; c < env.coset_reps.size(); ++c)
            for (std::size_t i = 0; i < width; ++i)
                beta[e].push_back(static_cast<Point>(
                    normalize(g.mul(env.coset_reps[c], g.inv(e)), env.base_points[i])));

    for (std::size_t idx = 0; idx < s.points.size(); ++idx) {
        const Point x = s.points[idx];
        const Element xj = s.data.reps[s.component[idx]];
        embedding[x] = static_cast<Point>(normalize(xj, pa.apply(xj, x)));
    }
    summands.push_back(std::move(env));
}

GlobalizedAction assemble(const GroupPtr& group, std::vector<std::vector<Point>> beta, std::vector<Point> embedding,
                          std::vector<EnvelopeSummand> summands) {
    const std::size_t size = beta.empty() ? 0 : beta[0].size();
    PartialAction env = global_action(group, size, [&](Element e, Point p) { return beta[e][p]; });
    return GlobalizedAction{std::move(env), std::move(embedding), std::move(summands)};
}

}  // namespace

GlobalizedAction globalize(const PartialAction& pa, SectionChoice section) {
    const auto n = decomposition_parameter(pa);
    if (!n)
        throw NotDecomposableError("partial action is not decomposable; stratify first (--stratify)");
    const auto cert = std::get<DecompositionCertificate>(check_decomposition(pa, *n, section));
    std::vector<std::vector<Point>> beta(pa.group().order());
    std::vector<Point> embedding(pa.point_count(), kNoPoint);
    std::vector<EnvelopeSummand> summands;
    for (const auto& s : cert.summands) append_summand(pa, s, summands, beta, embedding);
    return assemble(pa.group_ptr(), std::move(beta), std::move(embedding), std::move(summands));
}

GlobalizedAction globalize_stratified(const PartialAction& pa) {
    const auto strat = stratify(pa);
    std::vector<std::vector<Point>> beta(pa.group().order());
    std::vector<Point> embedding(pa.point_count(), kNoPoint);
    std::vector<EnvelopeSummand> summands;
    for (const auto& st : strat.strata) {
        const GlobalizedAction part = globalize(st.action);
        const auto shift = static_cast<Point>(beta[0].size());
        for (Element e = 0; e < pa.group().order(); ++e)
            for (Point p = 0; p < part.envelope.point_count(); ++p) beta[e].push_back(part.envelope.apply(e, p) + shift);
        for (Point y = 0; y < st.points.size(); ++y) embedding[st.points[y]] = part.embedding[y] + shift;
        for (auto env : part.summands) {
            env.offset += shift;
            for (Point& b : env.base_points) b = st.points[b];
            summands.push_back(std::move(env));
        }
    }
    return assemble(pa.group_ptr(), std::move(beta), std::move(embedding), std::move(summands));
}

EnvelopingCheck check_enveloping(const PartialAction& pa, const GlobalizedAction& glob) {
    EnvelopingCheck out;
    const auto& g = pa.group();
    const PartialAction& env = glob.envelope;
    auto fail = [&](const std::string& msg) {
        if (out.violation.empty()) out.violation = msg;
    };
    if (!(env.group() == g)) {
        fail("envelope is over a different group");
        return out;
    }
    out.envelope_global = env.is_global() && validate_partial_action(env).valid();
    if (!out.envelope_global) fail("envelope is not a global action");

    const std::size_t size = env.point_count();
    std::vector<bool> image(size, false);
    out.embedding_injective = glob.embedding.size() == pa.point_count();
    for (Point x = 0; x < glob.embedding.size() && out.embedding_injective; ++x) {
        const Point p = glob.embedding[x];
        if (p >= size || image[p]) out.embedding_injective = false;
        else image[p] = true;
    }
    if (!out.embedding_injective) {
        fail("embedding is not an injection into the envelope");
        return out;
    }
    if (!out.envelope_global) return out;

    out.domains_match = true;
    out.maps_extend = true;
    std::vector<bool> covered(size, false);
    for (Element e = 0; e < g.order(); ++e) {
        std::vector<Point> lhs, rhs;
        for (Point x : pa.domain(e)) lhs.push_back(glob.embedding[x]);
        for (Point x = 0; x < pa.point_count(); ++x) {
            const Point p = env.apply(e, glob.embedding[x]);
            covered[p] = true;
            if (image[p]) rhs.push_back(p);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs && out.domains_match) {
            out.domains_match = false;
            fail("condition (1) fails at g=" + std::to_string(e) + ": iota(X_g)=" + point_list(lhs) +
                 " but iota(X) cap beta_g(iota(X))=" + point_list(rhs));
        }
        for (Point x : pa.domain(g.inv(e))) {
            if (env.apply(e, glob.embedding[x]) != glob.embedding[pa.apply(e, x)] && out.maps_extend) {
                out.maps_extend = false;
                fail("condition (2) fails at g=" + std::to_string(e) + ", x=" + std::to_string(x));
            }
        }
    }
    out.translates_cover = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    if (!out.translates_cover) {
        const auto p = static_cast<std::size_t>(std::find(covered.begin(), covered.end(), false) - covered.begin());
        fail("condition (3) fails: envelope point " + std::to_string(p) + " is not a translate of iota(X)");
    }
    return out;
}

std::optional<std::vector<Point>> envelope_isomorphism(const GlobalizedAction& a, const GlobalizedAction& b) {
    const auto& g = a.envelope.group();
    if (!(g == b.envelope.group()) || a.envelope.point_count() != b.envelope.point_count() ||
        a.embedding.size() != b.embedding.size())
        return std::nullopt;
    const std::size_t size = a.envelope.point_count();
    // phi(beta_g iota_a(x)) = beta_g iota_b(x) is forced; check it is well defined.
    std::vector<Point> phi(size, kNoPoint);
    for (Element e = 0; e < g.order(); ++e)
        for (Point x = 0; x < a.embedding.size(); ++x) {
            const Point p = a.envelope.apply(e, a.embedding[x]);
            const Point q = b.envelope.apply(e, b.embedding[x]);
            if (phi[p] == kNoPoint) phi[p] = q;
            else if (phi[p] != q) return std::nullopt;
        }
    std::vector<bool> hit(size, false);
    for (Point p : phi) {
        if (p == kNoPoint || hit[p]) return std::nullopt;
        hit[p] = true;
    }
    for (Element e = 0; e < g.order(); ++e)
        for (Point p = 0; p < size; ++p)
            if (phi[a.envelope.apply(e, p)] != b.envelope.apply(e, phi[p])) return std::nullopt;
    return phi;
}

UnitSystem equivariant_unit_system(const PartialAction& pa) {
    const auto cert = require_decomposable(pa);
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    UnitSystem out;
    out.units.assign(g.order(), zero_vector(points));
    for (const auto& s : cert.summands) {
        const Vector e = indicator(points, s.base_points);
        const Rational scale(1, static_cast<long>(s.data.stabilizer.order()));
        for (Element ge = 0; ge < g.order(); ++ge)
            for (std::size_t j = 0; j < s.data.reps.size(); ++j) {
                if (!s.tuple_orbit[j].contains(ge)) continue;
                const Element xinv = g.inv(s.data.reps[j]);
                for (Element h : s.data.stabilizer.members())
                    axpy(out.units[ge], scale, alpha(pa, g.mul(xinv, h), e));
            }
    }
    out.matches_domain_indicators = true;
    for (Element ge = 0; ge < g.order(); ++ge)
        if (out.units[ge] != indicator(points, pa.domain(ge))) out.matches_domain_indicators = false;

    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) {
            const Vector lhs = alpha(pa, a, pointwise(out.units[b], out.units[g.inv(a)]));
            const Vector rhs = pointwise(out.units[g.mul(a, b)], out.units[a]);
            ++out.relations_checked;
            if (lhs != rhs) out.failures.emplace_back(a, b);
        }
    return out;
}

}  // namespace partact
