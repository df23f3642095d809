#include "partact/xverify.hpp"

#include "partact/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace partact {

namespace {

using Acc = std::map<std::size_t, Rational>;

void accumulate(Acc& acc, const SparseVector& v, const Rational& c) {
    for (const auto& t : v) acc[t.index] += c * t.coeff;
}

SparseVector to_sparse(const Acc& acc) {
    SparseVector out;
    for (const auto& [i, q] : acc)
        if (sgn(q) != 0) out.push_back({i, q});
    return out;
}

bool equal(const SparseVector& a, const SparseVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].index != b[i].index || a[i].coeff != b[i].coeff) return false;
    return true;
}

SparseVector single(std::size_t i) { return {{i, Rational(1)}}; }

SparseVector sparse_product(const RationalAlgebra& alg, const SparseVector& a, const SparseVector& b) {
    Acc acc;
    for (const auto& s : a)
        for (const auto& t : b) accumulate(acc, alg.basis_product(s.index, t.index), s.coeff * t.coeff);
    return to_sparse(acc);
}

SparseVector sparse_star(const RationalAlgebra& alg, const SparseVector& a) {
    Acc acc;
    for (const auto& s : a) accumulate(acc, alg.basis_star(s.index), s.coeff);
    return to_sparse(acc);
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector out = zero_vector(dim);
    for (const auto& t : v) out[t.index] = t.coeff;
    return out;
}

std::string label_of(const RationalAlgebra& alg, std::size_t i) { return alg.labels()[i]; }

}  // namespace

RationalAlgebra::RationalAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                                 std::vector<SparseVector> stars, std::optional<Vector> unit)
    : labels_(std::move(labels)), products_(std::move(products)), stars_(std::move(stars)), unit_(std::move(unit)) {
    const std::size_t d = labels_.size();
    if (products_.size() != d * d || stars_.size() != d || (unit_ && unit_->size() != d))
        throw std::invalid_argument("RationalAlgebra: inconsistent structure data");
}

Vector RationalAlgebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t d = dimension();
    Vector out = zero_vector(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(b[j]) == 0) continue;
            const Rational c = a[i] * b[j];
            for (const auto& t : basis_product(i, j)) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

Vector RationalAlgebra::star(const Vector& a) const {
    Vector out = zero_vector(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (const auto& t : basis_star(i)) out[t.index] += a[i] * t.coeff;
    }
    return out;
}

AlgebraCheck check_algebra(const RationalAlgebra& alg) {
    AlgebraCheck out;
    const std::size_t d = alg.dimension();
    auto note = [&](const std::string& w) {
        if (out.witness.empty()) out.witness = w;
    };
    out.associative = true;
    for (std::size_t i = 0; i < d && out.associative; ++i)
        for (std::size_t j = 0; j < d && out.associative; ++j) {
            const SparseVector& ij = alg.basis_product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const SparseVector& jk = alg.basis_product(j, k);
                if (ij.empty() && jk.empty()) continue;
                if (!equal(sparse_product(alg, ij, single(k)), sparse_product(alg, single(i), jk))) {
                    out.associative = false;
                    note("associativity fails on " + label_of(alg, i) + ", " + label_of(alg, j) + ", " +
                         label_of(alg, k));
                    break;
                }
            }
        }
    out.involutive = true;
    for (std::size_t i = 0; i < d; ++i)
        if (!equal(sparse_star(alg, alg.basis_star(i)), single(i))) {
            out.involutive = false;
            note("star is not involutive on " + label_of(alg, i));
            break;
        }
    out.anti_multiplicative = true;
    for (std::size_t i = 0; i < d && out.anti_multiplicative; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const SparseVector lhs = sparse_star(alg, alg.basis_product(i, j));
            const SparseVector rhs = sparse_product(alg, alg.basis_star(j), alg.basis_star(i));
            if (!equal(lhs, rhs)) {
                out.anti_multiplicative = false;
                note("(ab)* != b*a* for " + label_of(alg, i) + ", " + label_of(alg, j));
                break;
            }
        }
    out.unit_ok = true;
    if (alg.unit()) {
        const SparseVector u = partact::to_sparse(*alg.unit());
        for (std::size_t i = 0; i < d; ++i)
            if (!equal(sparse_product(alg, u, single(i)), single(i)) ||
                !equal(sparse_product(alg, single(i), u), single(i))) {
                out.unit_ok = false;
                note("declared unit fails on " + label_of(alg, i));
                break;
            }
    }
    return out;
}

Vector CrossedProduct::coefficient(const Vector& f) const {
    Vector out = zero_vector(algebra.dimension());
    for (Point x = 0; x < f.size(); ++x)
        if (sgn(f[x]) != 0) out[index_of(x, 0)] = f[x];
    return out;
}

CrossedProduct realize_crossed_product(const PartialAction& pa) {
    const auto& g = pa.group();
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::pair<Point, Element>> basis;
    std::vector<std::vector<std::size_t>> index(g.order(), std::vector<std::size_t>(pa.point_count(), npos));
    std::vector<std::string> labels;
    for (Element e = 0; e < g.order(); ++e)
        for (Point x : pa.domain(e)) {
            index[e][x] = basis.size();
            basis.emplace_back(x, e);
            labels.push_back("(" + std::to_string(x) + "," + std::to_string(e) + ")");
        }
    const std::size_t d = basis.size();
    std::vector<SparseVector> products(d * d);
    std::vector<SparseVector> stars(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto [x, a] = basis[i];
        const Point back = pa.image(g.inv(a), x);
        stars[i] = single(index[g.inv(a)][back]);
        for (std::size_t j = 0; j < d; ++j) {
            const auto [y, b] = basis[j];
            if (y != back) continue;
            const std::size_t k = index[g.mul(a, b)][x];
            if (k == npos) throw std::logic_error("crossed product: product leaves the domain");
            products[i * d + j] = single(k);
        }
    }
    Vector unit = zero_vector(d);
    for (Point x = 0; x < pa.point_count(); ++x) unit[index[0][x]] = 1;
    return CrossedProduct{RationalAlgebra(std::move(labels), std::move(products), std::move(stars), std::move(unit)),
                          std::move(basis), std::move(index)};
}

RationalAlgebra matrix_algebra(const RationalAlgebra& b, std::size_t s) {
    const std::size_t db = b.dimension();
    const std::size_t d = s * s * db;
    std::vector<std::string> labels(d);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t i = 0; i < db; ++i)
                labels[matrix_index(db, s, i, j, k)] =
                    b.labels()[i] + "e" + std::to_string(j) + std::to_string(k);
    std::vector<SparseVector> products(d * d);
    std::vector<SparseVector> stars(d);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t i = 0; i < db; ++i) {
                const std::size_t left = matrix_index(db, s, i, j, k);
                SparseVector st;
                for (const auto& t : b.basis_star(i)) st.push_back({matrix_index(db, s, t.index, k, j), t.coeff});
                std::sort(st.begin(), st.end(), [](const auto& u, const auto& v) { return u.index < v.index; });
                stars[left] = std::move(st);
                for (std::size_t l = 0; l < s; ++l)
                    for (std::size_t i2 = 0; i2 < db; ++i2) {
                        SparseVector pr;
                        for (const auto& t : b.basis_product(i, i2))
                            pr.push_back({matrix_index(db, s, t.index, j, l), t.coeff});
                        std::sort(pr.begin(), pr.end(), [](const auto& u, const auto& v) { return u.index < v.index; });
                        products[left * d + matrix_index(db, s, i2, k, l)] = std::move(pr);
                    }
            }
    std::optional<Vector> unit;
    if (b.unit()) {
        unit = zero_vector(d);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < db; ++i) (*unit)[matrix_index(db, s, i, j, j)] = (*b.unit())[i];
    }
    return RationalAlgebra(std::move(labels), std::move(products), std::move(stars), std::move(unit));
}

Vector LinearMapQ::apply(const Vector& v) const {
    Vector out = zero_vector(codomain_dim);
    for (std::size_t i = 0; i < domain_dim; ++i) {
        if (sgn(v[i]) == 0) continue;
        for (const auto& t : columns[i]) out[t.index] += v[i] * t.coeff;
    }
    return out;
}

std::size_t LinearMapQ::rank() const {
    EchelonBasis basis(codomain_dim);
    for (const auto& c : columns) basis.insert(to_dense(c, codomain_dim));
    return basis.rank();
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

namespace {

std::vector<Point> positions(std::size_t points, const std::vector<Point>& subset) {
    std::vector<Point> pos(points, kNoPoint);
    for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<Point>(i);
    return pos;
}

OrbitSummand summand_for(const PartialAction& pa, const std::vector<Tuple>& types, const Tuple& base,
                         const std::optional<std::vector<Element>>& reps) {
    const auto& g = pa.group();
    const OrbitData od = reps ? orbit_data_with_reps(g, base, *reps) : orbit_data(g, base);
    return make_summand(pa, types, od);
}

// Alternative representative lists y_0 = 1, y_j = h_j x_{pi(j)}.
std::vector<std::vector<Element>> alternative_reps(const FiniteGroup& g, const OrbitData& od,
                                                   const VerifyOptions& options) {
    const std::size_t m = od.m;
    const auto& h = od.stabilizer.members();
    double count = 1;
    for (std::size_t i = 2; i <= m; ++i) count *= static_cast<double>(i);
    for (std::size_t i = 0; i < m; ++i) count *= static_cast<double>(h.size());
    std::vector<std::vector<Element>> out;
    auto build = [&](const std::vector<std::size_t>& perm, const std::vector<std::size_t>& hs) {
        std::vector<Element> reps{0};
        for (std::size_t j = 0; j < m; ++j) reps.push_back(g.mul(h[hs[j]], od.reps[perm[j]]));
        return reps;
    };
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    if (count <= static_cast<double>(options.enumerate_limit)) {
        do {
            std::vector<std::size_t> hs(m, 0);
            while (true) {
                out.push_back(build(perm, hs));
                std::size_t i = 0;
                while (i < m && ++hs[i] == h.size()) hs[i++] = 0;
                if (i == m) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::mt19937_64 rng(options.seed);
        for (std::size_t s = 0; s < options.samples; ++s) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::size_t> hs(m);
            for (auto& v : hs) v = std::uniform_int_distribution<std::size_t>(0, h.size() - 1)(rng);
            out.push_back(build(perm, hs));
        }
    }
    return out;
}

std::string describe(const std::vector<Element>& reps) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < reps.size(); ++i) os << (i ? "," : "") << reps[i];
    os << ")";
    return os.str();
}

}  // namespace

PsiResult build_psi(const PartialAction& pa, const Tuple& t, const SummandChoice& choice) {
    if (!decomposition_parameter(pa)) throw NotDecomposableError("build_psi needs a decomposable partial action");
    const auto& g = pa.group();
    const auto types = point_types(pa);
    const Tuple base = choice.base.value_or(t);
    const OrbitSummand s = summand_for(pa, types, base, choice.reps);
    if (s.base_points.empty()) throw std::invalid_argument("tuple " + base.to_string() + " is not a point type");

    const PartialAction local = restrict_action(pa, s.points);
    const auto pos = positions(pa.point_count(), s.points);
    std::vector<Point> local_base;
    for (Point x : s.base_points) local_base.push_back(pos[x]);
    const PartialAction coef_action = restrict_action(local, local_base);
    const auto coef_pos = positions(local.point_count(), local_base);

    CrossedProduct source = realize_crossed_product(local);
    CrossedProduct coefficient = realize_crossed_product(coef_action);
    const std::size_t size = s.data.m + 1;
    RationalAlgebra target = matrix_algebra(coefficient.algebra, size);
    const std::size_t db = coefficient.algebra.dimension();

    LinearMapQ map;
    map.domain_dim = source.algebra.dimension();
    map.codomain_dim = target.dimension();
    for (const auto& [xl, e] : source.basis) {
        const std::size_t j = s.component_of(s.points[xl]);
        const Element xj = s.data.reps[j];
        const Element w = g.mul(xj, e);
        const std::size_t k = rep_index(g, s.data, w);
        const Element h = g.mul(w, g.inv(s.data.reps[k]));
        const Point y = coef_pos[local.apply(xj, xl)];
        const std::size_t b = coefficient.index_of(y, h);
        map.columns.push_back(single(matrix_index(db, size, b, j, k)));
    }

    VerificationReport report;
    const auto src_check = check_algebra(source.algebra);
    report.add("source_algebra", src_check.ok(), src_check.witness);
    const auto tgt_check = check_algebra(target);
    report.add("target_algebra", tgt_check.ok(), tgt_check.witness);
    report.add("psi_bijective", map.domain_dim == map.codomain_dim && map.rank() == map.domain_dim,
               "dim " + std::to_string(map.domain_dim) + " -> " + std::to_string(map.codomain_dim));
    bool mult = true;
    std::string mult_witness;
    for (std::size_t a = 0; a < map.domain_dim && mult; ++a)
        for (std::size_t b2 = 0; b2 < map.domain_dim; ++b2) {
            SparseVector lhs;
            {
                Acc acc;
                for (const auto& term : source.algebra.basis_product(a, b2))
                    accumulate(acc, map.columns[term.index], term.coeff);
                lhs = to_sparse(acc);
            }
            if (!equal(lhs, sparse_product(target, map.columns[a], map.columns[b2]))) {
                mult = false;
                mult_witness = source.algebra.labels()[a] + " * " + source.algebra.labels()[b2];
                break;
            }
        }
    report.add("psi_multiplicative", mult, mult_witness);
    bool star = true;
    std::string star_witness;
    for (std::size_t a = 0; a < map.domain_dim; ++a) {
        Acc acc;
        for (const auto& term : source.algebra.basis_star(a)) accumulate(acc, map.columns[term.index], term.coeff);
        if (!equal(to_sparse(acc), sparse_star(target, map.columns[a]))) {
            star = false;
            star_witness = source.algebra.labels()[a];
            break;
        }
    }
    report.add("psi_star", star, star_witness);
    report.add("psi_unital", map.apply(*source.algebra.unit()) == *target.unit());

    PsiResult out{s.data.tuple, s.data.m, s.data.stabilizer, s.points, std::move(source), std::move(coefficient),
                  std::move(target), std::move(map), std::move(report)};
    return out;
}

QMatrix expectation_matrix(const PartialAction& pa, const std::vector<OrbitSummand>& summands) {
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    QMatrix e(points, points);
    for (const auto& s : summands) {
        const std::size_t size = s.data.m + 1;
        const Rational avg(1, static_cast<long>(size));
        const Rational havg(1, static_cast<long>(s.data.stabilizer.order()));
        std::vector<Vector> component_indicator(size, zero_vector(points));
        for (std::size_t i = 0; i < s.points.size(); ++i) component_indicator[s.component[i]][s.points[i]] = 1;
        // phi(b) = 1/|H| sum_l sum_h alpha_{(h x_l)^-1}(b)
        auto phi = [&](const Vector& b) {
            Vector out = zero_vector(points);
            for (Element xl : s.data.reps)
                for (Element h : s.data.stabilizer.members())
                    axpy(out, havg, alpha(pa, g.inv(g.mul(h, xl)), b));
            return out;
        };
        for (Point x : s.points) {
            const Vector a = unit_vector(points, x);
            Vector col = zero_vector(points);
            for (std::size_t j = 0; j < size; ++j) {
                const Vector pj = pointwise(a, component_indicator[j]);
                if (is_zero(pj)) continue;
                axpy(col, avg, phi(alpha(pa, s.data.reps[j], pj)));
            }
            for (Point y = 0; y < points; ++y) e(y, x) += col[y];
        }
    }
    return e;
}

ExpectationResult build_expectation(const PartialAction& pa, const VerifyOptions& options) {
    const auto cert = require_decomposable(pa);
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    const auto types = point_types(pa);
    ExpectationResult out{expectation_matrix(pa, cert.summands), {}};
    const QMatrix& e = out.matrix;
    auto& report = out.report;

    report.add("idempotent", e * e == e);

    const auto qf = quotient_and_fixed(pa);
    std::vector<Vector> range;
    for (Point x = 0; x < points; ++x) range.push_back(e.column(x));
    report.add("range_is_fixed_algebra", same_span(range, qf.basis, points),
               "rank " + std::to_string(partact::rank(range, points)) + ", orbits " + std::to_string(qf.orbit_count));
    const auto left = invariant_functions(pa, true);
    const auto right = invariant_functions(pa, false);
    report.add("fixed_left_right_agree", same_span(left, right, points) && same_span(left, qf.basis, points));

    bool bimodule = true;
    std::string bw;
    for (const auto& f : qf.basis) {
        for (Point x = 0; x < points && bimodule; ++x) {
            const Vector d = unit_vector(points, x);
            const Vector fe = pointwise(f, e.apply(d));
            if (e.apply(pointwise(f, d)) != fe || e.apply(pointwise(d, f)) != pointwise(e.apply(d), f)) {
                bimodule = false;
                bw = "point " + std::to_string(x);
            }
        }
    }
    report.add("bimodule", bimodule, bw);

    Vector one(points, Rational(1));
    report.add("unital", e.apply(one) == one);

    bool faithful = true;
    std::string fw;
    for (Point x = 0; x < points && faithful; ++x) {
        bool nonzero = false;
        for (Point y = 0; y < points; ++y) {
            if (sgn(e(y, x)) < 0) {
                faithful = false;
                fw = "negative entry at (" + std::to_string(y) + "," + std::to_string(x) + ")";
            }
            if (sgn(e(y, x)) > 0) nonzero = true;
        }
        if (faithful && !nonzero) {
            faithful = false;
            fw = "E kills the point mass at " + std::to_string(x);
        }
    }
    report.add("faithful", faithful, fw);

    bool reps_ok = true;
    std::string rw;
    std::size_t rep_trials = 0;
    bool base_ok = true;
    std::string basew;
    for (const auto& s : cert.summands) {
        const QMatrix ref = expectation_matrix(pa, {s});
        for (const auto& reps : alternative_reps(g, s.data, options)) {
            ++rep_trials;
            if (expectation_matrix(pa, {summand_for(pa, types, s.data.tuple, reps)}) != ref && reps_ok) {
                reps_ok = false;
                rw = "tuple " + s.data.tuple.to_string() + " reps " + describe(reps);
            }
        }
        for (std::size_t l = 1; l < s.tuple_orbit.size(); ++l)
            if (expectation_matrix(pa, {summand_for(pa, types, s.tuple_orbit[l], std::nullopt)}) != ref && base_ok) {
                base_ok = false;
                basew = "base " + s.tuple_orbit[l].to_string();
            }
    }
    report.add("representative_independent", reps_ok, rw.empty() ? std::to_string(rep_trials) + " choices" : rw);
    report.add("base_point_independent", base_ok, basew);
    return out;
}

LinearMapQ corner_map(const PartialAction& pa, const CrossedProduct& cp, const std::vector<OrbitSummand>& summands) {
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    LinearMapQ map;
    map.domain_dim = points;
    map.codomain_dim = cp.algebra.dimension();
    std::vector<Acc> cols(points);
    for (const auto& s : summands) {
        const std::size_t size = s.data.m + 1;
        const Rational scale(1, static_cast<long>(s.data.stabilizer.order() * size));
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const Point x = s.points[i];
            const Element xjinv = g.inv(s.data.reps[s.component[i]]);
            // pi_j(delta_x) = delta_x for the component j of x, zero otherwise.
            for (Element xk : s.data.reps)
                for (Element h : s.data.stabilizer.members()) {
                    const Element e = g.mul(g.mul(xjinv, h), xk);
                    cols[x][cp.index_of(x, e)] += scale;
                }
        }
    }
    for (auto& c : cols) map.columns.push_back(to_sparse(c));
    return map;
}

CornerResult build_corner(const PartialAction& pa, const VerifyOptions& options) {
    const auto cert = require_decomposable(pa);
    const auto& g = pa.group();
    const std::size_t points = pa.point_count();
    const auto types = point_types(pa);
    CrossedProduct cp = realize_crossed_product(pa);
    const RationalAlgebra& alg = cp.algebra;
    const std::size_t dim = alg.dimension();
    LinearMapQ map = corner_map(pa, cp, cert.summands);
    const Vector p = map.apply(Vector(points, Rational(1)));
    VerificationReport report;

    report.add("projection_idempotent", alg.multiply(p, p) == p);
    report.add("projection_selfadjoint", alg.star(p) == p);

    const auto fixed = quotient_and_fixed(pa).basis;
    std::vector<Vector> images;
    for (const auto& f : fixed) images.push_back(map.apply(f));
    report.add("injective", partact::rank(images, dim) == fixed.size());

    bool mult = true;
    for (std::size_t a = 0; a < fixed.size() && mult; ++a)
        for (std::size_t b = 0; b < fixed.size() && mult; ++b)
            if (map.apply(pointwise(fixed[a], fixed[b])) != alg.multiply(images[a], images[b])) mult = false;
    report.add("multiplicative", mult);
    report.add("star_preserving",
               std::all_of(images.begin(), images.end(), [&](const Vector& v) { return alg.star(v) == v; }));

    std::vector<Vector> corner;
    for (std::size_t b = 0; b < dim; ++b) {
        Vector v = alg.multiply(alg.multiply(p, alg.basis(b)), p);
        if (!is_zero(v)) corner.push_back(std::move(v));
    }
    report.add("corner_equality", same_span(corner, images, dim),
               "dim pAp " + std::to_string(partact::rank(corner, dim)) + ", dim c(A^G) " +
                   std::to_string(partact::rank(images, dim)));

    bool reps_ok = true, base_ok = true;
    std::string rw, basew;
    std::size_t rep_trials = 0;
    for (const auto& s : cert.summands) {
        const LinearMapQ ref = corner_map(pa, cp, {s});
        auto same_on_fixed = [&](const LinearMapQ& other) {
            return std::all_of(fixed.begin(), fixed.end(),
                               [&](const Vector& f) { return other.apply(f) == ref.apply(f); });
        };
        for (const auto& reps : alternative_reps(g, s.data, options)) {
            ++rep_trials;
            if (!same_on_fixed(corner_map(pa, cp, {summand_for(pa, types, s.data.tuple, reps)})) && reps_ok) {
                reps_ok = false;
                rw = "tuple " + s.data.tuple.to_string() + " reps " + describe(reps);
            }
        }
        for (std::size_t l = 1; l < s.tuple_orbit.size(); ++l)
            if (!same_on_fixed(corner_map(pa, cp, {summand_for(pa, types, s.tuple_orbit[l], std::nullopt)})) &&
                base_ok) {
                base_ok = false;
                basew = "base " + s.tuple_orbit[l].to_string();
            }
    }
    report.add("representative_independent", reps_ok, rw.empty() ? std::to_string(rep_trials) + " choices" : rw);
    report.add("base_point_independent", base_ok, basew);

    // psi(c(iota(a))) = c_H(a) (x) e for H-invariant a on X_t.
    bool factor = true;
    std::string factor_witness;
    for (const auto& s : cert.summands) {
        const PsiResult psi = build_psi(pa, s.data.tuple);
        const auto& h = s.data.stabilizer;
        const std::size_t size = s.data.m + 1;
        const std::size_t db = psi.coefficient.algebra.dimension();
        const auto pos = positions(points, s.points);
        std::vector<bool> done(points, false);
        for (Point y : s.base_points) {
            if (done[y]) continue;
            std::vector<Point> orbit;
            for (Element e : h.members()) orbit.push_back(pa.apply(e, y));
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            for (Point z : orbit) done[z] = true;
            const Vector a = indicator(points, orbit);
            Vector iota = zero_vector(points);
            for (Element xj : s.data.reps) axpy(iota, Rational(1), alpha(pa, g.inv(xj), a));
            const Vector c_full = map.apply(iota);
            Vector c_local = zero_vector(psi.source.algebra.dimension());
            for (std::size_t i = 0; i < dim; ++i) {
                if (sgn(c_full[i]) == 0) continue;
                const auto [x, e] = cp.basis[i];
                if (pos[x] == kNoPoint) {
                    factor = false;
                    continue;
                }
                c_local[psi.source.index_of(pos[x], e)] = c_full[i];
            }
            const Vector lhs = psi.map.apply(c_local);
            Vector rhs = zero_vector(psi.target.dimension());
            const Rational coeff(1, static_cast<long>(h.order() * size));
            for (Point z : orbit) {
                const auto bz = static_cast<Point>(
                    std::lower_bound(s.base_points.begin(), s.base_points.end(), z) - s.base_points.begin());
                for (Element e : h.members())
                    for (std::size_t j = 0; j < size; ++j)
                        for (std::size_t k = 0; k < size; ++k)
                            rhs[matrix_index(db, size, psi.coefficient.index_of(bz, e), j, k)] += coeff;
            }
            if (lhs != rhs && factor_witness.empty()) {
                factor = false;
                factor_witness = "tuple " + s.data.tuple.to_string() + ", orbit of point " + std::to_string(y);
            }
        }
    }
    report.add("psi_corner_factorization", factor, factor_witness);

    return CornerResult{std::move(cp), std::move(map), p, std::move(report)};
}

std::size_t ideal_rank(const RationalAlgebra& alg, const Vector& p) {
    const std::size_t dim = alg.dimension();
    EchelonBasis right(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        Vector v = alg.multiply(p, alg.basis(b));
        if (!is_zero(v)) right.insert(v);
    }
    EchelonBasis ideal(dim);
    for (const auto& r : right.rows()) {
        const SparseVector rs = partact::to_sparse(r);
        for (std::size_t a = 0; a < dim; ++a) {
            Acc acc;
            for (const auto& t : rs) accumulate(acc, alg.basis_product(a, t.index), t.coeff);
            if (acc.empty()) continue;
            ideal.insert(to_dense(to_sparse(acc), dim));
            if (ideal.rank() == dim) return dim;
        }
    }
    return ideal.rank();
}

bool check_fullness(const RationalAlgebra& alg, const Vector& p) {
    if (p.size() != alg.dimension() || alg.multiply(p, p) != p || alg.star(p) != p)
        throw std::invalid_argument("check_fullness: p is not a projection");
    return ideal_rank(alg, p) == alg.dimension();
}

FreenessResult freeness_equivalence(const PartialAction& pa) {
    FreenessResult out;
    const auto verdict = is_free(pa);
    out.free = verdict.free;
    out.witness_element = verdict.witness_element;
    out.witness_point = verdict.witness_point;
    out.full = true;
    for (const auto& st : stratify(pa).strata) {
        const CrossedProduct cp = realize_crossed_product(st.action);
        const LinearMapQ c = corner_map(st.action, cp, st.certificate.summands);
        const Vector p = c.apply(Vector(st.action.point_count(), Rational(1)));
        if (!check_fullness(cp.algebra, p)) {
            out.full = false;
            break;
        }
    }
    return out;
}

VerificationReport verify_decomposable(const PartialAction& pa, const VerifyOptions& options) {
    const auto cert = require_decomposable(pa);
    VerificationReport out;
    auto merge = [&](const std::string& prefix, const VerificationReport& r) {
        for (const auto& c : r.checks) out.add(prefix + "." + c.name, c.pass, c.witness);
    };
    const auto cp = realize_crossed_product(pa);
    const auto alg = check_algebra(cp.algebra);
    out.add("crossed_product.algebra", alg.ok(), alg.witness);
    const auto structure = crossed_product_structure(pa);
    out.add("crossed_product.dimension", structure.total_dimension == cp.algebra.dimension(),
            std::to_string(structure.total_dimension) + " vs " + std::to_string(cp.algebra.dimension()));
    for (const auto& s : cert.summands) merge("psi" + s.data.tuple.to_string(), build_psi(pa, s.data.tuple).report);
    merge("expectation", build_expectation(pa, options).report);
    merge("corner", build_corner(pa, options).report);
    const auto fr = freeness_equivalence(pa);
    out.add("freeness_equivalence", fr.agree(),
            std::string("free=") + (fr.free ? "true" : "false") + " full=" + (fr.full ? "true" : "false"));
    const auto units = equivariant_unit_system(pa);
    out.add("unit_system", units.ok(), std::to_string(units.relations_checked) + " relations");
    const auto glob = globalize(pa);
    const auto env = check_enveloping(pa, glob);
    out.add("enveloping", env.ok(), env.violation);
    const auto alt = globalize(pa, SectionChoice::maximal);
    out.add("envelope_unique", envelope_isomorphism(glob, alt).has_value());
    const auto morita = morita_consistency(pa);
    out.add("morita_consistency", morita.ok(), morita.violation);
    const auto fixed = fixed_point_structure(pa);
    out.add("fixed_point_identification", fixed.matches_quotient && fixed.inclusions_invariant &&
                                              fixed.total_dimension == fixed.orbit_count);
    return out;
}

}  // namespace partact
