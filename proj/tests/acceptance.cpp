// Acceptance runner: one PASS/FAIL line per criterion. All comparisons are
// exact (rational arithmetic, integer counts); the tolerance is zero.

#include "partact/cli.hpp"
#include "partact/decomposition.hpp"
#include "partact/instance_format.hpp"
#include "partact/structure.hpp"
#include "partact/xverify.hpp"

#include "battery.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

using namespace partact;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

int report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << id << "] " << name << "  tolerance=exact  "
         << o.detail;
    line << "  (" << std::fixed << std::setprecision(2) << secs << "s)";
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "        " << f << "\n";
    std::cout.flush();
    return o.pass ? 0 : 1;
}

std::set<Element> stabilizer_brute(const FiniteGroup& g, const Tuple& t) {
    std::set<Element> h;
    for (Element a = 0; a < g.order(); ++a)
        if (t.translate(g, a) == t) h.insert(a);
    return h;
}

std::set<Element> coset(const FiniteGroup& g, const std::set<Element>& h, Element x) {
    std::set<Element> out;
    for (Element a : h) out.insert(g.mul(a, x));
    return out;
}

// Whether tau = H u H y_1 u ... u H y_m as a disjoint union.
bool decomposes(const FiniteGroup& g, const Tuple& tau, const std::set<Element>& h, const std::vector<Element>& ys) {
    std::set<Element> all(h);
    std::size_t count = h.size();
    for (Element y : ys) {
        const auto c = coset(g, h, y);
        all.insert(c.begin(), c.end());
        count += c.size();
    }
    return count == all.size() && all == std::set<Element>(tau.members().begin(), tau.members().end());
}

// y_j = h_j x_{pi(j)} for some permutation pi and h_j in H.
bool related(const FiniteGroup& g, const std::set<Element>& h, const std::vector<Element>& ys,
             const std::vector<Element>& xs) {
    std::vector<std::size_t> perm(xs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t j = 0; j < ys.size() && ok; ++j) ok = h.count(g.mul(ys[j], g.inv(xs[perm[j]]))) > 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t basis_count(const PartialAction& pa) {
    std::size_t n = 0;
    for (Element g = 0; g < pa.group().order(); ++g) n += pa.domain(g).size();
    return n;
}

struct BatteryRun {
    std::string name;
    const PartialAction* action;
    VerificationReport report;
};

std::vector<BatteryRun> run_battery(const std::vector<testing::NamedInstance>& battery) {
    std::vector<BatteryRun> out;
    VerifyOptions options;
    options.seed = kSeed;
    for (const auto& inst : battery) out.push_back({inst.name, &inst.action, verify_decomposable(inst.action, options)});
    return out;
}

Outcome battery_checks(const std::vector<BatteryRun>& runs, const std::vector<std::string>& prefixes) {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& run : runs)
        for (const auto& c : run.report.checks) {
            const bool selected = std::any_of(prefixes.begin(), prefixes.end(),
                                              [&](const std::string& p) { return c.name.rfind(p, 0) == 0; });
            if (!selected) continue;
            ++checks;
            o.expect(c.pass, run.name + ": " + c.name + " " + c.witness);
        }
    o.expect(checks > 0, "no checks selected");
    o.detail = std::to_string(checks) + " checks over " + std::to_string(runs.size()) + " instances";
    return o;
}

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str();
}

}  // namespace

int main() {
    const auto groups = testing::catalog_groups();
    const auto battery = testing::decomposable_battery(kSeed);
    const auto randoms = testing::random_instances(kSeed, 60);
    int failures = 0;

    failures += report(1, "tuple-space decomposition parameter", [&] {
        Outcome o;
        std::size_t count = 0;
        for (const auto& [name, g] : groups)
            for (std::size_t n = 1; n <= g->order(); ++n) {
                const auto pa = tuple_action(g, n).action;
                o.expect(validate_partial_action(pa).valid(), "T" + std::to_string(n) + "(" + name + ") invalid");
                for (std::size_t k = 1; k <= g->order(); ++k) {
                    const bool cert = std::holds_alternative<DecompositionCertificate>(check_decomposition(pa, k));
                    o.expect(cert == (k == n), "T" + std::to_string(n) + "(" + name + ") k=" + std::to_string(k));
                }
                ++count;
            }
        o.detail = std::to_string(count) + " tuple spaces";
        return o;
    });

    failures += report(2, "tuple stabilizers and coset decomposition", [&] {
        Outcome o;
        std::size_t tuples = 0, rep_lists = 0;
        for (const auto& [name, g] : groups)
            for (std::size_t n = 1; n <= g->order(); ++n)
                for (const auto& t : enumerate_tuples(*g, n)) {
                    ++tuples;
                    const auto od = orbit_data(*g, t);
                    const auto h = stabilizer_brute(*g, t);
                    const std::string where = name + " " + t.to_string();
                    o.expect(std::set<Element>(od.stabilizer.members().begin(), od.stabilizer.members().end()) == h,
                             where + ": stabilizer");
                    o.expect(n % h.size() == 0, where + ": |H| does not divide n");
                    o.expect(od.m + 1 == n / h.size(), where + ": m");
                    o.expect(od.reps.size() == od.m + 1 && od.reps[0] == 0, where + ": reps");
                    const std::vector<Element> xs(od.reps.begin() + 1, od.reps.end());
                    o.expect(decomposes(*g, t, h, xs), where + ": cosets do not reconstruct the tuple");
                    if (n > 4) continue;
                    // Every list y_1..y_m decomposing the tuple is a permuted H-multiple of the reps.
                    std::size_t found = 0;
                    std::vector<Element> ys(od.m, 0);
                    std::function<void(std::size_t)> fill = [&](std::size_t j) {
                        if (j == od.m) {
                            if (!decomposes(*g, t, h, ys)) return;
                            ++found;
                            o.expect(related(*g, h, ys, xs), where + ": unrelated rep list");
                            std::vector<Element> full{0};
                            full.insert(full.end(), ys.begin(), ys.end());
                            o.expect(orbit_data_with_reps(*g, t, full).m == od.m, where + ": rejected rep list");
                            return;
                        }
                        for (Element y = 0; y < g->order(); ++y) {
                            ys[j] = y;
                            fill(j + 1);
                        }
                    };
                    fill(0);
                    std::size_t expected = 1;
                    for (std::size_t j = 1; j <= od.m; ++j) expected *= j * h.size();
                    o.expect(found == expected, where + ": rep list count");
                    rep_lists += found;
                }
        o.detail = std::to_string(tuples) + " tuples, " + std::to_string(rep_lists) + " rep lists";
        return o;
    });

    failures += report(3, "partial group algebra structure", [&] {
        Outcome o;
        auto labels = [](const StructureReport& r) {
            std::vector<std::string> out;
            for (const auto& b : r.blocks) out.push_back(b.label());
            return out;
        };
        const auto z2 = partial_group_algebra(FiniteGroup::cyclic(2));
        o.expect(z2.total_dimension == 3 && labels(z2) == std::vector<std::string>{"M_1[triv]", "M_1[C2]"},
                 "Z2: " + z2.summary());
        const auto z3 = partial_group_algebra(FiniteGroup::cyclic(3));
        o.expect(z3.total_dimension == 8 &&
                     labels(z3) == std::vector<std::string>{"M_1[triv]", "M_2[triv]", "M_1[C3]"},
                 "Z3: " + z3.summary());
        const auto z4 = partial_group_algebra(FiniteGroup::cyclic(4));
        o.expect(z4.total_dimension == 20 && z4.k0_rank == 9, "Z4: " + z4.summary());
        const auto s3 = partial_group_algebra(FiniteGroup::symmetric(3));
        o.expect(s3.total_dimension == 112, "S3: " + s3.summary());
        for (const auto& [name, g] : groups) {
            const auto r = partial_group_algebra(*g);
            const auto oracle = realize_crossed_product(full_tuple_action(g).action).algebra.dimension();
            o.expect(r.total_dimension == oracle, name + ": " + std::to_string(r.total_dimension) + " vs oracle " +
                                                      std::to_string(oracle));
        }
        o.detail = "Z2 3, Z3 8, Z4 20 (K0 rank " + std::to_string(z4.k0_rank) + "), S3 " +
                   std::to_string(s3.total_dimension);
        return o;
    });

    failures += report(4, "dimension conservation", [&] {
        Outcome o;
        std::vector<const testing::NamedInstance*> all;
        for (const auto& i : randoms) all.push_back(&i);
        const auto tuples = testing::tuple_instances();
        for (const auto& i : tuples) all.push_back(&i);
        for (const auto& i : battery) all.push_back(&i);
        for (const auto* inst : all) {
            const auto r = crossed_product_structure(inst->action);
            std::size_t sum = 0;
            for (const auto& b : r.blocks) sum += b.matrix_size * b.matrix_size * b.coefficient.order();
            o.expect(sum == basis_count(inst->action), inst->name);
        }
        o.detail = std::to_string(all.size()) + " instances (" + std::to_string(randoms.size()) + " randomized)";
        return o;
    });

    const auto start = std::chrono::steady_clock::now();
    const auto runs = run_battery(battery);
    std::cerr << "battery: " << battery.size() << " instances verified in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s\n";

    failures += report(5, "psi isomorphism", [&] { return battery_checks(runs, {"psi", "crossed_product."}); });
    failures += report(6, "conditional expectation", [&] {
        return battery_checks(runs, {"expectation.", "fixed_point_identification"});
    });
    failures += report(7, "corner embedding", [&] { return battery_checks(runs, {"corner."}); });

    failures += report(8, "freeness iff fullness", [&] {
        Outcome o = battery_checks(runs, {"freeness_equivalence"});
        std::size_t free = 0, non_free = 0;
        for (const auto& run : runs) (is_free(*run.action).free ? free : non_free)++;
        o.expect(free >= 5 && non_free >= 5, "battery needs 5 free and 5 non-free instances");
        // Worked examples.
        const auto g2 = testing::make_group("family:cyclic:2");
        const auto fixed = build_corner(global_action(g2, 1, [](Element, Point x) { return x; }));
        o.expect(!check_fullness(fixed.crossed.algebra, fixed.projection), "global trivial Z2 corner is full");
        const auto reg = build_corner(regular_action(g2));
        o.expect(check_fullness(reg.crossed.algebra, reg.projection), "regular Z2 corner not full");
        const auto t = build_corner(tuple_action(testing::make_group("family:cyclic:3"), 2).action);
        o.expect(check_fullness(t.crossed.algebra, t.projection), "T2(Z3) corner not full");
        o.expect(check_fullness(reg.crossed.algebra, *reg.crossed.algebra.unit()), "identity not full");
        o.detail += "; " + std::to_string(free) + " free, " + std::to_string(non_free) + " non-free";
        return o;
    });

    failures += report(9, "globalization", [&] {
        Outcome o = battery_checks(runs, {"enveloping", "envelope_unique", "morita_consistency"});
        for (const auto& inst : battery) {
            const auto cert = require_decomposable(inst.action);
            const auto glob = globalize(inst.action);
            o.expect(glob.summands.size() == cert.summands.size(), inst.name + ": summand count");
            for (std::size_t i = 0; i < cert.summands.size() && i < glob.summands.size(); ++i) {
                const auto& s = cert.summands[i];
                const std::size_t expect =
                    inst.action.group().order() / s.data.stabilizer.order() * s.base_points.size();
                o.expect(glob.summands[i].size() == expect, inst.name + ": envelope summand size");
            }
        }
        return o;
    });

    failures += report(10, "stratification", [&] {
        Outcome o;
        for (const auto& inst : randoms) {
            const auto& pa = inst.action;
            o.expect(validate_partial_action(pa).valid(), inst.name + ": invalid");
            const auto s = stratify(pa);
            o.expect(verify_stratification(pa, s).ok(), inst.name + ": stratification check");
            std::vector<int> seen(pa.point_count(), 0);
            for (const auto& st : s.strata) {
                o.expect(is_invariant(pa, st.points), inst.name + ": stratum not invariant");
                o.expect(std::holds_alternative<DecompositionCertificate>(check_decomposition(st.action, st.k)),
                         inst.name + ": stratum " + std::to_string(st.k) + " not decomposable");
                for (Point x : st.points) {
                    ++seen[x];
                    o.expect(point_type(pa, x).tau.size() == st.k, inst.name + ": type size");
                }
                o.expect(restrict_action(pa, st.points) == st.action, inst.name + ": stratum action");
            }
            o.expect(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }), inst.name + ": partition");
            // Reassembly: the strata actions and the original agree on every map.
            for (const auto& st : s.strata)
                for (Element g = 0; g < pa.group().order(); ++g)
                    for (std::size_t i = 0; i < st.points.size(); ++i) {
                        const Point y = st.action.image(g, static_cast<Point>(i));
                        const Point expect = pa.image(g, st.points[i]);
                        o.expect((y == kNoPoint ? kNoPoint : st.points[y]) == expect, inst.name + ": reassembly");
                    }
        }
        o.detail = std::to_string(randoms.size()) + " randomized instances";
        return o;
    });

    failures += report(11, "equivariant unit systems", [&] { return battery_checks(runs, {"unit_system"}); });

    failures += report(12, "CLI determinism", [&] {
        Outcome o;
        const fs::path dir = fs::temp_directory_path() / ("partact_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::vector<std::string> paths;
        std::size_t i = 0;
        for (const auto* list : {&battery, &randoms})
            for (std::size_t j = 0; j < list->size(); j += 9) {
                const auto p = (dir / ("instance" + std::to_string(i++) + ".txt")).string();
                std::ofstream(p) << serialize_instance((*list)[j].action);
                paths.push_back(p);
            }
        std::size_t runs_done = 0;
        auto twice = [&](const std::vector<std::string>& args) {
            int c1 = 0, c2 = 0;
            const auto a = run_cli_capture(args, c1);
            const auto b = run_cli_capture(args, c2);
            ++runs_done;
            std::string joined;
            for (const auto& s : args) joined += s + " ";
            o.expect(a == b && c1 == c2 && !a.empty(), "differs: " + joined);
        };
        for (const auto& p : paths) {
            twice({"--format", "machine", "validate", p});
            twice({"--format", "machine", "structure", p});
            twice({"--format", "machine", "decompose", p});
            twice({"--format", "machine", "globalize", "--stratify", p});
            twice({"--format", "machine", "verify", p});
        }
        twice({"--format", "machine", "structure", "--par-group", "family:symmetric:3"});
        fs::remove_all(dir);
        o.detail = std::to_string(runs_done) + " command pairs, byte-identical";
        return o;
    });

    return failures == 0 ? 0 : 1;
}
