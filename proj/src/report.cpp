#include "partact/report.hpp"

#include "partact/instance_format.hpp"

#include <iomanip>
#include <sstream>

namespace partact {

namespace {

std::vector<Point> relabeled(const std::vector<Point>& pts, const std::vector<Point>* relabel) {
    if (!relabel) return pts;
    std::vector<Point> out;
    for (Point p : pts) out.push_back((*relabel)[p]);
    return out;
}

std::string join(const std::vector<Point>& pts) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
    os << "}";
    return os.str();
}

std::string join_elements(const std::vector<Element>& es) {
    std::vector<Point> pts(es.begin(), es.end());
    return join(pts);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string instance_digest(const PartialAction& pa) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(serialize_instance(pa));
    return os.str();
}

Json document(const std::string& command, Json options, const std::optional<std::string>& digest, Json payload) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["options"] = std::move(options);
    doc["instance_digest"] = digest ? Json(*digest) : Json(nullptr);
    doc["payload"] = std::move(payload);
    return doc;
}

Json validation_json(const PartialAction& pa, const ValidationReport& report) {
    Json j;
    j["valid"] = report.valid();
    j["group_order"] = pa.group().order();
    j["points"] = pa.point_count();
    Json vs = Json::array();
    for (const auto& v : report.violations)
        vs.push_back({{"kind", to_string(v.kind)}, {"g", v.g}, {"h", v.h}, {"x", v.x}, {"message", v.message}});
    j["violations"] = std::move(vs);
    return j;
}

Json certificate_json(const DecompositionCertificate& cert, const std::vector<Point>* relabel) {
    Json j;
    j["decomposable"] = true;
    j["n"] = cert.n;
    Json ss = Json::array();
    for (const auto& s : cert.summands) {
        Json orbit = Json::array();
        for (const auto& t : s.tuple_orbit) orbit.push_back(t.to_string());
        ss.push_back({{"orbit_key", s.key().to_string()},
                      {"base", s.data.tuple.to_string()},
                      {"stabilizer", s.data.stabilizer.members()},
                      {"reps", s.data.reps},
                      {"m", s.data.m},
                      {"tuple_orbit", std::move(orbit)},
                      {"points", relabeled(s.points, relabel)},
                      {"base_points", relabeled(s.base_points, relabel)}});
    }
    j["summands"] = std::move(ss);
    return j;
}

Json refutation_json(const DecompositionRefutation& ref) {
    return {{"decomposable", false},
            {"n", ref.n},
            {"witness_point", ref.witness},
            {"witness_type_size", ref.witness_type_size}};
}

Json stratification_json(const Stratification& s, const StratificationCheck& check) {
    Json j;
    j["decomposable"] = s.strata.size() <= 1;
    Json strata = Json::array();
    for (const auto& st : s.strata) {
        Json c = certificate_json(st.certificate, &st.points);
        strata.push_back({{"k", st.k}, {"points", st.points}, {"summands", c["summands"]}});
    }
    j["strata"] = std::move(strata);
    Json chain = Json::array();
    for (const auto& step : s.extension_chain)
        chain.push_back(
            {{"k", step.k}, {"support", step.support}, {"kernel", step.kernel}, {"quotient", step.quotient}});
    j["extension_chain"] = std::move(chain);
    j["check"] = {{"partition", check.partition},
                  {"invariant", check.invariant},
                  {"strata_decomposable", check.strata_decomposable},
                  {"chain_conditions", check.chain_conditions},
                  {"split_consistent", check.split_consistent},
                  {"reassembles", check.reassembles}};
    return j;
}

Json structure_json(const StructureReport& r) {
    Json j;
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
        blocks.push_back({{"label", b.label()},
                          {"matrix_size", b.matrix_size},
                          {"coefficient", b.coefficient.members()},
                          {"coefficient_label", b.coefficient_label},
                          {"coefficient_order", b.coefficient.order()},
                          {"dimension", b.dimension()},
                          {"simple_count", b.simple_count},
                          {"stratum", b.stratum},
                          {"orbit_key", b.orbit_key.to_string()},
                          {"base", b.base.to_string()},
                          {"point_orbit_key", b.point_orbit_key},
                          {"point_orbit_size", b.point_orbit_size}});
    j["blocks"] = std::move(blocks);
    j["summary"] = r.summary();
    j["total_dimension"] = r.total_dimension;
    j["basis_dimension"] = r.basis_dimension;
    j["k0_rank"] = r.k0_rank;
    j["k1"] = r.k1;
    return j;
}

Json fixed_point_json(const FixedPointReport& r) {
    Json j;
    Json ss = Json::array();
    for (const auto& s : r.summands) {
        Json inc = Json::array();
        for (const auto& v : s.inclusions) {
            Json f = Json::array();
            for (const auto& q : v) f.push_back(to_string(q));
            inc.push_back(std::move(f));
        }
        ss.push_back({{"stratum", s.stratum},
                      {"orbit_key", s.orbit_key.to_string()},
                      {"base", s.base.to_string()},
                      {"stabilizer", s.stabilizer.members()},
                      {"fixed_dimension", s.fixed_dimension},
                      {"inclusions", std::move(inc)}});
    }
    j["summands"] = std::move(ss);
    j["total_dimension"] = r.total_dimension;
    j["orbit_count"] = r.orbit_count;
    j["inclusions_invariant"] = r.inclusions_invariant;
    j["matches_quotient"] = r.matches_quotient;
    return j;
}

Json globalization_json(const GlobalizedAction& g, const EnvelopingCheck& check) {
    Json j;
    const auto& env = g.envelope;
    Json maps = Json::array();
    for (Element e = 0; e < env.group().order(); ++e) {
        std::vector<Point> images;
        for (Point p = 0; p < env.point_count(); ++p) images.push_back(env.apply(e, p));
        maps.push_back(std::move(images));
    }
    j["envelope"] = {{"points", env.point_count()}, {"maps", std::move(maps)}};
    j["embedding"] = g.embedding;
    Json ss = Json::array();
    for (const auto& s : g.summands)
        ss.push_back({{"base", s.base.to_string()},
                      {"stabilizer", s.stabilizer.members()},
                      {"coset_reps", s.coset_reps},
                      {"base_points", s.base_points},
                      {"offset", s.offset},
                      {"size", s.size()}});
    j["summands"] = std::move(ss);
    j["check"] = {{"envelope_global", check.envelope_global},
                  {"embedding_injective", check.embedding_injective},
                  {"domains_match", check.domains_match},
                  {"maps_extend", check.maps_extend},
                  {"translates_cover", check.translates_cover},
                  {"violation", check.violation}};
    return j;
}

Json verification_json(const VerificationReport& r) {
    Json j;
    j["pass"] = r.ok();
    Json cs = Json::array();
    for (const auto& c : r.checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    j["checks"] = std::move(cs);
    return j;
}

std::string validation_text(const PartialAction& pa, const ValidationReport& report) {
    std::ostringstream os;
    os << "group order " << pa.group().order() << ", " << pa.point_count() << " points\n";
    if (report.valid()) {
        os << "valid partial action\n";
        return os.str();
    }
    os << report.violations.size() << " violation(s)\n";
    os << std::left << std::setw(22) << "kind" << std::setw(5) << "g" << std::setw(5) << "h" << std::setw(6) << "x"
       << "message\n";
    for (const auto& v : report.violations)
        os << std::left << std::setw(22) << to_string(v.kind) << std::setw(5) << v.g << std::setw(5) << v.h
           << std::setw(6) << v.x << v.message << "\n";
    return os.str();
}

std::string certificate_text(const DecompositionCertificate& cert, const std::vector<Point>* relabel) {
    std::ostringstream os;
    os << "decomposable with n = " << cert.n << ", " << cert.summands.size() << " orbit summand(s)\n";
    os << std::left << std::setw(18) << "orbit key" << std::setw(18) << "base" << std::setw(14) << "stabilizer"
       << std::setw(4) << "m" << std::setw(8) << "points" << "X_t\n";
    for (const auto& s : cert.summands)
        os << std::left << std::setw(18) << s.key().to_string() << std::setw(18) << s.data.tuple.to_string()
           << std::setw(14) << join_elements(s.data.stabilizer.members()) << std::setw(4) << s.data.m << std::setw(8)
           << s.points.size() << join(relabeled(s.base_points, relabel)) << "\n";
    return os.str();
}

std::string refutation_text(const DecompositionRefutation& ref) {
    std::ostringstream os;
    os << "not " << ref.n << "-decomposable: point " << ref.witness << " has type of size " << ref.witness_type_size
       << "\n";
    return os.str();
}

std::string stratification_text(const Stratification& s, const StratificationCheck& check) {
    std::ostringstream os;
    os << "stratification: " << s.strata.size() << (s.strata.size() == 1 ? " stratum\n" : " strata\n");
    os << std::left << std::setw(4) << "k" << std::setw(8) << "points" << std::setw(10) << "summands" << "members\n";
    for (const auto& st : s.strata)
        os << std::left << std::setw(4) << st.k << std::setw(8) << st.points.size() << std::setw(10)
           << st.certificate.summands.size() << join(st.points) << "\n";
    os << "extension chain\n";
    os << std::left << std::setw(4) << "k" << std::setw(9) << "support" << std::setw(8) << "kernel" << "quotient\n";
    for (const auto& step : s.extension_chain)
        os << std::left << std::setw(4) << step.k << std::setw(9) << step.support.size() << std::setw(8)
           << step.kernel.size() << step.quotient.size() << "\n";
    os << "checks: partition " << yes_no(check.partition) << ", invariant " << yes_no(check.invariant)
       << ", strata decomposable " << yes_no(check.strata_decomposable) << ", chain " << yes_no(check.chain_conditions)
       << ", split " << yes_no(check.split_consistent) << ", reassembles " << yes_no(check.reassembles) << "\n";
    return os.str();
}

std::string structure_text(const StructureReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "k" << std::setw(18) << "orbit key" << std::setw(12) << "point orbit"
       << std::setw(14) << "block" << std::setw(8) << "|K|" << std::setw(8) << "dim" << "K0\n";
    for (const auto& b : r.blocks)
        os << std::left << std::setw(4) << b.stratum << std::setw(18) << b.orbit_key.to_string() << std::setw(12)
           << b.point_orbit_key << std::setw(14) << b.label() << std::setw(8) << b.coefficient.order() << std::setw(8)
           << b.dimension() << b.simple_count << "\n";
    os << r.summary() << "\n";
    os << "total dimension " << r.total_dimension << ", basis dimension " << r.basis_dimension << ", K0 rank "
       << r.k0_rank << ", K1 " << r.k1 << "\n";
    return os.str();
}

std::string fixed_point_text(const FixedPointReport& r) {
    std::ostringstream os;
    os << "fixed-point algebra dimension " << r.total_dimension << " (orbits " << r.orbit_count << ", matches "
       << yes_no(r.matches_quotient) << ")\n";
    for (const auto& s : r.summands)
        os << "  k=" << s.stratum << " base " << s.base.to_string() << " H=" << join_elements(s.stabilizer.members())
           << " fixed dimension " << s.fixed_dimension << "\n";
    return os.str();
}

std::string globalization_text(const GlobalizedAction& g, const EnvelopingCheck& check) {
    std::ostringstream os;
    os << "envelope: " << g.envelope.point_count() << " points, " << g.summands.size() << " summand(s)\n";
    os << std::left << std::setw(18) << "base" << std::setw(14) << "stabilizer" << std::setw(8) << "cosets"
       << std::setw(6) << "|X_t|" << std::setw(8) << "offset" << "size\n";
    for (const auto& s : g.summands)
        os << std::left << std::setw(18) << s.base.to_string() << std::setw(14)
           << join_elements(s.stabilizer.members()) << std::setw(8) << s.coset_reps.size() << std::setw(6)
           << s.base_points.size() << std::setw(8) << s.offset << s.size() << "\n";
    os << "embedding " << join(g.embedding) << "\n";
    for (Element e = 0; e < g.envelope.group().order(); ++e) {
        std::vector<Point> images;
        for (Point p = 0; p < g.envelope.point_count(); ++p) images.push_back(g.envelope.apply(e, p));
        os << "beta_" << e << " " << join(images) << "\n";
    }
    os << "enveloping: " << pass_fail(check.ok());
    if (!check.violation.empty()) os << " (" << check.violation << ")";
    os << "\n";
    return os.str();
}

std::string verification_text(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << pass_fail(c.pass) << "  " << c.name;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    os << (r.ok() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

}  // namespace partact
