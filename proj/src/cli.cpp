#include "partact/cli.hpp"

#include "partact/instance_format.hpp"
#include "partact/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace partact {

namespace {

enum class Format { text, machine };

struct Settings {
    Format format = Format::text;
    std::size_t max_group_order = 24;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Emitter {
public:
    Emitter(const Settings& settings, std::ostream& out) : settings_(settings), out_(out) {}

    void emit(const std::string& command, Json options, const std::optional<std::string>& digest, Json payload,
              const std::string& text) {
        if (settings_.format == Format::machine)
            out_ << document(command, std::move(options), digest, std::move(payload)).dump(2) << "\n";
        else
            out_ << text;
    }

private:
    const Settings& settings_;
    std::ostream& out_;
};

PartialAction load(const std::string& path, const Settings& settings) {
    PartialAction pa = parse_instance_unchecked(read_file(path));
    if (pa.group().order() > settings.max_group_order)
        throw UsageError("group order " + std::to_string(pa.group().order()) + " exceeds --max-group-order " +
                         std::to_string(settings.max_group_order));
    return pa;
}

// Loads and validates; returns nullopt after reporting when invalid.
std::optional<PartialAction> load_valid(const std::string& path, const Settings& settings, std::ostream& err) {
    PartialAction pa = load(path, settings);
    const auto report = validate_partial_action(pa);
    if (report.valid()) return pa;
    err << "error: " << path << " is not a valid partial action (" << report.violations.size()
        << " violation(s)); run 'validate' for details\n";
    return std::nullopt;
}

int cmd_validate(const std::string& path, const Settings& settings, Emitter& emitter) {
    PartialAction pa = load(path, settings);
    const auto report = validate_partial_action(pa);
    emitter.emit("validate", {{"path", path}}, instance_digest(pa), validation_json(pa, report),
                 validation_text(pa, report));
    return report.valid() ? kExitOk : kExitNegative;
}

int cmd_structure(const std::string& path, const std::string& par_group, const Settings& settings, Emitter& emitter,
                  std::ostream& err) {
    if (!par_group.empty()) {
        const FiniteGroup g = parse_group_spec(par_group);
        if (g.order() > settings.max_group_order)
            throw UsageError("group order " + std::to_string(g.order()) + " exceeds --max-group-order " +
                             std::to_string(settings.max_group_order));
        const auto r = partial_group_algebra(g, settings.max_group_order);
        Json payload{{"group", group_spec_string(g)},
                     {"structure", structure_json(r)},
                     {"closed_form_dimension", partial_group_algebra_dimension(g.order())}};
        emitter.emit("structure", {{"par_group", par_group}}, std::nullopt, std::move(payload), structure_text(r));
        return kExitOk;
    }
    const auto pa = load_valid(path, settings, err);
    if (!pa) return kExitNegative;
    const auto r = crossed_product_structure(*pa);
    const auto fixed = fixed_point_structure(*pa);
    Json payload{{"structure", structure_json(r)}, {"fixed_point", fixed_point_json(fixed)}};
    emitter.emit("structure", {{"path", path}}, instance_digest(*pa), std::move(payload),
                 structure_text(r) + fixed_point_text(fixed));
    return kExitOk;
}

int cmd_decompose(const std::string& path, std::optional<std::size_t> n, const Settings& settings, Emitter& emitter,
                  std::ostream& err) {
    const auto pa = load_valid(path, settings, err);
    if (!pa) return kExitNegative;
    Json options{{"path", path}};
    if (n) {
        options["n"] = *n;
        const auto result = check_decomposition(*pa, *n);
        if (const auto* cert = std::get_if<DecompositionCertificate>(&result)) {
            emitter.emit("decompose", options, instance_digest(*pa), certificate_json(*cert), certificate_text(*cert));
            return kExitOk;
        }
        const auto& ref = std::get<DecompositionRefutation>(result);
        emitter.emit("decompose", options, instance_digest(*pa), refutation_json(ref), refutation_text(ref));
        return kExitNegative;
    }
    if (decomposition_parameter(*pa) && pa->point_count() > 0) {
        const auto cert = require_decomposable(*pa);
        emitter.emit("decompose", options, instance_digest(*pa), certificate_json(cert), certificate_text(cert));
        return kExitOk;
    }
    const auto s = stratify(*pa);
    const auto check = verify_stratification(*pa, s);
    emitter.emit("decompose", options, instance_digest(*pa), stratification_json(s, check),
                 stratification_text(s, check));
    return check.ok() ? kExitOk : kExitNegative;
}

int cmd_globalize(const std::string& path, bool stratified, const Settings& settings, Emitter& emitter,
                  std::ostream& err) {
    const auto pa = load_valid(path, settings, err);
    if (!pa) return kExitNegative;
    if (!stratified && !decomposition_parameter(*pa)) {
        err << "error: the partial action is not decomposable; rerun with --stratify to globalize each stratum\n";
        return kExitNegative;
    }
    const auto glob = stratified ? globalize_stratified(*pa) : globalize(*pa);
    const auto check = check_enveloping(*pa, glob);
    emitter.emit("globalize", {{"path", path}, {"stratify", stratified}}, instance_digest(*pa),
                 globalization_json(glob, check), globalization_text(glob, check));
    return check.ok() ? kExitOk : kExitNegative;
}

int cmd_verify(const std::string& path, std::uint64_t seed, const Settings& settings, Emitter& emitter,
               std::ostream& err) {
    const auto pa = load_valid(path, settings, err);
    if (!pa) return kExitNegative;
    VerifyOptions options;
    options.seed = seed;
    VerificationReport report;
    if (decomposition_parameter(*pa)) {
        report = verify_decomposable(*pa, options);
    } else {
        const auto s = stratify(*pa);
        const auto check = verify_stratification(*pa, s);
        report.add("stratification", check.ok());
        for (const auto& st : s.strata) {
            const auto part = verify_decomposable(st.action, options);
            for (const auto& c : part.checks)
                report.add("stratum" + std::to_string(st.k) + "." + c.name, c.pass, c.witness);
        }
        const auto glob = globalize_stratified(*pa);
        const auto env = check_enveloping(*pa, glob);
        report.add("enveloping_stratified", env.ok(), env.violation);
        const auto fr = freeness_equivalence(*pa);
        report.add("freeness_equivalence", fr.agree());
    }
    emitter.emit("verify", {{"path", path}, {"seed", seed}}, instance_digest(*pa), verification_json(report),
                 verification_text(report));
    return report.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure engine for partial actions of finite groups on finite sets", "partact"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--max-group-order", settings.max_group_order, "Largest accepted group order")
        ->check(CLI::PositiveNumber);

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check the partial action axioms");
    validate->add_option("path", path, "Instance file")->required();

    std::string par_group;
    auto* structure = app.add_subcommand("structure", "Block structure of the crossed product");
    structure->add_option("path", path, "Instance file");
    structure->add_option("--par-group", par_group, "Partial group algebra of a group spec");

    std::optional<std::size_t> n;
    auto* decompose = app.add_subcommand("decompose", "Decomposition certificate or stratification");
    decompose->add_option("path", path, "Instance file")->required();
    decompose->add_option("--n", n, "Decomposition parameter to test")->check(CLI::PositiveNumber);

    bool stratified = false;
    auto* glob = app.add_subcommand("globalize", "Enveloping action");
    glob->add_option("path", path, "Instance file")->required();
    glob->add_flag("--stratify", stratified, "Globalize each stratum");

    std::uint64_t seed = 0x5eed;
    auto* verify = app.add_subcommand("verify", "Run every exact verification");
    verify->add_option("path", path, "Instance file")->required();
    verify->add_option("--seed", seed, "Seed for sampled representative choices");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    settings.format = format == "machine" ? Format::machine : Format::text;
    Emitter emitter(settings, out);

    try {
        if (validate->parsed()) return cmd_validate(path, settings, emitter);
        if (structure->parsed()) {
            if (path.empty() == par_group.empty())
                throw UsageError("structure needs exactly one of an instance path or --par-group");
            return cmd_structure(path, par_group, settings, emitter, err);
        }
        if (decompose->parsed()) return cmd_decompose(path, n, settings, emitter, err);
        if (glob->parsed()) return cmd_globalize(path, stratified, settings, emitter, err);
        if (verify->parsed()) return cmd_verify(path, seed, settings, emitter, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GroupTooLargeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace partact
