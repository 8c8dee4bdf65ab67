#include "kfan/cli/cli.hpp"

#include "kfan/cli/fan_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>

namespace kfan::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown after the violations have been printed.
struct InvalidFan {};

std::string fan_label(const Fan& fan)
{
    return fan.name().empty() ? "unnamed" : fan.name();
}

FanPtr load_valid(const std::string& source, bool structured, std::ostream& out)
{
    Fan fan = load_fan(source);
    auto violations = validate(fan);
    if (!violations.empty()) {
        if (structured) {
            Json doc;
            doc["fan"] = fan_label(fan);
            doc["valid"] = false;
            auto list = Json::array();
            for (const auto& v : violations)
                list.push_back(v.message);
            doc["violations"] = std::move(list);
            out << doc.dump(2) << "\n";
        } else {
            out << "invalid: " << violations.size() << " violation(s)\n";
            for (const auto& v : violations)
                out << "  " << v.message << "\n";
        }
        throw InvalidFan{};
    }
    return share(std::move(fan));
}

Json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

void print_polys(std::ostream& out, const std::string& title, const std::vector<IntPolynomial>& ps)
{
    out << title << ": " << ps.size() << " generator(s)\n";
    for (const auto& p : ps)
        out << "  " << p.to_string() << "\n";
}

int cmd_validate(const std::string& source, bool structured, std::ostream& out)
{
    FanPtr fan = load_valid(source, structured, out);
    if (structured) {
        Json doc;
        doc["fan"] = fan_label(*fan);
        doc["valid"] = true;
        doc["violations"] = Json::array();
        out << doc.dump(2) << "\n";
    } else {
        out << "valid: " << fan_label(*fan) << ", " << fan->num_rays() << " rays, " << fan->maximal_cones().size()
            << " maximal cones, " << fan->cones().size() << " cones, "
            << (is_complete(*fan) ? "complete" : "not complete") << "\n";
    }
    return exit_ok;
}

int cmd_presentation(const std::string& source, const PresentationOptions& opts, std::ostream& out)
{
    FanPtr fan = load_valid(source, false, out);
    KPresentation p = build_presentation(fan, opts);
    out << "fan: " << fan_label(*fan) << "\n";
    out << "variables:";
    for (RayId r = 0; r < fan->num_rays(); ++r)
        out << (r ? ", " : " ") << "x" << r << " = " << to_string(fan->ray(r));
    out << "\n";
    out << "order: " << p.gb.order.name() << "\n";
    out << "strategy: " << p.strategy.name() << "\n";
    print_polys(out, "I", p.sr_generators);
    out << "J: " << p.j_generators.size() << " generator(s)\n";
    for (const auto& j : p.j_generators)
        out << "  m = " << to_string(j.m.coefficients) << ": " << j.polynomial.to_string() << "\n";
    print_polys(out, "ideal", p.ideal_generators);
    print_polys(out, "gb", p.gb.generators);
    return exit_ok;
}

int cmd_kgroup(const std::string& source, bool structured, std::ostream& out)
{
    FanPtr fan = load_valid(source, structured, out);
    AbelianGroupStructure g = k_group(fan);
    if (structured) {
        Json doc;
        doc["fan"] = fan_label(*fan);
        doc["free_rank"] = g.free_rank;
        auto inv = Json::array();
        for (const auto& d : g.invariant_factors)
            inv.push_back(integer_json(d));
        doc["invariant_factors"] = std::move(inv);
        doc["group"] = g.to_string();
        out << doc.dump(2) << "\n";
    } else {
        out << g.to_string() << "\n";
    }
    return exit_ok;
}

int cmd_verify(const std::string& source, const PresentationOptions& opts, std::vector<std::string> checks,
               std::uint64_t seed, bool structured, std::ostream& out)
{
    if (std::find(checks.begin(), checks.end(), "all") != checks.end())
        checks.clear();
    FanPtr fan = load_valid(source, structured, out);
    KPresentation p = build_presentation(fan, opts);
    VerificationReport report = run_verification(p, checks, seed);
    if (structured) {
        out << report_json(p, report);
    } else {
        out << "fan: " << fan_label(*fan) << "\n";
        out << "strategy: " << p.strategy.name() << "\n";
        for (const auto& c : report.checks) {
            out << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
            for (const auto& w : c.witness)
                out << "  " << w << "\n";
        }
        out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
    }
    return report.passed() ? exit_ok : exit_verification;
}

int cmd_compare(const std::string& source, unsigned max_k, bool structured, std::ostream& out)
{
    FanPtr fan = load_valid(source, structured, out);
    StrategyComparison cmp = compare_strategies(fan, max_k);
    if (structured) {
        Json doc;
        doc["fan"] = fan_label(*fan);
        doc["basis_already_saturated"] = cmp.basis_already_saturated;
        auto boxes = Json::array();
        for (const auto& b : cmp.boxes) {
            Json e;
            e["k"] = b.k;
            e["equal"] = b.equal;
            e["equal_with_powers"] = b.equal_with_powers;
            boxes.push_back(std::move(e));
        }
        doc["boxes"] = std::move(boxes);
        out << doc.dump(2) << "\n";
    } else {
        out << "fan: " << fan_label(*fan) << "\n";
        out << "basis already saturated: " << (cmp.basis_already_saturated ? "yes" : "no") << "\n";
        for (const auto& b : cmp.boxes)
            out << "box=" << b.k << ": " << (b.equal ? "equal" : "differs")
                << (b.equal ? "" : (b.equal_with_powers ? " (equal after adding powers)" : " (differs with powers)"))
                << "\n";
    }
    return exit_ok;
}

} // namespace

JStrategy parse_strategy(const std::string& text)
{
    if (text == "basis")
        return JStrategy::basis();
    if (text == "default")
        return JStrategy::saturated();
    if (text.rfind("box=", 0) == 0) {
        unsigned k = 0;
        const char* first = text.data() + 4;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec == std::errc() && ptr == last && first != last && k >= 1)
            return JStrategy::box_of(k);
    }
    throw std::invalid_argument("strategy must be basis, default or box=<k> with k >= 1");
}

std::string report_json(const KPresentation& pres, const VerificationReport& report)
{
    Json doc;
    doc["fan"] = fan_label(*pres.fan);
    doc["strategy"] = pres.strategy.name();
    auto checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = c.passed ? "pass" : "fail";
        e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    doc["status"] = report.passed() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Presentations and K-groups of smooth toric varieties from unimodular fans", "kfan"};
    app.require_subcommand(1);

    std::string source;
    std::string format = "text";
    std::string strategy = "default";
    std::optional<std::size_t> drop;
    std::vector<std::string> checks{"all"};
    std::uint64_t seed = default_seed;
    unsigned max_k = 2;

    const std::string fan_help = "fan document path or builtin:<name>";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the fan invariants");
    validate_cmd->add_option("fan", source, fan_help)->required();
    add_format(validate_cmd);

    auto* pres_cmd = app.add_subcommand("presentation", "print the generators of I, J and the final basis");
    pres_cmd->add_option("fan", source, fan_help)->required();
    pres_cmd->add_option("--strategy", strategy, "basis | box=<k> | default");
    pres_cmd->add_option("--drop-j-generator", drop, "omit the J generator with this index (fault injection)");

    auto* kgroup_cmd = app.add_subcommand("kgroup", "additive structure of the K-ring");
    kgroup_cmd->add_option("fan", source, fan_help)->required();
    add_format(kgroup_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("fan", source, fan_help)->required();
    verify_cmd->add_option("--checks", checks, "all, or a comma-separated list of checks")->delimiter(',');
    verify_cmd->add_option("--strategy", strategy, "basis | box=<k> | default");
    verify_cmd->add_option("--drop-j-generator", drop, "omit the J generator with this index (fault injection)");
    verify_cmd->add_option("--seed", seed, "seed for the sampled PL functions");
    add_format(verify_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "compare J strategies against the saturated ideal");
    compare_cmd->add_option("fan", source, fan_help)->required();
    compare_cmd->add_option("--max-k", max_k, "largest box size")->check(CLI::Range(1u, 4u));
    add_format(compare_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    const bool structured = format == "structured";
    try {
        std::vector<std::string> known = check_names();
        known.push_back("all");
        for (const auto& c : checks)
            if (std::find(known.begin(), known.end(), c) == known.end())
                throw std::invalid_argument("unknown check '" + c + "'");
        PresentationOptions opts{parse_strategy(strategy), drop};

        if (*validate_cmd)
            return cmd_validate(source, structured, out);
        if (*pres_cmd)
            return cmd_presentation(source, opts, out);
        if (*kgroup_cmd)
            return cmd_kgroup(source, structured, out);
        if (*verify_cmd)
            return cmd_verify(source, opts, checks, seed, structured, out);
        return cmd_compare(source, max_k, structured, out);
    } catch (const InvalidFan&) {
        return exit_invalid_fan;
    } catch (const FanParseError& e) {
        err << "kfan: parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const NotFinitelyGenerated& e) {
        err << "kfan: " << e.what() << "\n";
        return exit_not_finite;
    } catch (const std::invalid_argument& e) {
        err << "kfan: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace kfan::cli
