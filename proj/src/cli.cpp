#include "gyro/cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gyro/catalog.hpp"
#include "gyro/doubling.hpp"
#include "gyro/kernels.hpp"
#include "gyro/subalgebra.hpp"
#include "gyro/table_io.hpp"

namespace gyro::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_input(const std::string& path)
{
    try {
        return io::read_file(path);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

ElementSubset subset_arg(const std::string& text, std::size_t order)
{
    try {
        return io::parse_subset_arg(text, order);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

struct Options {
    bool json_output = false;
    std::string fixture;
    std::string table_file;
    std::string base_file;
    std::string phi_file;
    std::string expect_gyr;
    std::string golden;
    std::string subset;
    std::string name;
    std::size_t generators = 0;
    bool emit = false;
    bool emit_gyr = false;
    bool emit_golden = false;
    bool all_subs = false;
};

json to_json(const ElementSubset& s) { return s.elements(); }

json to_json(const std::vector<ElementSubset>& sets)
{
    json out = json::array();
    for (const auto& s : sets) out.push_back(to_json(s));
    return out;
}

json to_json(const Violation& v)
{
    return {{"axiom", std::string(axiom_name(v.axiom))}, {"witness", v.witness}, {"occurrences", v.occurrences}};
}

json to_json(const ValidationReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    return violations;
}

struct Loaded {
    std::string source;
    io::TableDocument doc;
};

Loaded load_table(const Options& o)
{
    if (!o.fixture.empty() == !o.table_file.empty()) {
        throw UsageError("give exactly one of --fixture NAME or --table FILE");
    }
    if (!o.fixture.empty()) {
        auto f = catalog::fixture(o.fixture);
        return {f.name, {f.gyrogroup.table(), {}}};
    }
    return {o.table_file, io::parse_table(read_input(o.table_file))};
}

FiniteGyrogroup load_gyrogroup(const Options& o, json& report)
{
    auto loaded = load_table(o);
    report["source"] = loaded.source;
    report["order"] = loaded.doc.table.order();
    return FiniteGyrogroup::construct(std::move(loaded.doc.table), std::move(loaded.doc.labels));
}

std::optional<std::vector<Element>> load_phi(const Options& o)
{
    if (o.phi_file.empty()) return std::nullopt;
    return io::parse_element_list(read_input(o.phi_file));
}

DoubledGyrogroup load_doubled(const Options& o, json& report)
{
    if (!o.fixture.empty() == !o.base_file.empty()) {
        throw UsageError("give exactly one of --fixture K<n> (n >= 2) or --base FILE");
    }
    if (!o.fixture.empty()) {
        if (catalog::parse_fixture_name(o.fixture) < 2) {
            throw UsageError("fixture " + o.fixture + " is not a doubled gyrogroup; use K2 or above");
        }
        report["source"] = o.fixture;
        auto d = catalog::fixture_doubling(o.fixture);
        report["order"] = d.whole().order();
        return d;
    }
    auto doc = io::parse_table(read_input(o.base_file));
    report["source"] = "double(" + o.base_file + ")";
    auto d = double_gyrogroup(FiniteGyrogroup::construct(std::move(doc.table), std::move(doc.labels)), load_phi(o));
    report["order"] = d.whole().order();
    return d;
}

std::vector<bool> nondegenerate_flags(const FiniteGyrogroup& g, const std::vector<ElementSubset>& sets)
{
    std::vector<bool> flags;
    for (const auto& s : sets) flags.push_back(!induced_subgyrogroup(g, s).is_degenerate());
    return flags;
}

// Subgyrogroups (or normals) by full scan when possible, else by generator
// closure. Fills "mode" and "complete".
std::vector<ElementSubset> enumerate(const FiniteGyrogroup& g, bool normals, std::size_t generators, json& report)
{
    if (generators == 0 && g.order() <= kernels::kMaxScanOrder) {
        report["mode"] = "full-scan";
        report["complete"] = true;
        return normals ? enumerate_normals(g) : enumerate_subgyrogroups(g);
    }
    const auto max_gens = generators == 0 ? std::size_t{3} : generators;
    auto found = normals ? enumerate_normals_by_generators(g, max_gens)
                         : enumerate_subgyrogroups_by_generators(g, max_gens);
    canonicalize(found.sets);
    report["mode"] = "generators<=" + std::to_string(max_gens);
    report["complete"] = found.complete;
    return found.sets;
}

void cmd_verify(const Options& o, json& report)
{
    auto loaded = load_table(o);
    report["source"] = loaded.source;
    report["order"] = loaded.doc.table.order();
    const auto validation = verify_axioms(loaded.doc.table);
    report["valid"] = validation.valid;
    report["violations"] = to_json(validation);
    bool pass = validation.valid;
    if (validation.valid) {
        const auto g = FiniteGyrogroup::construct(loaded.doc.table, loaded.doc.labels);
        report["identity"] = g.identity();
        report["degenerate"] = g.is_degenerate();
        json gyrations = json::array();
        for (const auto& p : g.distinct_gyrations()) gyrations.push_back(p.cycle_string());
        report["distinct_gyrations"] = gyrations;
        if (!o.expect_gyr.empty()) {
            const auto expected = io::parse_gyrations(read_input(o.expect_gyr), g.order());
            json mismatches = json::array();
            for (std::size_t a = 0; a < g.order(); ++a) {
                for (std::size_t b = 0; b < g.order(); ++b) {
                    if (g.gyr(a, b) != expected[a * g.order() + b]) mismatches.push_back({a, b});
                }
            }
            report["gyration_mismatches"] = mismatches;
            pass = pass && mismatches.empty();
        }
    }
    report["outcome"] = pass ? "pass" : "fail";
}

void cmd_double(const Options& o, json& report)
{
    auto base = load_gyrogroup(o, report);
    const auto d = double_gyrogroup(base, load_phi(o));
    report["phi"] = d.phi_map();
    report["doubled_order"] = d.whole().order();
    report["table"] = io::serialize_table(d.whole().table());
    report["outcome"] = "pass";
}

void cmd_subs(const Options& o, json& report)
{
    const auto g = load_gyrogroup(o, report);
    const auto sets = enumerate(g, false, o.generators, report);
    report["sets"] = to_json(sets);
    report["outcome"] = "list";
}

void cmd_normals(const Options& o, json& report)
{
    const auto g = load_gyrogroup(o, report);
    const auto sets = enumerate(g, true, o.generators, report);
    const auto flags = nondegenerate_flags(g, sets);
    report["sets"] = to_json(sets);
    report["nondegenerate"] = flags;
    report["outcome"] = "list";
    if (o.golden.empty()) return;

    const auto golden = catalog::golden_normals(o.golden);
    json missing = json::array(), unexpected = json::array(), flag_mismatch = json::array();
    for (std::size_t i = 0; i < golden.sets.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (sets[j] == golden.sets[i]) {
                found = true;
                if (flags[j] != golden.nondegenerate[i]) flag_mismatch.push_back(to_json(sets[j]));
            }
        }
        if (!found) missing.push_back(to_json(golden.sets[i]));
    }
    for (const auto& s : sets) {
        if (std::find(golden.sets.begin(), golden.sets.end(), s) == golden.sets.end()) {
            unexpected.push_back(to_json(s));
        }
    }
    const bool order_matches = sets == golden.sets;
    report["golden"] = {{"name", golden.name},
                        {"missing", missing},
                        {"unexpected", unexpected},
                        {"flag_mismatches", flag_mismatch},
                        {"order_matches", order_matches}};
    const bool pass = missing.empty() && unexpected.empty() && flag_mismatch.empty() && order_matches;
    report["outcome"] = pass ? "pass" : "fail";
}

void cmd_quotient(const Options& o, json& report)
{
    const auto g = load_gyrogroup(o, report);
    if (o.subset.empty()) throw UsageError("quotient needs --by SET");
    const auto n = subset_arg(o.subset, g.order());
    report["by"] = to_json(n);
    if (!is_subgyrogroup(g, n)) {
        report["error"] = "NotASubgyrogroup";
        report["outcome"] = "fail";
        return;
    }
    if (!is_normal(g, n)) {
        report["error"] = "NotNormal";
        report["outcome"] = "fail";
        return;
    }
    const auto q = quotient(g, n);
    report["cosets"] = to_json(q.cosets.cosets);
    report["representatives"] = q.cosets.representatives;
    report["quotient_order"] = q.group->order();
    report["degenerate"] = q.group->is_degenerate();
    report["table"] = io::serialize_table(q.group->table(), q.group->labels());
    report["kernel"] = to_json(kernel(q.projection));
    report["outcome"] = "pass";
}

json classification_json(const DoubledGyrogroup& d, const ElementSubset& s, const Classification& c)
{
    json clauses = json::array();
    for (auto ch : c.clauses) clauses.push_back(std::string(1, ch));
    bool reassembles = true;
    for (auto ch : c.clauses) reassembles = reassembles && c.reassemble(d, ch) == s;
    return {{"set", to_json(s)},
            {"clauses", clauses},
            {"plus", to_json(c.plus)},
            {"minus", to_json(c.minus)},
            {"pulled_back", to_json(c.pulled_back)},
            {"reassembles", reassembles}};
}

void cmd_classify(const Options& o, json& report)
{
    const auto d = load_doubled(o, report);
    const auto& g = d.whole();
    bool pass = true;
    json items = json::array();
    auto classify_one = [&](const ElementSubset& s, bool normal) {
        try {
            auto c = normal ? classify_normal(d, s) : classify_subgyrogroup(d, s);
            auto item = classification_json(d, s, c);
            item["theorem"] = normal ? "normal" : "subgyrogroup";
            pass = pass && item["reassembles"].get<bool>();
            items.push_back(std::move(item));
        } catch (const TheoremViolation& e) {
            pass = false;
            items.push_back({{"set", to_json(s)}, {"clauses", json::array()}, {"error", e.what()}});
        }
    };

    if (!o.subset.empty()) {
        const auto s = subset_arg(o.subset, g.order());
        if (!is_subgyrogroup(g, s)) {
            report["error"] = "NotASubgyrogroup";
            report["outcome"] = "fail";
            return;
        }
        classify_one(s, is_normal(g, s));
    } else if (o.all_subs) {
        for (const auto& s : enumerate(g, false, o.generators, report)) classify_one(s, false);
    } else {
        const auto normals = enumerate(g, true, o.generators, report);
        for (const auto& s : normals) classify_one(s, true);
        auto candidates = generate_normal_candidates(d);
        json extra = json::array(), not_generated = json::array();
        for (const auto& c : candidates) {
            if (std::find(normals.begin(), normals.end(), c) == normals.end()) extra.push_back(to_json(c));
        }
        for (const auto& s : normals) {
            if (std::find(candidates.begin(), candidates.end(), s) == candidates.end()) {
                not_generated.push_back(to_json(s));
            }
        }
        const bool complete = report["complete"].get<bool>();
        report["candidates"] = {{"count", candidates.size()},
                                {"not_enumerated", extra},
                                {"not_generated", not_generated}};
        pass = pass && not_generated.empty() && (!complete || extra.empty());
    }
    report["classifications"] = items;
    report["outcome"] = pass ? "pass" : "fail";
}

void cmd_corollary(const Options& o, json& report)
{
    const auto d = load_doubled(o, report);
    json checks = json::array();
    bool pass = true;
    for (const auto& c : check_corollary(d)) {
        checks.push_back({{"name", c.name}, {"set", to_json(c.subset)}, {"passed", c.passed}});
        pass = pass && c.passed;
    }
    report["checks"] = checks;
    report["outcome"] = pass ? "pass" : "fail";
}

void cmd_fixture(const Options& o, json& report)
{
    const auto f = catalog::fixture(o.name);
    report["name"] = f.name;
    report["order"] = f.gyrogroup.order();
    report["identity"] = f.gyrogroup.identity();
    report["degenerate"] = f.gyrogroup.is_degenerate();
    report["provenance"] = f.provenance;
    if (o.emit) report["table"] = io::serialize_table(f.gyrogroup.table());
    if (o.emit_gyr) report["gyrations"] = io::serialize_gyrations(f.gyrogroup);
    if (o.emit_golden) {
        const auto golden = catalog::golden_normals(o.name);
        report["golden"] = io::serialize_set_list(golden.sets, golden.nondegenerate);
    }
    report["outcome"] = "pass";
}

std::string set_line(const json& set, bool mark)
{
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i].get<int>());
    return out + "}" + (mark ? "*" : "");
}

std::string list_sets(const json& sets)
{
    std::string out;
    for (const auto& s : sets) out += set_line(s, false) + ' ';
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace

std::string render_human(const json& r)
{
    std::ostringstream os;
    const auto command = r.value("command", std::string());
    const auto outcome = r.value("outcome", std::string());

    if (r.contains("usage_error")) {
        os << "error: " << r["usage_error"].get<std::string>() << '\n';
        return os.str();
    }
    if (r.contains("invalid")) {
        os << "not a gyrogroup:\n";
        for (const auto& v : r["invalid"]) {
            os << "  " << v["axiom"].get<std::string>() << ' ' << v["witness"].dump() << " x"
               << v["occurrences"].get<std::size_t>() << '\n';
        }
        os << "result: " << outcome << '\n';
        return os.str();
    }

    // Payloads whose human form is the raw document itself.
    if (command == "double" && r.contains("table")) return r["table"].get<std::string>();
    if (command == "fixture" && (r.contains("table") || r.contains("gyrations") || r.contains("golden"))) {
        std::string out;
        for (const char* key : {"table", "gyrations", "golden"}) {
            if (r.contains(key)) out += r[key].get<std::string>();
        }
        return out;
    }

    if (r.contains("source")) os << "source: " << r["source"].get<std::string>() << '\n';
    if (r.contains("order")) os << "order: " << r["order"].get<std::size_t>() << '\n';
    if (r.contains("failure")) {
        os << "error: " << r["failure"].get<std::string>() << '\n';
        os << "result: " << outcome << '\n';
        return os.str();
    }

    if (command == "verify") {
        os << "valid: " << (r["valid"].get<bool>() ? "yes" : "no") << '\n';
        for (const auto& v : r["violations"]) {
            os << "violation: " << v["axiom"].get<std::string>() << ' ' << v["witness"].dump() << " x"
               << v["occurrences"].get<std::size_t>() << '\n';
        }
        if (r.contains("identity")) {
            os << "identity: " << r["identity"].get<int>() << '\n';
            os << "degenerate: " << (r["degenerate"].get<bool>() ? "yes" : "no") << '\n';
            os << "distinct gyrations:";
            for (const auto& p : r["distinct_gyrations"]) os << ' ' << p.get<std::string>();
            os << '\n';
        }
        if (r.contains("gyration_mismatches")) {
            os << "gyration mismatches: " << r["gyration_mismatches"].size() << '\n';
        }
    } else if (command == "subs" || command == "normals") {
        os << "mode: " << r["mode"].get<std::string>()
           << (r["complete"].get<bool>() ? "" : " (possibly incomplete)") << '\n';
        os << "count: " << r["sets"].size() << '\n';
        for (std::size_t i = 0; i < r["sets"].size(); ++i) {
            const bool mark = r.contains("nondegenerate") && r["nondegenerate"][i].get<bool>();
            os << set_line(r["sets"][i], mark) << '\n';
        }
        if (r.contains("golden")) {
            const auto& gd = r["golden"];
            os << "golden " << gd["name"].get<std::string>() << ": missing [" << list_sets(gd["missing"])
               << "] unexpected [" << list_sets(gd["unexpected"]) << "] flag mismatches ["
               << list_sets(gd["flag_mismatches"]) << "] order "
               << (gd["order_matches"].get<bool>() ? "matches" : "differs") << '\n';
        }
    } else if (command == "quotient") {
        os << "by: " << set_line(r["by"], false) << '\n';
        if (r.contains("error")) {
            os << "error: " << r["error"].get<std::string>() << '\n';
        } else {
            os << "cosets: " << list_sets(r["cosets"]) << '\n';
            os << "quotient order: " << r["quotient_order"].get<std::size_t>() << '\n';
            os << "degenerate: " << (r["degenerate"].get<bool>() ? "yes" : "no") << '\n';
            os << "kernel: " << set_line(r["kernel"], false) << '\n';
            os << r["table"].get<std::string>();
        }
    } else if (command == "classify") {
        if (r.contains("error")) os << "error: " << r["error"].get<std::string>() << '\n';
        if (r.contains("mode")) os << "mode: " << r["mode"].get<std::string>() << '\n';
        if (r.contains("classifications")) {
            for (const auto& c : r["classifications"]) {
                os << set_line(c["set"], false) << " clauses [";
                for (std::size_t i = 0; i < c["clauses"].size(); ++i) {
                    os << (i ? "," : "") << c["clauses"][i].get<std::string>();
                }
                os << ']';
                if (c.contains("error")) {
                    os << " error: " << c["error"].get<std::string>();
                } else {
                    os << " plus " << set_line(c["plus"], false) << " minus " << set_line(c["minus"], false)
                       << " pulled-back " << set_line(c["pulled_back"], false);
                }
                os << '\n';
            }
        }
        if (r.contains("candidates")) {
            const auto& c = r["candidates"];
            os << "candidates: " << c["count"].get<std::size_t>() << ", not enumerated ["
               << list_sets(c["not_enumerated"]) << "], not generated [" << list_sets(c["not_generated"])
               << "]\n";
        }
    } else if (command == "corollary") {
        for (const auto& c : r["checks"]) {
            os << (c["passed"].get<bool>() ? "pass" : "FAIL") << ": " << c["name"].get<std::string>() << '\n';
        }
    } else if (command == "fixture") {
        os << "identity: " << r["identity"].get<int>() << '\n';
        os << "degenerate: " << (r["degenerate"].get<bool>() ? "yes" : "no") << '\n';
        os << "provenance: " << r["provenance"].get<std::string>() << '\n';
    }
    os << "result: " << outcome << '\n';
    return os.str();
}

RunResult run(const std::vector<std::string>& args)
{
    Options o;
    CLI::App app{"Finite gyrogroup toolkit", "gyro"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json_output, "Print the machine-readable report");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--fixture", o.fixture, "Built-in fixture K<n>");
        sub->add_option("--table", o.table_file, "Table document");
    };
    auto add_enum = [&](CLI::App* sub) {
        sub->add_option("--generators", o.generators,
                        "Close generator sets of at most this size instead of a full scan");
    };
    auto add_doubled = [&](CLI::App* sub) {
        sub->add_option("--fixture", o.fixture, "Built-in fixture K<n>, n >= 2");
        sub->add_option("--base", o.base_file, "Table document of the base to double");
        sub->add_option("--phi", o.phi_file, "Images of the base elements in [n, 2n)");
    };

    auto* verify = app.add_subcommand("verify", "Check the gyrogroup axioms");
    add_input(verify);
    verify->add_option("--expect-gyr", o.expect_gyr, "Compare derived gyrations with this file");

    auto* dbl = app.add_subcommand("double", "Emit the doubled table");
    add_input(dbl);
    dbl->add_option("--phi", o.phi_file, "Images of the base elements in [n, 2n)");

    auto* subs = app.add_subcommand("subs", "Enumerate subgyrogroups");
    add_input(subs);
    add_enum(subs);

    auto* normals = app.add_subcommand("normals", "Enumerate normal subgyrogroups");
    add_input(normals);
    add_enum(normals);
    normals->add_option("--golden", o.golden, "Compare with the golden data for K1 or K2");

    auto* quot = app.add_subcommand("quotient", "Quotient by a normal subgyrogroup");
    add_input(quot);
    quot->add_option("--by", o.subset, "Comma-separated elements")->required();

    auto* classify = app.add_subcommand("classify", "Structure clauses of sets in a doubled gyrogroup");
    add_doubled(classify);
    add_enum(classify);
    classify->add_option("--set", o.subset, "Classify one comma-separated subset");
    classify->add_flag("--subs", o.all_subs, "Classify every subgyrogroup instead of the normals");

    auto* corollary = app.add_subcommand("corollary", "Check that H+ and the base normals are normal");
    add_doubled(corollary);

    auto* fix = app.add_subcommand("fixture", "Show or emit a built-in fixture");
    fix->add_option("name", o.name, "K<n>")->required();
    fix->add_flag("--emit", o.emit, "Emit the table document");
    fix->add_flag("--gyr", o.emit_gyr, "Emit the gyration document");
    fix->add_flag("--golden", o.emit_golden, "Emit the golden normal subgyrogroups");

    RunResult result;
    json& report = result.report;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? kExitPass : kExitUsage;
        return result;
    }

    CLI::App* chosen = app.get_subcommands().front();
    report["command"] = chosen->get_name();
    report["args"] = args;
    try {
        const auto& name = chosen->get_name();
        if (name == "verify") cmd_verify(o, report);
        else if (name == "double") cmd_double(o, report);
        else if (name == "subs") cmd_subs(o, report);
        else if (name == "normals") cmd_normals(o, report);
        else if (name == "quotient") cmd_quotient(o, report);
        else if (name == "classify") cmd_classify(o, report);
        else if (name == "corollary") cmd_corollary(o, report);
        else if (name == "fixture") cmd_fixture(o, report);
        const auto outcome = report["outcome"].get<std::string>();
        result.exit_code = outcome == "fail" ? kExitFail : kExitPass;
    } catch (const UsageError& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const io::ParseError& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const PhiNotBijective& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const catalog::UnknownFixture& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const catalog::CapExceeded& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const catalog::NoGoldenData& e) {
        report["usage_error"] = e.what();
        report["outcome"] = "usage";
        result.exit_code = kExitUsage;
    } catch (const InvalidGyrogroup& e) {
        report["invalid"] = to_json(e.report());
        report["outcome"] = "fail";
        result.exit_code = kExitFail;
    } catch (const Error& e) {
        report["failure"] = e.what();
        report["outcome"] = "fail";
        result.exit_code = kExitFail;
    }

    if (result.exit_code == kExitUsage) {
        result.err = render_human(report);
        if (o.json_output) result.out = report.dump(2) + '\n';
        return result;
    }
    result.out = o.json_output ? report.dump(2) + '\n' : render_human(report);
    return result;
}

}  // namespace gyro::cli
