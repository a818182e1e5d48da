#include "bhverify/apoly.hpp"
#include "bhverify/config.hpp"
#include "bhverify/daha.hpp"
#include "bhverify/descriptor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using bhv::RunConfig;
using nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 3;

struct CliArgs {
    RunConfig config;
    std::string out_path;
};

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_json_report(const CliArgs& args, const std::string& command,
                               const ordered_json& result, long long wall_ms) {
    ordered_json report;
    report["schema"] = 1;
    report["command"] = command;
    report["tool_version"] = bhv::kToolVersion;
    report["config"] = bhv::run_config_to_json(args.config);
    report["result"] = result;
    report["meta"] = ordered_json{{"wall_ms", wall_ms}, {"timestamp", utc_timestamp()}};
    return report.dump(2) + "\n";
}

std::string render_text_report(const std::string& command, const std::string& body,
                               long long wall_ms) {
    std::ostringstream out;
    out << "bhverify " << bhv::kToolVersion << " | " << command << "\n"
        << body << "wall_ms: " << wall_ms << "\n";
    return out.str();
}

int emit(const CliArgs& args, const std::string& command, const ordered_json& result,
         const std::string& text_body, long long wall_ms, int exit_code) {
    std::string rendered = args.config.output_format == "json"
                               ? render_json_report(args, command, result, wall_ms)
                               : render_text_report(command, text_body, wall_ms);
    std::cout << rendered;
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw std::invalid_argument("cannot write to '" + args.out_path + "'");
        out << rendered;
    }
    return exit_code;
}

std::string bullet_lines(const std::string& label, const std::vector<std::string>& items) {
    std::string out;
    if (items.empty()) return out;
    out += label + ":\n";
    for (const std::string& item : items) out += "  - " + item + "\n";
    return out;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run_verify(const CliArgs& args, const std::string& descriptor_text) {
    Stopwatch watch;
    bhv::KnotDescriptor descriptor = bhv::KnotDescriptor::parse(descriptor_text);
    bhv::KnotVerdict verdict = bhv::verify_descriptor(descriptor, args.config);

    int code = kExitIndeterminate;
    if (verdict.verdict == bhv::Verdict::True) code = kExitTrue;
    if (verdict.verdict == bhv::Verdict::False) code = kExitFalse;

    std::string body = "knot: " + verdict.knot + "\ncondition: " + verdict.condition +
                       "\nverdict: " + bhv::verdict_name(verdict.verdict) + "\n" +
                       bullet_lines("notes", verdict.notes);
    if (args.config.output_format == "text")
        body += "(run with --format json for the evidence tree)\n";
    return emit(args, "verify " + descriptor.to_string(), bhv::knot_verdict_to_json(verdict),
                body, watch.ms(), code);
}

int run_daha(const CliArgs& args, const std::string& check_name) {
    Stopwatch watch;
    std::vector<bhv::DahaReport> reports = bhv::run_daha_check(check_name, args.config.window);

    bool pass = true;
    ordered_json parts = ordered_json::array();
    std::string body;
    for (const bhv::DahaReport& report : reports) {
        pass = pass && report.pass;
        parts.push_back(bhv::daha_report_to_json(report, false));
        body += "check " + report.check + ": " + (report.pass ? "pass" : "FAIL") + "\n" +
                bullet_lines("residuals", report.residuals) + bullet_lines("notes", report.notes);
    }
    ordered_json result{{"check", check_name}, {"pass", pass}, {"reports", parts}};
    return emit(args, "daha " + check_name, result, body, watch.ms(),
                pass ? kExitTrue : kExitFalse);
}

int run_apoly(const CliArgs& args, const std::string& path) {
    Stopwatch watch;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (char& c : text)
        if (c == '\n' || c == '\r' || c == '\t') c = ' ';

    bhv::ExactPoly input = bhv::parse_poly(bhv::apoly_ring(), text);
    bhv::ApolyResult res = bhv::apoly_condition(input);

    ordered_json result{{"input", input.to_string()},
                        {"holds", res.holds},
                        {"witness", res.witness.to_string()},
                        {"note", res.note}};
    std::string body = "input: " + input.to_string() + "\nholds: " +
                       (res.holds ? "yes" : "no") + "\nwitness: " + res.witness.to_string() +
                       "\nnote: " + res.note + "\n";
    return emit(args, "apoly " + path, result, body, watch.ms(),
                res.holds ? kExitTrue : kExitFalse);
}

int run_check_cert(const CliArgs& args, const std::string& path) {
    Stopwatch watch;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    ordered_json doc = ordered_json::parse(in);

    const ordered_json& verdict_object =
        doc.is_object() && doc.contains("result") ? doc.at("result") : doc;
    bhv::KnotVerdict claimed = bhv::knot_verdict_from_json(verdict_object);
    bhv::Verdict supported = bhv::recheck_evidence(claimed.evidence);
    bool match = supported == claimed.verdict;

    ordered_json result{{"knot", claimed.knot},
                        {"claimed", bhv::verdict_name(claimed.verdict)},
                        {"supported", bhv::verdict_name(supported)},
                        {"match", match}};
    std::string body = "knot: " + claimed.knot + "\nclaimed: " +
                       bhv::verdict_name(claimed.verdict) + "\nsupported: " +
                       bhv::verdict_name(supported) + "\nmatch: " + (match ? "yes" : "no") + "\n";
    return emit(args, "check-cert " + path, result, body, watch.ms(),
                match ? kExitTrue : kExitFalse);
}

void add_common_options(CLI::App* sub, CliArgs& args) {
    sub->add_option("--format", args.config.output_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-degree", args.config.max_degree,
                    "largest S-pair degree the basis engine processes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", args.config.max_terms,
                    "stored-term cap for the basis engine, cofactors included")
        ->check(CLI::PositiveNumber);
    sub->add_option("--t-bound", args.config.bezout_t_bound,
                    "initial shift window for covering searches")
        ->check(CLI::PositiveNumber);
    sub->add_option("--window", args.config.window,
                    "monomial window for the operator relation checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", args.config.jobs,
                    "worker threads for independent sub-verifications")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", args.out_path, "also write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified checks for trace conditions on knot group characters"};
    app.set_version_flag("--version", bhv::kToolVersion);
    app.require_subcommand(1);

    CliArgs args;
    try {
        args.config = bhv::load_run_config();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string descriptor_text, check_name, apoly_path, cert_path;

    CLI::App* verify = app.add_subcommand(
        "verify", "verify the longitude condition for a knot descriptor");
    verify->add_option("descriptor", descriptor_text,
                       "torus:r,s | pretzel:n | connectsum:[d1,d2,...]")
        ->required();
    add_common_options(verify, args);

    CLI::App* daha = app.add_subcommand(
        "daha", "run one of the operator-algebra identity checks");
    daha->add_option("check", check_name, "relations | dunkl | trefoil | fig8 | goldman")
        ->required()
        ->check(CLI::IsMember({"relations", "dunkl", "trefoil", "fig8", "goldman"}));
    add_common_options(daha, args);

    CLI::App* apoly = app.add_subcommand(
        "apoly", "test the boundary-slope divisibility condition on a polynomial file");
    apoly->add_option("file", apoly_path, "file with one polynomial in m, l")
        ->required()
        ->check(CLI::ExistingFile);
    add_common_options(apoly, args);

    CLI::App* check_cert = app.add_subcommand(
        "check-cert", "re-verify the evidence tree of an emitted report");
    check_cert->add_option("file", cert_path, "report or verdict JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    add_common_options(check_cert, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        args.config.validate();
        if (app.got_subcommand(verify)) return run_verify(args, descriptor_text);
        if (app.got_subcommand(daha)) return run_daha(args, check_name);
        if (app.got_subcommand(apoly)) return run_apoly(args, apoly_path);
        if (app.got_subcommand(check_cert)) return run_check_cert(args, cert_path);
        std::cerr << "error: no command selected\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
