// Command-line driver: validate, run, query, export, oracle-check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mma/oracle.hpp"
#include "mma/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_announcement = 2;
constexpr int exit_parse = 3;

int report(const mma::ScenarioError& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == mma::ScenarioError::Kind::validation ? exit_validation : exit_parse;
}

mma::TrustPolicy parse_policy(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--policy", "expected H,D");
    try {
        const long long honest = std::stoll(text.substr(0, comma));
        const long long dishonest = std::stoll(text.substr(comma + 1));
        if (honest < 0 || dishonest < 0) throw CLI::ValidationError("--policy", "deltas must be non-negative");
        return {honest, dishonest};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--policy", "expected two integers H,D");
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Manipulable multi-agent argumentation simulator"};
    app.require_subcommand(1);

    std::string file;

    auto* validate_cmd = app.add_subcommand("validate", "Check a scenario's initial state and replay its script");
    validate_cmd->add_option("file", file, "Scenario document")->required();

    std::string trace_path;
    std::string policy_text;
    bool with_semantics = false;
    bool json_stdout = false;
    auto* run_cmd = app.add_subcommand("run", "Execute the scenario script and print the trace");
    run_cmd->add_option("file", file, "Scenario document")->required();
    run_cmd->add_option("--trace", trace_path, "Write the JSON trace to this file");
    run_cmd->add_option("--policy", policy_text, "Trust deltas H,D for honest/dishonest verdicts");
    run_cmd->add_flag("--with-semantics", with_semantics, "Record each agent's trust-adjusted public semantics");
    run_cmd->add_flag("--json", json_stdout, "Print the JSON trace instead of the table");

    std::size_t at = 0;
    std::string viewer, subject, view_text, kind_text;
    auto* query_cmd = app.add_subcommand("query", "Compute a semantics at a script step");
    query_cmd->add_option("file", file, "Scenario document")->required();
    query_cmd->add_option("--at", at, "Script step (0 = initial state)");
    query_cmd->add_option("--viewer", viewer)->required();
    query_cmd->add_option("--subject", subject);
    query_cmd->add_option("--view", view_text, "public | local | trust-adjusted")->required();
    query_cmd->add_option("--kind", kind_text, "complete | preferred | grounded (overrides the modelled semantics)");

    std::string selector, format = "graph", out_path;
    auto* export_cmd = app.add_subcommand("export", "Render a frame of the state at a script step");
    export_cmd->add_option("file", file, "Scenario document")->required();
    export_cmd->add_option("--at", at, "Script step (0 = initial state)");
    export_cmd->add_option("--view", selector,
                           "global | public | aware:E | perceived:V:S | adjusted:V:S | public-model:V:S | trust-adjusted:E")
        ->required();
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"graph"}));
    export_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::size_t max_args = 10;
    std::uint64_t seed = 20190601;
    std::size_t trials = 200;
    std::size_t exhaustive = 0;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check the solver against the brute-force oracle");
    oracle_cmd->add_option("--max-args", max_args)->check(CLI::Range(std::size_t{0}, mma::oracle::max_args));
    oracle_cmd->add_option("--seed", seed);
    oracle_cmd->add_option("--trials", trials);
    oracle_cmd->add_option("--exhaustive", exhaustive, "Also check every frame with this many arguments (<= 4)")
        ->check(CLI::Range(0, 4));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            const mma::Scenario sc = mma::load_scenario_file(file);
            const mma::Trace trace = mma::run(sc);
            if (trace.failure) {
                std::cerr << "step " << trace.failure->step << ": invalid announcement\n"
                          << mma::format_violations(trace.failure->violations);
                return exit_announcement;
            }
            std::cout << "ok: " << sc.initial.agents.size() << " agents, " << sc.initial.global.args().size()
                      << " arguments, " << sc.script.size() << " announcements\n";
            return exit_ok;
        }
        if (*run_cmd) {
            mma::Scenario sc = mma::load_scenario_file(file);
            if (!policy_text.empty()) sc.policy = parse_policy(policy_text);
            mma::RunOptions options;
            options.with_semantics = with_semantics;
            const mma::Trace trace = mma::run(sc, options);
            const std::string doc = mma::trace_to_json(sc, trace).dump(2) + "\n";
            if (!trace_path.empty()) write_output(trace_path, doc);
            std::cout << (json_stdout ? doc : mma::trace_to_table(trace));
            return trace.failure ? exit_announcement : exit_ok;
        }
        if (*query_cmd) {
            const mma::Scenario sc = mma::load_scenario_file(file);
            const mma::MmaState state = mma::state_at(sc, at);
            const mma::View view = mma::parse_view(view_text);
            if (subject.empty()) {
                if (view != mma::View::trust_adjusted) throw mma::DomainError("--subject is required for this view");
                subject = viewer;
            }
            std::optional<mma::SemanticsKind> kind;
            if (!kind_text.empty()) kind = mma::parse_semantics_kind(kind_text);
            std::cout << mma::format_extensions(mma::query(state, mma::AgentId(viewer), mma::AgentId(subject), view, kind))
                      << '\n';
            return exit_ok;
        }
        if (*export_cmd) {
            const mma::Scenario sc = mma::load_scenario_file(file);
            const mma::MmaState state = mma::state_at(sc, at);
            write_output(out_path, mma::export_graph(state, selector, sc.arguments));
            return exit_ok;
        }
        if (*oracle_cmd) {
            bool clean = true;
            if (exhaustive > 0) {
                const auto rep = mma::oracle::exhaustive_check(exhaustive);
                std::cout << "exhaustive n=" << exhaustive << ": " << rep.frames << " frames, " << rep.mismatches
                          << " mismatches\n";
                for (const auto& d : rep.details) std::cout << "  " << d << '\n';
                clean = clean && rep.mismatches == 0;
            }
            const auto rep = mma::oracle::cross_check(max_args, seed, trials);
            std::cout << "random (max-args " << max_args << ", seed " << seed << "): " << rep.frames << " frames, "
                      << rep.mismatches << " mismatches\n";
            for (const auto& d : rep.details) std::cout << "  " << d << '\n';
            clean = clean && rep.mismatches == 0;
            return clean ? exit_ok : exit_validation;
        }
    } catch (const mma::ScenarioError& e) {
        return report(e);
    } catch (const mma::InvalidAnnouncement& e) {
        std::cerr << e.what();
        return exit_announcement;
    } catch (const mma::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    return exit_ok;
}
