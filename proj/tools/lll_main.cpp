#include "lll/errors.hpp"
#include "lll/io.hpp"
#include "lll/pipelines.hpp"

#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct CommonFlags {
    bool check_only = false;
    bool solve = false;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t max_restarts = 100;
    std::uint64_t max_steps = 100'000;
    bool with_float = false;
    bool with_timing = false;
    std::size_t threads = 1;
    std::string output;
};

void add_report_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--float", f.with_float,
                  "annotate exact rationals with floating-point approximations");
    cmd->add_flag("--timing", f.with_timing, "include elapsed_ms in the stats section");
    cmd->add_option("-o,--output", f.output, "write the JSON report to FILE instead of stdout")
        ->option_text("FILE");
}

void add_threads_flag(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--threads", f.threads, "worker threads for conflict-graph construction")
        ->check(CLI::PositiveNumber);
}

void add_solver_flags(CLI::App* cmd, CommonFlags& f) {
    auto* check = cmd->add_flag("--check-only", f.check_only,
                                "evaluate the conditions without searching (default)");
    auto* solve = cmd->add_flag("--solve", f.solve, "run the randomized restart search");
    auto* exhaustive =
        cmd->add_flag("--exhaustive", f.exhaustive, "run the exhaustive lexicographic search");
    check->excludes(solve)->excludes(exhaustive);
    solve->excludes(check)->excludes(exhaustive);
    exhaustive->excludes(check)->excludes(solve);
    cmd->add_option("--seed", f.seed, "seed for the randomized search (default 0)");
    cmd->add_option("--max-restarts", f.max_restarts,
                    "restart budget for the randomized search (default 100)");
    cmd->add_option("--max-steps", f.max_steps,
                    "per-restart resample budget for the randomized search (default 100000)");
}

lll::SolveOptions to_options(const CommonFlags& f) {
    lll::SolveOptions options;
    if (f.exhaustive)
        options.mode = lll::SolveOptions::Mode::exhaustive;
    else if (f.solve)
        options.mode = lll::SolveOptions::Mode::randomized;
    else
        options.mode = lll::SolveOptions::Mode::check_only;
    options.seed = f.seed;
    options.max_restarts = f.max_restarts;
    options.max_steps = f.max_steps;
    options.with_float = f.with_float;
    options.with_timing = f.with_timing;
    options.threads = f.threads;
    return options;
}

// Returns the process exit code: the task's own code, or 2 when the report
// cannot be written where requested.
int emit(const lll::TaskOutcome& outcome, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << outcome.report;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write output file: " << output_path << '\n';
            return 2;
        }
        out << outcome.report;
        if (!out) {
            std::cerr << "error: failed while writing: " << output_path << '\n';
            return 2;
        }
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact condition checking and constructive search for injection "
                 "avoidance problems (latin transversals, hypergraph packings, "
                 "local-lemma style certificates)"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string matrix_path;
    std::string h1_path;
    std::string h2_path;
    std::string g_path;
    std::string h_path;
    std::string events_path;
    std::string system_path;
    std::size_t ambient_n = 0;

    int exit_code = 0;

    auto* latin = app.add_subcommand(
        "latin", "check the transversal condition for an integer matrix and "
                 "optionally search for a transversal with all-distinct symbols");
    latin->add_option("matrix", matrix_path, "matrix file: n, then n*n symbols")->required();
    add_solver_flags(latin, flags);
    add_threads_flag(latin, flags);
    add_report_flags(latin, flags);
    latin->callback([&] {
        lll::IntMatrix a = lll::read_matrix_file(matrix_path);
        exit_code = emit(lll::run_latin_task(a, to_options(flags)), flags.output);
    });

    auto* pack = app.add_subcommand(
        "pack", "check the two-hypergraph packing condition and optionally "
                "search for an edge-avoiding embedding into [n]");
    pack->add_option("h1", h1_path, "first hypergraph file: n r, then edges")->required();
    pack->add_option("h2", h2_path, "second hypergraph file: n r, then edges")->required();
    pack->add_option("n", ambient_n, "common ambient vertex count")
        ->required()
        ->check(CLI::PositiveNumber);
    add_solver_flags(pack, flags);
    add_threads_flag(pack, flags);
    add_report_flags(pack, flags);
    pack->callback([&] {
        lll::Hypergraph h1 = lll::read_hypergraph_file(h1_path);
        lll::Hypergraph h2 = lll::read_hypergraph_file(h2_path);
        exit_code = emit(lll::run_pack_task(h1, h2, ambient_n, to_options(flags)), flags.output);
    });

    auto* perfect = app.add_subcommand(
        "perfect-packing", "check the degree-slack condition for partitioning the "
                           "vertices of H into copies of G, and optionally construct "
                           "such a partition");
    perfect
        ->add_option("pattern", g_path,
                     "pattern hypergraph file (its vertex count must divide the host's)")
        ->required();
    perfect->add_option("host", h_path, "host hypergraph file")->required();
    add_solver_flags(perfect, flags);
    add_threads_flag(perfect, flags);
    add_report_flags(perfect, flags);
    perfect->callback([&] {
        lll::Hypergraph g = lll::read_hypergraph_file(g_path);
        lll::Hypergraph h = lll::read_hypergraph_file(h_path);
        exit_code = emit(lll::run_perfect_packing_task(g, h, to_options(flags)), flags.output);
    });

    auto* ndg = app.add_subcommand(
        "verify-ndg", "exhaustively verify the negative-dependency property of a "
                      "canonical event family over an injection space");
    ndg->add_option("events", events_path,
                    "events file: m n, then one matching per line; optional GRAPH section")
        ->required();
    add_threads_flag(ndg, flags);
    add_report_flags(ndg, flags);
    ndg->callback([&] {
        lll::EventsSpec spec = lll::read_events_spec_file(events_path);
        exit_code = emit(lll::run_verify_ndg_task(spec, to_options(flags)), flags.output);
    });

    auto* lll_check = app.add_subcommand(
        "lll-check", "check the weighted avoidance condition for given event "
                     "probabilities and dependency edges, or search for weights");
    lll_check
        ->add_option("system", system_path,
                     "system file: p/edge lines, optional x weight lines")
        ->required();
    add_report_flags(lll_check, flags);
    lll_check->callback([&] {
        lll::WeightedSystemSpec spec = lll::read_weighted_system_file(system_path);
        exit_code = emit(lll::run_weighted_system_task(spec, to_options(flags)), flags.output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const lll::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        std::cerr << '\n';
        return 2;
    } catch (const lll::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << " (required " << e.required() << ", limit "
                  << e.limit() << ")\n";
        return 4;
    } catch (const lll::NullConditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lll::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }

    return exit_code;
}
