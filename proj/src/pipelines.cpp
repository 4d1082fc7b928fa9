#include "lll/pipelines.hpp"

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"
#include "lll/graph.hpp"
#include "lll/lll.hpp"
#include "lll/matching.hpp"
#include "lll/space.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string_view>

namespace lll {

namespace {

using Clock = std::chrono::steady_clock;

void finish_stats(ReportBuilder& rb, const SolveOptions& options, Clock::time_point started) {
    if (options.with_timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        rb.stat("elapsed_ms", static_cast<std::uint64_t>(elapsed.count()));
    }
}

SolveResult run_solver(const AvoidanceProblem& problem, const SolveOptions& options) {
    if (options.mode == SolveOptions::Mode::exhaustive) return solve_exhaustive(problem);
    RandomizedOptions ropt;
    ropt.seed = options.seed;
    ropt.max_restarts = options.max_restarts;
    ropt.max_steps = options.max_steps;
    return solve_randomized(problem, ropt);
}

void solver_stats(ReportBuilder& rb, const SolveOptions& options, const SolveStats& stats) {
    if (options.mode == SolveOptions::Mode::exhaustive) {
        rb.stat("outcomes_examined", stats.outcomes_examined);
    } else {
        rb.stat("restarts", stats.restarts);
        rb.stat("resample_steps", stats.resample_steps);
    }
}

ReportBuilder::Json violation_json(const ReportBuilder& rb, const GraphViolation& v) {
    ReportBuilder::Json j = ReportBuilder::Json::object();
    j["event"] = v.i;
    j["subset"] = v.subset;
    j["lhs"] = rb.rational_json(v.lhs);
    j["rhs"] = rb.rational_json(v.rhs);
    return j;
}

ReportBuilder::Json text(std::string_view s) { return ReportBuilder::Json(std::string(s)); }

} // namespace

// ------------------------------------------------------------------ latin --

TaskOutcome run_latin_task(const IntMatrix& a, const SolveOptions& options) {
    auto started = Clock::now();
    ReportBuilder rb("latin", options.with_float);

    const std::size_t n = a.size();
    const std::size_t k = max_multiplicity(a);
    rb.input("n", n);
    rb.input("k", k);

    rb.verdict("transversal_condition", transversal_condition(n, k));

    LatinEventFamily family = build_latin_events(a);
    Graph cg = conflict_graph(family.matchings, options.threads);
    const std::uint64_t bound = 4 * static_cast<std::uint64_t>(n) * k - 1; // k >= 1 always
    rb.verdict("family_size", static_cast<std::uint64_t>(family.matchings.size()));
    rb.verdict("conflict_degree", static_cast<std::uint64_t>(cg.max_degree()));
    rb.verdict("conflict_degree_bound", bound);
    rb.verdict("degree_within_bound", cg.max_degree() <= bound);

    int exit_code = 0;
    if (options.mode != SolveOptions::Mode::check_only) {
        AvoidanceProblem problem(n, n, family.matchings);
        SolveResult result = run_solver(problem, options);
        solver_stats(rb, options, result.stats);
        rb.verdict("witness_found", result.found());
        if (result.found()) {
            const Certificate& cert = *result.certificate;
            bool verified = cert.checked && is_latin_transversal(a, cert.witness);
            rb.verdict("certificate_verified", verified);
            rb.certificate(cert.witness);
            if (!verified) exit_code = 3;
        } else {
            exit_code = 3;
        }
    }

    finish_stats(rb, options, started);
    return {rb.render(), exit_code};
}

// ------------------------------------------------------------------- pack --

namespace {

// Shared by the pack and perfect-packing pipelines: reports the instance
// shape and degree bound, runs the embedding search when requested.
std::optional<Certificate> packing_body(ReportBuilder& rb, const Hypergraph& h1,
                                        const Hypergraph& h2, std::size_t n,
                                        const SolveOptions& options, int& exit_code) {
    PackingInstance instance = build_packing_instance(h1, h2, n);
    rb.verdict("instance_size", static_cast<std::uint64_t>(instance.event_matchings.size()));

    if (!instance.event_matchings.empty()) {
        Graph cg = conflict_graph(instance.event_matchings, options.threads);
        const std::size_t r = h1.uniformity();
        const BigInt lhs = (BigInt(instance.d1) + 1) * BigInt(instance.m2) +
                           (BigInt(instance.d2) + 1) * BigInt(instance.m1);
        const BigInt bound = factorial(r) * lhs - 1;
        rb.verdict("conflict_degree", static_cast<std::uint64_t>(cg.max_degree()));
        rb.verdict("conflict_degree_bound", bound.convert_to<std::uint64_t>());
        rb.verdict("degree_within_bound", BigInt(cg.max_degree()) <= bound);
    }

    if (options.mode == SolveOptions::Mode::check_only) return std::nullopt;

    AvoidanceProblem problem(h1.vertex_count(), n, instance.event_matchings);
    SolveResult result = run_solver(problem, options);
    solver_stats(rb, options, result.stats);
    rb.verdict("witness_found", result.found());
    if (!result.found()) {
        exit_code = 3;
        return std::nullopt;
    }
    Certificate cert = *result.certificate;
    bool verified = cert.checked && verify_packing(h1, h2, n, cert.witness);
    rb.verdict("certificate_verified", verified);
    rb.certificate(cert.witness);
    if (!verified) exit_code = 3;
    return cert;
}

} // namespace

TaskOutcome run_pack_task(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                          const SolveOptions& options) {
    auto started = Clock::now();
    ReportBuilder rb("pack", options.with_float);

    rb.input("r", static_cast<std::uint64_t>(h1.uniformity()));
    rb.input("n", static_cast<std::uint64_t>(n));
    rb.input("m1", static_cast<std::uint64_t>(h1.edge_count()));
    rb.input("m2", static_cast<std::uint64_t>(h2.edge_count()));
    rb.input("d1", static_cast<std::uint64_t>(h1.max_edge_intersection_degree()));
    rb.input("d2", static_cast<std::uint64_t>(h2.max_edge_intersection_degree()));

    rb.verdict("packing_condition", packing_condition(h1, h2, n));

    int exit_code = 0;
    packing_body(rb, h1, h2, n, options, exit_code);

    finish_stats(rb, options, started);
    return {rb.render(), exit_code};
}

// -------------------------------------------------------- perfect packing --

TaskOutcome run_perfect_packing_task(const Hypergraph& g, const Hypergraph& h,
                                     const SolveOptions& options) {
    auto started = Clock::now();
    ReportBuilder rb("perfect-packing", options.with_float);

    PerfectPackingReduction reduction = perfect_packing_reduction(g, h);
    rb.input("r", static_cast<std::uint64_t>(g.uniformity()));
    rb.input("s", static_cast<std::uint64_t>(g.vertex_count()));
    rb.input("n", static_cast<std::uint64_t>(h.vertex_count()));
    rb.input("copies", static_cast<std::uint64_t>(reduction.copies));

    PerfectPackingVerdict condition = perfect_packing_condition(g, h);
    rb.verdict("x", condition.x);
    rb.verdict("threshold", condition.conservative_threshold);
    rb.verdict("perfect_packing_condition", condition.verdict);

    // The degree thresholds speak about perfect matchings, i.e. the case
    // where G is a single edge.
    if (g.edge_count() == 1 && g.vertex_count() == g.uniformity()) {
        PerfectMatchingConditions pm = perfect_matching_conditions(h);
        rb.verdict("perfect_matching_uniform_threshold",
                   pm.uniform.applicable ? text(to_string(pm.uniform.verdict))
                                         : text("not_applicable"));
        rb.verdict("perfect_matching_graph_threshold",
                   pm.graph.applicable ? text(to_string(pm.graph.verdict))
                                       : text("not_applicable"));
    }

    rb.verdict("reduced_packing_condition",
               packing_condition(reduction.h1, reduction.h2, reduction.n));

    int exit_code = 0;
    std::optional<Certificate> cert =
        packing_body(rb, reduction.h1, reduction.h2, reduction.n, options, exit_code);

    if (cert) {
        // Rebuild the vertex partition: copy c of G occupies domain points
        // c*s+1 .. c*s+s, so its sigma-image is one piece.
        const std::size_t s = g.vertex_count();
        ReportBuilder::Json partition = ReportBuilder::Json::array();
        bool pieces_ok = cert->checked;
        for (std::size_t c = 0; c < reduction.copies; ++c) {
            std::vector<std::size_t> piece(cert->witness.begin() + c * s,
                                           cert->witness.begin() + (c + 1) * s);
            std::vector<std::size_t> sorted_piece = piece;
            std::sort(sorted_piece.begin(), sorted_piece.end());

            // The piece's packed edges, relabeled to 1..s, must form a copy
            // of G made entirely of edges of H.
            std::vector<std::vector<std::size_t>> piece_edges;
            for (const auto& edge : g.edges()) {
                std::vector<std::size_t> image;
                image.reserve(edge.size());
                for (std::size_t v : edge) image.push_back(cert->witness[c * s + v - 1]);
                std::sort(image.begin(), image.end());
                if (reduction.h2.has_edge(image)) pieces_ok = false; // not an H edge
                std::vector<std::size_t> relabeled;
                relabeled.reserve(image.size());
                for (std::size_t v : image) {
                    auto it = std::lower_bound(sorted_piece.begin(), sorted_piece.end(), v);
                    relabeled.push_back(
                        static_cast<std::size_t>(it - sorted_piece.begin()) + 1);
                }
                piece_edges.push_back(std::move(relabeled));
            }
            if (pieces_ok && g.edge_count() > 0 && s <= 8) {
                Hypergraph piece_graph(s, g.uniformity(), std::move(piece_edges));
                if (!is_isomorphic(piece_graph, g)) pieces_ok = false;
            }
            partition.push_back(sorted_piece);
        }
        rb.verdict("partition_pieces_match", pieces_ok);
        rb.section("partition", std::move(partition));
        if (!pieces_ok) exit_code = 3;
    }

    finish_stats(rb, options, started);
    return {rb.render(), exit_code};
}

// ------------------------------------------------------------- verify-ndg --

TaskOutcome run_verify_ndg_task(const EventsSpec& spec, const SolveOptions& options) {
    auto started = Clock::now();
    ReportBuilder rb("verify-ndg", options.with_float);

    rb.input("m", static_cast<std::uint64_t>(spec.m));
    rb.input("n", static_cast<std::uint64_t>(spec.n));
    rb.input("events", static_cast<std::uint64_t>(spec.matchings.size()));
    rb.input("graph", spec.graph ? std::string("explicit") : std::string("conflict"));

    SampleSpace space = SampleSpace::enumerate_injections(spec.m, spec.n);
    std::vector<Event> events;
    events.reserve(spec.matchings.size());
    for (const Matching& matching : spec.matchings)
        events.push_back(canonical_event(space, matching).realized);

    Graph graph = spec.graph ? *spec.graph : conflict_graph(spec.matchings, options.threads);

    GraphVerdict verdict = verify_negative_dependency_graph(space, events, graph);
    rb.verdict("negative_dependency_graph", verdict.holds ? TriState::holds : TriState::fails);
    if (verdict.violation) rb.section("violation", violation_json(rb, *verdict.violation));

    rb.stat("outcomes", static_cast<std::uint64_t>(space.outcome_count()));
    finish_stats(rb, options, started);
    return {rb.render(), 0};
}

// -------------------------------------------------------- weighted system --

TaskOutcome run_weighted_system_task(const WeightedSystemSpec& spec,
                                     const SolveOptions& options) {
    auto started = Clock::now();
    ReportBuilder rb("lll-check", options.with_float);

    const std::size_t n = spec.p.size();
    Graph graph(n, spec.edges);
    rb.input("events", static_cast<std::uint64_t>(n));
    rb.input("edges", static_cast<std::uint64_t>(graph.edge_count()));
    rb.input("weights", spec.x ? std::string("given") : std::string("searched"));

    const Rational p_max = *std::max_element(spec.p.begin(), spec.p.end());
    if (p_max < 1) {
        rb.verdict("symmetric_condition",
                   check_symmetric_condition(p_max, graph.max_degree()));
    } else {
        rb.verdict("symmetric_condition", text("not_applicable"));
    }

    int exit_code = 0;
    if (spec.x) {
        WeightVector weights(*spec.x);
        ConditionResult result = check_lll_condition(spec.p, graph, weights);
        rb.verdict("condition", text(result.passed() ? "passes" : "violated"));
        if (result.passed()) {
            rb.verdict("bound", result.bound);
        } else {
            rb.verdict("violation_index", static_cast<std::uint64_t>(*result.violation));
            exit_code = 3;
        }
    } else {
        std::optional<WeightVector> weights = find_weights(spec.p, graph);
        rb.verdict("weights_found", weights.has_value());
        if (weights) {
            ConditionResult result = check_lll_condition(spec.p, graph, *weights);
            rb.verdict("bound", result.bound);
            ReportBuilder::Json xs = ReportBuilder::Json::array();
            for (const Rational& w : weights->values()) xs.push_back(rb.rational_json(w));
            rb.section("weights", std::move(xs));
        } else {
            exit_code = 3;
        }
    }

    finish_stats(rb, options, started);
    return {rb.render(), exit_code};
}

} // namespace lll
