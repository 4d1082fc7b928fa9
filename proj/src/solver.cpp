#include "lll/solver.hpp"

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"
#include "lll/rng.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lll {

AvoidanceProblem::AvoidanceProblem(std::size_t domain_size, std::size_t codomain_size,
                                   std::vector<Matching> forbidden_matchings)
    : m(domain_size), n(codomain_size), forbidden(std::move(forbidden_matchings)) {
    if (m < 1 || m > n) throw DomainError("need 1 <= m <= n");
    for (const Matching& f : forbidden) {
        if (f.domain_size() != m || f.codomain_size() != n)
            throw DomainError("forbidden matching lives over different ambient sets");
    }
}

namespace {

bool extends(const std::vector<std::size_t>& witness, const Matching& f) {
    for (const auto& [dom, img] : f.pairs()) {
        if (witness[dom - 1] != img) return false;
    }
    return true;
}

void require_witness_shape(const AvoidanceProblem& problem,
                           const std::vector<std::size_t>& witness) {
    if (witness.size() != problem.m) throw DomainError("witness length does not match the domain");
    std::vector<bool> seen(problem.n + 1, false);
    for (std::size_t v : witness) {
        if (v < 1 || v > problem.n || seen[v]) throw DomainError("witness is not an injection");
        seen[v] = true;
    }
}

} // namespace

bool witness_avoids_all(const AvoidanceProblem& problem, const std::vector<std::size_t>& witness) {
    require_witness_shape(problem, witness);
    for (const Matching& f : problem.forbidden) {
        if (extends(witness, f)) return false;
    }
    return true;
}

// ----------------------------------------------------------- exhaustive ----

namespace {

// Backtracking in lexicographic image order. A forbidden matching is tested
// at the depth where its last domain point receives a value; a fully
// extended matching prunes the branch (every completion stays forbidden), so
// the first leaf reached is the lexicographically first avoiding injection.
struct ExhaustiveSearch {
    const AvoidanceProblem& problem;
    std::vector<std::vector<std::size_t>> by_last_depth; // matching indices
    std::vector<std::size_t> image;
    std::vector<bool> used;
    SolveStats stats;

    explicit ExhaustiveSearch(const AvoidanceProblem& p)
        : problem(p), by_last_depth(p.m + 1), image(p.m, 0), used(p.n + 1, false) {
        for (std::size_t idx = 0; idx < p.forbidden.size(); ++idx) {
            const auto& pairs = p.forbidden[idx].pairs();
            std::size_t last = 0;
            for (const auto& [dom, img] : pairs) last = std::max(last, dom);
            by_last_depth[last].push_back(idx);
        }
    }

    bool blocked_at(std::size_t depth) {
        for (std::size_t idx : by_last_depth[depth]) {
            const Matching& f = problem.forbidden[idx];
            bool all = true;
            for (const auto& [dom, img] : f.pairs()) {
                if (image[dom - 1] != img) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }

    bool dfs(std::size_t depth) {
        if (depth == problem.m) {
            ++stats.outcomes_examined;
            return true;
        }
        for (std::size_t v = 1; v <= problem.n; ++v) {
            if (used[v]) continue;
            image[depth] = v;
            used[v] = true;
            if (!blocked_at(depth + 1) && dfs(depth + 1)) return true;
            used[v] = false;
        }
        return false;
    }
};

// Matchings with an empty domain forbid every injection outright.
bool has_empty_forbidden(const AvoidanceProblem& problem) {
    for (const Matching& f : problem.forbidden) {
        if (f.size() == 0) return true;
    }
    return false;
}

} // namespace

SolveResult solve_exhaustive(const AvoidanceProblem& problem, std::uint64_t cap) {
    BigInt total = injection_count(problem.m, problem.n);
    if (total > BigInt(cap))
        throw SizeLimitError(total.convert_to<std::uint64_t>(), cap,
                             "exhaustive search over " + total.str() +
                                 " injections exceeds the cap of " + std::to_string(cap));

    if (has_empty_forbidden(problem)) return {std::nullopt, {}};

    ExhaustiveSearch search(problem);
    if (!search.dfs(0)) return {std::nullopt, search.stats};

    Certificate cert;
    cert.witness = search.image;
    cert.stats = search.stats;
    cert.checked = witness_avoids_all(problem, cert.witness);
    return {std::move(cert), search.stats};
}

// ----------------------------------------------------------- randomized ----

namespace {

struct RandomizedAttempt {
    const AvoidanceProblem& problem;
    SplitMix64 rng;
    std::vector<std::size_t> witness;
    std::vector<bool> used;

    RandomizedAttempt(const AvoidanceProblem& p, std::uint64_t attempt_seed)
        : problem(p), rng(attempt_seed), witness(p.m), used(p.n + 1, false) {
        // Partial Fisher-Yates: a uniform random injection.
        std::vector<std::size_t> pool(p.n);
        std::iota(pool.begin(), pool.end(), 1);
        for (std::size_t i = 0; i < p.m; ++i) {
            std::size_t j = i + rng.next_below(p.n - i);
            std::swap(pool[i], pool[j]);
            witness[i] = pool[i];
            used[pool[i]] = true;
        }
    }

    // Index into forbidden of the matching to resample, or npos when none is
    // violated.
    std::size_t pick_violated(bool random_choice) {
        if (!random_choice) {
            for (std::size_t idx = 0; idx < problem.forbidden.size(); ++idx) {
                if (extends(witness, problem.forbidden[idx])) return idx;
            }
            return static_cast<std::size_t>(-1);
        }
        std::vector<std::size_t> violated;
        for (std::size_t idx = 0; idx < problem.forbidden.size(); ++idx) {
            if (extends(witness, problem.forbidden[idx])) violated.push_back(idx);
        }
        if (violated.empty()) return static_cast<std::size_t>(-1);
        return violated[rng.next_below(violated.size())];
    }

    void resample(const Matching& f) {
        const std::size_t m = problem.m;
        const std::size_t n = problem.n;
        for (const auto& [dom, img] : f.pairs()) {
            (void)img;
            std::size_t pos = dom - 1;
            if (m == n) {
                if (n < 2) continue; // nothing to swap with
                std::size_t other = rng.next_below(n - 1);
                if (other >= pos) ++other;
                std::swap(witness[pos], witness[other]);
            } else {
                std::size_t skip = rng.next_below(n - m); // among unused values
                std::size_t replacement = 0;
                for (std::size_t v = 1; v <= n; ++v) {
                    if (used[v]) continue;
                    if (skip == 0) {
                        replacement = v;
                        break;
                    }
                    --skip;
                }
                used[witness[pos]] = false;
                used[replacement] = true;
                witness[pos] = replacement;
            }
        }
    }
};

} // namespace

SolveResult solve_randomized(const AvoidanceProblem& problem, const RandomizedOptions& options) {
    SolveStats stats;
    for (std::uint64_t attempt = 0; attempt < options.max_restarts; ++attempt) {
        ++stats.restarts;
        RandomizedAttempt state(problem, mix_seed(options.seed, attempt));
        for (std::uint64_t step = 0; step <= options.max_steps; ++step) {
            std::size_t idx = state.pick_violated(options.random_violation_choice);
            if (idx == static_cast<std::size_t>(-1)) {
                Certificate cert;
                cert.witness = state.witness;
                cert.stats = stats;
                cert.checked = witness_avoids_all(problem, cert.witness);
                return {std::move(cert), stats};
            }
            if (step == options.max_steps) break; // budget for this attempt is spent
            state.resample(problem.forbidden[idx]);
            ++stats.resample_steps;
        }
    }
    return {std::nullopt, stats};
}

} // namespace lll
