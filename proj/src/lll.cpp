#include "lll/lll.hpp"

#include "lll/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace lll {

std::string_view to_string(TriState v) {
    switch (v) {
        case TriState::holds: return "holds";
        case TriState::fails: return "fails";
        case TriState::indeterminate: return "indeterminate";
    }
    return "unknown";
}

// ------------------------------------------------------------ EInterval ----

namespace {

// Certified rational bounds with e strictly between them, from the partial
// sum S = Σ_{k=0}^{20} 1/k! and the tail estimate
// 1/21! < Σ_{k>=21} 1/k! < (1/21!)·(22/21).
std::pair<Rational, Rational> certified_e_bounds() {
    BigInt factorial = 1;
    Rational partial = 0;
    for (unsigned k = 0; k <= 20; ++k) {
        if (k > 0) factorial *= k;
        partial += Rational(BigInt(1), factorial);
    }
    BigInt f21 = factorial * 21;
    Rational below_e = partial + Rational(BigInt(1), f21);
    Rational above_e = partial + Rational(BigInt(22), f21 * 21);
    return {below_e, above_e};
}

BigInt pow10(unsigned k) {
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) result *= 10;
    return result;
}

} // namespace

EInterval::EInterval(Rational lower_bound, Rational upper_bound)
    : lower(std::move(lower_bound)), upper(std::move(upper_bound)) {
    if (!(lower < upper)) throw DomainError("e-enclosure bounds out of order");
    if (upper - lower > Rational(BigInt(1), pow10(12)))
        throw DomainError("e-enclosure wider than 10^-12");
    auto [below_e, above_e] = certified_e_bounds();
    if (!(lower <= below_e)) throw DomainError("e-enclosure lower bound is not below e");
    if (!(upper >= above_e)) throw DomainError("e-enclosure upper bound is not above e");
}

EInterval::EInterval()
    : EInterval(Rational(BigInt("2718281828459045"), pow10(15)),
                Rational(BigInt("2718281828459046"), pow10(15))) {}

// --------------------------------------------------------- WeightVector ----

WeightVector::WeightVector(std::vector<Rational> values) : values_(std::move(values)) {
    for (const Rational& v : values_) {
        if (v < 0 || v >= 1) throw DomainError("weights must lie in [0,1)");
    }
}

WeightVector WeightVector::uniform(std::size_t count, const Rational& value) {
    return WeightVector(std::vector<Rational>(count, value));
}

// ------------------------------------------------------ graph verifiers ----

namespace {

void require_family(const SampleSpace& space, const std::vector<Event>& events, const Graph& g,
                    std::size_t cap) {
    if (events.size() != g.vertex_count())
        throw DomainError("event count does not match graph vertex count");
    if (g.vertex_count() > cap) {
        throw SizeLimitError(g.vertex_count(), cap,
                             "graph verification over " + std::to_string(g.vertex_count()) +
                                 " events exceeds the cap of " + std::to_string(cap));
    }
    for (const Event& e : events) {
        if (e.space_id() != space.id())
            throw DomainError("event does not belong to this sample space");
    }
}

std::vector<std::size_t> non_neighbors(const Graph& g, std::size_t i) {
    std::vector<std::size_t> result;
    const auto& adj = g.neighbors(i);
    std::size_t a = 0;
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
        while (a < adj.size() && adj[a] < v) ++a;
        if (v == i || (a < adj.size() && adj[a] == v)) continue;
        result.push_back(v);
    }
    return result;
}

// Subsets of `nn` are visited in lexicographic order (shorter prefixes first)
// so the first violation found is the lexicographically first one.
struct NegativeDependencySearch {
    const std::vector<Event>& events;
    std::uint64_t n_outcomes;
    std::size_t i;
    std::uint64_t ai_size;
    std::vector<std::size_t> chosen;
    std::optional<GraphViolation> violation;

    bool dfs(const std::vector<std::size_t>& nn, std::size_t next, const DynamicBitset& uni) {
        for (std::size_t idx = next; idx < nn.size(); ++idx) {
            DynamicBitset child = uni;
            child |= events[nn[idx] - 1].members();
            std::uint64_t complement_size = n_outcomes - child.count();
            // P(∩ A_j^c) = 0: the condition is vacuous here and on every
            // superset, since the union only grows.
            if (complement_size == 0) continue;
            std::uint64_t both = events[i - 1].members().andnot_count(child);
            chosen.push_back(nn[idx]);
            // P(A_i | C) <= P(A_i)  <=>  |A_i ∩ C|·N <= |A_i|·|C|
            if (both * n_outcomes > ai_size * complement_size) {
                violation = GraphViolation{
                    i, chosen, make_rational(BigInt(both), BigInt(complement_size)),
                    make_rational(BigInt(ai_size), BigInt(n_outcomes))};
                return true;
            }
            if (dfs(nn, idx + 1, child)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

struct DependencySearch {
    const std::vector<Event>& events;
    std::uint64_t n_outcomes;
    std::size_t i;
    std::uint64_t ai_size;
    std::vector<std::size_t> chosen;
    std::optional<GraphViolation> violation;

    bool dfs(const std::vector<std::size_t>& nn, std::size_t next, const DynamicBitset& inter) {
        for (std::size_t idx = next; idx < nn.size(); ++idx) {
            DynamicBitset child = inter;
            child &= events[nn[idx] - 1].members();
            std::uint64_t inter_size = child.count();
            std::uint64_t both = events[i - 1].members().and_count(child);
            chosen.push_back(nn[idx]);
            // P(A_i ∩ I) = P(A_i)·P(I)  <=>  |A_i ∩ I|·N = |A_i|·|I|
            if (both * n_outcomes != ai_size * inter_size) {
                violation = GraphViolation{
                    i, chosen, make_rational(BigInt(both), BigInt(n_outcomes)),
                    make_rational(BigInt(ai_size) * BigInt(inter_size),
                                  BigInt(n_outcomes) * BigInt(n_outcomes))};
                return true;
            }
            if (inter_size == 0) {
                // Supersets keep the intersection empty and both sides zero.
                chosen.pop_back();
                continue;
            }
            if (dfs(nn, idx + 1, child)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

GraphVerdict verify_negative_dependency_graph(const SampleSpace& space,
                                              const std::vector<Event>& events, const Graph& g,
                                              std::size_t cap) {
    require_family(space, events, g, cap);
    for (std::size_t i = 1; i <= g.vertex_count(); ++i) {
        NegativeDependencySearch search{events, space.outcome_count(), i, events[i - 1].size(),
                                        {},     std::nullopt};
        DynamicBitset empty_union(space.outcome_count());
        if (search.dfs(non_neighbors(g, i), 0, empty_union))
            return {false, std::move(search.violation)};
    }
    return {true, std::nullopt};
}

GraphVerdict verify_dependency_graph(const SampleSpace& space, const std::vector<Event>& events,
                                     const Graph& g, std::size_t cap) {
    require_family(space, events, g, cap);
    for (std::size_t i = 1; i <= g.vertex_count(); ++i) {
        DependencySearch search{events, space.outcome_count(), i, events[i - 1].size(),
                                {},     std::nullopt};
        DynamicBitset full(space.outcome_count(), true);
        if (search.dfs(non_neighbors(g, i), 0, full)) return {false, std::move(search.violation)};
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------- condition checks -----

ConditionResult check_lll_condition(const std::vector<Rational>& p, const Graph& g,
                                    const WeightVector& x) {
    if (p.size() != g.vertex_count() || x.size() != g.vertex_count())
        throw DomainError("probability/weight vector length does not match graph");
    for (const Rational& pi : p) {
        if (!is_probability(pi)) throw DomainError("probabilities must lie in [0,1]");
    }
    for (std::size_t i = 1; i <= g.vertex_count(); ++i) {
        Rational rhs = x[i - 1];
        for (std::size_t j : g.neighbors(i)) rhs *= (Rational(1) - x[j - 1]);
        if (p[i - 1] > rhs) return {i, Rational(0)};
    }
    Rational bound = 1;
    for (std::size_t i = 0; i < x.size(); ++i) bound *= (Rational(1) - x[i]);
    return {std::nullopt, bound};
}

TriState check_symmetric_condition(const Rational& p, std::size_t d, const EInterval& e) {
    if (p < 0 || p >= 1) throw DomainError("symmetric condition needs 0 <= p < 1");
    Rational factor = p * Rational(BigInt(d) + 1);
    if (e.upper * factor <= 1) return TriState::holds;
    if (e.lower * factor > 1) return TriState::fails;
    return TriState::indeterminate;
}

// --------------------------------------------------------- find_weights ----

namespace {

// Smallest multiple of 10^-18 that is >= q (q >= 0). Rounding up preserves
// the iteration's invariant x_i >= p_i/∏(1-x_j): any exact fixed point of the
// rounded iteration therefore satisfies the weighted condition outright.
Rational round_up_to_grid(const Rational& q, const BigInt& grid) {
    BigInt num = numerator(q) * grid;
    BigInt den = denominator(q);
    BigInt units = (num + den - 1) / den;
    return make_rational(units, grid);
}

} // namespace

std::optional<WeightVector> find_weights(const std::vector<Rational>& p, const Graph& g,
                                         std::size_t max_iter) {
    if (p.size() != g.vertex_count())
        throw DomainError("probability vector length does not match graph");
    for (const Rational& pi : p) {
        if (pi < 0 || pi >= 1) throw DomainError("find_weights needs probabilities in [0,1)");
    }

    const BigInt grid = pow10(18);
    const Rational tolerance(BigInt(1), pow10(9));
    const std::size_t n = p.size();

    std::vector<Rational> x(p);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::vector<Rational> next(n);
        for (std::size_t i = 1; i <= n; ++i) {
            Rational denom = 1;
            for (std::size_t j : g.neighbors(i)) denom *= (Rational(1) - x[j - 1]);
            Rational v = round_up_to_grid(p[i - 1] / denom, grid);
            if (v >= 1) return std::nullopt; // a coordinate escaped [0,1)
            next[i - 1] = v;
        }
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (abs(next[i] - x[i]) >= tolerance) {
                converged = false;
                break;
            }
        }
        x = std::move(next);
        if (converged) {
            WeightVector candidate(x);
            if (check_lll_condition(p, g, candidate).passed()) return candidate;
            // Not yet at the grid fixed point; keep iterating.
        }
    }
    return std::nullopt;
}

// ----------------------------------------------------------- conclusion ----

ConclusionCheck verify_lll_conclusion(const SampleSpace& space, const std::vector<Event>& events,
                                      const Graph& g, const WeightVector& x, std::size_t cap) {
    if (x.size() != events.size()) throw DomainError("weight count does not match event count");

    ConclusionCheck result;

    std::uint64_t n_outcomes = space.outcome_count();
    DynamicBitset any_bad(n_outcomes);
    std::vector<Rational> p;
    p.reserve(events.size());
    for (const Event& e : events) {
        p.push_back(probability(space, e)); // also validates space membership
        any_bad |= e.members();
    }
    result.avoid_probability =
        make_rational(BigInt(n_outcomes - any_bad.count()), BigInt(n_outcomes));

    result.bound = 1;
    for (std::size_t i = 0; i < x.size(); ++i) result.bound *= (Rational(1) - x[i]);
    result.conclusion_holds = result.avoid_probability >= result.bound;

    GraphVerdict graph_verdict = verify_negative_dependency_graph(space, events, g, cap);
    if (!graph_verdict.holds) {
        result.failed_hypothesis = ConclusionCheck::Hypothesis::negative_dependency_graph;
        result.graph_violation = std::move(graph_verdict.violation);
        return result;
    }
    ConditionResult condition = check_lll_condition(p, g, x);
    if (!condition.passed()) {
        result.failed_hypothesis = ConclusionCheck::Hypothesis::weight_condition;
        result.condition_violation = condition.violation;
        return result;
    }
    return result;
}

} // namespace lll
