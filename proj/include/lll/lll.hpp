#pragma once

#include "lll/graph.hpp"
#include "lll/rational.hpp"
#include "lll/space.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace lll {

enum class TriState { holds, fails, indeterminate };

std::string_view to_string(TriState v);

// Rational enclosure of Euler's number e. Every inequality involving e is
// evaluated against the sound side of the enclosure, with `indeterminate`
// when the enclosure is too wide to decide. The constructor certifies
// lower < e < upper against exact partial sums of the series for e and
// requires width <= 10^-12; the default enclosure is
// [2718281828459045, 2718281828459046] / 10^15.
struct EInterval {
    Rational lower;
    Rational upper;

    EInterval();
    EInterval(Rational lower_bound, Rational upper_bound);
};

// Per-event weights x_i in [0,1); validated on construction.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> values);
    static WeightVector uniform(std::size_t count, const Rational& value);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<Rational> values_;
};

// Witness for a failed graph verification. For the negative-dependency check
// lhs = P(A_i | ∩_{j∈S} A_j^c) and rhs = P(A_i); for the dependency
// (independence) check lhs = P(A_i ∩ ∩_{j∈S} A_j) and rhs = P(A_i)·P(∩ A_j).
struct GraphViolation {
    std::size_t i = 0;                // 1-based event index
    std::vector<std::size_t> subset;  // sorted 1-based indices (non-neighbors of i)
    Rational lhs;
    Rational rhs;
};

struct GraphVerdict {
    bool holds = false;
    std::optional<GraphViolation> violation;
};

inline constexpr std::size_t default_graph_cap = 15;

// Verifies that conditioning any event on the joint non-occurrence of any
// subset of its non-neighbors never raises its probability:
// P(A_i | ∩_{j∈S} A_j^c) <= P(A_i) for all i and all S inside the
// non-neighborhood of i (subsets with P(∩ A_j^c) = 0 are skipped).
// Exponential in the non-neighborhood size; throws SizeLimitError above the
// cap. On failure reports the lexicographically first violating (i, S).
GraphVerdict verify_negative_dependency_graph(const SampleSpace& space,
                                              const std::vector<Event>& events, const Graph& g,
                                              std::size_t cap = default_graph_cap);

// Verifies that each event is independent of every Boolean combination of its
// non-neighbors, via the generating-intersection criterion:
// P(A_i ∩ ∩_{j∈T} A_j) = P(A_i)·P(∩_{j∈T} A_j) for every subset T of the
// non-neighbors of i. Strictly stronger than the negative-dependency check.
GraphVerdict verify_dependency_graph(const SampleSpace& space, const std::vector<Event>& events,
                                     const Graph& g, std::size_t cap = default_graph_cap);

// Result of the per-event weighted condition p_i <= x_i·∏_{j∈J_i}(1-x_j).
// When every inequality holds, `bound` carries the guaranteed avoidance
// probability ∏(1-x_i); otherwise `violation` is the first failing index.
struct ConditionResult {
    std::optional<std::size_t> violation; // 1-based
    Rational bound;

    bool passed() const { return !violation.has_value(); }
};

ConditionResult check_lll_condition(const std::vector<Rational>& p, const Graph& g,
                                    const WeightVector& x);

// The symmetric condition e·p·(d+1) <= 1, decided against the enclosure.
TriState check_symmetric_condition(const Rational& p, std::size_t d,
                                   const EInterval& e = EInterval());

// Searches for weights making check_lll_condition pass, by the fixed-point
// iteration x_i <- p_i / ∏_{j∈J_i}(1-x_j) starting from x = p, with each
// iterate rounded up to the 10^-18 grid to keep denominators bounded. Returns
// weights only after check_lll_condition confirms them; absence is a normal
// outcome, not an error.
std::optional<WeightVector> find_weights(const std::vector<Rational>& p, const Graph& g,
                                         std::size_t max_iter = 10'000);

// End-to-end check of the avoidance bound: verifies the negative-dependency
// hypothesis and the weighted condition, then compares the exact avoidance
// probability P(∩ A_i^c) against ∏(1-x_i).
struct ConclusionCheck {
    enum class Hypothesis { none, negative_dependency_graph, weight_condition };

    Hypothesis failed_hypothesis = Hypothesis::none;
    std::optional<GraphViolation> graph_violation; // when the graph hypothesis failed
    std::optional<std::size_t> condition_violation; // when the weight condition failed
    Rational avoid_probability; // P(∩ A_i^c), always computed
    Rational bound;             // ∏(1 - x_i)
    bool conclusion_holds = false; // avoid_probability >= bound

    bool hypotheses_ok() const { return failed_hypothesis == Hypothesis::none; }
};

ConclusionCheck verify_lll_conclusion(const SampleSpace& space, const std::vector<Event>& events,
                                      const Graph& g, const WeightVector& x,
                                      std::size_t cap = default_graph_cap);

} // namespace lll
