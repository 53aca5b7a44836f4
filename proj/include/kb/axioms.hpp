#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kb/indices.hpp"
#include "kb/score_vector.hpp"

namespace kb {

/// Absolute tolerance for equality of index values inside axiom checks.
inline constexpr double kAxiomTolerance = 1e-9;

/// The two evaluated sides of the tested relation.
struct AxiomWitness {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of one axiom check; `witness` is always present when violated and
/// holds the pair of values that exhibits the violation.
struct AxiomVerdict {
    bool satisfied = true;
    std::optional<AxiomWitness> witness;
};

/// Requires dominates(x, y); vacuously satisfied otherwise.
/// Tests f(x) <= f(y).
AxiomVerdict check_monotonicity(IndexKind kind, const ScoreVector& x, const ScoreVector& y);

/// Tests that appending the same score c to both vectors preserves the
/// ordering of f(x) and f(y).
AxiomVerdict check_independence(IndexKind kind, const ScoreVector& x, const ScoreVector& y,
                                double c);

/// Splits entry `position` (1-based) of x into (x_i - amount, amount) and
/// tests that the index strictly decreases. `amount` must satisfy
/// 0 < amount < x_i or InvalidSplit is thrown.
AxiomVerdict check_depth_relevance(IndexKind kind, const ScoreVector& x, std::size_t position,
                                   double amount);

/// Tests that scaling both vectors by c > 0 preserves the ordering of their
/// index values. Throws NonPositiveScale for c <= 0.
AxiomVerdict check_scale_invariance(IndexKind kind, const ScoreVector& x, const ScoreVector& y,
                                    double c);

/// Premise: f(x) = f(y) and f(x+d) = f(y+d), both within tolerance (vacuously
/// satisfied when the premise fails). Tests f(x + lambda*d) = f(y + lambda*d).
/// Addition is positionwise on the sorted representations, zero-padded.
AxiomVerdict check_directional_consistency(IndexKind kind, const ScoreVector& x,
                                           const ScoreVector& y, const ScoreVector& d,
                                           double lambda);

/// Tests f([value] * n) = n * value for the uniform n-vector.
AxiomVerdict check_uniform_citation(IndexKind kind, std::size_t n, double value);

/// Searches k in 1..n for a uniform vector u = [x_k] * k (dominated by x by
/// construction) with f(u) = f(x). Satisfied when some k works; the witness of
/// a violation holds the closest achievable f(u) against f(x).
AxiomVerdict check_uniform_equivalence(IndexKind kind, const ScoreVector& x);

enum class Axiom {
    Monotonicity,
    Independence,
    DepthRelevance,
    ScaleInvariance,
    DirectionalConsistency,
    UniformCitation,
    UniformEquivalence,
};

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::Monotonicity,           Axiom::Independence,    Axiom::DepthRelevance,
    Axiom::ScaleInvariance,        Axiom::DirectionalConsistency,
    Axiom::UniformCitation,        Axiom::UniformEquivalence,
};

std::string_view axiom_name(Axiom a);

struct BatteryCell {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<AxiomWitness> first_witness;
};

/// Result of the randomized violation search for the Euclidean and rectangle
/// indices across all seven axioms.
struct BatteryResult {
    /// [0] = Euclidean, [1] = Rectangle; columns follow kAllAxioms order.
    std::array<std::array<BatteryCell, 7>, 2> cells{};
    /// sqrt(n) * E(uniform n-vector of v) stayed equal to n * v in every trial.
    bool sqrt_n_repair_ok = true;

    const BatteryCell& cell(IndexKind kind, Axiom a) const;
};

/// Runs the documented counterexample instances first, then `trials` random
/// small-integer instances per axiom, evaluating both indices on each
/// instance. Deterministic for a fixed seed.
BatteryResult run_axiom_battery(std::uint64_t seed, std::size_t trials);

/// True when the Euclidean index violates exactly uniform citation and
/// uniform equivalence, the rectangle index violates exactly independence,
/// depth relevance and directional consistency, and the sqrt(n) repair held.
bool matches_expected_pattern(const BatteryResult& r);

}  // namespace kb
