#include "kb/axioms.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "kb/errors.hpp"

namespace kb {

namespace {

// -1, 0, +1 with |a - b| <= tolerance counting as a tie.
int ordering(double a, double b) {
    if (std::fabs(a - b) <= kAxiomTolerance) {
        return 0;
    }
    return a > b ? 1 : -1;
}

AxiomVerdict satisfied_verdict() {
    return AxiomVerdict{true, std::nullopt};
}

AxiomVerdict violated_verdict(double lhs, double rhs) {
    return AxiomVerdict{false, AxiomWitness{lhs, rhs}};
}

AxiomVerdict verdict_from(bool ok, double lhs, double rhs) {
    return ok ? satisfied_verdict() : violated_verdict(lhs, rhs);
}

}  // namespace

AxiomVerdict check_monotonicity(IndexKind kind, const ScoreVector& x, const ScoreVector& y) {
    if (!dominates(x, y)) {
        return satisfied_verdict();
    }
    const double fx = evaluate(kind, x);
    const double fy = evaluate(kind, y);
    return verdict_from(fx <= fy + kAxiomTolerance, fx, fy);
}

AxiomVerdict check_independence(IndexKind kind, const ScoreVector& x, const ScoreVector& y,
                                double c) {
    const int before = ordering(evaluate(kind, x), evaluate(kind, y));
    const double fx = evaluate(kind, x.appended(c));
    const double fy = evaluate(kind, y.appended(c));
    return verdict_from(ordering(fx, fy) == before, fx, fy);
}

AxiomVerdict check_depth_relevance(IndexKind kind, const ScoreVector& x, std::size_t position,
                                   double amount) {
    if (position < 1 || position > x.size()) {
        throw InvalidSplitError("split position out of range");
    }
    const double entry = x[position - 1];
    if (!(amount > 0.0) || !(amount < entry)) {
        throw InvalidSplitError("split amount must lie strictly inside the entry");
    }
    std::vector<double> entries = x.entries();
    entries[position - 1] = entry - amount;
    entries.push_back(amount);
    const double after = evaluate(kind, ScoreVector(std::move(entries)));
    const double before = evaluate(kind, x);
    return verdict_from(after < before - kAxiomTolerance, after, before);
}

AxiomVerdict check_scale_invariance(IndexKind kind, const ScoreVector& x, const ScoreVector& y,
                                    double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw NonPositiveScaleError("scale factor must be a positive finite number");
    }
    const int before = ordering(evaluate(kind, x), evaluate(kind, y));
    const double fx = evaluate(kind, x.scaled(c));
    const double fy = evaluate(kind, y.scaled(c));
    return verdict_from(ordering(fx, fy) == before, fx, fy);
}

AxiomVerdict check_directional_consistency(IndexKind kind, const ScoreVector& x,
                                           const ScoreVector& y, const ScoreVector& d,
                                           double lambda) {
    if (ordering(evaluate(kind, x), evaluate(kind, y)) != 0) {
        return satisfied_verdict();
    }
    if (ordering(evaluate(kind, x + d), evaluate(kind, y + d)) != 0) {
        return satisfied_verdict();
    }
    const ScoreVector shift = d.scaled(lambda);
    const double fx = evaluate(kind, x + shift);
    const double fy = evaluate(kind, y + shift);
    return verdict_from(ordering(fx, fy) == 0, fx, fy);
}

AxiomVerdict check_uniform_citation(IndexKind kind, std::size_t n, double value) {
    const double lhs = evaluate(kind, ScoreVector::uniform(n, value));
    const double rhs = static_cast<double>(n) * value;
    return verdict_from(std::fabs(lhs - rhs) <= kAxiomTolerance, lhs, rhs);
}

AxiomVerdict check_uniform_equivalence(IndexKind kind, const ScoreVector& x) {
    const double target = evaluate(kind, x);
    if (std::fabs(target) <= kAxiomTolerance) {
        return satisfied_verdict();
    }
    double best = 0.0;
    bool have_best = false;
    for (std::size_t k = 1; k <= x.size(); ++k) {
        const double value = evaluate(kind, ScoreVector::uniform(k, x[k - 1]));
        if (std::fabs(value - target) <= kAxiomTolerance) {
            return satisfied_verdict();
        }
        if (!have_best || std::fabs(value - target) < std::fabs(best - target)) {
            best = value;
            have_best = true;
        }
    }
    return violated_verdict(best, target);
}

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Monotonicity:
            return "monotonicity";
        case Axiom::Independence:
            return "independence";
        case Axiom::DepthRelevance:
            return "depth-relevance";
        case Axiom::ScaleInvariance:
            return "scale-invariance";
        case Axiom::DirectionalConsistency:
            return "directional-consistency";
        case Axiom::UniformCitation:
            return "uniform-citation";
        case Axiom::UniformEquivalence:
            return "uniform-equivalence";
    }
    return "";
}

const BatteryCell& BatteryResult::cell(IndexKind kind, Axiom a) const {
    const std::size_t row = kind == IndexKind::Euclidean ? 0 : 1;
    return cells[row][static_cast<std::size_t>(a)];
}

namespace {

class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    // Raw engine output keeps the draw sequence identical across standard
    // library implementations (distributions are not portable).
    std::uint64_t next_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + rng_() % (hi - lo + 1);
    }

    double next_entry(int max_entry) {
        return static_cast<double>(next_int(0, static_cast<std::uint64_t>(max_entry)));
    }

    ScoreVector next_vector(std::size_t min_len, std::size_t max_len, int max_entry) {
        std::vector<double> entries(next_int(min_len, max_len));
        for (double& v : entries) {
            v = next_entry(max_entry);
        }
        return ScoreVector(std::move(entries));
    }

private:
    std::mt19937_64 rng_;
};

class BatteryRun {
public:
    BatteryResult result;

    template <typename Check>
    void record(Axiom axiom, const Check& check) {
        const std::array<IndexKind, 2> kinds = {IndexKind::Euclidean, IndexKind::Rectangle};
        for (std::size_t row = 0; row < 2; ++row) {
            const AxiomVerdict verdict = check(kinds[row]);
            BatteryCell& cell = result.cells[row][static_cast<std::size_t>(axiom)];
            ++cell.trials;
            if (!verdict.satisfied) {
                ++cell.violations;
                if (!cell.first_witness) {
                    cell.first_witness = verdict.witness;
                }
            }
        }
    }
};

}  // namespace

BatteryResult run_axiom_battery(std::uint64_t seed, std::size_t trials) {
    BatteryRun run;
    InstanceGen gen(seed);

    // Documented instances first: the counterexamples behind every expected
    // violation, so the violation columns are populated regardless of what
    // the random search finds.
    {
        const ScoreVector x{5, 1};
        const ScoreVector y{3, 3};
        run.record(Axiom::Independence,
                   [&](IndexKind k) { return check_independence(k, x, y, 5.0); });
        run.record(Axiom::ScaleInvariance,
                   [&](IndexKind k) { return check_scale_invariance(k, x, y, 2.0); });
        run.record(Axiom::UniformEquivalence,
                   [&](IndexKind k) { return check_uniform_equivalence(k, x); });
    }
    {
        const ScoreVector x{3, 3};
        const ScoreVector y{5, 3};
        run.record(Axiom::Monotonicity,
                   [&](IndexKind k) { return check_monotonicity(k, x, y); });
    }
    {
        const ScoreVector x{5, 2};
        run.record(Axiom::DepthRelevance,
                   [&](IndexKind k) { return check_depth_relevance(k, x, 1, 2.0); });
        run.record(Axiom::UniformEquivalence,
                   [&](IndexKind k) { return check_uniform_equivalence(k, x); });
    }
    {
        const ScoreVector x{3, 3, 0};
        const ScoreVector y{2, 2, 2};
        const ScoreVector d{1, 0, 0};
        run.record(Axiom::DirectionalConsistency,
                   [&](IndexKind k) { return check_directional_consistency(k, x, y, d, 4.0); });
    }
    run.record(Axiom::UniformCitation,
               [](IndexKind k) { return check_uniform_citation(k, 4, 1.0); });
    run.record(Axiom::UniformCitation,
               [](IndexKind k) { return check_uniform_citation(k, 3, 2.0); });

    for (std::size_t t = 0; t < trials; ++t) {
        {
            const ScoreVector y = gen.next_vector(1, 6, 9);
            std::vector<double> cut = y.entries();
            for (double& v : cut) {
                v -= static_cast<double>(gen.next_int(0, static_cast<std::uint64_t>(v)));
            }
            const ScoreVector x(std::move(cut));
            run.record(Axiom::Monotonicity,
                       [&](IndexKind k) { return check_monotonicity(k, x, y); });
        }
        {
            const ScoreVector x = gen.next_vector(1, 5, 9);
            const ScoreVector y = gen.next_vector(1, 5, 9);
            const double c = gen.next_entry(9);
            run.record(Axiom::Independence,
                       [&](IndexKind k) { return check_independence(k, x, y, c); });
        }
        {
            std::vector<double> entries(gen.next_int(1, 5));
            for (double& v : entries) {
                v = gen.next_entry(9);
            }
            entries[gen.next_int(0, entries.size() - 1)] =
                static_cast<double>(gen.next_int(2, 9));
            const ScoreVector x(std::move(entries));
            std::vector<std::size_t> splittable;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] >= 2.0) {
                    splittable.push_back(i + 1);
                }
            }
            const std::size_t pos = splittable[gen.next_int(0, splittable.size() - 1)];
            const double amount =
                static_cast<double>(gen.next_int(1, static_cast<std::uint64_t>(x[pos - 1]) - 1));
            run.record(Axiom::DepthRelevance,
                       [&](IndexKind k) { return check_depth_relevance(k, x, pos, amount); });
        }
        {
            const ScoreVector x = gen.next_vector(1, 5, 9);
            const ScoreVector y = gen.next_vector(1, 5, 9);
            const double c = static_cast<double>(gen.next_int(1, 16)) / 4.0;
            run.record(Axiom::ScaleInvariance,
                       [&](IndexKind k) { return check_scale_invariance(k, x, y, c); });
        }
        {
            const ScoreVector x = gen.next_vector(1, 4, 4);
            const ScoreVector y = gen.next_vector(1, 4, 4);
            const ScoreVector d = gen.next_vector(1, 4, 4);
            const double lambda = static_cast<double>(gen.next_int(2, 5));
            run.record(Axiom::DirectionalConsistency, [&](IndexKind k) {
                return check_directional_consistency(k, x, y, d, lambda);
            });
        }
        {
            const std::size_t n = gen.next_int(1, 8);
            const double v = static_cast<double>(gen.next_int(0, 20)) / 2.0;
            run.record(Axiom::UniformCitation,
                       [&](IndexKind k) { return check_uniform_citation(k, n, v); });
            const double repaired = std::sqrt(static_cast<double>(n)) *
                                    euclidean_index(ScoreVector::uniform(n, v));
            const double expected = static_cast<double>(n) * v;
            if (std::fabs(repaired - expected) >
                kAxiomTolerance * std::max(1.0, expected)) {
                run.result.sqrt_n_repair_ok = false;
            }
        }
        {
            const ScoreVector x = gen.next_vector(1, 6, 9);
            run.record(Axiom::UniformEquivalence,
                       [&](IndexKind k) { return check_uniform_equivalence(k, x); });
        }
    }

    return run.result;
}

bool matches_expected_pattern(const BatteryResult& r) {
    const auto violations = [&r](IndexKind kind, Axiom a) {
        return r.cell(kind, a).violations;
    };
    const IndexKind e = IndexKind::Euclidean;
    const IndexKind rect = IndexKind::Rectangle;
    const bool euclid_ok = violations(e, Axiom::Monotonicity) == 0 &&
                           violations(e, Axiom::Independence) == 0 &&
                           violations(e, Axiom::DepthRelevance) == 0 &&
                           violations(e, Axiom::ScaleInvariance) == 0 &&
                           violations(e, Axiom::DirectionalConsistency) == 0 &&
                           violations(e, Axiom::UniformCitation) > 0 &&
                           violations(e, Axiom::UniformEquivalence) > 0;
    const bool rect_ok = violations(rect, Axiom::Monotonicity) == 0 &&
                         violations(rect, Axiom::Independence) > 0 &&
                         violations(rect, Axiom::DepthRelevance) > 0 &&
                         violations(rect, Axiom::ScaleInvariance) == 0 &&
                         violations(rect, Axiom::DirectionalConsistency) > 0 &&
                         violations(rect, Axiom::UniformCitation) == 0 &&
                         violations(rect, Axiom::UniformEquivalence) == 0;
    return euclid_ok && rect_ok && r.sqrt_n_repair_ok;
}

}  // namespace kb
