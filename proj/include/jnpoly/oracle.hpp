#pragma once

#include "jnpoly/classify.hpp"
#include "jnpoly/random.hpp"

namespace jnpoly {

/// What the randomized oracle saw: which components ever showed up nonzero
/// across the sampled evaluations, plus one exhibit of each.
struct SampleReport {
    std::uint64_t trials = 0;
    std::uint64_t nonzero_scalar_seen = 0;
    std::uint64_t nonzero_pure_seen = 0;
    ImageClass empirical = ImageClass::Zero;
    std::optional<SpinElement<Rational>> scalar_exhibit;
    std::optional<SpinElement<Rational>> pure_exhibit;
};

/// Independent randomized check on classify_image: evaluates p exactly on
/// seeded pseudo-random rational assignments. Accepts non-multilinear
/// polynomials too.
inline SampleReport brute_force_sample(const Polynomial& p, int n, std::uint64_t trials,
                                       std::uint64_t seed) {
    if (n < 2) throw InputError("spin factor requires n >= 2");
    std::mt19937_64 rng(seed);
    const SpinContext<Rational> ctx(n);
    const int m = std::max(p.arity(), 1);
    SampleReport report;
    report.trials = trials;
    std::vector<SpinElement<Rational>> assignment(m, SpinElement<Rational>::zero(n));
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int i = 0; i < m; ++i) assignment[i] = random_spin_rational(rng, n);
        const SpinElement<Rational> value = evaluate(p, assignment, ctx);
        if (!value.scalar_part_zero()) {
            ++report.nonzero_scalar_seen;
            if (!report.scalar_exhibit) report.scalar_exhibit = value;
        }
        if (!value.pure_part_zero()) {
            ++report.nonzero_pure_seen;
            if (!report.pure_exhibit) report.pure_exhibit = value;
        }
    }
    const bool real = report.nonzero_scalar_seen > 0;
    const bool pure = report.nonzero_pure_seen > 0;
    report.empirical = real ? (pure ? ImageClass::Full : ImageClass::Scalars)
                            : (pure ? ImageClass::PureSpace : ImageClass::Zero);
    return report;
}

struct ConsistencyReport {
    ClassificationReport exact;
    SampleReport sampled;
    bool consistent = false;
};

/// Runs the exact classifier and the sampling oracle side by side. A sampled
/// component the exact label forbids would falsify either the implementation
/// or the theorem's coverage, so it raises InvariantFault instead of being
/// reported quietly.
inline ConsistencyReport verify_classification(const Polynomial& p, int n, std::uint64_t trials,
                                               std::uint64_t seed,
                                               const ClassifyOptions& opts = {}) {
    ConsistencyReport report;
    report.exact = classify_image(p, n, opts);
    report.sampled = brute_force_sample(p, n, trials, seed);
    const bool scalar_forbidden = report.exact.image_class == ImageClass::Zero ||
                                  report.exact.image_class == ImageClass::PureSpace;
    const bool pure_forbidden = report.exact.image_class == ImageClass::Zero ||
                                report.exact.image_class == ImageClass::Scalars;
    if (scalar_forbidden && report.sampled.nonzero_scalar_seen > 0) {
        throw InvariantFault("oracle observed a nonzero scalar part under class '" +
                             std::string(image_class_name(report.exact.image_class)) + "': " +
                             report.sampled.scalar_exhibit->to_text());
    }
    if (pure_forbidden && report.sampled.nonzero_pure_seen > 0) {
        throw InvariantFault("oracle observed a nonzero pure part under class '" +
                             std::string(image_class_name(report.exact.image_class)) + "': " +
                             report.sampled.pure_exhibit->to_text());
    }
    report.consistent = true;
    return report;
}

}  // namespace jnpoly
