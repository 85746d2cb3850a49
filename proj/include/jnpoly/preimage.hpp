#pragma once

#include <limits>
#include <string>

#include "jnpoly/automorphism.hpp"
#include "jnpoly/classify.hpp"
#include "jnpoly/random.hpp"

namespace jnpoly {

/// Outcome of the constructive preimage search. A failed search is a result,
/// not a fault: genericity is probabilistic, so the caller may reseed.
struct PreimageResult {
    bool success = false;
    std::vector<SpinElement<double>> assignment;
    double residual = std::numeric_limits<double>::infinity();
    int retries_used = 0;
    std::vector<std::string> trace;
};

/// Finds an assignment r with ||p(r) - target|| <= tol for a Full polynomial,
/// following the case-4 proof: walk the substitution chain A_1..A_{m+1} from
/// the real basis witness with generic elements until it leaves the reals,
/// cancel the real component (r~ = r* - c r), pick real weights x, y so the
/// slot input x r + y r~ hits the target's scalar part and pure norm, then
/// rotate onto the target's pure direction with a Lemma-1 automorphism.
inline PreimageResult preimage_search(const Polynomial& p, int n,
                                      const SpinElement<double>& target, std::uint64_t seed,
                                      double tol = ScalarMode::kDefaultTolerance,
                                      int max_retries = 64, const ClassifyOptions& opts = {}) {
    if (target.pure_dim() != n - 1) {
        throw InputError("target dimension does not match n=" + std::to_string(n));
    }
    if (target.is_zero(tol)) throw InputError("preimage target must be nonzero");
    const ClassificationReport report = classify_image(p, n, opts);
    if (report.image_class != ImageClass::Full) {
        throw InputError("preimage search requires a Full polynomial (image is '" +
                         std::string(image_class_name(report.image_class)) + "')");
    }

    const int m = p.arity();
    const SpinContext<double> ctx(n);
    const double ztol = 1e-9;       // numeric zero for the genericity checks
    const double frame_tol = 1e-9;  // rotation machinery; independent of the residual tol

    // Real basis witness: p(x_1..x_m) = k != 0.
    std::vector<SpinElement<double>> witness;
    witness.reserve(m);
    for (int idx : report.real_witness->tuple) {
        witness.push_back(to_float(SpinElement<Rational>::basis(n, idx)));
    }

    const double s = target.a;
    PureVector w(target.v.begin(), target.v.end());
    const double w_norm = norm(w);

    std::mt19937_64 rng(seed);
    PreimageResult result;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        result.retries_used = attempt;
        std::vector<SpinElement<double>> z;
        z.reserve(m);
        for (int i = 0; i < m; ++i) z.push_back(random_spin_double(rng, n));

        // V_t = p(z_1..z_{t-1}, x_t..x_m); find the step where the chain
        // first leaves the reals.
        std::vector<SpinElement<double>> chain_input = witness;
        std::vector<SpinElement<double>> values;
        values.reserve(m + 1);
        values.push_back(evaluate(p, chain_input, ctx));
        for (int t = 1; t <= m; ++t) {
            chain_input[t - 1] = z[t - 1];
            values.push_back(evaluate(p, chain_input, ctx));
        }
        int i = 0;
        for (int t = 1; t <= m; ++t) {
            if (!values[t].pure_part_zero(ztol)) {
                i = t;
                break;
            }
        }
        if (i == 0) {
            result.trace.push_back("attempt " + std::to_string(attempt) +
                                   ": chain never left the reals, resampling");
            continue;
        }
        const SpinElement<double>& real_step = values[i - 1];
        if (!real_step.pure_part_zero(ztol) || std::abs(real_step.a) <= ztol) {
            result.trace.push_back("attempt " + std::to_string(attempt) +
                                   ": degenerate real step A_" + std::to_string(i) +
                                   ", resampling");
            continue;
        }

        // r_1..r_m realize A_i; slot i-1 swaps r_i for r_i* = z_i in A_{i+1}.
        std::vector<SpinElement<double>> r_elems = witness;
        for (int t = 0; t < i - 1; ++t) r_elems[t] = z[t];
        const SpinElement<double> r_star = z[i - 1];
        const double r_val = real_step.a;

        // Cancel the real component: r~ = r* - c r with c = a / r.
        const double c = values[i].a / r_val;
        const SpinElement<double> r_tilde = r_star - c * r_elems[i - 1];
        std::vector<SpinElement<double>> probe = r_elems;
        probe[i - 1] = r_tilde;
        const SpinElement<double> v = evaluate(p, probe, ctx);
        PureVector v_pure(v.v.begin(), v.v.end());
        const double v_norm = norm(v_pure);
        if (v_norm <= ztol) {
            result.trace.push_back("attempt " + std::to_string(attempt) +
                                   ": cancelled value lost its pure part, resampling");
            continue;
        }

        // x r + y v matches the scalar part and the pure norm of the target.
        const double x = s / r_val;
        const double y = w_norm > ztol ? w_norm / v_norm : 0.0;
        std::vector<SpinElement<double>> assignment = r_elems;
        assignment[i - 1] = x * r_elems[i - 1] + y * r_tilde;

        if (w_norm > ztol) {
            PureVector yv = v_pure;
            for (double& coord : yv) coord *= y;
            try {
                const Automorphism phi = automorphism_mapping(yv, w, frame_tol);
                for (SpinElement<double>& element : assignment) element = phi.apply(element);
            } catch (const InputError& e) {
                result.trace.push_back("attempt " + std::to_string(attempt) +
                                       ": rotation degenerate (" + e.what() + "), resampling");
                continue;
            }
        }

        const SpinElement<double> achieved = evaluate(p, assignment, ctx);
        const double residual = distance(achieved, target);
        if (residual <= tol) {
            result.success = true;
            result.assignment = std::move(assignment);
            result.residual = residual;
            return result;
        }
        result.trace.push_back("attempt " + std::to_string(attempt) + ": residual " +
                               scalar_to_string(residual) + " above tolerance, resampling");
    }
    result.trace.push_back("retries exhausted after " + std::to_string(max_retries + 1) +
                           " attempts");
    return result;
}

}  // namespace jnpoly
