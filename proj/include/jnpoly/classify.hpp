#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "jnpoly/evaluate.hpp"

namespace jnpoly {

/// The four possible images of a multilinear polynomial on J_n.
enum class ImageClass { Zero, Scalars, PureSpace, Full };

inline std::string_view image_class_name(ImageClass c) {
    switch (c) {
        case ImageClass::Zero: return "zero";
        case ImageClass::Scalars: return "scalars";
        case ImageClass::PureSpace: return "pure";
        case ImageClass::Full: return "full";
    }
    return "?";
}

enum class Parity { Real, Pure };

/// Basic-evaluation parity rule: an odd number of pure inputs gives a pure
/// value, an even number gives a real value. Index 0 is the identity element.
inline Parity parity_predict(const std::vector<int>& tuple) {
    int pure = 0;
    for (int idx : tuple) {
        if (idx != 0) ++pure;
    }
    return (pure % 2 == 1) ? Parity::Pure : Parity::Real;
}

/// One basic evaluation: the basis tuple, its value, and the predicted parity.
struct BasicEvalRecord {
    std::vector<int> tuple;
    SpinElement<Rational> value;
    Parity parity = Parity::Real;
};

struct ClassificationReport {
    ImageClass image_class = ImageClass::Zero;
    std::optional<BasicEvalRecord> real_witness;  // nonzero real value
    std::optional<BasicEvalRecord> pure_witness;  // nonzero pure value
    std::uint64_t tuples_examined = 0;
};

struct ClassifyOptions {
    std::uint64_t max_tuples = 10'000'000;
    unsigned threads = 1;  // 0 picks hardware concurrency
};

namespace detail {

inline std::vector<int> decode_tuple(std::uint64_t index, int n, int m) {
    std::vector<int> tuple(m);
    for (int slot = m - 1; slot >= 0; --slot) {
        tuple[slot] = static_cast<int>(index % n);
        index /= n;
    }
    return tuple;
}

inline std::uint64_t tuple_space_size(int n, int m, std::uint64_t clamp) {
    unsigned __int128 total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<unsigned>(n);
        if (total > clamp) return clamp + 1;
    }
    return static_cast<std::uint64_t>(total);
}

// Evaluates the basis tuple at `index` and checks it against the parity rule.
inline SpinElement<Rational> basic_eval(const Polynomial& p,
                                        const std::vector<SpinElement<Rational>>& basis,
                                        const std::vector<int>& tuple,
                                        const SpinContext<Rational>& ctx) {
    std::vector<SpinElement<Rational>> assignment;
    assignment.reserve(tuple.size());
    for (int idx : tuple) assignment.push_back(basis[idx]);
    SpinElement<Rational> value = evaluate(p, assignment, ctx);
    const bool pure_pred = parity_predict(tuple) == Parity::Pure;
    if (pure_pred ? !value.scalar_part_zero() : !value.pure_part_zero()) {
        throw InvariantFault("basic evaluation violates the parity rule at tuple " +
                             [&] {
                                 std::string s;
                                 for (int idx : tuple) s += std::to_string(idx) + ",";
                                 return s;
                             }());
    }
    return value;
}

struct ScanState {
    std::atomic<std::uint64_t> best_real{UINT64_MAX};
    std::atomic<std::uint64_t> best_pure{UINT64_MAX};
    std::atomic<std::uint64_t> examined{0};
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::optional<BasicEvalRecord> real_rec, pure_rec;
    std::exception_ptr error;
};

// A worker may stop only once both witnesses exist below its position; that
// keeps the surviving minima exact, so the merged report is schedule
// independent.
inline bool cannot_improve(const ScanState& st, std::uint64_t index) {
    const std::uint64_t r = st.best_real.load(std::memory_order_relaxed);
    const std::uint64_t p = st.best_pure.load(std::memory_order_relaxed);
    return r != UINT64_MAX && p != UINT64_MAX && index > r && index > p;
}

inline void scan_range(const Polynomial& p, int n, std::uint64_t limit, ScanState& st,
                       std::uint64_t chunk_size) {
    const int m = p.arity();
    const SpinContext<Rational> ctx(n);
    std::vector<SpinElement<Rational>> basis;
    basis.reserve(n);
    for (int i = 0; i < n; ++i) basis.push_back(SpinElement<Rational>::basis(n, i));

    try {
        for (;;) {
            const std::uint64_t chunk = st.next_chunk.fetch_add(1, std::memory_order_relaxed);
            const std::uint64_t start = chunk * chunk_size;
            if (start >= limit || st.failed.load(std::memory_order_relaxed)) break;
            if (cannot_improve(st, start)) break;  // chunks ascend; nothing left to win
            const std::uint64_t end = std::min(start + chunk_size, limit);
            std::uint64_t examined_here = 0;
            for (std::uint64_t idx = start; idx < end; ++idx) {
                if (cannot_improve(st, idx) || st.failed.load(std::memory_order_relaxed)) break;
                const std::vector<int> tuple = decode_tuple(idx, n, m);
                const SpinElement<Rational> value = basic_eval(p, basis, tuple, ctx);
                ++examined_here;
                const bool has_real = !value.scalar_part_zero();
                const bool has_pure = !value.pure_part_zero();
                if (!has_real && !has_pure) continue;
                std::lock_guard<std::mutex> lock(st.mu);
                if (has_real && idx < st.best_real.load(std::memory_order_relaxed)) {
                    st.best_real.store(idx, std::memory_order_relaxed);
                    st.real_rec = BasicEvalRecord{tuple, value, parity_predict(tuple)};
                }
                if (has_pure && idx < st.best_pure.load(std::memory_order_relaxed)) {
                    st.best_pure.store(idx, std::memory_order_relaxed);
                    st.pure_rec = BasicEvalRecord{tuple, value, parity_predict(tuple)};
                }
            }
            st.examined.fetch_add(examined_here, std::memory_order_relaxed);
        }
    } catch (...) {
        std::lock_guard<std::mutex> lock(st.mu);
        if (!st.error) st.error = std::current_exception();
        st.failed.store(true, std::memory_order_relaxed);
    }
}

}  // namespace detail

/// Exact image classification per the four-case theorem: sweeps basis tuples
/// in lexicographic order, records the least tuple with a nonzero real value
/// and the least with a nonzero pure value, and exits early once both exist.
/// Witnesses are schedule independent under parallel enumeration.
///
/// Throws InputError for non-multilinear input (the basis-evaluation argument
/// needs multilinearity) and BoundError when the tuple cap is hit before the
/// class is decided.
inline ClassificationReport classify_image(const Polynomial& p, int n,
                                           const ClassifyOptions& opts = {}) {
    if (n < 2) throw InputError("classification requires n >= 2");
    if (!p.is_multilinear()) {
        throw InputError("classification requires a multilinear polynomial");
    }
    const int m = p.arity();
    const std::uint64_t total = detail::tuple_space_size(n, m, opts.max_tuples);
    const bool capped = total > opts.max_tuples;
    const std::uint64_t limit = capped ? opts.max_tuples : total;

    detail::ScanState st;
    unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
    if (threads <= 1 || limit < 4096) {
        detail::scan_range(p, n, limit, st, limit == 0 ? 1 : limit);
    } else {
        const std::uint64_t chunk = std::max<std::uint64_t>(1024, limit / (threads * 64));
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] { detail::scan_range(p, n, limit, st, chunk); });
        }
        for (auto& th : pool) th.join();
    }
    if (st.error) std::rethrow_exception(st.error);

    ClassificationReport report;
    report.tuples_examined = st.examined.load();
    report.real_witness = st.real_rec;
    report.pure_witness = st.pure_rec;
    const bool has_real = report.real_witness.has_value();
    const bool has_pure = report.pure_witness.has_value();
    if (capped && !(has_real && has_pure)) {
        throw BoundError("classification undecided after " + std::to_string(limit) +
                         " of " + std::to_string(n) + "^" + std::to_string(m) +
                         " basis tuples (raise max_tuples)");
    }
    if (has_real && has_pure) {
        report.image_class = ImageClass::Full;
    } else if (has_real) {
        report.image_class = ImageClass::Scalars;
    } else if (has_pure) {
        report.image_class = ImageClass::PureSpace;
    } else {
        report.image_class = ImageClass::Zero;
    }
    return report;
}

/// The degree-6 central polynomial of the worked examples: the product of two
/// associators on disjoint variables. All nonzero values are scalar.
inline std::pair<Polynomial, ClassificationReport> central_example(
    int n, const ClassifyOptions& opts = {}) {
    if (n < 3) throw InputError("the central example needs n >= 3");
    const Polynomial p = associator_polynomial(1, 2, 3) * associator_polynomial(4, 5, 6);
    return {p, classify_image(p, n, opts)};
}

/// The degree-8 multilinear polynomial identity built by feeding the central
/// polynomial back into an associator slot. Vanishes identically on J_n.
inline std::pair<Polynomial, ClassificationReport> pi_example(int n,
                                                              const ClassifyOptions& opts = {}) {
    if (n < 2) throw InputError("spin factor requires n >= 2");
    const Polynomial a = associator_polynomial(1, 2, 3) * associator_polynomial(4, 5, 6);
    const Polynomial y = Polynomial::variable(7);
    const Polynomial z = Polynomial::variable(8);
    const Polynomial p = (a * y) * z - a * (y * z);
    return {p, classify_image(p, n, opts)};
}

}  // namespace jnpoly
