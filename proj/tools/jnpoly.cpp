// Command-line front door for the J_n polynomial engine.
//
// Exit codes: 0 success, 1 verification or invariant failure, 2 parse error,
// 3 precondition violation, 4 resource bound exceeded, 5 search failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "jnpoly/jnpoly.hpp"
#include "jnpoly/report_json.hpp"

using nlohmann::json;
using namespace jnpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBound = 4;
constexpr int kExitSearch = 5;

struct CommonExprArgs {
    std::string expr;
    int n = 3;
    bool strict = false;
    bool json = false;
};

LoweredPolynomial parse_with_warnings(const std::string& expr, bool strict) {
    std::vector<std::string> warnings;
    LoweredPolynomial lowered = parse_polynomial(expr, strict, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return lowered;
}

std::map<std::string, std::string> collect_assignments(const std::vector<std::string>& inline_args,
                                                       const std::string& file) {
    std::map<std::string, std::string> raw;
    auto put = [&](const std::string& entry) {
        const size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            throw InputError("assignment '" + entry + "' is not of the form name=element");
        }
        std::string name = entry.substr(0, eq);
        std::string value = entry.substr(eq + 1);
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
        };
        trim(name);
        trim(value);
        raw[name] = value;
    };
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open assignment file '" + file + "'");
        std::string line;
        while (std::getline(in, line)) {
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            put(line);
        }
    }
    for (const std::string& entry : inline_args) put(entry);
    return raw;
}

int run_classify(const CommonExprArgs& args, std::uint64_t max_tuples) {
    const LoweredPolynomial lowered = parse_with_warnings(args.expr, args.strict);
    ClassifyOptions opts;
    opts.max_tuples = max_tuples;
    const ClassificationReport report = classify_image(lowered.poly, args.n, opts);
    std::cout << to_json(report).dump(2) << "\n";
    return kExitOk;
}

template <class S>
std::vector<SpinElement<S>> resolve_assignment(const LoweredPolynomial& lowered, int n,
                                               const std::map<std::string, std::string>& raw) {
    std::vector<SpinElement<S>> elems;
    for (const std::string& name : lowered.variables) {
        auto it = raw.find(name);
        if (it == raw.end()) {
            throw InputError("no assignment for variable '" + name + "'");
        }
        SpinElement<S> el;
        if constexpr (is_exact_scalar_v<S>) {
            el = parse_spin_exact(it->second);
        } else {
            el = parse_spin_float(it->second);
        }
        if (el.n() != n) {
            throw InputError("assignment for '" + name + "' has dimension n=" +
                             std::to_string(el.n()) + ", expected n=" + std::to_string(n));
        }
        elems.push_back(std::move(el));
    }
    return elems;
}

template <class S>
std::string eval_to_text(const LoweredPolynomial& lowered, int n,
                         const std::map<std::string, std::string>& raw, bool hermitian) {
    const auto elems = resolve_assignment<S>(lowered, n, raw);
    if (hermitian) {
        const AlgebraLevel lv = level_for_spin_dim(n);
        std::vector<Herm2<S>> herms;
        herms.reserve(elems.size());
        for (const auto& el : elems) herms.push_back(from_spin(el, lv));
        return evaluate(lowered.poly, herms, HermContext<S>(lv)).to_text();
    }
    return evaluate(lowered.poly, elems, SpinContext<S>(n)).to_text();
}

int run_eval(const CommonExprArgs& args, const std::vector<std::string>& assigns,
             const std::string& assign_file, const std::string& model,
             const std::string& scalar_mode) {
    const LoweredPolynomial lowered = parse_with_warnings(args.expr, args.strict);
    const auto raw = collect_assignments(assigns, assign_file);
    const bool hermitian = model == "hermitian";
    const std::string text = scalar_mode == "float"
                                 ? eval_to_text<double>(lowered, args.n, raw, hermitian)
                                 : eval_to_text<Rational>(lowered, args.n, raw, hermitian);
    if (args.json) {
        std::cout << json{{"value", text}, {"model", model}, {"n", args.n}}.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
    return kExitOk;
}

int run_witness(const CommonExprArgs& args, const std::string& target_text, std::uint64_t seed,
                double tol, int max_retries, std::uint64_t max_tuples) {
    const LoweredPolynomial lowered = parse_with_warnings(args.expr, args.strict);
    const SpinElement<double> target = parse_spin_float(target_text);
    if (target.n() != args.n) {
        throw InputError("target has dimension n=" + std::to_string(target.n()) +
                         ", expected n=" + std::to_string(args.n));
    }
    ClassifyOptions opts;
    opts.max_tuples = max_tuples;
    const PreimageResult result =
        preimage_search(lowered.poly, args.n, target, seed, tol, max_retries, opts);
    json j;
    j["success"] = result.success;
    j["retries"] = result.retries_used;
    if (result.success) {
        json assignment = json::object();
        for (size_t i = 0; i < lowered.variables.size(); ++i) {
            assignment[lowered.variables[i]] = result.assignment[i].to_text();
        }
        j["assignment"] = assignment;
        j["residual"] = result.residual;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    j["trace"] = result.trace;
    std::cout << j.dump(2) << "\n";
    for (const std::string& line : result.trace) std::cerr << line << "\n";
    return kExitSearch;
}

int run_orbit(const std::string& a_text, const std::string& b_text, int n,
              const std::string& scalar_mode, double tol) {
    json j;
    if (scalar_mode == "float") {
        const auto a = parse_spin_float(a_text);
        const auto b = parse_spin_float(b_text);
        if (n != 0 && (a.n() != n || b.n() != n)) {
            throw InputError("element dimensions do not match --n");
        }
        j["equivalent"] = orbit_equivalent(a, b, tol);
        j["scalar_parts_equal"] = std::abs(a.a - b.a) <= tol;
        j["pure_norms_sq"] = {pure_norm_sq(a), pure_norm_sq(b)};
    } else {
        const auto a = parse_spin_exact(a_text);
        const auto b = parse_spin_exact(b_text);
        if (n != 0 && (a.n() != n || b.n() != n)) {
            throw InputError("element dimensions do not match --n");
        }
        j["equivalent"] = orbit_equivalent(a, b);
        j["scalar_parts_equal"] = a.a == b.a;
        j["pure_norms_sq"] = {pure_norm_sq(a).to_string(), pure_norm_sq(b).to_string()};
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct ModelCheckResult {
    AlgebraLevel level;
    std::uint64_t orthonormal_pairs = 0;
    std::uint64_t random_pairs = 0;
    bool ok = true;
    std::string detail;
};

ModelCheckResult check_model(AlgebraLevel lv, std::uint64_t seed, std::uint64_t pairs) {
    ModelCheckResult r;
    r.level = lv;
    const int n = 2 + dimension(lv);
    for (int i = 1; i < n && r.ok; ++i) {
        for (int j = 1; j < n && r.ok; ++j) {
            const auto prod =
                jordan_mul(basis_element<Rational>(lv, i), basis_element<Rational>(lv, j));
            const auto expected = i == j ? Herm2<Rational>::identity(lv)
                                         : Herm2<Rational>::zero(lv);
            ++r.orthonormal_pairs;
            if (prod != expected) {
                r.ok = false;
                r.detail = "e" + std::to_string(i) + " o e" + std::to_string(j) +
                           " = " + prod.to_text();
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < pairs && r.ok; ++t) {
        const auto x = random_herm_rational(rng, lv);
        const auto y = random_herm_rational(rng, lv);
        ++r.random_pairs;
        if (to_spin(jordan_mul(x, y)) != jordan_mul(to_spin(x), to_spin(y))) {
            r.ok = false;
            r.detail = "isomorphism breaks at x=" + x.to_text() + ", y=" + y.to_text();
            break;
        }
        if (jordan_mul(x, y) != jordan_mul(y, x)) {
            r.ok = false;
            r.detail = "commutativity breaks at x=" + x.to_text() + ", y=" + y.to_text();
            break;
        }
        const auto xx = jordan_mul(x, x);
        if (jordan_mul(jordan_mul(x, y), xx) != jordan_mul(x, jordan_mul(y, xx))) {
            r.ok = false;
            r.detail = "Jordan identity breaks at x=" + x.to_text() + ", y=" + y.to_text();
            break;
        }
        if (from_spin(to_spin(x), lv) != x) {
            r.ok = false;
            r.detail = "round trip breaks at x=" + x.to_text();
            break;
        }
    }
    return r;
}

json model_check_json(const ModelCheckResult& r) {
    json basis = json::array();
    const int n = 2 + dimension(r.level);
    for (int i = 0; i < n; ++i) {
        basis.push_back(basis_element<Rational>(r.level, i).to_text());
    }
    json j;
    j["level"] = std::string(level_name(r.level));
    j["n"] = n;
    j["orthonormal_pairs"] = r.orthonormal_pairs;
    j["random_pairs"] = r.random_pairs;
    j["basis"] = basis;
    j["ok"] = r.ok;
    if (!r.ok) j["detail"] = r.detail;
    return j;
}

int run_models_verify(const std::string& level_arg, std::uint64_t seed, std::uint64_t pairs) {
    std::vector<AlgebraLevel> levels;
    if (level_arg == "all") {
        levels.assign(kAllLevels.begin(), kAllLevels.end());
    } else {
        levels.push_back(level_from_name(level_arg));
    }
    json out;
    out["models"] = json::array();
    bool ok = true;
    for (AlgebraLevel lv : levels) {
        const ModelCheckResult r = check_model(lv, seed, pairs);
        out["models"].push_back(model_check_json(r));
        if (!r.ok) {
            ok = false;
            std::cerr << "model " << level_name(lv) << ": " << r.detail << "\n";
        }
    }
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? kExitOk : kExitVerification;
}

int run_monomials(int m, bool count_only, bool as_json) {
    const auto monos = enumerate_monomials(m);
    if (as_json) {
        json j;
        j["m"] = m;
        j["count"] = monos.size();
        if (!count_only) {
            json list = json::array();
            for (const Monomial& mono : monos) list.push_back(mono.text());
            j["monomials"] = list;
        }
        std::cout << j.dump(2) << "\n";
    } else if (count_only) {
        std::cout << monos.size() << "\n";
    } else {
        for (const Monomial& mono : monos) std::cout << mono.text() << "\n";
    }
    return kExitOk;
}

int run_selftest(std::uint64_t seed, bool as_json) {
    struct Item {
        std::string name;
        bool ok;
    };
    std::vector<Item> items;
    auto check = [&](const std::string& name, bool ok) {
        items.push_back({name, ok});
        if (!as_json) std::cout << (ok ? "ok:   " : "FAIL: ") << name << "\n";
    };

    for (AlgebraLevel lv : kAllLevels) {
        const ModelCheckResult r = check_model(lv, seed, 200);
        check("models-verify " + std::string(level_name(lv)), r.ok);
    }
    for (int n : {3, 4, 6, 10}) {
        check("associator image is the pure subspace at n=" + std::to_string(n),
              classify_image(associator_polynomial(), n).image_class == ImageClass::PureSpace);
    }
    check("associator o associator is central at n=3",
          central_example(3).second.image_class == ImageClass::Scalars);
    check("nested degree-8 polynomial is an identity at n=3",
          pi_example(3).second.image_class == ImageClass::Zero);
    check("nested degree-8 polynomial samples to zero at n=10",
          brute_force_sample(pi_example(3).first, 10, 1000, seed).empirical == ImageClass::Zero);
    check("identity polynomial fills J_3",
          classify_image(Polynomial::variable(1), 3).image_class == ImageClass::Full);
    check("associator source string parses to the golden polynomial",
          parse_polynomial("((x1*x2)*x3) - (x1*(x2*x3))").poly == associator_polynomial());
    {
        bool ok = true;
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 50 && ok; ++t) {
            const int m = 1 + static_cast<int>(rng() % 4);
            const auto max_terms =
                std::min<unsigned long long>(3, multilinear_monomial_count(m));
            const Polynomial p =
                random_polynomial(m, 1 + static_cast<int>(rng() % max_terms), 7, rng());
            ok = parse_polynomial(p.render()).poly == p;
        }
        check("parser round trip on 50 random polynomials", ok);
    }
    {
        bool ok = true;
        std::mt19937_64 rng(seed + 1);
        std::uniform_real_distribution<double> coord(-4.0, 4.0);
        const Polynomial prod = Polynomial::variable(1) * Polynomial::variable(2);
        for (int t = 0; t < 5 && ok; ++t) {
            SpinElement<double> target = SpinElement<double>::zero(3);
            while (target.is_zero(1e-6)) {
                target.a = coord(rng);
                for (auto& c : target.v) c = coord(rng);
            }
            const auto res = preimage_search(prod, 3, target, rng());
            ok = res.success && res.residual <= 1e-9;
        }
        check("preimage search hits 5 random targets for x1*x2", ok);
    }

    const auto failed = std::count_if(items.begin(), items.end(),
                                      [](const Item& i) { return !i.ok; });
    if (as_json) {
        json j;
        j["checks"] = json::array();
        for (const Item& i : items) j["checks"].push_back({{"name", i.name}, {"ok", i.ok}});
        j["pass"] = failed == 0;
        std::cout << j.dump(2) << "\n";
    } else if (failed == 0) {
        std::cout << "SELFTEST PASS (" << items.size() << " checks)\n";
    } else {
        std::cout << "SELFTEST FAIL (" << failed << " of " << items.size() << " checks)\n";
    }
    return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluation and image classification of commutative non-associative "
                 "multilinear polynomials on spin-factor Jordan algebras"};
    app.require_subcommand(1);

    CommonExprArgs classify_args;
    std::uint64_t classify_max_tuples = 10'000'000;
    auto* classify = app.add_subcommand(
        "classify", "decide whether the image is {0}, the scalars, the pure space, or J_n");
    classify->add_option("expr", classify_args.expr, "polynomial expression")->required();
    classify->add_option("--n", classify_args.n, "spin factor dimension")->required();
    classify->add_option("--max-tuples", classify_max_tuples, "basis tuple cap");
    classify->add_flag("--strict", classify_args.strict, "reject ambiguous product chains");
    classify->add_flag("--json", classify_args.json, "output is already a JSON document");

    CommonExprArgs eval_args;
    std::vector<std::string> eval_assigns;
    std::string eval_assign_file;
    std::string eval_model = "spin";
    std::string eval_scalar_mode = "exact";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate at an assignment");
    eval_cmd->add_option("expr", eval_args.expr, "polynomial expression")->required();
    eval_cmd->add_option("--n", eval_args.n, "spin factor dimension")->required();
    eval_cmd->add_option("--assign", eval_assigns,
                         "assignment entry, e.g. \"x1=0 + [1, 0]\" (repeatable)");
    eval_cmd->add_option("--assign-file", eval_assign_file,
                         "file of name = element lines, # comments");
    eval_cmd->add_option("--model", eval_model, "spin or hermitian")
        ->check(CLI::IsMember({"spin", "hermitian"}));
    eval_cmd->add_option("--scalar-mode", eval_scalar_mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    eval_cmd->add_flag("--strict", eval_args.strict, "reject ambiguous product chains");
    eval_cmd->add_flag("--json", eval_args.json, "emit a JSON document");

    CommonExprArgs witness_args;
    std::string witness_target;
    std::uint64_t witness_seed = 0;
    double witness_tol = ScalarMode::kDefaultTolerance;
    int witness_retries = 64;
    std::uint64_t witness_max_tuples = 10'000'000;
    auto* witness = app.add_subcommand("witness", "construct a preimage of a target element");
    witness->add_option("expr", witness_args.expr, "polynomial expression")->required();
    witness->add_option("--n", witness_args.n, "spin factor dimension")->required();
    witness->add_option("--target", witness_target, "target element \"a + [c1, ...]\"")
        ->required();
    witness->add_option("--seed", witness_seed, "random seed");
    witness->add_option("--tol", witness_tol, "residual tolerance");
    witness->add_option("--max-retries", witness_retries, "generic resampling budget");
    witness->add_option("--max-tuples", witness_max_tuples, "basis tuple cap");
    witness->add_flag("--strict", witness_args.strict, "reject ambiguous product chains");
    witness->add_flag("--json", witness_args.json, "output is already a JSON document");

    std::string orbit_a, orbit_b;
    int orbit_n = 0;
    std::string orbit_mode = "exact";
    double orbit_tol = ScalarMode::kDefaultTolerance;
    bool orbit_json = false;
    auto* orbit = app.add_subcommand("orbit", "decide orbit equivalence of two elements");
    orbit->add_option("a", orbit_a, "first element")->required();
    orbit->add_option("b", orbit_b, "second element")->required();
    orbit->add_option("--n", orbit_n, "spin factor dimension (validated when given)");
    orbit->add_option("--scalar-mode", orbit_mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    orbit->add_option("--tol", orbit_tol, "tolerance in float mode");
    orbit->add_flag("--json", orbit_json, "output is already a JSON document");

    std::string mv_level = "all";
    std::uint64_t mv_seed = 0;
    std::uint64_t mv_pairs = 200;
    bool mv_json = false;
    auto* mv = app.add_subcommand("models-verify",
                                  "orthonormality, isomorphism and Jordan-identity suite");
    mv->add_option("--level", mv_level, "real, complex, quaternion, octonion or all")
        ->check(CLI::IsMember({"real", "complex", "quaternion", "octonion", "all"}));
    mv->add_option("--seed", mv_seed, "random seed");
    mv->add_option("--pairs", mv_pairs, "random pairs per model");
    mv->add_flag("--json", mv_json, "output is already a JSON document");

    int mono_m = 1;
    bool mono_count_only = false;
    bool mono_json = false;
    auto* mono = app.add_subcommand("monomials", "enumerate canonical multilinear monomials");
    mono->add_option("m", mono_m, "number of variables")->required();
    mono->add_flag("--count-only", mono_count_only, "print only the count");
    mono->add_flag("--json", mono_json, "emit a JSON document");

    std::uint64_t selftest_seed = 2024;
    bool selftest_json = false;
    auto* selftest = app.add_subcommand("selftest", "golden examples plus models-verify");
    selftest->add_option("--seed", selftest_seed, "random seed");
    selftest->add_flag("--json", selftest_json, "emit a JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (*classify) return run_classify(classify_args, classify_max_tuples);
        if (*eval_cmd) {
            return run_eval(eval_args, eval_assigns, eval_assign_file, eval_model,
                            eval_scalar_mode);
        }
        if (*witness) {
            return run_witness(witness_args, witness_target, witness_seed, witness_tol,
                               witness_retries, witness_max_tuples);
        }
        if (*orbit) return run_orbit(orbit_a, orbit_b, orbit_n, orbit_mode, orbit_tol);
        if (*mv) return run_models_verify(mv_level, mv_seed, mv_pairs);
        if (*mono) return run_monomials(mono_m, mono_count_only, mono_json);
        if (*selftest) return run_selftest(selftest_seed, selftest_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const OverflowError& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return kExitBound;
    } catch (const InvariantFault& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitPrecondition;
}
