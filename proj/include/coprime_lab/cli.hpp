#pragma once

// Command-line front end. Subcommands mirror the library modules:
//
//   exact  pair|odd-pair|gcd-eq|ktuple|triple3|squarefree|kfree|visible|fgcd|prime-density
//   const  zeta|invzeta|euler-product|catalan|gaussian|q3|delta|odd|pair
//   mc     pair|triple3|gaussian|det
//   report convergence --experiment TAG --ns N1,N2,...
//
// Exit codes: 0 success, 1 internal failure, 2 invalid arguments,
// 3 resource limit / overflow / precision.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analytic_constants.hpp"
#include "errors.hpp"
#include "exact_densities.hpp"
#include "monte_carlo.hpp"
#include "report.hpp"
#include "sieve.hpp"
#include "totient.hpp"

namespace coprime_lab::cli {

inline constexpr std::uint64_t default_sieve_limit = 10'000'000;
inline constexpr const char* sieve_limit_env = "COPRIME_LAB_SIEVE_LIMIT";

/// Sieve cap from COPRIME_LAB_SIEVE_LIMIT, or the default.
inline std::uint64_t sieve_cap() {
    const char* env = std::getenv(sieve_limit_env);
    if (env == nullptr || *env == '\0') return default_sieve_limit;
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(env, &used);
        if (used != std::string_view(env).size() || v == 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw invalid_input_error(std::string(sieve_limit_env) + " must be a positive integer");
    }
}

struct exact_args {
    std::string kind;
    std::optional<std::uint64_t> n, radius, x;
    std::uint64_t t = 1;
    unsigned k = 3;
    unsigned j = 2;
    std::string f = "alpha_n";
    std::string alpha = "sqrt2";
    std::string c = "1.5";
};

struct const_args {
    std::string name;
    unsigned k = 2;
    std::string dim = "inf";
    std::optional<double> eps;
};

struct mc_args {
    std::string kind;
    std::uint64_t range_max = 1'000'000;
    std::int64_t box = 1000;
    unsigned dim = 3;
    std::uint64_t entry_max = 1000;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    bool symmetric = false;
};

struct convergence_args {
    std::string tag;
    std::string ns;
    std::optional<std::uint64_t> seed;
};

namespace detail {

// Builds the sieve an exact experiment needs, refusing beyond the cap.
inline std::shared_ptr<const sieve_tables> sieve_for(std::uint64_t needed, bool may_exceed) {
    const std::uint64_t cap = sieve_cap();
    if (needed > cap && !may_exceed)
        throw resource_limit_error("needs a sieve up to " + std::to_string(needed) + " but " + sieve_limit_env +
                                   " caps it at " + std::to_string(cap));
    return std::make_shared<const sieve_tables>(build_sieve(std::max<std::uint64_t>(1, std::min(needed, cap))));
}

inline std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag, const std::string& kind) {
    if (!v) throw invalid_input_error("exact " + kind + " requires " + flag);
    return *v;
}

inline function_spec make_function(const exact_args& a) {
    if (a.f == "alpha_n") return function_spec::alpha_times_n(a.alpha);
    if (a.f == "pow_c") return function_spec::n_pow_c(a.c);
    throw invalid_input_error("--f must be alpha_n or pow_c");
}

inline density_result run_exact(const exact_args& a, std::uint64_t size) {
    const std::string& kind = a.kind;
    if (kind == "pair" || kind == "gcd-eq") {
        if (size < 2) throw invalid_input_error("exact " + kind + ": n must be >= 2");
        const std::uint64_t m = kind == "pair" ? size : std::max<std::uint64_t>(1, size / std::max<std::uint64_t>(a.t, 1));
        totient_summator phi(sieve_for(m, true));
        return kind == "pair" ? coprime_pair_count(phi, size) : gcd_equal_count(phi, size, a.t);
    }
    if (kind == "ktuple") return ktuple_coprime_count(*sieve_for(size, false), size, a.k);
    if (kind == "triple3") return pairwise_coprime_triple_count(size);
    if (kind == "odd-pair") return odd_coprime_pair_count(*sieve_for(size, false), size);
    if (kind == "squarefree" || kind == "kfree") {
        const unsigned j = kind == "squarefree" ? 2 : a.j;
        if (j < 2 || j > 16) throw invalid_input_error("--j must be in [2, 16]");
        if (size < 1) throw invalid_input_error("exact " + kind + ": n must be >= 1");
        const std::uint64_t root = coprime_lab::detail::integer_root(size, j);
        return kfree_count(*sieve_for(root, false), size, j);
    }
    if (kind == "visible") return visible_points_in_disk(size);
    if (kind == "fgcd") return f_gcd_density(size, make_function(a));
    if (kind == "prime-density") {
        if (size < 1) throw invalid_input_error("exact prime-density: x must be >= 1");
        return prime_density(*sieve_for(size, false), size);
    }
    throw invalid_input_error("unknown exact experiment '" + kind + "'");
}

inline std::uint64_t exact_size(const exact_args& a) {
    if (a.kind == "visible") return require(a.radius, "--radius", a.kind);
    if (a.kind == "prime-density") return require(a.x, "--x", a.kind);
    return require(a.n, "--n", a.kind);
}

inline experiment_record exact_record(const exact_args& a, std::uint64_t size) {
    experiment_record r = to_record(run_exact(a, size));
    if (a.kind == "kfree") r.experiment = "kfree";
    if (a.kind == "fgcd") {
        r.params.emplace_back("f", a.f);
        r.params.emplace_back(a.f == "alpha_n" ? "alpha" : "c", a.f == "alpha_n" ? a.alpha : a.c);
    }
    return r;
}

inline experiment_record const_record(const const_args& a) {
    using extra_t = std::vector<std::pair<std::string, param_value>>;
    const std::string& name = a.name;
    const bool product = name == "q3" || name == "delta";
    const double eps = a.eps.value_or(product ? min_product_eps : default_reference_eps);
    extra_t extra{{"eps", eps}};
    if (name == "zeta") return to_record(name, zeta(a.k, eps), extra);
    if (name == "invzeta") return to_record(name, inverse_zeta(a.k, eps), extra);
    if (name == "euler-product") return to_record(name, euler_product_inv_zeta2(eps), extra);
    if (name == "catalan") return to_record(name, catalan(eps), extra);
    if (name == "gaussian") return to_record(name, gaussian_coprime_constant(eps), extra);
    if (name == "q3") return to_record(name, pairwise_triple_constant(eps), extra);
    if (name == "odd") return to_record(name, eight_over_pi_squared(), extra);
    if (name == "pair") return to_record(name, six_over_pi_squared(), extra);
    if (name == "delta") {
        std::optional<unsigned> dim;
        if (a.dim != "inf") {
            try {
                std::size_t used = 0;
                const unsigned long d = std::stoul(a.dim, &used);
                if (used != a.dim.size()) throw std::invalid_argument(a.dim);
                dim = static_cast<unsigned>(d);
            } catch (const std::exception&) {
                throw invalid_input_error("--dim must be a positive integer or 'inf'");
            }
        }
        return to_record(name, delta_determinant_constant(dim, eps), extra);
    }
    throw invalid_input_error("unknown constant '" + name + "'");
}

inline experiment_record mc_record(const mc_args& a, unsigned threads) {
    const mc_options opt{a.trials, a.seed, threads};
    if (a.kind == "pair")
        return to_record(estimate_coprime_pair(a.range_max, opt), reference_constant(experiment::pair).value);
    if (a.kind == "triple3")
        return to_record(estimate_pairwise_triple(a.range_max, opt), reference_constant(experiment::triple3).value);
    if (a.kind == "gaussian")
        return to_record(estimate_gaussian_coprime(a.box, opt), reference_constant(experiment::gaussian).value);
    if (a.kind == "det")
        return to_record(estimate_det_coprime(a.dim, a.entry_max, opt, a.symmetric),
                         reference_constant(experiment::det, a.dim).value);
    throw invalid_input_error("unknown Monte Carlo experiment '" + a.kind + "'");
}

inline std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            // Accept 1e5-style literals for readability.
            const double d = std::stod(item, &used);
            if (used != item.size() || d < 0 || d != static_cast<double>(static_cast<std::uint64_t>(d)))
                throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint64_t>(d));
        } catch (const std::exception&) {
            throw invalid_input_error("--ns entry '" + item + "' is not a non-negative integer");
        }
    }
    if (out.empty()) throw invalid_input_error("--ns must list at least one value");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw invalid_input_error("--ns values must be strictly ascending");
    return out;
}

template <typename Fn>
experiment_record timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    experiment_record r = fn();
    r.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

inline void run_convergence(const convergence_args& c, const exact_args& ex, const mc_args& mc, unsigned threads,
                            record_writer& writer) {
    const auto ns = parse_list(c.ns);
    std::string tag = c.tag;
    const bool monte_carlo = tag.rfind("mc-", 0) == 0;
    if (monte_carlo) tag = tag.substr(3);

    std::optional<experiment> kind = parse_experiment(tag);
    if (!kind) throw invalid_input_error("unknown experiment tag '" + c.tag + "'");
    unsigned order = 0;
    if (*kind == experiment::ktuple) order = ex.k;
    if (*kind == experiment::kfree) order = ex.j;
    if (*kind == experiment::gcd_eq) order = static_cast<unsigned>(ex.t);
    if (*kind == experiment::det) order = mc.dim;

    for (const std::uint64_t n : ns) {
        writer.write(timed([&] {
            if (monte_carlo) {
                mc_args a = mc;
                a.kind = tag;
                if (c.seed) a.seed = *c.seed;
                if (tag == "gaussian") a.box = static_cast<std::int64_t>(n);
                else if (tag == "det") a.entry_max = n;
                else a.range_max = n;
                return mc_record(a, threads);
            }
            exact_args a = ex;
            a.kind = tag;
            return exact_record(a, n);
        }));
    }

    writer.write(timed([&] {
        const constant_value limit = reference_constant(*kind, order);
        experiment_record r = to_record(c.tag + "-limit", limit);
        r.reference = limit.value;
        r.abs_gap = 0.0;
        return r;
    }));
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Coprimality densities by exact counting, analytic constants and Monte Carlo", "coprime_lab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    unsigned threads = default_thread_count();
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "Worker threads for Monte Carlo (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--out", out_path, "Write records to PATH instead of standard output");

    exact_args ex;
    auto* exact = app.add_subcommand("exact", "Exact finite-N counts");
    exact->add_option("kind", ex.kind)->required()->check(CLI::IsMember(
        {"pair", "odd-pair", "gcd-eq", "ktuple", "triple3", "squarefree", "kfree", "visible", "fgcd", "prime-density"}));
    exact->add_option("--n", ex.n);
    exact->add_option("--t", ex.t)->check(CLI::PositiveNumber);
    exact->add_option("--k", ex.k);
    exact->add_option("--j", ex.j);
    exact->add_option("--radius", ex.radius);
    exact->add_option("--f", ex.f)->check(CLI::IsMember({"alpha_n", "pow_c"}));
    exact->add_option("--alpha", ex.alpha, "sqrt2 or a decimal literal");
    exact->add_option("--c", ex.c);
    exact->add_option("--x", ex.x);

    const_args cst;
    auto* constant = app.add_subcommand("const", "Limiting constants with certified error bounds");
    constant->add_option("name", cst.name)->required()->check(CLI::IsMember(
        {"zeta", "invzeta", "euler-product", "catalan", "gaussian", "q3", "delta", "odd", "pair"}));
    constant->add_option("--k", cst.k);
    constant->add_option("--dim", cst.dim, "Matrix dimension or 'inf'");
    constant->add_option("--eps", cst.eps);

    mc_args mc;
    auto* montecarlo = app.add_subcommand("mc", "Seeded Monte Carlo estimates");
    montecarlo->add_option("kind", mc.kind)->required()->check(CLI::IsMember({"pair", "triple3", "gaussian", "det"}));
    montecarlo->add_option("--max", mc.range_max);
    montecarlo->add_option("--box", mc.box);
    montecarlo->add_option("--dim", mc.dim);
    montecarlo->add_option("--entry-max", mc.entry_max);
    montecarlo->add_option("--trials", mc.trials);
    montecarlo->add_option("--seed", mc.seed);
    montecarlo->add_flag("--symmetric-entries", mc.symmetric);

    convergence_args conv;
    auto* report = app.add_subcommand("report", "Convergence tables");
    report->require_subcommand(1);
    auto* convergence = report->add_subcommand("convergence", "One record per N plus the limiting constant");
    convergence->add_option("--experiment", conv.tag, "Exact tag, or mc-<kind> for Monte Carlo")->required();
    convergence->add_option("--ns", conv.ns, "Comma-separated ascending sizes")->required();
    convergence->add_option("--seed", conv.seed);
    convergence->add_option("--k", ex.k);
    convergence->add_option("--j", ex.j);
    convergence->add_option("--t", ex.t);
    convergence->add_option("--f", ex.f);
    convergence->add_option("--alpha", ex.alpha);
    convergence->add_option("--c", ex.c);
    convergence->add_option("--trials", mc.trials);
    convergence->add_option("--dim", mc.dim);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;
    record_writer writer(sink, format == "csv" ? output_format::csv : output_format::json);

    try {
        if (*exact) {
            writer.write(detail::timed([&] { return detail::exact_record(ex, detail::exact_size(ex)); }));
        } else if (*constant) {
            writer.write(detail::timed([&] { return detail::const_record(cst); }));
        } else if (*montecarlo) {
            writer.write(detail::timed([&] { return detail::mc_record(mc, threads); }));
        } else if (*convergence) {
            detail::run_convergence(conv, ex, mc, threads, writer);
        }
    } catch (const invalid_input_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const overflow_error& e) {
        err << "overflow: " << e.what() << '\n';
        return 3;
    } catch (const out_of_range_error& e) {
        err << "out of range: " << e.what() << '\n';
        return 3;
    } catch (const precision_error& e) {
        err << "precision: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace coprime_lab::cli
