// ybt: batch front end for the Yang-Baxter / twist toolkit.
//
// Reports go to stdout as JSON, a short human summary to stderr.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include "ybt/catalog.hpp"
#include "ybt/factorized.hpp"
#include "ybt/fusion.hpp"
#include "ybt/io.hpp"
#include "ybt/subspace.hpp"
#include "ybt/tensor.hpp"
#include "ybt/twist.hpp"
#include "ybt/ybe.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using ybt::io::Json;
using ybt::Operator;

struct Options {
    double tol = ybt::kDefaultTolerance;
    int max_legs = ybt::kDefaultMaxLegs;
    bool json = false;  // JSON always goes to stdout; accepted for symmetry with --quiet
    bool quiet = false;
    bool timing = false;
};

class UsageError : public ybt::Error {
public:
    using ybt::Error::Error;
};

// ---------------------------------------------------------------------------
// Input references: a file path, or catalog:<name>[?k=v&k=v][#r|#f|#g].

struct CatalogRef {
    std::string name;
    ybt::catalog::Params params;
    std::string part;
};

bool is_catalog_ref(const std::string& ref) { return ref.rfind("catalog:", 0) == 0; }

CatalogRef parse_catalog_ref(const std::string& ref) {
    std::string rest = ref.substr(8);
    CatalogRef out;
    if (auto hash = rest.find('#'); hash != std::string::npos) {
        out.part = rest.substr(hash + 1);
        rest.resize(hash);
        if (out.part != "r" && out.part != "f" && out.part != "g")
            throw UsageError(ref + ": part must be #r, #f or #g");
    }
    std::string query;
    if (auto q = rest.find('?'); q != std::string::npos) {
        query = rest.substr(q + 1);
        rest.resize(q);
    }
    if (rest.empty()) throw UsageError(ref + ": missing catalog entry name");
    out.name = rest;
    std::size_t start = 0;
    while (start < query.size()) {
        std::size_t end = query.find('&', start);
        if (end == std::string::npos) end = query.size();
        const std::string kv = query.substr(start, end - start);
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError(ref + ": expected key=value, got \"" + kv + "\"");
        try {
            out.params[kv.substr(0, eq)] = ybt::parse_rational(kv.substr(eq + 1));
        } catch (const ybt::ParseError& e) {
            throw UsageError(ref + ": " + e.what());
        }
        start = end + 1;
    }
    return out;
}

ybt::catalog::Entry load_entry(const CatalogRef& ref) {
    return ybt::catalog::get(ref.name, ref.params);
}

Operator entry_part(const ybt::catalog::Entry& entry, const std::string& part,
                    const std::string& ref) {
    if (part == "r") return entry.r;
    if (!entry.twist) throw UsageError(ref + ": catalog entry has no twist");
    return part == "f" ? entry.twist->f() : entry.twist->g();
}

// `role` is the default part for catalog references ("r" or "f").
Operator load_operator(const std::string& ref, const std::string& role) {
    if (is_catalog_ref(ref)) {
        const CatalogRef c = parse_catalog_ref(ref);
        return entry_part(load_entry(c), c.part.empty() ? role : c.part, ref);
    }
    const Json j = ybt::io::read_json_file(ref);
    if (j.is_object() && j.contains("format")) {
        const auto entry = ybt::catalog::entry_from_json(j);
        return entry_part(entry, role, ref);
    }
    return ybt::io::operator_from_json(j);
}

ybt::TwistPair load_pair(const std::string& ref) {
    if (is_catalog_ref(ref)) {
        const CatalogRef c = parse_catalog_ref(ref);
        if (!c.part.empty()) throw UsageError(ref + ": a pair reference takes no #part");
        const auto entry = load_entry(c);
        if (!entry.twist) throw UsageError(ref + ": catalog entry has no twist");
        return *entry.twist;
    }
    if (auto comma = ref.find(','); comma != std::string::npos)
        return ybt::TwistPair(load_operator(ref.substr(0, comma), "f"),
                              load_operator(ref.substr(comma + 1), "g"));
    const Json j = ybt::io::read_json_file(ref);
    if (j.is_object() && j.contains("format")) {
        const auto entry = ybt::catalog::entry_from_json(j);
        if (!entry.twist) throw UsageError(ref + ": catalog entry has no twist");
        return *entry.twist;
    }
    return ybt::io::pair_from_json(j);
}

// Omega^n for 2 <= n <= max_n from a factorized catalog twist.
ybt::OmegaFamily omegas_from_entry(const ybt::catalog::Entry& entry, int max_n,
                                   const std::string& ref) {
    if (entry.regime == ybt::catalog::Regime::none)
        throw UsageError(ref + ": entry has no factorized twist to build components from");
    const Operator& f = entry.twist->f();
    ybt::OmegaFamily omegas(f.site_dim(), f.backend());
    for (int n = 2; n <= max_n; ++n)
        omegas.set(n, entry.regime == ybt::catalog::Regime::split_A ? ybt::omega_split_A(f, n)
                                                                    : ybt::omega_split_B(f, n));
    return omegas;
}

ybt::ComponentMap load_components(const std::string& ref, int max_total) {
    if (is_catalog_ref(ref)) {
        const CatalogRef c = parse_catalog_ref(ref);
        const auto entry = load_entry(c);
        return ybt::components_from_omegas(omegas_from_entry(entry, max_total, ref), max_total);
    }
    return ybt::io::components_from_json(ybt::io::read_json_file(ref));
}

// ---------------------------------------------------------------------------
// Report envelope.

struct Report {
    std::string command;
    Json inputs = Json::object();
    ybt::CheckReport checks;
    std::optional<bool> verdict_override;
    Json result;
    std::vector<std::string> warnings;

    explicit Report(std::string cmd, double tol) : command(std::move(cmd)), checks(tol) {}

    bool verdict() const { return verdict_override.value_or(checks.verdict()); }
};

Json residuals_json(const ybt::CheckReport& checks) {
    Json out = Json::object();
    for (const auto& e : checks.entries()) out[e.name] = e.value.to_string();
    return out;
}

int emit(Report& report, const Options& opt, std::chrono::steady_clock::time_point start) {
    for (const auto& w : report.checks.warnings()) report.warnings.push_back(w);
    const bool verdict = report.verdict();
    Json j;
    j["command"] = report.command;
    j["inputs"] = report.inputs;
    j["residuals"] = residuals_json(report.checks);
    j["verdict"] = verdict;
    if (opt.timing)
        j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    else
        j["elapsed"] = nullptr;
    if (!report.result.is_null()) j["result"] = report.result;
    if (!report.warnings.empty()) j["warnings"] = report.warnings;
    std::cout << ybt::io::dump(j);

    if (!opt.quiet) {
        std::cerr << report.command << ": " << (verdict ? "PASS" : "FAIL") << '\n';
        for (const auto& e : report.checks.entries()) {
            std::cerr << "  " << e.name << " = " << e.value.to_string();
            if (!e.gating) std::cerr << " (informational)";
            std::cerr << '\n';
        }
        for (const auto& w : report.warnings) std::cerr << "  warning: " << w << '\n';
    }
    return verdict ? 0 : 1;
}

void write_output(const std::string& path, const Json& j) {
    if (!path.empty()) ybt::io::write_json_file(path, j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks and constructions for Yang-Baxter matrices and their twists"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--tol", opt.tol, "Tolerance for complex64 operators")->check(CLI::PositiveNumber);
    app.add_option("--max-legs", opt.max_legs, "Largest fused operator, in legs")
        ->check(CLI::Range(1, 12));
    app.add_flag("--json", opt.json, "JSON report on stdout (always on)");
    app.add_flag("-q,--quiet", opt.quiet, "No human summary on stderr");
    app.add_flag("--timing", opt.timing, "Record wall time in the report (breaks byte-identity)");

    std::string r_ref, f_ref, s_ref, pair_ref, components_ref, out_path, variant, with_r;
    int m = 0, n = 0, k = 0, budget = 50;
    std::uint64_t seed = 0;
    std::vector<std::string> catalog_args;

    auto* verify = app.add_subcommand("verify-ybe", "YBE residual of R");
    verify->add_option("R", r_ref)->required();

    auto* twist = app.add_subcommand("twist", "Twisted matrix F21^{-1} R F");
    twist->add_option("R", r_ref)->required();
    twist->add_option("F", f_ref)->required();
    twist->add_option("-o,--output", out_path, "Write the twisted matrix here");

    auto* check_pair = app.add_subcommand("check-pair", "Twisting-pair conditions");
    check_pair->add_option("R", r_ref)->required();
    check_pair->add_option("--pair", pair_ref, "F,G file paths, a pair file, or catalog:<name>")
        ->required();

    auto* check_split = app.add_subcommand("check-split", "Factorization conditions of F");
    check_split->add_option("R", r_ref)->required();
    check_split->add_option("F", f_ref)->required();
    check_split->add_option("--variant", variant)->required()->check(CLI::IsMember({"A", "B"}));

    auto* fuse = app.add_subcommand("fuse", "Fused matrix R^{m,n}");
    fuse->add_option("R", r_ref)->required();
    fuse->add_option("-m", m)->required()->check(CLI::NonNegativeNumber);
    fuse->add_option("-n", n)->required()->check(CLI::NonNegativeNumber);
    fuse->add_option("-o,--output", out_path);

    auto* rsym = app.add_subcommand("rsym", "Basis of the R-symmetric n-leg operators");
    rsym->add_option("R", r_ref)->required();
    rsym->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    rsym->add_option("-o,--output", out_path);

    auto* intertwine = app.add_subcommand("intertwine", "Braid intertwiners between R and S");
    intertwine->add_option("R", r_ref)->required();
    intertwine->add_option("S", s_ref)->required();
    intertwine->add_option("-n", n)->required()->check(CLI::Range(2, 64));
    intertwine->add_option("--budget", budget, "Certificate attempts")->check(CLI::PositiveNumber);
    intertwine->add_option("--seed", seed);
    intertwine->add_option("-o,--output", out_path);

    auto* omega = app.add_subcommand("omega", "Product formula for Omega^n");
    omega->add_option("F", f_ref)->required();
    omega->add_option("-n", n)->required()->check(CLI::Range(2, 64));
    omega->add_option("--variant", variant)->required()->check(CLI::IsMember({"A", "B"}));
    omega->add_option("--with-r", with_r, "Check braid intertwining against this R");
    omega->add_option("-o,--output", out_path);

    auto* te1 = app.add_subcommand("te1", "Component twist equation");
    te1->add_option("components", components_ref)->required();
    te1->add_option("-m", m)->required()->check(CLI::NonNegativeNumber);
    te1->add_option("-n", n)->required()->check(CLI::NonNegativeNumber);
    te1->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);

    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples: list | get <name>");
    catalog_cmd->add_option("action", catalog_args)->required()->expected(1, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    const double tol = opt.tol;
    try {
        if (*verify) {
            Report rep("verify-ybe", tol);
            rep.inputs["r"] = r_ref;
            const Operator r = load_operator(r_ref, "r");
            require_legs(r, 2, "verify-ybe");
            rep.checks.add("ybe", ybt::ybe_residual(r));
            return emit(rep, opt, start);
        }
        if (*twist) {
            Report rep("twist", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["f"] = f_ref;
            const Operator r = load_operator(r_ref, "r");
            const Operator f = load_operator(f_ref, "f");
            const Operator rt = ybt::apply_twist(r, f);
            rep.checks.add("ybe_base", ybt::ybe_residual(r), false);
            rep.checks.add("ybe_twisted", ybt::ybe_residual(rt));
            rep.result = ybt::io::to_json(rt);
            write_output(out_path, rep.result);
            return emit(rep, opt, start);
        }
        if (*check_pair) {
            Report rep("check-pair", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["pair"] = pair_ref;
            rep.checks = ybt::check_pair(load_operator(r_ref, "r"), load_pair(pair_ref), tol);
            return emit(rep, opt, start);
        }
        if (*check_split) {
            Report rep("check-split", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["f"] = f_ref;
            rep.inputs["variant"] = variant;
            const Operator r = load_operator(r_ref, "r");
            const Operator f = load_operator(f_ref, "f");
            rep.checks = variant == "A" ? ybt::check_split_A(r, f, tol) : ybt::check_split_B(r, f, tol);
            return emit(rep, opt, start);
        }
        if (*fuse) {
            Report rep("fuse", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["m"] = m;
            rep.inputs["n"] = n;
            rep.inputs["max_legs"] = opt.max_legs;
            const Operator fused = ybt::fuse_r(load_operator(r_ref, "r"), m, n, opt.max_legs);
            rep.result = ybt::io::to_json(fused);
            write_output(out_path, rep.result);
            return emit(rep, opt, start);
        }
        if (*rsym) {
            Report rep("rsym", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["n"] = n;
            const Operator r = load_operator(r_ref, "r");
            const auto basis = ybt::r_symmetric_space(r, n);
            // post-hoc substitution into the defining equations
            rep.checks.add("basis_check",
                           ybt::Magnitude(ybt::Rational(ybt::verify_intertwiners(basis, r, r) ? 0 : 1)));
            rep.result = ybt::io::to_json(basis);
            write_output(out_path, rep.result);
            return emit(rep, opt, start);
        }
        if (*intertwine) {
            Report rep("intertwine", tol);
            rep.inputs["r"] = r_ref;
            rep.inputs["s"] = s_ref;
            rep.inputs["n"] = n;
            rep.inputs["budget"] = budget;
            rep.inputs["seed"] = seed;
            const Operator r = load_operator(r_ref, "r");
            const Operator s = load_operator(s_ref, "r");
            const auto basis = ybt::intertwiner_space(r, s, n);
            rep.checks.add("basis_check",
                           ybt::Magnitude(ybt::Rational(ybt::verify_intertwiners(basis, r, s) ? 0 : 1)));
            const auto search = ybt::invertible_certificate(basis, budget, seed);
            Json result = ybt::io::to_json(basis);
            result["attempts"] = search.attempts;
            if (search.certificate) {
                result["certificate"] = ybt::io::certificate_to_json(*search.certificate);
            } else {
                result["certificate"] = nullptr;
                rep.verdict_override = false;
                if (basis.dimension() == 0)
                    rep.warnings.push_back("intertwiner space is zero; no invertible element exists");
                else
                    rep.warnings.push_back("no invertible certificate found in " +
                                           std::to_string(search.attempts) +
                                           " attempts (not a proof of non-existence)");
            }
            if (!rep.checks.verdict()) rep.verdict_override = false;
            rep.result = std::move(result);
            write_output(out_path, rep.result);
            return emit(rep, opt, start);
        }
        if (*omega) {
            Report rep("omega", tol);
            rep.inputs["f"] = f_ref;
            rep.inputs["n"] = n;
            rep.inputs["variant"] = variant;
            const Operator f = load_operator(f_ref, "f");
            if (n > opt.max_legs)
                throw ybt::CapExceeded("omega: n = " + std::to_string(n) + " exceeds --max-legs");
            const Operator w = variant == "A" ? ybt::omega_split_A(f, n) : ybt::omega_split_B(f, n);
            std::optional<Operator> r;
            if (!with_r.empty()) {
                rep.inputs["with_r"] = with_r;
                r = load_operator(with_r, "r");
            } else if (is_catalog_ref(f_ref)) {
                r = load_entry(parse_catalog_ref(f_ref)).r;
            }
            rep.checks.add("singular", ybt::Magnitude(ybt::Rational(ybt::is_invertible(w) ? 0 : 1)));
            if (r) {
                const auto braid = ybt::braid_intertwine_residual(*r, ybt::apply_twist(*r, f), w, tol);
                for (const auto& e : braid.entries()) rep.checks.add(e.name, e.value);
            }
            rep.result = ybt::io::to_json(w);
            write_output(out_path, rep.result);
            return emit(rep, opt, start);
        }
        if (*te1) {
            Report rep("te1", tol);
            rep.inputs["components"] = components_ref;
            rep.inputs["m"] = m;
            rep.inputs["n"] = n;
            rep.inputs["k"] = k;
            if (m + n + k > opt.max_legs)
                throw ybt::CapExceeded("te1: m+n+k exceeds --max-legs");
            const auto comps = load_components(components_ref, m + n + k);
            rep.checks.add("te1", ybt::te1_residual(comps, m, n, k));
            return emit(rep, opt, start);
        }
        if (*catalog_cmd) {
            Report rep("catalog", tol);
            const std::string& action = catalog_args.front();
            rep.inputs["action"] = action;
            if (action == "list") {
                if (catalog_args.size() != 1) throw UsageError("catalog list takes no argument");
                rep.result = ybt::catalog::list();
            } else if (action == "get") {
                if (catalog_args.size() != 2) throw UsageError("catalog get needs an entry name");
                std::string ref = catalog_args[1];
                rep.inputs["name"] = ref;
                if (!is_catalog_ref(ref)) ref = "catalog:" + ref;
                const CatalogRef c = parse_catalog_ref(ref);
                if (!c.part.empty()) throw UsageError("catalog get takes no #part");
                rep.result = ybt::catalog::to_json(load_entry(c));
            } else {
                throw UsageError("unknown catalog action \"" + action + "\" (expected list or get)");
            }
            return emit(rep, opt, start);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
