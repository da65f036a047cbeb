#include "hookforest/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "hookforest/bijections.hpp"
#include "hookforest/formulas.hpp"
#include "hookforest/forest.hpp"
#include "hookforest/partitions.hpp"
#include "hookforest/report.hpp"
#include "hookforest/stats.hpp"
#include "hookforest/verify.hpp"

namespace hookforest::cli {

namespace {

/// Raised for bad user input that CLI11 cannot see (forest text, ids, labelings).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "human";
    std::size_t jobs = 1;

    std::string forest;
    std::string stat;
    std::string aux;
    std::string vs;
    std::string mode = "signed";
    std::string theorem;
    std::string labeling;
    std::size_t perms = 0;
    bool perms_set = false;
    std::size_t max_n = 0;
    std::uint32_t degree = 10;
    bool fail_fast = false;
};

template <typename Fn>
auto as_usage(Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Forest forest_arg(const Options& o) {
    return as_usage([&] { return parse_forest_any(o.forest); });
}

Labeling labeling_arg(const Options& o, const Forest& forest) {
    Labeling w = as_usage([&] { return parse_labeling(o.labeling); });
    if (w.size() != forest.size()) throw UsageError("labeling has " + std::to_string(w.size()) +
                                                    " values but the forest has " + std::to_string(forest.size()) +
                                                    " vertices");
    return w;
}

bool records(const Options& o) { return o.format == "records"; }

void emit(const Options& o, std::ostream& out, const CheckReport& report) {
    if (records(o)) {
        out << render_record(report) << '\n';
    } else {
        out << render_human(report);
    }
}

void emit_poly(const Options& o, std::ostream& out, const nlohmann::json& header, const BiPoly& poly) {
    if (records(o)) {
        nlohmann::json record = header;
        record["poly"] = poly_to_triples(poly);
        out << record.dump() << '\n';
    } else {
        out << to_string(poly) << '\n';
    }
}

int cmd_dist(const Options& o, std::ostream& out) {
    const SignMode mode = as_usage([&] { return parse_sign_mode(o.mode); });
    const StatId stat = as_usage([&] { return parse_stat(o.stat); });
    std::optional<StatId> aux;
    if (!o.aux.empty()) aux = as_usage([&] { return parse_stat(o.aux); });
    if (o.perms_set) {
        const BiPoly poly = as_usage([&] { return permutation_distribution(o.perms, stat, mode, aux); });
        emit_poly(o, out, {{"n", o.perms}, {"stat", o.stat}, {"aux", o.aux}, {"mode", o.mode}}, poly);
        return kExitOk;
    }
    const Forest forest = forest_arg(o);
    const BiPoly poly = as_usage([&] { return distribution(forest, stat, mode, aux); });
    emit_poly(o, out, {{"forest", render_forest(forest)}, {"stat", o.stat}, {"aux", o.aux}, {"mode", o.mode}}, poly);
    return kExitOk;
}

int cmd_rhs(const Options& o, std::ostream& out) {
    const Forest forest = forest_arg(o);
    const TheoremId id = as_usage([&] { return parse_theorem(o.theorem); });
    emit_poly(o, out, {{"forest", render_forest(forest)}, {"theorem", o.theorem}}, rhs_for(id, forest, o.degree));
    return kExitOk;
}

// Checks reachable by name besides the theorem ids.
std::optional<CheckReport> extra_check(std::string_view name, const Forest& forest) {
    if (name == "eq-even-odd") return check_even_odd(forest);
    if (name == "eq-fmaj-coset") return check_fmaj_coset_identity(forest);
    if (name == "bij-mirror") return check_mirror(forest);
    if (name == "bij-psi") return check_psi(forest.size());
    if (name == "eq-coset") return check_coset_decomposition(forest.size());
    if (name == "eq-stanley") return check_stanley_specialization(forest, 10);
    return std::nullopt;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Forest forest = forest_arg(o);
    std::optional<CheckReport> report = extra_check(o.theorem, forest);
    if (!report) {
        const TheoremId id = as_usage([&] { return parse_theorem(o.theorem); });
        report = check_theorem(forest, id, o.degree);
    }
    emit(o, out, *report);
    return report->pass ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const TheoremId id = as_usage([&] { return parse_theorem(o.theorem); });
    const auto reports = sweep(id, o.max_n, o.jobs, o.fail_fast, o.degree);
    std::size_t failures = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failures;
        if (records(o)) {
            out << render_record(r) << '\n';
        } else if (!r.pass) {
            out << render_human(r);
        } else {
            out << r.theorem << ' ' << (r.forest.empty() ? "\"\"" : r.forest) << ": pass\n";
        }
    }
    if (!records(o)) out << reports.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_linext(const Options& o, std::ostream& out) {
    const Forest forest = forest_arg(o);
    const Labeling w = labeling_arg(o, forest);
    const auto extensions = linear_extensions(forest, w);
    if (records(o)) {
        auto list = nlohmann::json::array();
        for (const auto& sigma : extensions) list.push_back({{"word", sigma.values()}, {"maj_b", maj_b(sigma)}});
        out << nlohmann::json{{"forest", render_forest(forest)}, {"labeling", w.values()}, {"extensions", list}}.dump()
            << '\n';
    } else {
        for (const auto& sigma : extensions) out << render_word(sigma) << "  maj_B=" << maj_b(sigma) << '\n';
    }
    auto report = compare_polys("thm-le1", render_forest(forest) + " w=" + render_labeling(w),
                                linext_distribution(forest, w), rhs_linext(forest, w));
    emit(o, out, report);
    return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_partitions(const Options& o, std::ostream& out) {
    const Forest forest = forest_arg(o);
    const Labeling w = labeling_arg(o, forest);
    const std::vector<CheckReport> reports = {
        compare_polys("lem-partition-gf", render_forest(forest) + " w=" + render_labeling(w),
                      partition_lhs_series(forest, w, o.degree).poly(), rhs_partition_gf(forest, w, o.degree).poly()),
        check_decomposition_dec1(forest, w, o.degree),
        check_partition_shift(forest, w, o.degree),
        check_partition_extension_series(forest, w, o.degree),
        check_partition_relation(forest, w),
    };
    bool ok = true;
    for (const auto& r : reports) {
        emit(o, out, r);
        ok = ok && r.pass;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_bijections(const Options& o, std::ostream& out) {
    bool ok = true;
    for (std::size_t n = 0; n <= o.max_n; ++n) {
        const auto psi = check_psi(n);
        ok = ok && psi.pass;
        emit(o, out, psi);
    }
    for (std::size_t n = 0; n <= o.max_n; ++n) {
        const auto forests = enumerate_forests(n);
        std::size_t failures = 0;
        for (const auto& f : forests) {
            const auto r = check_mirror(f);
            if (!r.pass) {
                ++failures;
                emit(o, out, r);
            } else if (records(o)) {
                emit(o, out, r);
            }
        }
        ok = ok && failures == 0;
        if (!records(o)) out << "bij-mirror n=" << n << ": " << forests.size() << " forests, " << failures << " failed\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    const SignMode mode = as_usage([&] { return parse_sign_mode(o.mode); });
    const StatId a = as_usage([&] { return parse_stat(o.stat); });
    const StatId b = as_usage([&] { return parse_stat(o.vs); });
    const auto found = as_usage([&] { return counterexample_search(a, b, mode, o.max_n, o.jobs); });
    if (records(o)) {
        nlohmann::json record = {{"stat", o.stat}, {"vs", o.vs}, {"mode", o.mode}, {"max_n", o.max_n}};
        if (found) {
            record["forest"] = render_forest(found->forest);
            record["first"] = poly_to_triples(found->first);
            record["second"] = poly_to_triples(found->second);
        } else {
            record["forest"] = nullptr;
        }
        out << record.dump() << '\n';
    } else if (found) {
        out << "forest: " << render_forest(found->forest) << '\n';
        out << o.stat << ": " << to_string(found->first) << '\n';
        out << o.vs << ": " << to_string(found->second) << '\n';
        if (auto diff = first_difference(found->first, found->second)) out << "first difference: " << *diff << '\n';
    } else {
        out << "none\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact q-hook length identities for signed labeled forests", "hookforest"};
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "records"}));

    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", o.jobs, "Worker threads")->envname("HOOKFOREST_JOBS")->check(CLI::PositiveNumber);
    };

    auto* dist = app.add_subcommand("dist", "Distribution of a statistic over all labelings");
    dist->add_option("--forest", o.forest, "Forest (paren or parent-array form)");
    dist->add_option("--perms", o.perms, "Use the permutation group of this rank instead of a forest");
    dist->add_option("--stat", o.stat, "Statistic id")->required();
    dist->add_option("--mode", o.mode, "ordinary | signed | even-signed");
    dist->add_option("--aux", o.aux, "Statistic for the t-exponent");

    auto* rhs = app.add_subcommand("rhs", "Closed-form side of a theorem");
    rhs->add_option("--forest", o.forest)->required();
    rhs->add_option("--theorem", o.theorem)->required();
    rhs->add_option("--degree", o.degree, "Truncation degree for series");

    auto* check = app.add_subcommand("check", "Verify one theorem on one forest");
    check->add_option("--forest", o.forest)->required();
    check->add_option("--theorem", o.theorem)->required();
    check->add_option("--degree", o.degree, "Truncation degree for series");

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify a theorem on every forest up to a size");
    sweep_cmd->add_option("--max-n", o.max_n)->required();
    sweep_cmd->add_option("--theorem", o.theorem)->required();
    sweep_cmd->add_option("--degree", o.degree, "Truncation degree for series");
    sweep_cmd->add_flag("--fail-fast", o.fail_fast, "Stop at the first failing forest");
    add_jobs(sweep_cmd);

    auto* linext = app.add_subcommand("linext", "Linear extensions with their maj_B values");
    linext->add_option("--forest", o.forest)->required();
    linext->add_option("--labeling", o.labeling, "Comma-separated signed labels in vertex order")->required();

    auto* parts = app.add_subcommand("partitions", "Type B partition series and decomposition checks");
    parts->add_option("--forest", o.forest)->required();
    parts->add_option("--labeling", o.labeling)->required();
    parts->add_option("--degree", o.degree)->required();

    auto* bij = app.add_subcommand("bijections", "Exhaustive checks of psi and the mirror map");
    bij->add_option("--max-n", o.max_n)->required();

    auto* ce = app.add_subcommand("counterexample", "Smallest forest where two statistics differ in distribution");
    ce->add_option("--stat", o.stat)->required();
    ce->add_option("--vs", o.vs)->required();
    ce->add_option("--mode", o.mode)->required();
    ce->add_option("--max-n", o.max_n)->required();
    add_jobs(ce);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    o.perms_set = dist->count("--perms") > 0;

    try {
        if (dist->parsed()) {
            if (!o.perms_set && dist->count("--forest") == 0) throw UsageError("dist needs --forest or --perms");
            return cmd_dist(o, out);
        }
        if (rhs->parsed()) return cmd_rhs(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (sweep_cmd->parsed()) return cmd_sweep(o, out);
        if (linext->parsed()) return cmd_linext(o, out);
        if (parts->parsed()) return cmd_partitions(o, out);
        if (bij->parsed()) return cmd_bijections(o, out);
        if (ce->parsed()) return cmd_counterexample(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hookforest::cli
