#ifndef ZETATAU_CLI_HPP
#define ZETATAU_CLI_HPP

#include <zetatau/catalog.hpp>
#include <zetatau/selftest.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace zetatau::cli {

namespace detail {

/// `builtin:trefoil`, `builtin:twist:<n>`, `builtin:pretzel555`, or a file path.
inline KnotRecord resolve_input(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) != 0) return load_file(spec);
    const std::string which = spec.substr(prefix.size());
    if (which == "trefoil") return trefoil();
    if (which == "pretzel555") return pretzel_555();
    if (which.rfind("twist:", 0) == 0) {
        const std::string param = which.substr(6);
        try {
            std::size_t used = 0;
            const long n = std::stol(param, &used);
            if (used != param.size()) throw std::invalid_argument(param);
            return twist_knot(n);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("twist parameter out of range: " + param);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("twist parameter must be an integer >= 2, got '" +
                                        param + "'");
        }
    }
    throw std::invalid_argument(
        "unknown builtin '" + spec +
        "' (expected builtin:trefoil, builtin:twist:<n>, or builtin:pretzel555)");
}

// --- machine-readable encoding: integers and rationals as strings, never floats.

inline nlohmann::json json_poly(const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

inline nlohmann::json json_ratfun(const RationalFunction& r) {
    return {{"numerator", json_poly(r.num())},
            {"denominator", json_poly(r.den())},
            {"display", to_string(r)}};
}

inline nlohmann::json json_series(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < s.order(); ++i) coeffs.push_back(to_string(s.coeff(i)));
    return coeffs;
}

inline nlohmann::json json_int_matrix(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string compact_int_matrix(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " ";
            out += to_string(m(i, j));
        }
    }
    out += "]";
    return out;
}

inline std::string int_list(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(values[i]);
    }
    out += "]";
    return out;
}

struct Options {
    std::string input;
    std::size_t order = kDefaultOrder;
    std::size_t depth = kDefaultOrder;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

inline void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

inline int cmd_validate(const Options& opt, std::ostream& out) {
    const KnotRecord rec = resolve_input(opt.input);
    const ValidationReport report = validate(rec.monodromy);
    if (opt.json()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        emit(out, {{"knot", rec.name}, {"valid", report.ok()}, {"checks", std::move(checks)}});
    } else {
        out << "knot: " << rec.name << "\n" << report.summary();
        out << "result: " << (report.ok() ? "valid" : "INVALID") << "\n";
    }
    return report.ok() ? 0 : 1;
}

inline int cmd_zeta(const Options& opt, std::ostream& out) {
    const KnotRecord rec = resolve_input(opt.input);
    const ZetaResult z = zeta(rec.monodromy, opt.order);
    if (opt.json()) {
        nlohmann::json lef = nlohmann::json::array();
        for (const Int& l : z.lefschetz) lef.push_back(to_string(l));
        emit(out, {{"knot", rec.name},
                   {"order", opt.order},
                   {"zeta",
                    {{"rational", json_ratfun(z.rational)},
                     {"series", json_series(z.series)},
                     {"lefschetz", std::move(lef)}}}});
    } else {
        out << "knot: " << rec.name << "\n";
        if (rec.monodromy.kind() == SurfaceKind::Closed)
            out << "note: closed-surface zeta is experimental\n";
        out << "zeta: " << to_string(z.rational) << "\n";
        out << "series (order " << opt.order << "): " << to_string(z.series) << "\n";
        out << "lefschetz: " << int_list(z.lefschetz) << "\n";
    }
    return 0;
}

inline int cmd_torsion(const Options& opt, std::ostream& out) {
    const KnotRecord rec = resolve_input(opt.input);
    const TorsionResult tau = torsion(rec.monodromy, opt.order);
    const std::size_t k = rec.monodromy.handles();
    if (opt.json()) {
        nlohmann::json fm = nlohmann::json::array();
        for (std::size_t i = 0; i < k; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < k; ++j) row.push_back(json_ratfun(tau.flow_matrix(i, j)));
            fm.push_back(std::move(row));
        }
        emit(out, {{"knot", rec.name},
                   {"order", opt.order},
                   {"torsion",
                    {{"rational", json_ratfun(tau.rational)},
                     {"series", json_series(tau.series)},
                     {"flow_matrix", std::move(fm)}}}});
    } else {
        out << "knot: " << rec.name << "\n";
        out << "torsion: " << to_string(tau.rational) << "\n";
        out << "flow matrix (" << k << "x" << k << "):\n";
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                out << "  D[" << i + 1 << "][" << j + 1
                    << "] = " << to_string(tau.flow_matrix(i, j)) << "\n";
        out << "series (order " << opt.order << "): " << to_string(tau.series) << "\n";
    }
    return 0;
}

inline int cmd_alexander(const Options& opt, std::ostream& out) {
    const KnotRecord rec = resolve_input(opt.input);
    const AlexanderResult alex = alexander_recover(rec.monodromy, opt.order);
    bool mismatch = false;
    nlohmann::json verification;
    std::string verdict = "unverified (no stored polynomial)";
    if (rec.alexander) {
        const IdentityReport report = verify_identity(rec.monodromy, *rec.alexander, opt.order);
        mismatch = !report.exact && !report.up_to_unit;
        verdict = report.exact          ? "exact match"
                  : report.up_to_unit   ? "match up to a unit +-t^j"
                                        : "MISMATCH";
        verification = {{"stored", json_poly(*rec.alexander)},
                        {"exact", report.exact},
                        {"up_to_unit", report.up_to_unit}};
    }
    if (opt.json()) {
        nlohmann::json doc = {{"knot", rec.name},
                              {"alexander",
                               {{"raw", json_poly(alex.raw)},
                                {"normalized", json_poly(alex.normalized)},
                                {"display_raw", to_string(alex.raw)},
                                {"display_normalized", to_string(alex.normalized)}}}};
        if (!verification.is_null()) doc["verification"] = std::move(verification);
        emit(out, doc);
    } else {
        out << "knot: " << rec.name << "\n";
        out << "alexander (raw): " << to_string(alex.raw) << "\n";
        out << "alexander (normalized): " << to_string(alex.normalized) << "\n";
        if (rec.alexander) out << "stored: " << to_string(*rec.alexander) << "\n";
        out << "verdict: " << verdict << "\n";
    }
    return mismatch ? 1 : 0;
}

inline int cmd_census(const Options& opt, std::ostream& out) {
    const KnotRecord rec = resolve_input(opt.input);
    const CensusReport report = census(rec.monodromy, opt.depth);
    if (opt.json()) {
        nlohmann::json levels = nlohmann::json::array();
        for (std::size_t n = 0; n < report.per_level.size(); ++n)
            levels.push_back({{"level", n + 1},
                              {"lefschetz", to_string(report.per_level[n].lefschetz)},
                              {"flow_counts", json_int_matrix(report.per_level[n].flow_counts)}});
        emit(out, {{"knot", rec.name}, {"depth", opt.depth}, {"census", std::move(levels)}});
    } else {
        out << "knot: " << rec.name << "\n";
        out << "level | lefschetz | flow counts\n";
        for (std::size_t n = 0; n < report.per_level.size(); ++n) {
            std::ostringstream line;
            line << std::setw(5) << (n + 1) << " | " << std::setw(9)
                 << to_string(report.per_level[n].lefschetz) << " | "
                 << compact_int_matrix(report.per_level[n].flow_counts);
            out << line.str() << "\n";
        }
    }
    return 0;
}

inline int cmd_check_all(const Options& opt, std::ostream& out) {
    if (opt.json()) {
        nlohmann::json criteria = nlohmann::json::array();
        bool all = true;
        for (const auto& r : selftest::run_all()) {
            criteria.push_back(
                {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all &= r.passed;
        }
        emit(out, {{"criteria", std::move(criteria)}, {"all_passed", all}});
        return all ? 0 : 1;
    }
    const int failures = selftest::run_and_report(out);
    out << (failures == 0 ? "all criteria passed\n"
                          : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace detail

/// Command-line entry point; reusable from tests. Returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact zeta functions, Novikov torsion, flow-line censuses, and Alexander\n"
                 "polynomials of circle-valued Morse flows given by symplectic monodromy\n"
                 "matrices."};
    app.require_subcommand(1);

    detail::Options opt;
    const std::string input_help =
        "builtin:trefoil | builtin:twist:<n> | builtin:pretzel555 | path to a knot file";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "Itemized monodromy validation");
    validate_cmd->add_option("input", opt.input, input_help)->required();
    add_format(validate_cmd);

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Lefschetz zeta function of the flow");
    zeta_cmd->add_option("input", opt.input, input_help)->required();
    zeta_cmd->add_option("--order", opt.order, "Series truncation order")
        ->check(CLI::PositiveNumber);
    add_format(zeta_cmd);

    CLI::App* torsion_cmd =
        app.add_subcommand("torsion", "Novikov torsion and the flow-line matrix");
    torsion_cmd->add_option("input", opt.input, input_help)->required();
    torsion_cmd->add_option("--order", opt.order, "Series truncation order")
        ->check(CLI::PositiveNumber);
    add_format(torsion_cmd);

    CLI::App* alexander_cmd =
        app.add_subcommand("alexander", "Recover the Alexander polynomial");
    alexander_cmd->add_option("input", opt.input, input_help)->required();
    alexander_cmd->add_option("--order", opt.order, "Series truncation order")
        ->check(CLI::PositiveNumber);
    add_format(alexander_cmd);

    CLI::App* census_cmd =
        app.add_subcommand("census", "Per-level Lefschetz numbers and flow counts");
    census_cmd->add_option("input", opt.input, input_help)->required();
    census_cmd->add_option("--depth", opt.depth, "Number of levels")->check(CLI::PositiveNumber);
    add_format(census_cmd);

    CLI::App* check_cmd =
        app.add_subcommand("check-all", "Run the full verification suite over the builtins");
    check_cmd->add_option("--order", opt.order, "Series truncation order (informational)")
        ->check(CLI::PositiveNumber);
    add_format(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (validate_cmd->parsed()) return detail::cmd_validate(opt, out);
        if (zeta_cmd->parsed()) return detail::cmd_zeta(opt, out);
        if (torsion_cmd->parsed()) return detail::cmd_torsion(opt, out);
        if (alexander_cmd->parsed()) return detail::cmd_alexander(opt, out);
        if (census_cmd->parsed()) return detail::cmd_census(opt, out);
        if (check_cmd->parsed()) return detail::cmd_check_all(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace zetatau::cli

#endif
