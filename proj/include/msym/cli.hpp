#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so tests drive it without a subprocess.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad arguments or input.

#include "msym/complex.hpp"
#include "msym/cw_json.hpp"
#include "msym/errors.hpp"
#include "msym/fibration.hpp"
#include "msym/genfun.hpp"
#include "msym/mcheck.hpp"
#include "msym/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace msym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Rows of strings rendered as CSV or as a pipe-aligned markdown table.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void render(std::ostream& out, const std::string& format) const {
        if (format == "csv") {
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
                out << '\n';
            };
            line(header);
            for (const auto& r : rows) line(r);
            return;
        }
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            out << '|';
            for (std::size_t i = 0; i < cells.size(); ++i) out << ' ' << cells[i] << std::string(width[i] - cells[i].size(), ' ') << " |";
            out << '\n';
        };
        line(header);
        out << '|';
        for (auto w : width) out << std::string(w + 2, '-') << '|';
        out << '\n';
        for (const auto& r : rows) line(r);
    }
};

inline std::string join_betti(const BettiVector& b, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? sep : "") + std::to_string(b[i]);
    return s;
}

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

namespace detail {

inline int betti_sym(std::ostream& out, unsigned g, unsigned n, bool poly, const std::string& format) {
    const auto sum = betti_sum_sym(Genus{g}, n);
    const auto p = poincare_sym(Genus{g}, n);
    if (format == "json") {
        nlohmann::json j{{"g", g}, {"n", n}, {"betti_sum", big_to_json(sum.value)}};
        if (poly) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : p.coeffs()) coeffs.push_back(big_to_json(c));
            j["poincare"] = coeffs;
            j["poincare_text"] = p.to_string();
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    Table t{{"g", "n", "betti_sum"}, {{std::to_string(g), std::to_string(n), sum.value.str()}}};
    if (poly) {
        t.header.push_back("poincare");
        t.rows[0].push_back(p.to_string());
    }
    t.render(out, format);
    return kExitOk;
}

inline int real_betti(std::ostream& out, unsigned g, unsigned n, const std::string& format) {
    const auto d = real_decomposition(Genus{g}, n);
    BigInt total = 0;
    Table t{{"piece", "multiplicity", "betti", "betti_sum", "subtotal"}, {}};
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : d.pieces) {
        const auto b = betti(p.complex);
        const BigInt sub = p.multiplicity * betti_total(b);
        total += sub;
        t.rows.push_back({p.name, p.multiplicity.str(), join_betti(b), std::to_string(betti_total(b)), sub.str()});
        pieces.push_back({{"name", p.name},
                          {"multiplicity", big_to_json(p.multiplicity)},
                          {"betti", b},
                          {"euler_characteristic", euler_char(p.complex)},
                          {"cells", p.complex.total_cells()}});
    }
    if (format == "json") {
        out << nlohmann::json{{"g", g}, {"n", n}, {"pieces", pieces}, {"total", big_to_json(total)}}.dump(2) << '\n';
        return kExitOk;
    }
    t.rows.push_back({"total", "", "", "", total.str()});
    t.render(out, format);
    return kExitOk;
}

inline void warn_unsupported(std::ostream& err, const MVarietyReport& r) {
    if (r.verdict != Verdict::UnsupportedRange) return;
    err << "warning: g=" << r.g.value << " n=" << r.n;
    if (r.n >= 4 && r.n + 2 <= 2 * r.g.value) err << " lies in the open range 4 <= n <= 2g-2";
    else err << " is outside the certified ranges (n = 2, 3 or n >= 2g-1)";
    err << "; no verdict\n";
}

inline int check_m(std::ostream& out, std::ostream& err, const std::vector<MVarietyReport>& rows, bool single,
                   const std::string& format) {
    for (const auto& r : rows) warn_unsupported(err, r);
    if (format == "json") {
        if (single) out << to_json(rows.front()).dump(2) << '\n';
        else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
        }
    } else if (format == "csv") {
        out << report_csv_header() << '\n';
        for (const auto& r : rows) out << to_csv_row(r) << '\n';
    } else {
        Table t{{"g", "n", "complex_sum", "real_sum", "verdict", "method"}, {}};
        for (const auto& r : rows)
            t.rows.push_back({std::to_string(r.g.value), std::to_string(r.n), r.complex_sum.str(),
                              r.real_sum ? r.real_sum->str() : "", to_string(r.verdict), to_string(r.method)});
        t.render(out, format);
    }
    return all_supported_are_m_varieties(rows) ? kExitOk : kExitFailed;
}

inline int homology(std::ostream& out, const std::string& path, const std::string& format) {
    const auto c = load_complex(path);
    const auto b = betti(c);
    if (format == "json") {
        std::vector<std::size_t> counts;
        for (int k = 0; k <= c.dimension(); ++k) counts.push_back(c.cell_count(k));
        out << nlohmann::json{{"betti", b}, {"cells", counts}, {"euler_characteristic", euler_char(c)}}.dump(2) << '\n';
        return kExitOk;
    }
    Table t{{"dim", "cells", "betti"}, {}};
    for (int k = 0; k <= c.dimension(); ++k)
        t.rows.push_back({std::to_string(k), std::to_string(c.cell_count(k)), std::to_string(b[static_cast<std::size_t>(k)])});
    t.rows.push_back({"total", std::to_string(c.total_cells()), std::to_string(betti_total(b))});
    t.render(out, format);
    return kExitOk;
}

inline int verify_fibration(std::ostream& out, std::size_t samples, std::uint64_t seed, double tol, double fiber_tol,
                            const std::string& format) {
    const auto r = fibration::run_suite(samples, seed, tol);
    auto status = [](bool ok) { return std::string(ok ? "ok" : "FAIL"); };
    const bool boundary_ok = r.boundary_agreements == r.boundary_checks;
    Table t{{"check", "value", "limit", "status"},
            {
                {"roundtrip_t_inverse_after_t", sci(r.max_roundtrip_error), sci(tol), status(r.max_roundtrip_error < tol)},
                {"roundtrip_t_after_t_inverse", sci(r.max_reverse_roundtrip_error), sci(tol),
                 status(r.max_reverse_roundtrip_error < tol)},
                {"fiber_theta_of_t", sci(r.max_fiber_error), sci(fiber_tol), status(r.max_fiber_error < fiber_tol)},
                {"local_trivialization", sci(r.max_trivialization_error), sci(tol),
                 status(r.max_trivialization_error < tol)},
                {"order_invariance", sci(r.max_order_error), sci(tol), status(r.max_order_error < tol)},
                {"boundary_agreement", std::to_string(r.boundary_agreements) + "/" + std::to_string(r.boundary_checks),
                 std::to_string(r.boundary_checks), status(boundary_ok)},
                {"shift_law", std::to_string(r.shift_law_checks), "exact", status(r.shift_law_holds)},
                {"A1_meets_A2_section", std::to_string(r.a1_meets_section), "1", status(r.a1_meets_section == 1)},
                {"A1_meets_A1_fiber_boundary", std::to_string(r.a1_meets_fiber_boundary), "2",
                 status(r.a1_meets_fiber_boundary == 2)},
            }};
    const bool ok = r.passed(tol, fiber_tol);
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& row : t.rows)
            checks.push_back({{"check", row[0]}, {"value", row[1]}, {"limit", row[2]}, {"status", row[3]}});
        out << nlohmann::json{{"samples", samples}, {"seed", seed}, {"passed", ok}, {"checks", checks}}.dump(2) << '\n';
    } else {
        t.render(out, format);
    }
    return ok ? kExitOk : kExitFailed;
}

inline ChainComplexF2 named_model(const std::string& name, unsigned g) {
    if (name == "half") return build_half_surface(Genus{g}).complex;
    if (name == "Y") return build_Y(Genus{g});
    if (name == "B") return build_B(Genus{g});
    if (name == "sym2circle") return build_sym2_circle();
    return build_sym3_circle();
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topology of symmetric products of real M-curves", "msym"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"csv", "md", "json"};

    unsigned g = 0, n = 0, gmax = 0, nmax = 0;
    bool poly = false, sweep_mode = false;
    std::string format = "md", path, model, out_path;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double tol = fibration::kRoundTripTol, fiber_tol = fibration::kFiberTol;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* betti_cmd = app.add_subcommand("betti-sym", "Betti sum (and Poincare polynomial) of Sym^n of a genus-g surface");
    betti_cmd->add_option("--g", g, "Genus")->required();
    betti_cmd->add_option("--n", n, "Symmetric power")->required();
    betti_cmd->add_flag("--poly", poly, "Also print the Poincare polynomial");
    add_format(betti_cmd);

    auto* real_cmd = app.add_subcommand("real-betti", "Per-piece Betti table of the real locus of Sym^2 or Sym^3");
    real_cmd->add_option("--g", g, "Genus")->required();
    real_cmd->add_option("--n", n, "Symmetric power (2 or 3)")->required()->check(CLI::IsMember({2u, 3u}));
    add_format(real_cmd);

    auto* check_cmd = app.add_subcommand("check-m", "Certify the M-variety property for one (g, n) or a sweep");
    auto* g_opt = check_cmd->add_option("--g", g, "Genus");
    auto* n_opt = check_cmd->add_option("--n", n, "Symmetric power");
    auto* sweep_opt = check_cmd->add_flag("--sweep", sweep_mode, "Sweep 0 <= g <= gmax, 0 <= n <= nmax");
    auto* gmax_opt = check_cmd->add_option("--gmax", gmax, "Largest genus in the sweep");
    auto* nmax_opt = check_cmd->add_option("--nmax", nmax, "Largest power in the sweep");
    g_opt->excludes(sweep_opt);
    n_opt->excludes(sweep_opt);
    gmax_opt->needs(sweep_opt);
    nmax_opt->needs(sweep_opt);
    add_format(check_cmd);

    auto* hom_cmd = app.add_subcommand("homology", "Mod-2 Betti numbers of a CW complex given as JSON");
    hom_cmd->add_option("--file", path, "CW complex file")->required();
    add_format(hom_cmd);

    auto* fib_cmd = app.add_subcommand("verify-fibration", "Randomized checks of the 2-simplex bundle Sym^3(S^1) -> S^1");
    fib_cmd->add_option("--samples", samples, "Number of random simplex points")->capture_default_str();
    fib_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    fib_cmd->add_option("--tol", tol, "Round-trip tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    fib_cmd->add_option("--fiber-tol", fiber_tol, "Fiber-membership tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    add_format(fib_cmd);

    auto* export_cmd = app.add_subcommand("export-model", "Write a curated CW model as JSON");
    export_cmd->add_option("--name", model, "Model name")
        ->required()
        ->check(CLI::IsMember({"half", "Y", "B", "sym2circle", "sym3circle"}));
    export_cmd->add_option("--g", g, "Genus (for half, Y, B)")->capture_default_str();
    export_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (check_cmd->parsed()) {
            if (sweep_mode && (gmax_opt->count() == 0 || nmax_opt->count() == 0))
                throw CLI::ValidationError("--sweep", "requires --gmax and --nmax");
            if (!sweep_mode && (g_opt->count() == 0 || n_opt->count() == 0))
                throw CLI::ValidationError("check-m", "requires --g and --n, or --sweep");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (betti_cmd->parsed()) return detail::betti_sym(out, g, n, poly, format);
        if (real_cmd->parsed()) return detail::real_betti(out, g, n, format);
        if (check_cmd->parsed()) {
            if (sweep_mode) return detail::check_m(out, err, sweep(gmax, nmax), false, format);
            return detail::check_m(out, err, {check(Genus{g}, n)}, true, format);
        }
        if (hom_cmd->parsed()) return detail::homology(out, path, format);
        if (fib_cmd->parsed()) return detail::verify_fibration(out, samples, seed, tol, fiber_tol, format);
        if (export_cmd->parsed()) {
            const auto text = to_json(detail::named_model(model, g)).dump(2) + "\n";
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path);
                if (!f) {
                    err << "error: cannot write '" << out_path << "'\n";
                    return kExitUsage;
                }
                f << text;
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace msym::cli
