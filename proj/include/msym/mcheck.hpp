#pragma once

// M-variety certification for Sym^n of an M-curve: compare the mod-2 Betti
// sum of the real locus against that of the complex variety, each side
// computed by two independent routes where two exist.

#include "msym/bigint.hpp"
#include "msym/complex.hpp"
#include "msym/errors.hpp"
#include "msym/genfun.hpp"
#include "msym/models.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace msym {

enum class Verdict { MVariety, StrictInequality, UnsupportedRange };
enum class Method { CwModels, BundleFormula, None };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::MVariety: return "M_VARIETY";
        case Verdict::StrictInequality: return "STRICT_INEQUALITY";
        case Verdict::UnsupportedRange: return "UNSUPPORTED_RANGE";
    }
    return "?";
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::CwModels: return "CW_MODELS";
        case Method::BundleFormula: return "BUNDLE_FORMULA";
        case Method::None: return "NONE";
    }
    return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "M_VARIETY") return Verdict::MVariety;
    if (s == "STRICT_INEQUALITY") return Verdict::StrictInequality;
    if (s == "UNSUPPORTED_RANGE") return Verdict::UnsupportedRange;
    throw ParseError("unknown verdict '" + s + "'");
}

inline Method method_from_string(const std::string& s) {
    if (s == "CW_MODELS") return Method::CwModels;
    if (s == "BUNDLE_FORMULA") return Method::BundleFormula;
    if (s == "NONE") return Method::None;
    throw ParseError("unknown method '" + s + "'");
}

struct PieceSummary {
    std::string name;
    BigInt multiplicity;
    BettiVector betti;

    friend bool operator==(const PieceSummary&, const PieceSummary&) = default;
};

struct MVarietyReport {
    Genus g;
    unsigned n = 0;
    BigInt complex_sum;
    std::optional<BigInt> real_sum;  // empty when the range is unsupported
    std::vector<PieceSummary> per_piece;
    Verdict verdict = Verdict::UnsupportedRange;
    Method method = Method::None;

    friend bool operator==(const MVarietyReport&, const MVarietyReport&) = default;
};

/// Real-side count for n >= 2g-1: Sym^n(X)^sigma is an RP^{n-g} bundle over
/// the real part of Pic^0, which for an M-curve is 2^g copies of a g-torus.
inline BigInt real_bundle_betti_sum(Genus g, unsigned n) {
    const BigInt components = pow_big(2, g.value);
    const BigInt per_torus = pow_big(2, g.value);
    const BigInt fiber = BigInt(n) - g.value + 1;
    return components * per_torus * fiber;
}

inline bool in_bundle_range(Genus g, unsigned n) {
    return static_cast<long>(n) >= 2 * static_cast<long>(g.value) - 1;
}

inline bool has_cw_models(unsigned n) { return n == 2 || n == 3; }

namespace detail {

inline void cross_check(const BigInt& a, const BigInt& b, const std::string& what, Genus g, unsigned n) {
    if (a != b)
        throw Error("cross-check failed (" + what + ") at g=" + std::to_string(g.value) + ", n=" + std::to_string(n) +
                    ": " + a.str() + " vs " + b.str());
}

inline void finish(MVarietyReport& r) {
    const BigInt& real = *r.real_sum;
    if (real > r.complex_sum)
        throw SmithViolation("Smith inequality violated at g=" + std::to_string(r.g.value) + ", n=" +
                             std::to_string(r.n) + ": real " + real.str() + " > complex " + r.complex_sum.str() +
                             "; the real-locus model is broken");
    r.verdict = real == r.complex_sum ? Verdict::MVariety : Verdict::StrictInequality;
}

inline void complex_side(MVarietyReport& r) {
    r.complex_sum = betti_sum_sym(r.g, r.n).value;
    detail::cross_check(r.complex_sum, poincare_sym(r.g, r.n).evaluate(1), "Poincare polynomial at x=1", r.g, r.n);
    if (r.n == 2) detail::cross_check(r.complex_sum, closed_form_sym2(r.g).value, "closed form n=2", r.g, r.n);
    if (r.n == 3) detail::cross_check(r.complex_sum, closed_form_sym3(r.g).value, "closed form n=3", r.g, r.n);
    if (in_bundle_range(r.g, r.n))
        detail::cross_check(r.complex_sum, betti_sum_large_n(r.g, r.n).value, "projective bundle", r.g, r.n);
}

inline std::vector<PieceSummary> summarize(const RealLocusDecomposition& d, BigInt& total) {
    std::vector<PieceSummary> out;
    total = 0;
    for (const auto& p : d.pieces) {
        if (p.multiplicity < 1) throw InvalidComplex("piece '" + p.name + "' has multiplicity < 1");
        auto b = betti(p.complex);
        total += p.multiplicity * betti_total(b);
        out.push_back({p.name, p.multiplicity, std::move(b)});
    }
    return out;
}

}  // namespace detail

/// Certifies Sym^n of a genus-g M-curve. CW models are used for n = 2, 3 and
/// the bundle count for n >= 2g-1; where both apply they must agree.
inline MVarietyReport check(Genus g, unsigned n) {
    MVarietyReport r;
    r.g = g;
    r.n = n;
    detail::complex_side(r);

    const bool cw = has_cw_models(n);
    const bool bundle = in_bundle_range(g, n);
    if (!cw && !bundle) return r;

    if (cw) {
        BigInt total;
        r.per_piece = detail::summarize(real_decomposition(g, n), total);
        detail::cross_check(total, n == 2 ? sym2_piece_formula(g) : sym3_piece_formula(g), "piece formula", g, n);
        r.real_sum = total;
        r.method = Method::CwModels;
    }
    if (bundle) {
        const BigInt via_bundle = real_bundle_betti_sum(g, n);
        if (r.real_sum) detail::cross_check(*r.real_sum, via_bundle, "CW models vs bundle", g, n);
        else {
            r.real_sum = via_bundle;
            r.method = Method::BundleFormula;
        }
    }
    detail::finish(r);
    return r;
}

/// Checks a caller-supplied decomposition of the real locus of Sym^n.
/// The Smith inequality is enforced: exceeding the complex side throws.
inline MVarietyReport check_decomposition(const RealLocusDecomposition& d) {
    MVarietyReport r;
    r.g = d.g;
    r.n = d.n;
    detail::complex_side(r);
    BigInt total;
    r.per_piece = detail::summarize(d, total);
    r.real_sum = total;
    r.method = Method::CwModels;
    detail::finish(r);
    return r;
}

/// Thread count for sweeps: MSYM_THREADS if set and positive, else hardware concurrency.
inline unsigned sweep_threads() {
    if (const char* env = std::getenv("MSYM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Reports for every g in [0, gmax], n in [0, nmax], sorted by (g, n).
inline std::vector<MVarietyReport> sweep(unsigned gmax, unsigned nmax, unsigned threads = sweep_threads()) {
    std::vector<std::pair<unsigned, unsigned>> grid;
    for (unsigned g = 0; g <= gmax; ++g)
        for (unsigned n = 0; n <= nmax; ++n) grid.emplace_back(g, n);

    std::vector<MVarietyReport> out(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) out[i] = check(Genus{grid[i].first}, grid[i].second);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
    for (auto& j : jobs) j.get();
    return out;
}

/// Exit status of a sweep: every supported row must be an M-variety.
inline bool all_supported_are_m_varieties(const std::vector<MVarietyReport>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const MVarietyReport& r) {
        return r.verdict == Verdict::UnsupportedRange || r.verdict == Verdict::MVariety;
    });
}

// ---------------------------------------------------------------------------
// Serialization. Integers that fit in 64 bits are JSON numbers, larger ones
// decimal strings.

inline nlohmann::json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

inline BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

inline nlohmann::json to_json(const MVarietyReport& r) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : r.per_piece)
        pieces.push_back({{"name", p.name}, {"multiplicity", big_to_json(p.multiplicity)}, {"betti", p.betti}});
    return {
        {"g", r.g.value},
        {"n", r.n},
        {"complex_sum", big_to_json(r.complex_sum)},
        {"real_sum", r.real_sum ? big_to_json(*r.real_sum) : nlohmann::json(nullptr)},
        {"verdict", to_string(r.verdict)},
        {"method", to_string(r.method)},
        {"pieces", pieces},
    };
}

inline MVarietyReport report_from_json(const nlohmann::json& j) {
    try {
        MVarietyReport r;
        r.g = Genus{j.at("g").get<unsigned>()};
        r.n = j.at("n").get<unsigned>();
        r.complex_sum = big_from_json(j.at("complex_sum"));
        if (!j.at("real_sum").is_null()) r.real_sum = big_from_json(j.at("real_sum"));
        r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        r.method = method_from_string(j.at("method").get<std::string>());
        for (const auto& p : j.at("pieces"))
            r.per_piece.push_back({p.at("name").get<std::string>(), big_from_json(p.at("multiplicity")),
                                   p.at("betti").get<BettiVector>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

inline std::string report_csv_header() { return "g,n,complex_sum,real_sum,verdict,method"; }

inline std::string to_csv_row(const MVarietyReport& r) {
    return std::to_string(r.g.value) + "," + std::to_string(r.n) + "," + r.complex_sum.str() + "," +
           (r.real_sum ? r.real_sum->str() : std::string()) + "," + to_string(r.verdict) + "," + to_string(r.method);
}

}  // namespace msym
