#pragma once

// The product map theta : Sym^3(S^1) -> S^1 and its fiber over 1, identified
// with the 2-simplex by t(d1, d2) and its inverse t'. Circle points are
// angles in turns: s in [0, 1) stands for e^{2 pi i s}.

#include "msym/bigint.hpp"
#include "msym/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>

namespace msym::fibration {

inline constexpr double kRoundTripTol = 1e-9;
inline constexpr double kFiberTol = 1e-12;

/// Angle mod 1, normalized into [0, 1).
class CirclePoint {
public:
    constexpr CirclePoint() = default;
    explicit CirclePoint(double s) : s_(s - std::floor(s)) {
        if (s_ >= 1.0) s_ = 0.0;  // floor rounding for tiny negative inputs
    }
    double turns() const { return s_; }

private:
    double s_ = 0.0;
};

/// Distance on R/Z, in [0, 1/2].
inline double circular_distance(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

inline double circular_distance(CirclePoint a, CirclePoint b) { return circular_distance(a.turns(), b.turns()); }

/// Unordered triple of circle points, stored sorted by angle.
class SymTriple {
public:
    SymTriple() = default;
    SymTriple(CirclePoint a, CirclePoint b, CirclePoint c) : pts_{a, b, c} {
        std::sort(pts_.begin(), pts_.end(), [](CirclePoint x, CirclePoint y) { return x.turns() < y.turns(); });
    }
    SymTriple(double a, double b, double c) : SymTriple(CirclePoint(a), CirclePoint(b), CirclePoint(c)) {}

    const std::array<CirclePoint, 3>& points() const { return pts_; }
    double angle(std::size_t i) const { return pts_[i].turns(); }

private:
    std::array<CirclePoint, 3> pts_{};
};

/// Bottleneck distance between multisets on the circle, minimized over matchings.
inline double multiset_distance(const SymTriple& a, const SymTriple& b) {
    std::array<int, 3> perm{0, 1, 2};
    double best = 1.0;
    do {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, circular_distance(a.points()[static_cast<std::size_t>(i)],
                                                      b.points()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct SimplexPoint {
    double d1 = 0.0;
    double d2 = 0.0;
};

inline bool in_simplex(SimplexPoint p, double tol = kFiberTol) {
    return p.d1 >= -tol && p.d2 >= -tol && p.d1 + p.d2 <= 1.0 + tol;
}

/// theta(l1, l2, l3) = l1 l2 l3, i.e. the angle sum mod 1.
inline CirclePoint theta(const SymTriple& tr) { return CirclePoint(tr.angle(0) + tr.angle(1) + tr.angle(2)); }

/// Distance of theta(tr) from mu.
inline double fiber_error(const SymTriple& tr, CirclePoint mu = CirclePoint(0.0)) {
    return circular_distance(theta(tr), mu);
}

/// t(d1, d2) = (l, l e(d1), l e(d1 + d2)) with l = e(-(2 d1 + d2)/3); the
/// three exponents sum to zero, so the image lies over theta = 1.
inline SymTriple t_map(SimplexPoint p, double tol = kFiberTol) {
    if (!in_simplex(p, tol))
        throw DomainError("t_map: (" + std::to_string(p.d1) + ", " + std::to_string(p.d2) + ") is outside the 2-simplex");
    const double base = -(2.0 * p.d1 + p.d2) / 3.0;
    return SymTriple(base, p.d1 + base, p.d1 + p.d2 + base);
}

/// True iff (d1, d2) lies on an edge of the simplex, where t has a repeated point.
inline bool is_boundary_point(SimplexPoint p, double tol = kRoundTripTol) {
    return std::fabs(p.d1) <= tol || std::fabs(p.d2) <= tol || std::fabs(p.d1 + p.d2 - 1.0) <= tol;
}

/// True iff two of the three points coincide within tol.
inline bool has_repeated_point(const SymTriple& tr, double tol = kRoundTripTol) {
    return circular_distance(tr.points()[0], tr.points()[1]) <= tol ||
           circular_distance(tr.points()[1], tr.points()[2]) <= tol ||
           circular_distance(tr.points()[0], tr.points()[2]) <= tol;
}

/// Lift of three circle points to R with s1 <= s2 <= s3 <= s1 + 1. Each
/// coordinate is a fractional angle plus an integer winding; keeping the
/// windings as integers makes the shift law exact.
template <class Real>
struct OrderedLift {
    std::array<Real, 3> frac;
    std::array<long, 3> wind{0, 0, 0};

    Real value(std::size_t i) const { return frac[i] + Real(wind[i]); }
    long winding_sum() const { return wind[0] + wind[1] + wind[2]; }

    /// T(s1, s2, s3) = (s2, s3, s1 + 1); raises the lift sum by exactly one.
    OrderedLift shifted() const { return {{frac[1], frac[2], frac[0]}, {wind[1], wind[2], wind[0] + 1}}; }

    /// Inverse of T.
    OrderedLift unshifted() const { return {{frac[2], frac[0], frac[1]}, {wind[2] - 1, wind[0], wind[1]}}; }
};

namespace detail {

/// Walks the T-orbit of a sorted lift until the lift sums to zero.
/// `frac_sum` is the integer the fractional parts sum to.
template <class Real>
OrderedLift<Real> zero_sum_lift(OrderedLift<Real> lift, long frac_sum) {
    constexpr int kMaxSteps = 5;
    int steps = 0;
    while (lift.winding_sum() != -frac_sum) {
        if (++steps > kMaxSteps) throw FiberError("t_inverse: lift search did not terminate");
        const long before = lift.winding_sum();
        lift = lift.winding_sum() > -frac_sum ? lift.unshifted() : lift.shifted();
        const long delta = lift.winding_sum() - before;
        if (delta != 1 && delta != -1) throw FiberError("t_inverse: shift changed the lift sum by " + std::to_string(delta));
    }
    return lift;
}

}  // namespace detail

/// t'(l1, l2, l3) = (s2' - s1', s3' - s2') for the unique ordered lift in the
/// T-orbit whose coordinates sum to zero. Requires theta(tr) = 1 within tol.
inline SimplexPoint t_inverse(const SymTriple& tr, double tol = kRoundTripTol) {
    const double err = fiber_error(tr);
    if (err > tol) throw FiberError("t_inverse: theta is " + std::to_string(err) + " turns away from 1");
    OrderedLift<double> lift{{tr.angle(0), tr.angle(1), tr.angle(2)}};
    const long frac_sum = std::lround(tr.angle(0) + tr.angle(1) + tr.angle(2));
    lift = detail::zero_sum_lift(lift, frac_sum);
    const double d1 = (lift.frac[1] - lift.frac[0]) + static_cast<double>(lift.wind[1] - lift.wind[0]);
    const double d2 = (lift.frac[2] - lift.frac[1]) + static_cast<double>(lift.wind[2] - lift.wind[1]);
    return {d1, d2};
}

/// psi(mu e(s), tr) = tr rotated by s/3; a local trivialization over the arc |s| < 1/2 around mu.
inline SymTriple local_trivialization(CirclePoint mu, double s, const SymTriple& tr, double tol = kRoundTripTol) {
    if (!(s > -0.5 && s < 0.5)) throw DomainError("local_trivialization: s=" + std::to_string(s) + " not in (-1/2, 1/2)");
    const double err = fiber_error(tr, mu);
    if (err > tol) throw FiberError("local_trivialization: triple is not in the fiber over mu");
    const double shift = s / 3.0;
    return SymTriple(tr.angle(0) + shift, tr.angle(1) + shift, tr.angle(2) + shift);
}

// ---------------------------------------------------------------------------
// Exact path for rational angles.

/// r mod 1 in [0, 1).
inline Rational frac_exact(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt m = num % den;
    if (m < 0) m += den;
    return Rational(m, den);
}

using ExactTriple = std::array<Rational, 3>;

/// Sorted, normalized representative.
inline ExactTriple canonical(ExactTriple t) {
    for (auto& a : t) a = frac_exact(a);
    std::sort(t.begin(), t.end());
    return t;
}

inline ExactTriple t_map_exact(const Rational& d1, const Rational& d2) {
    if (d1 < 0 || d2 < 0 || d1 + d2 > 1) throw DomainError("t_map_exact: point outside the 2-simplex");
    const Rational base = -(2 * d1 + d2) / 3;
    return canonical({base, d1 + base, d1 + d2 + base});
}

inline std::array<Rational, 2> t_inverse_exact(const ExactTriple& input) {
    const auto tr = canonical(input);
    const Rational sum = tr[0] + tr[1] + tr[2];
    if (boost::multiprecision::denominator(sum) != 1) throw FiberError("t_inverse_exact: theta is not 1");
    OrderedLift<Rational> lift{{tr[0], tr[1], tr[2]}};
    lift = detail::zero_sum_lift(lift, static_cast<long>(boost::multiprecision::numerator(sum)));
    return {lift.value(1) - lift.value(0), lift.value(2) - lift.value(1)};
}

/// Points of a curve in Sym^3(S^1), parametrized by one angle.
enum class Curve {
    A1,         // (l, l, 1): the repeated point moves
    A2Section,  // (1, 1, l): a section of theta
    A1Fiber,    // (l, l, m) with l^2 m = 1: boundary of the fiber over 1
};

inline ExactTriple curve_point(Curve c, const Rational& a) {
    switch (c) {
        case Curve::A1: return canonical({a, a, Rational(0)});
        case Curve::A2Section: return canonical({Rational(0), Rational(0), a});
        case Curve::A1Fiber: return canonical({a, a, -2 * a});
    }
    return {};
}

/// Intersection points of two curves found by enumerating every parameter
/// k/q with q <= max_denominator on both curves and comparing multisets exactly.
inline std::set<ExactTriple> enumerate_intersections(Curve x, Curve y, unsigned max_denominator = 60) {
    std::set<ExactTriple> on_x, on_y;
    for (unsigned q = 1; q <= max_denominator; ++q) {
        for (unsigned k = 0; k < q; ++k) {
            const Rational a(k, q);
            on_x.insert(curve_point(x, a));
            on_y.insert(curve_point(y, a));
        }
    }
    std::set<ExactTriple> both;
    std::set_intersection(on_x.begin(), on_x.end(), on_y.begin(), on_y.end(), std::inserter(both, both.begin()));
    return both;
}

// ---------------------------------------------------------------------------
// Randomized property suite.

struct SuiteResult {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_roundtrip_error = 0.0;          // |t'(t(p)) - p|_inf
    double max_reverse_roundtrip_error = 0.0;  // multiset distance of t(t'(tr)) from tr
    double max_fiber_error = 0.0;              // theta(t(p)) from 1
    double max_trivialization_error = 0.0;     // theta(psi(mu e(s), tr)) from mu + s
    double max_order_error = 0.0;              // theta / t' under permuted input
    std::size_t boundary_checks = 0;
    std::size_t boundary_agreements = 0;
    std::size_t boundary_samples = 0;          // how many sampled points were on an edge
    std::size_t shift_law_checks = 0;
    bool shift_law_holds = true;
    std::size_t a1_meets_section = 0;
    std::size_t a1_meets_fiber_boundary = 0;

    bool passed(double roundtrip_tol = kRoundTripTol, double fiber_tol = kFiberTol) const {
        return max_roundtrip_error < roundtrip_tol && max_reverse_roundtrip_error < roundtrip_tol &&
               max_fiber_error < fiber_tol && max_trivialization_error < roundtrip_tol &&
               max_order_error < roundtrip_tol && boundary_agreements == boundary_checks && shift_law_holds &&
               a1_meets_section == 1 && a1_meets_fiber_boundary == 2;
    }
};

namespace detail {

inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform on the simplex; every fourth sample is pushed onto an edge so the
/// boundary characterization is exercised on both sides.
inline SimplexPoint sample_simplex(std::mt19937_64& rng, std::size_t i) {
    const double u = unit_double(rng);
    const double v = unit_double(rng);
    if (i % 4 == 0) {
        switch (rng() % 3) {
            case 0: return {0.0, u};
            case 1: return {u, 0.0};
            default: return {u, 1.0 - u};
        }
    }
    return u + v > 1.0 ? SimplexPoint{1.0 - u, 1.0 - v} : SimplexPoint{u, v};
}

}  // namespace detail

inline SuiteResult run_suite(std::size_t samples, std::uint64_t seed, double boundary_tol = kRoundTripTol) {
    SuiteResult r;
    r.samples = samples;
    r.seed = seed;
    std::mt19937_64 rng(seed);

    for (std::size_t i = 0; i < samples; ++i) {
        const SimplexPoint p = detail::sample_simplex(rng, i);
        const SymTriple tr = t_map(p);

        r.max_fiber_error = std::max(r.max_fiber_error, fiber_error(tr));

        const SimplexPoint back = t_inverse(tr);
        r.max_roundtrip_error = std::max({r.max_roundtrip_error, std::fabs(back.d1 - p.d1), std::fabs(back.d2 - p.d2)});

        const bool edge = is_boundary_point(p, boundary_tol);
        r.boundary_samples += edge ? 1 : 0;
        ++r.boundary_checks;
        if (edge == has_repeated_point(tr, boundary_tol)) ++r.boundary_agreements;

        // Random point of the fiber, built directly from two free angles.
        const double a = detail::unit_double(rng);
        const double b = detail::unit_double(rng);
        const SymTriple fiber_pt(a, b, -(a + b));
        const SymTriple again = t_map(t_inverse(fiber_pt));
        r.max_reverse_roundtrip_error = std::max(r.max_reverse_roundtrip_error, multiset_distance(again, fiber_pt));

        // Input order must not matter.
        const std::array<double, 3> raw{a, b, -(a + b)};
        std::array<int, 3> perm{0, 1, 2};
        const SimplexPoint ref = t_inverse(fiber_pt);
        do {
            const SymTriple permuted(raw[static_cast<std::size_t>(perm[0])], raw[static_cast<std::size_t>(perm[1])],
                                     raw[static_cast<std::size_t>(perm[2])]);
            const SimplexPoint q = t_inverse(permuted);
            r.max_order_error = std::max({r.max_order_error, std::fabs(q.d1 - ref.d1), std::fabs(q.d2 - ref.d2),
                                          circular_distance(theta(permuted), theta(fiber_pt))});
        } while (std::next_permutation(perm.begin(), perm.end()));

        // Two hops of the local trivialization: over 1, then over the new base point.
        const double s1 = std::max(detail::unit_double(rng) - 0.5, -0.4999999);
        const double s2 = std::max(detail::unit_double(rng) - 0.5, -0.4999999);
        const SymTriple hop1 = local_trivialization(CirclePoint(0.0), s1, tr);
        const SymTriple hop2 = local_trivialization(theta(hop1), s2, hop1);
        r.max_trivialization_error = std::max({r.max_trivialization_error, circular_distance(theta(hop1).turns(), s1),
                                               circular_distance(theta(hop2).turns(), s1 + s2)});

        // Shift law on an arbitrary ordered lift.
        OrderedLift<double> lift{{tr.angle(0), tr.angle(1), tr.angle(2)}, {0, 0, 0}};
        for (int step = 0; step < 3; ++step) {
            const auto next = lift.shifted();
            ++r.shift_law_checks;
            if (next.winding_sum() != lift.winding_sum() + 1) r.shift_law_holds = false;
            lift = next;
        }
    }

    r.a1_meets_section = enumerate_intersections(Curve::A1, Curve::A2Section).size();
    r.a1_meets_fiber_boundary = enumerate_intersections(Curve::A1, Curve::A1Fiber).size();
    return r;
}

}  // namespace msym::fibration
