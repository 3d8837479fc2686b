#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ovalkit/detail/fourier_forms.hpp"
#include "ovalkit/geometry.hpp"
#include "ovalkit/support_fourier.hpp"

namespace ovalkit {

/// The cusp condition vanishes identically (point caustic of a centrally
/// symmetric oval): reported, not resolved.
class DegenerateRoot : public std::runtime_error {
public:
    DegenerateRoot() : std::runtime_error("cusp condition vanishes on an interval (degenerate equidistant)") {}
};

/// The affine lambda-equidistant of a base oval, evaluated through
/// P_lambda(theta) = lambda p(theta) - (1 - lambda) p(theta + pi).
struct EquidistantSupport {
    FourierSupport base;
    double lambda = 0.5;
};

/// Summary of one equidistant: oriented area, length estimate and cusp angles.
/// cusp_thetas is empty for a degenerate (point) caustic.
struct EquidistantReport {
    double lambda = 0.5;
    double oriented_area = 0.0;
    double length_estimate = 0.0;
    std::vector<double> cusp_thetas;
    bool is_wigner = false;
};

inline PolarTangentialSample evaluate(const EquidistantSupport& eq, double theta) {
    const PolarTangentialSample s = evaluate(eq.base, theta);
    const PolarTangentialSample t = evaluate(eq.base, theta + std::numbers::pi);
    const double l = eq.lambda, m = 1.0 - eq.lambda;
    const double p = l * s.p - m * t.p;
    const double dp = l * s.dp - m * t.dp;
    const double ddp = l * s.ddp - m * t.ddp;
    return {s.theta, p, dp, ddp, p + ddp};
}

/// gamma_lambda(theta) = lambda gamma(theta) + (1 - lambda) gamma(theta + pi).
inline PlanarPoint equidistant_point(const EquidistantSupport& eq, double theta) {
    const PlanarPoint a = curve_point(eq.base, theta);
    const PlanarPoint b = curve_point(eq.base, theta + std::numbers::pi);
    const double l = eq.lambda, m = 1.0 - eq.lambda;
    return {l * a.x + m * b.x, l * a.y + m * b.y};
}

namespace detail {

// Signed speed of gamma_lambda: |gamma_lambda'| = |g| with
//   g(theta) = lambda rho(theta) - (1 - lambda) rho(theta + pi).
// In coefficients: odd harmonics pass through, even ones scale by (2 lambda - 1).
inline TrigPoly equidistant_speed_poly(const EquidistantSupport& eq) {
    TrigPoly f;
    const double l = eq.lambda;
    f.c0 = (2.0 * l - 1.0) * eq.base.a0();
    f.terms.reserve(eq.base.terms().size());
    for (const auto& t : eq.base.terms()) {
        const double mult = (t.n % 2 == 1) ? 1.0 : (2.0 * l - 1.0);
        const double w = (1.0 - double(t.n) * t.n) * mult;
        f.terms.push_back({t.n, w * t.a, w * t.b});
    }
    return f;
}

inline double bisect_root(const TrigPoly& f, double lo, double hi, double f_lo, double width_tol) {
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 100 && (hi - lo) > width_tol; ++i) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        const double fm = eval_trig(f, mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Sign-change roots of f on [0, hi_angle), hi_angle in {pi, 2*pi}. Scans a
/// uniform grid over the full period (so theta + pi reuses nodes) and bisects
/// each bracket. Throws DegenerateRoot when f vanishes identically relative to
/// `zero_scale`.
inline std::vector<double> sign_change_roots(const TrigPoly& f, double hi_angle, int intervals,
                                             double zero_scale, double width_tol) {
    if (intervals % 2)
        ++intervals;
    const std::vector<double> v = sample_trig(f, intervals);
    double max_abs = 0.0;
    for (double x : v)
        max_abs = std::max(max_abs, std::abs(x));
    if (max_abs <= 1e-12 * zero_scale)
        throw DegenerateRoot();

    const double h = two_pi / intervals;
    const int last = (hi_angle < two_pi - 0.5 * h) ? intervals / 2 : intervals;
    std::vector<double> roots;
    for (int k = 0; k < last; ++k) {
        const double f0 = v[static_cast<std::size_t>(k)];
        const double f1 = v[static_cast<std::size_t>((k + 1) % intervals)];
        if (f0 == 0.0)
            roots.push_back(k * h);
        else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0))
            roots.push_back(bisect_root(f, k * h, (k + 1) * h, f0, width_tol));
    }
    return roots;
}

}  // namespace detail

/// Psi = 1/2 integral of p(theta) p(theta+pi) - p'(theta) p'(theta+pi); the
/// cross term controlling equidistant areas, in Fourier closed form.
inline double psi_functional(const FourierSupport& support) {
    return detail::parseval_psi(support);
}

/// Oriented area of E_lambda(M):
///   (2 lambda^2 - 2 lambda + 1) A - 2 lambda (1 - lambda) Psi,
/// halved at lambda = 1/2 where the [0, 2*pi] parameterization double-covers
/// the Wigner caustic.
inline double oriented_area(const EquidistantSupport& eq) {
    const double l = eq.lambda;
    if (l == 0.0 || l == 1.0)
        return detail::parseval_area(eq.base);
    const double area = detail::parseval_area(eq.base);
    const double psi = detail::parseval_psi(eq.base);
    const double raw = (2.0 * l * l - 2.0 * l + 1.0) * area - 2.0 * l * (1.0 - l) * psi;
    return l == 0.5 ? 0.5 * raw : raw;
}

/// Angles where E_lambda(M) is singular: sign changes of
/// g(theta) = lambda rho(theta) - (1 - lambda) rho(theta + pi), refined by
/// bisection. Reported on [0, 2*pi), or [0, pi) at lambda = 1/2 where the
/// double cover repeats every root at theta + pi.
inline std::vector<double> cusp_parameters(const EquidistantSupport& eq) {
    const detail::TrigPoly g = detail::equidistant_speed_poly(eq);
    const int intervals = std::max(4096, 64 * eq.base.max_harmonic());
    const double hi = (eq.lambda == 0.5) ? std::numbers::pi : detail::two_pi;
    return detail::sign_change_roots(g, hi, intervals, eq.base.a0(), 1e-15);
}

/// Length of E_lambda(M) by composite Simpson of |gamma_lambda'|, with panels
/// split at the sign changes of the speed; halved at lambda = 1/2 (double
/// cover). A degenerate (point) caustic has length 0.
inline double equidistant_length(const EquidistantSupport& eq, int count) {
    if (count < 8 || count % 2 != 0)
        throw std::invalid_argument("equidistant_length needs even count >= 8");
    const detail::TrigPoly g = detail::equidistant_speed_poly(eq);
    const int scan = std::max(512, 64 * eq.base.max_harmonic());

    std::vector<double> roots;
    try {
        roots = detail::sign_change_roots(g, detail::two_pi, scan, eq.base.a0(), 1e-9);
    } catch (const DegenerateRoot&) {
        return 0.0;
    }

    auto simpson = [&](double a, double b, int n) {
        if (n % 2)
            ++n;
        const double h = (b - a) / n;
        const std::vector<double> v = detail::sample_trig_range(g, a, h, n);
        double sum = std::abs(v.front()) + std::abs(v.back());
        for (int k = 1; k < n; ++k)
            sum += std::abs(v[static_cast<std::size_t>(k)]) * (k % 2 == 1 ? 4.0 : 2.0);
        return sum * h / 3.0;
    };

    double total = 0.0;
    if (roots.empty()) {
        const int n = std::max(count, 2 * g.degree() + 2);
        total = simpson(0.0, detail::two_pi, n);
    } else {
        const std::size_t m = roots.size();
        for (std::size_t i = 0; i < m; ++i) {
            const double a = roots[i];
            const double b = (i + 1 < m) ? roots[i + 1] : roots[0] + detail::two_pi;
            const int n = std::max(8, static_cast<int>(std::lround(count * (b - a) / detail::two_pi)));
            total += simpson(a, b, n);
        }
    }
    return eq.lambda == 0.5 ? 0.5 * total : total;
}

/// Closed polyline of gamma_lambda at count uniformly spaced angles.
inline Polyline sample_equidistant(const EquidistantSupport& eq, int count) {
    if (count < 4)
        throw std::invalid_argument("sample_equidistant needs count >= 4");
    if (count % 2)
        ++count;  // theta + pi must land on a node
    const detail::SupportGrid base = detail::sample_support(eq.base, count);
    detail::SupportGrid shifted;
    const auto n = static_cast<std::size_t>(count);
    shifted.p.resize(n);
    shifted.dp.resize(n);
    const double l = eq.lambda, m = 1.0 - eq.lambda;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t opp = (k + n / 2) % n;
        shifted.p[k] = l * base.p[k] - m * base.p[opp];
        shifted.dp[k] = l * base.dp[k] - m * base.dp[opp];
    }
    return detail::grid_to_polyline(shifted);
}

/// The constant-width family p(theta) = cos((2n+1) theta) + (2n+1)^2 + 2,
/// whose Wigner caustic has exactly 2n+1 cusps.
inline FourierSupport make_cusp_family(int n) {
    if (n < 1)
        throw std::invalid_argument("cusp family needs n >= 1");
    const int m = 2 * n + 1;
    return FourierSupport(double(m) * m + 2.0, {{m, 1.0, 0.0}});
}

inline EquidistantReport equidistant_report(const FourierSupport& support, double lambda, int count = 4096) {
    EquidistantReport r;
    r.lambda = lambda;
    r.is_wigner = lambda == 0.5;
    const EquidistantSupport eq{support, lambda};
    r.oriented_area = oriented_area(eq);
    r.length_estimate = equidistant_length(eq, count);
    try {
        r.cusp_thetas = cusp_parameters(eq);
    } catch (const DegenerateRoot&) {
        r.cusp_thetas.clear();
    }
    return r;
}

}  // namespace ovalkit
