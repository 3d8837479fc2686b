#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ovalkit/support_fourier.hpp"

namespace ovalkit {

class OpenPolyline : public std::runtime_error {
public:
    OpenPolyline() : std::runtime_error("operation requires a closed polyline") {}
};

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Sampled curve geometry. Closed polylines need at least 3 points.
struct Polyline {
    std::vector<PlanarPoint> points;
    bool closed = true;
};

/// gamma(theta) = (p cos - p' sin, p sin + p' cos).
inline PlanarPoint curve_point(const FourierSupport& support, double theta) {
    const PolarTangentialSample s = evaluate(support, theta);
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    return {s.p * c - s.dp * sn, s.p * sn + s.dp * c};
}

namespace detail {

/// p and p' on the uniform grid theta_k = 2*pi*k/count.
struct SupportGrid {
    std::vector<double> p, dp;
};

inline SupportGrid sample_support(const FourierSupport& support, int count) {
    SupportGrid g;
    g.p.assign(static_cast<std::size_t>(count), support.a0());
    g.dp.assign(static_cast<std::size_t>(count), 0.0);
    const double step = two_pi / count;
    for (const auto& h : support.terms()) {
        HarmonicRotor r(h.n, step);
        const double n = h.n;
        for (int k = 0; k < count; ++k) {
            g.p[static_cast<std::size_t>(k)] += h.a * r.c + h.b * r.s;
            g.dp[static_cast<std::size_t>(k)] += n * (-h.a * r.s + h.b * r.c);
            r.advance();
        }
    }
    return g;
}

/// Polyline from per-node (p, p') values on the uniform grid.
inline Polyline grid_to_polyline(const SupportGrid& g) {
    const int count = static_cast<int>(g.p.size());
    Polyline poly;
    poly.points.resize(static_cast<std::size_t>(count));
    poly.closed = true;
    const double step = two_pi / count;
    HarmonicRotor unit(1, step);
    for (int k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        poly.points[i] = {g.p[i] * unit.c - g.dp[i] * unit.s, g.p[i] * unit.s + g.dp[i] * unit.c};
        unit.advance();
    }
    return poly;
}

}  // namespace detail

/// Closed polyline of gamma at count uniformly spaced tangent angles.
inline Polyline sample_curve(const FourierSupport& support, int count) {
    if (count < 3)
        throw std::invalid_argument("sample_curve needs count >= 3");
    return detail::grid_to_polyline(detail::sample_support(support, count));
}

/// Shoelace (oriented) area 1/2 sum (x_i y_{i+1} - x_{i+1} y_i); positive for
/// counterclockwise orientation.
inline double polyline_signed_area(const Polyline& poly) {
    if (!poly.closed)
        throw OpenPolyline();
    const std::size_t n = poly.points.size();
    if (n < 3)
        throw std::invalid_argument("closed polyline needs at least 3 points");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanarPoint& a = poly.points[i];
        const PlanarPoint& b = poly.points[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return 0.5 * sum;
}

inline double polyline_length(const Polyline& poly) {
    const std::size_t n = poly.points.size();
    if (n < 2)
        return 0.0;
    double len = 0.0;
    const std::size_t last = poly.closed ? n : n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        const PlanarPoint& a = poly.points[i];
        const PlanarPoint& b = poly.points[(i + 1) % n];
        len += std::hypot(b.x - a.x, b.y - a.y);
    }
    return len;
}

enum class QuadratureRule {
    trapezoid,  // uniform nodes; exact (to roundoff) for trig polynomials of degree < count
    simpson,    // composite Simpson; generic fallback for non-polynomial integrands
};

/// Integral of a 2*pi-periodic function over one period.
template <class F>
double integrate_periodic(F&& f, int count, QuadratureRule rule = QuadratureRule::trapezoid) {
    if (count < 8 || count % 2 != 0)
        throw std::invalid_argument("integrate_periodic needs even count >= 8");
    const double h = detail::two_pi / count;
    if (rule == QuadratureRule::trapezoid) {
        double sum = 0.0;
        for (int k = 0; k < count; ++k)
            sum += f(k * h);
        return sum * h;
    }
    // Simpson; f(2*pi) = f(0) by periodicity.
    double sum = f(0.0) * 2.0;
    for (int k = 1; k < count; ++k)
        sum += f(k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace ovalkit
