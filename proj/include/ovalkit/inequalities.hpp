#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ovalkit/detail/fourier_forms.hpp"
#include "ovalkit/equidistants.hpp"
#include "ovalkit/support_fourier.hpp"

namespace ovalkit {

/// An equidistant area escaped its theorem bounds; mathematically impossible
/// for a valid oval, so this always indicates an implementation bug.
class BoundViolation : public std::runtime_error {
public:
    explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

class NotConstantWidth : public std::runtime_error {
public:
    NotConstantWidth() : std::runtime_error("operation requires a curve of constant width") {}
};

/// Global closed-form metrics of an oval.
struct CurveMetrics {
    double length = 0.0;            // L
    double area = 0.0;              // A
    double psi = 0.0;               // Psi
    double wigner_area = 0.0;       // oriented area of the Wigner caustic (<= 0)
    double classic_deficit = 0.0;   // L^2 - 4 pi A
    double improved_deficit = 0.0;  // L^2 - 4 pi A - 8 pi |wigner_area|
};

/// Cauchy's formula in Fourier coefficients: L = 2 pi a0.
inline double length_closed_form(const FourierSupport& support) {
    return 2.0 * std::numbers::pi * support.a0();
}

/// Blaschke's formula in Fourier coefficients:
/// A = pi a0^2 - (pi/2) sum_{n>=2} (n^2-1)(a_n^2 + b_n^2).
inline double area_closed_form(const FourierSupport& support) {
    return detail::parseval_area(support);
}

inline CurveMetrics compute_metrics(const FourierSupport& support) {
    CurveMetrics m;
    m.length = length_closed_form(support);
    m.area = area_closed_form(support);
    m.psi = psi_functional(support);
    m.wigner_area = oriented_area({support, 0.5});
    m.classic_deficit = m.length * m.length - 4.0 * std::numbers::pi * m.area;
    m.improved_deficit = m.classic_deficit - 8.0 * std::numbers::pi * std::abs(m.wigner_area);
    return m;
}

struct ImprovedIsoperimetricVerdict {
    bool holds = false;     // L^2 >= 4 pi A + 8 pi |wigner_area| up to roundoff
    double margin = 0.0;    // the improved deficit
    bool equality = false;  // margin within roundoff of zero (constant width)
};

/// L^2 >= 4 pi A + 8 pi |A_wigner|, equality exactly for constant-width ovals.
inline ImprovedIsoperimetricVerdict improved_isoperimetric_check(const CurveMetrics& metrics) {
    const double eps = 1e-9 * metrics.length * metrics.length;
    ImprovedIsoperimetricVerdict v;
    v.margin = metrics.improved_deficit;
    v.holds = v.margin >= -eps;
    v.equality = std::abs(v.margin) <= eps;
    return v;
}

enum class BoundsRegime {
    interior,  // lambda in (0, 1/2) or (1/2, 1)
    wigner,    // lambda = 1/2; the bound constrains twice the caustic area
    exterior,  // lambda outside [0, 1]
    identity,  // lambda in {0, 1}: E_lambda = M
};

struct BoundsReport {
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    BoundsRegime regime = BoundsRegime::identity;
};

/// Oriented-area bounds for E_lambda(M):
///   interior:  A - lambda(1-lambda) L^2/pi <= area <= (2 lambda - 1)^2 A
///   wigner:    A - L^2/(4 pi) <= 2 area <= 0
///   exterior:  bounds swapped relative to interior.
/// Throws BoundViolation when the computed value escapes the bounds.
inline BoundsReport bounds_check(const FourierSupport& support, double lambda) {
    const double area = area_closed_form(support);
    const double length = length_closed_form(support);
    constexpr double pi = std::numbers::pi;

    BoundsReport r;
    if (lambda == 0.0 || lambda == 1.0) {
        r.regime = BoundsRegime::identity;
        r.lower = r.upper = r.value = area;
        return r;
    }
    if (lambda == 0.5) {
        r.regime = BoundsRegime::wigner;
        r.value = 2.0 * oriented_area({support, 0.5});
        r.lower = area - length * length / (4.0 * pi);
        r.upper = 0.0;
    } else {
        const double inner = area - lambda * (1.0 - lambda) * length * length / pi;
        const double outer = (2.0 * lambda - 1.0) * (2.0 * lambda - 1.0) * area;
        r.value = oriented_area({support, lambda});
        if (lambda > 0.0 && lambda < 1.0) {
            r.regime = BoundsRegime::interior;
            r.lower = inner;
            r.upper = outer;
        } else {
            r.regime = BoundsRegime::exterior;
            r.lower = outer;
            r.upper = inner;
        }
    }
    const double eps = 1e-9 * std::max({std::abs(r.lower), std::abs(r.upper), area});
    if (r.value < r.lower - eps || r.value > r.upper + eps)
        throw BoundViolation("equidistant area outside theorem bounds at lambda = " + std::to_string(lambda));
    return r;
}

/// Constant width <=> all even Fourier harmonics (n >= 2 even) vanish.
/// Classified on the coefficients, not on the deficit.
inline bool is_constant_width(const FourierSupport& support, double tol = 1e-12) {
    for (const auto& t : support.terms())
        if (t.n >= 2 && t.n % 2 == 0 && t.amplitude() > tol * support.a0())
            return false;
    return true;
}

struct BarbierReport {
    double width = 0.0;
    double length = 0.0;
    double residual = 0.0;  // |length - pi * width|
};

/// Barbier: a constant-width curve of width w has length pi w.
inline BarbierReport barbier_check(const FourierSupport& support) {
    if (!is_constant_width(support))
        throw NotConstantWidth();
    BarbierReport r;
    r.width = 2.0 * support.a0();
    r.length = length_closed_form(support);
    r.residual = std::abs(r.length - std::numbers::pi * r.width);
    return r;
}

/// Constant-width area identity: A = pi w^2/4 - 2 |A_wigner|. Returns the
/// residual |A - (pi w^2/4 - 2 |A_wigner|)|.
inline double constant_width_area_identity(const FourierSupport& support) {
    if (!is_constant_width(support))
        throw NotConstantWidth();
    const double w = 2.0 * support.a0();
    const double area = area_closed_form(support);
    const double wigner = oriented_area({support, 0.5});
    return std::abs(area - (std::numbers::pi * w * w / 4.0 - 2.0 * std::abs(wigner)));
}

}  // namespace ovalkit
