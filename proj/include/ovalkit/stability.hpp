#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ovalkit/detail/fourier_forms.hpp"
#include "ovalkit/detail/trig.hpp"
#include "ovalkit/support_fourier.hpp"

namespace ovalkit {

enum class EqualityClass {
    constant_width,      // all even harmonics vanish; both margins zero
    l2_equality_family,  // n = 2 is the only even harmonic; the L2 margin is zero
    strict,
};

/// Deviation of an oval from its associated constant-width curve, and the
/// margins of both stability inequalities.
struct StabilityReport {
    double phi = 0.0;         // L^2 - 4 pi A - 8 pi |A_wigner|
    double d_inf = 0.0;       // Hausdorff deviation from W
    double d_2 = 0.0;         // L2 deviation from W
    double margin_max = 0.0;  // phi - 4 pi^2 d_inf^2
    double margin_l2 = 0.0;   // phi - 6 pi d_2^2
    EqualityClass equality_class = EqualityClass::strict;
};

/// The Wigner-caustic-type curve associated with M:
///   p_W(theta) = L/(2 pi) + (p(theta) - p(theta + pi))/2,
/// i.e. a0 and the odd harmonics survive, the even ones are dropped. The
/// result has constant width, the length of M and the same Wigner caustic.
/// It is NOT always convex: rho_W(theta) = a0 + (rho(theta) - rho(theta+pi))/2
/// dips below zero when the curvature radius of M differs by more than
/// L/pi between some antipodal pair. The deviation measures and stability
/// margins below are coefficient identities and do not need convexity, so no
/// certificate is run here; call validate_convexity on the result if you rely
/// on it being an oval.
inline FourierSupport wigner_type_curve(const FourierSupport& support) {
    std::vector<HarmonicTerm> odd;
    odd.reserve(support.terms().size());
    for (const auto& t : support.terms())
        if (t.n % 2 == 1)
            odd.push_back(t);
    return FourierSupport::unchecked(support.a0(), std::move(odd));
}

namespace detail {

inline TrigPoly support_difference(const FourierSupport& a, const FourierSupport& b) {
    TrigPoly f;
    f.c0 = a.a0() - b.a0();
    std::map<int, TrigTerm> merged;
    for (const auto& t : a.terms()) {
        auto& m = merged[t.n];
        m.n = t.n;
        m.c += t.a;
        m.d += t.b;
    }
    for (const auto& t : b.terms()) {
        auto& m = merged[t.n];
        m.n = t.n;
        m.c -= t.a;
        m.d -= t.b;
    }
    for (const auto& [n, t] : merged)
        if (t.c != 0.0 || t.d != 0.0)
            f.terms.push_back(t);
    return f;
}

}  // namespace detail

/// Hausdorff distance of two convex bodies via their support functions:
/// max over theta of |p_a - p_b| (dense scan plus local refinement).
inline double d_infinity(const FourierSupport& a, const FourierSupport& b) {
    return detail::max_abs_trig(detail::support_difference(a, b), 8192);
}

/// L2 distance of support functions, exact via Parseval on the coefficient
/// difference: d2^2 = 2 pi (a0_a - a0_b)^2 + pi sum (da_n^2 + db_n^2).
inline double d_two(const FourierSupport& a, const FourierSupport& b) {
    const detail::TrigPoly diff = detail::support_difference(a, b);
    double sum = 2.0 * diff.c0 * diff.c0;
    for (const auto& t : diff.terms)
        sum += t.c * t.c + t.d * t.d;
    return std::sqrt(std::numbers::pi * sum);
}

/// The improved isoperimetric deficit in Fourier form:
/// Phi = 2 pi^2 sum_{n even >= 2} (n^2 - 1)(a_n^2 + b_n^2).
inline double phi(const FourierSupport& support) {
    return detail::parseval_phi(support);
}

inline StabilityReport stability_check(const FourierSupport& support) {
    constexpr double pi = std::numbers::pi;
    StabilityReport r;
    r.phi = phi(support);
    const FourierSupport w = wigner_type_curve(support);
    r.d_inf = d_infinity(support, w);
    r.d_2 = d_two(support, w);
    r.margin_max = r.phi - 4.0 * pi * pi * r.d_inf * r.d_inf;
    r.margin_l2 = r.phi - 6.0 * pi * r.d_2 * r.d_2;

    const double tol = 1e-12 * support.a0();
    bool any_even = false;
    bool even_beyond_two = false;
    for (const auto& t : support.terms()) {
        if (t.n >= 2 && t.n % 2 == 0 && t.amplitude() > tol) {
            any_even = true;
            if (t.n != 2)
                even_beyond_two = true;
        }
    }
    r.equality_class = !any_even            ? EqualityClass::constant_width
                       : !even_beyond_two   ? EqualityClass::l2_equality_family
                                            : EqualityClass::strict;
    return r;
}

struct OddPartMaxima {
    double max_odd = 0.0;
    double max_full = 0.0;
};

/// sup-norm of the odd-harmonic part of a trigonometric polynomial never
/// exceeds the sup-norm of the whole polynomial. Returns both maxima (dense
/// scan plus refinement) and checks the inequality.
inline OddPartMaxima odd_part_max_bound(const std::vector<HarmonicTerm>& coefficients) {
    detail::TrigPoly full, odd;
    for (const auto& t : coefficients) {
        if (t.n < 1)
            throw std::invalid_argument("harmonic index must be >= 1");
        full.terms.push_back({t.n, t.a, t.b});
        if (t.n % 2 == 1)
            odd.terms.push_back({t.n, t.a, t.b});
    }
    OddPartMaxima m;
    m.max_full = detail::max_abs_trig(full, 8192);
    m.max_odd = detail::max_abs_trig(odd, 8192);
    if (m.max_odd > m.max_full + 1e-10)
        throw std::logic_error("odd-part maximum exceeded the full maximum");
    return m;
}

}  // namespace ovalkit
