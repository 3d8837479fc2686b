#pragma once

#include <numbers>

#include "ovalkit/support_fourier.hpp"

// Parseval closed forms over the support coefficients. Each formula lives here
// once; the public operations in the inequality/equidistant/stability headers
// are thin wrappers. Terms with n < 2 never contribute (n^2 - 1 = 0 for n = 1),
// so the sums skip them and translation invariance is exact.

namespace ovalkit::detail {

inline double parseval_area(const FourierSupport& s) {
    constexpr double pi = std::numbers::pi;
    double sum = 0.0;
    for (const auto& t : s.terms())
        if (t.n >= 2)
            sum += (double(t.n) * t.n - 1.0) * (t.a * t.a + t.b * t.b);
    return pi * s.a0() * s.a0() - 0.5 * pi * sum;
}

inline double parseval_psi(const FourierSupport& s) {
    constexpr double pi = std::numbers::pi;
    double sum = 0.0;
    for (const auto& t : s.terms())
        if (t.n >= 2) {
            double w = (double(t.n) * t.n - 1.0) * (t.a * t.a + t.b * t.b);
            sum += (t.n % 2 == 0) ? w : -w;
        }
    return pi * s.a0() * s.a0() - 0.5 * pi * sum;
}

inline double parseval_phi(const FourierSupport& s) {
    constexpr double pi = std::numbers::pi;
    double sum = 0.0;
    for (const auto& t : s.terms())
        if (t.n >= 2 && t.n % 2 == 0)
            sum += (double(t.n) * t.n - 1.0) * (t.a * t.a + t.b * t.b);
    return 2.0 * pi * pi * sum;
}

}  // namespace ovalkit::detail
