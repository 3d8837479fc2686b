#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ovalkit/detail/trig.hpp"

namespace ovalkit {

/// The curve described by a support function fails the convexity check
/// (radius of curvature rho = p + p'' is not strictly positive).
class NonConvexCurve : public std::runtime_error {
public:
    NonConvexCurve(double theta, double min_rho)
        : std::runtime_error("non-convex support function: rho(" + std::to_string(theta) +
                             ") = " + std::to_string(min_rho)),
          theta_(theta),
          min_rho_(min_rho) {}

    double theta() const { return theta_; }
    double min_rho() const { return min_rho_; }

private:
    double theta_;
    double min_rho_;
};

/// One Fourier harmonic of a support function: a*cos(n*theta) + b*sin(n*theta).
struct HarmonicTerm {
    int n = 1;
    double a = 0.0;
    double b = 0.0;

    double amplitude() const { return std::hypot(a, b); }
};

/// Pointwise data of a support function in polar tangential coordinates.
/// rho = p + ddp by construction; for a valid oval rho > 0 everywhere.
struct PolarTangentialSample {
    double theta;
    double p;
    double dp;
    double ddp;
    double rho;
};

namespace detail {

inline TrigPoly rho_poly(double a0, const std::vector<HarmonicTerm>& terms) {
    TrigPoly f;
    f.c0 = a0;
    f.terms.reserve(terms.size());
    for (const auto& t : terms) {
        double m = 1.0 - double(t.n) * double(t.n);
        f.terms.push_back({t.n, m * t.a, m * t.b});
    }
    return f;
}

struct GridMinimum {
    double theta;
    double value;
};

/// Minimum of a trig polynomial over [0, 2*pi): dense grid, then golden-section
/// refinement of the bracketing interval around each grid minimum candidate.
inline GridMinimum min_trig(const TrigPoly& f, int grid_size) {
    std::vector<double> v = sample_trig(f, grid_size);
    int best = 0;
    for (int i = 1; i < grid_size; ++i)
        if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(best)])
            best = i;
    const double h = two_pi / grid_size;
    auto eval = [&](double theta) { return eval_trig(f, theta); };
    double arg = golden_min(eval, (best - 1) * h, (best + 1) * h);
    double val = eval(arg);
    if (v[static_cast<std::size_t>(best)] <= val) {
        val = v[static_cast<std::size_t>(best)];
        arg = best * h;
    }
    return {canonical_angle(arg), val};
}

}  // namespace detail

/// A truncated Fourier series of a Minkowski support function
///     p(theta) = a0 + sum_n (a_n cos(n theta) + b_n sin(n theta)),
/// the single source of truth for a curve. Construction checks a0 > 0, that the
/// harmonic indices are distinct and >= 1, and certifies convexity (min rho > 0)
/// on a dense grid with local refinement. Immutable after construction.
class FourierSupport {
public:
    FourierSupport(double a0, std::vector<HarmonicTerm> terms) : FourierSupport(a0, std::move(terms), true) {}

    /// Skips the convexity grid certificate. The basic coefficient checks
    /// still run; min_rho() is NaN. The instance may describe a non-convex
    /// curve, so only pass it to operations that tolerate that.
    static FourierSupport unchecked(double a0, std::vector<HarmonicTerm> terms) {
        return FourierSupport(a0, std::move(terms), false);
    }

    double a0() const { return a0_; }
    const std::vector<HarmonicTerm>& terms() const { return terms_; }

    int max_harmonic() const { return max_n_; }

    /// Certified minimum of rho; NaN for unchecked construction.
    double min_rho() const { return min_rho_; }
    double min_rho_theta() const { return min_rho_theta_; }

    /// True when the certificate found min rho below 1e-9 * a0 (near-singular oval).
    bool near_singular() const { return !std::isnan(min_rho_) && min_rho_ < 1e-9 * a0_; }

private:
    FourierSupport(double a0, std::vector<HarmonicTerm> terms, bool certify)
        : a0_(a0), terms_(std::move(terms)) {
        if (!(a0_ > 0.0))
            throw std::invalid_argument("support function needs a0 > 0");
        std::sort(terms_.begin(), terms_.end(), [](const HarmonicTerm& x, const HarmonicTerm& y) { return x.n < y.n; });
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].n < 1)
                throw std::invalid_argument("harmonic index must be >= 1");
            if (i > 0 && terms_[i].n == terms_[i - 1].n)
                throw std::invalid_argument("duplicate harmonic index " + std::to_string(terms_[i].n));
            if (!std::isfinite(terms_[i].a) || !std::isfinite(terms_[i].b))
                throw std::invalid_argument("non-finite harmonic coefficient");
        }
        max_n_ = terms_.empty() ? 0 : terms_.back().n;
        if (certify) {
            auto m = detail::min_trig(detail::rho_poly(a0_, terms_), default_grid());
            min_rho_ = m.value;
            min_rho_theta_ = m.theta;
            if (min_rho_ <= 0.0)
                throw NonConvexCurve(min_rho_theta_, min_rho_);
        } else {
            min_rho_ = std::numeric_limits<double>::quiet_NaN();
            min_rho_theta_ = std::numeric_limits<double>::quiet_NaN();
        }
    }

    int default_grid() const { return std::max(1024, 64 * max_n_); }

    double a0_;
    std::vector<HarmonicTerm> terms_;
    int max_n_ = 0;
    double min_rho_;
    double min_rho_theta_;
};

/// Term-wise evaluation of p, p', p'' and rho = p + p'' at one angle.
inline PolarTangentialSample evaluate(const FourierSupport& support, double theta) {
    const double t = detail::canonical_angle(theta);
    double p = support.a0();
    double dp = 0.0;
    double ddp = 0.0;
    for (const auto& h : support.terms()) {
        const double c = std::cos(h.n * t);
        const double s = std::sin(h.n * t);
        const double n = h.n;
        p += h.a * c + h.b * s;
        dp += n * (-h.a * s + h.b * c);
        ddp -= n * n * (h.a * c + h.b * s);
    }
    return {t, p, dp, ddp, p + ddp};
}

/// Width in direction theta: w(theta) = p(theta) + p(theta + pi).
inline double width(const FourierSupport& support, double theta) {
    return evaluate(support, theta).p + evaluate(support, theta + std::numbers::pi).p;
}

/// Re-certifies convexity on a caller-chosen grid (with local refinement) and
/// returns the minimum of rho. Throws NonConvexCurve when min rho <= 0.
inline double validate_convexity(const FourierSupport& support, int grid_size) {
    if (grid_size < 32 * std::max(1, support.max_harmonic()))
        throw std::invalid_argument("convexity grid too coarse for the highest harmonic");
    auto m = detail::min_trig(detail::rho_poly(support.a0(), support.terms()), grid_size);
    if (m.value <= 0.0)
        throw NonConvexCurve(m.theta, m.value);
    return m.value;
}

}  // namespace ovalkit
