#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace ovalkit::detail {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi).
inline double canonical_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0)
        t += two_pi;
    if (t >= two_pi)  // fmod can round up to 2*pi for inputs just below a multiple
        t = 0.0;
    return t;
}

/// One harmonic of a real trigonometric polynomial: c*cos(n*theta) + d*sin(n*theta).
struct TrigTerm {
    int n = 1;
    double c = 0.0;
    double d = 0.0;
};

/// c0 + sum of harmonics. General-purpose: no positivity or convexity is implied.
struct TrigPoly {
    double c0 = 0.0;
    std::vector<TrigTerm> terms;

    int degree() const {
        int d = 0;
        for (const auto& t : terms)
            d = t.n > d ? t.n : d;
        return d;
    }
};

inline double eval_trig(const TrigPoly& f, double theta) {
    double t = canonical_angle(theta);
    double v = f.c0;
    for (const auto& h : f.terms)
        v += h.c * std::cos(h.n * t) + h.d * std::sin(h.n * t);
    return v;
}

inline double eval_trig_derivative(const TrigPoly& f, double theta) {
    double t = canonical_angle(theta);
    double v = 0.0;
    for (const auto& h : f.terms)
        v += h.n * (-h.c * std::sin(h.n * t) + h.d * std::cos(h.n * t));
    return v;
}

// Incremental rotation for cos/sin of n*theta_k on the uniform grid theta_k = 2*pi*k/N.
// Resynchronized from std::sin/std::cos every `resync` steps to keep the drift of the
// recurrence below ~1e-13.
struct HarmonicRotor {
    double c = 1.0, s = 0.0;
    double cw, sw;
    double n_step;
    int k = 0;
    static constexpr int resync = 128;

    HarmonicRotor(int n, double step) : cw(std::cos(n * step)), sw(std::sin(n * step)), n_step(n * step) {}

    void advance() {
        ++k;
        if (k % resync == 0) {
            c = std::cos(k * n_step);
            s = std::sin(k * n_step);
        } else {
            double cn = c * cw - s * sw;
            double sn = s * cw + c * sw;
            c = cn;
            s = sn;
        }
    }
};

/// Values of a trig polynomial on the uniform grid theta_k = 2*pi*k/count, k = 0..count-1.
inline std::vector<double> sample_trig(const TrigPoly& f, int count) {
    std::vector<double> out(static_cast<std::size_t>(count), f.c0);
    const double step = two_pi / count;
    for (const auto& h : f.terms) {
        HarmonicRotor r(h.n, step);
        for (int k = 0; k < count; ++k) {
            out[static_cast<std::size_t>(k)] += h.c * r.c + h.d * r.s;
            r.advance();
        }
    }
    return out;
}

/// Values at start + k*step for k = 0..count (inclusive), for panel quadrature.
inline std::vector<double> sample_trig_range(const TrigPoly& f, double start, double step, int count) {
    std::vector<double> out(static_cast<std::size_t>(count) + 1, f.c0);
    for (const auto& h : f.terms) {
        double c = std::cos(h.n * start);
        double s = std::sin(h.n * start);
        const double cw = std::cos(h.n * step);
        const double sw = std::sin(h.n * step);
        for (int k = 0; k <= count; ++k) {
            out[static_cast<std::size_t>(k)] += h.c * c + h.d * s;
            if ((k + 1) % HarmonicRotor::resync == 0) {
                c = std::cos(h.n * (start + (k + 1) * step));
                s = std::sin(h.n * (start + (k + 1) * step));
            } else {
                const double cn = c * cw - s * sw;
                const double sn = s * cw + c * sw;
                c = cn;
                s = sn;
            }
        }
    }
    return out;
}

/// Golden-section minimizer on [a, b] for a unimodal bracket; returns the abscissa.
template <class F>
double golden_min(F&& f, double a, double b, int iters = 80) {
    constexpr double inv_phi = 0.6180339887498948482;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && (b - a) > 1e-14; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_max(F&& f, double a, double b, int iters = 80) {
    return golden_min([&](double x) { return -f(x); }, a, b, iters);
}

/// Global maximum of |f| for a trig polynomial: dense scan plus golden-section
/// refinement of the three best local maxima of |f|.
inline double max_abs_trig(const TrigPoly& f, int scan = 8192) {
    if (scan < 16)
        scan = 16;
    std::vector<double> v = sample_trig(f, scan);
    for (auto& x : v)
        x = std::abs(x);

    struct Peak {
        double value;
        int index;
    };
    Peak best[3] = {{-1.0, -1}, {-1.0, -1}, {-1.0, -1}};
    auto offer = [&](double value, int index) {
        for (int j = 0; j < 3; ++j) {
            if (value > best[j].value) {
                for (int k = 2; k > j; --k)
                    best[k] = best[k - 1];
                best[j] = {value, index};
                return;
            }
        }
    };
    const int n = scan;
    for (int i = 0; i < n; ++i) {
        double prev = v[static_cast<std::size_t>((i + n - 1) % n)];
        double next = v[static_cast<std::size_t>((i + 1) % n)];
        if (v[static_cast<std::size_t>(i)] >= prev && v[static_cast<std::size_t>(i)] >= next)
            offer(v[static_cast<std::size_t>(i)], i);
    }

    const double h = two_pi / n;
    double result = 0.0;
    auto abs_f = [&](double theta) { return std::abs(eval_trig(f, theta)); };
    for (const auto& p : best) {
        if (p.index < 0)
            continue;
        double lo = (p.index - 1) * h;
        double hi = (p.index + 1) * h;
        double arg = golden_max(abs_f, lo, hi);
        double val = abs_f(arg);
        if (val > result)
            result = val;
        if (p.value > result)
            result = p.value;
    }
    return result;
}

}  // namespace ovalkit::detail
