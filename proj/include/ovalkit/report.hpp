#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

namespace ovalkit {

/// x ~ (num/den) * pi^power, detected to 1e-9 relative.
struct PiForm {
    long long num = 0;
    long long den = 1;
    int power = 1;
};

namespace detail {

/// Best rational approximation with bounded denominator (continued fractions).
inline std::pair<long long, long long> best_rational(double x, long long max_den) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        const double fl = std::floor(v);
        if (std::abs(fl) > 1e15)
            break;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0)
            break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = v - fl;
        if (frac < 1e-15)
            break;
        v = 1.0 / frac;
    }
    if (q1 == 0)
        return {0, 1};
    return {p1, q1};
}

/// Exact decimal rendering of p/q when q = 2^a 5^b with at most 6 digits.
inline std::optional<std::string> terminating_decimal(long long num, long long den) {
    long long q = den;
    int twos = 0, fives = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++twos;
    }
    while (q % 5 == 0) {
        q /= 5;
        ++fives;
    }
    if (q != 1)
        return std::nullopt;
    const int digits = twos > fives ? twos : fives;
    if (digits > 6)
        return std::nullopt;
    long long scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const bool neg = num < 0;
    unsigned long long scaled = static_cast<unsigned long long>(neg ? -num : num) * scale / den;
    std::string s = std::to_string(scaled);
    if (digits > 0) {
        while (s.size() <= static_cast<std::size_t>(digits))
            s.insert(s.begin(), '0');
        s.insert(s.size() - digits, ".");
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    return (neg ? "-" : "") + s;
}

}  // namespace detail

/// Detects whether x is (to 1e-9 relative) a rational multiple of pi or pi^2
/// with denominator at most 1024. Both powers are tried; the smaller
/// denominator wins (a freak large-denominator approximant of the wrong power
/// can otherwise sneak under the tolerance).
inline std::optional<PiForm> match_pi_form(double x) {
    if (!std::isfinite(x) || x == 0.0)
        return std::nullopt;
    constexpr double pi = std::numbers::pi;
    std::optional<PiForm> best;
    for (int power : {1, 2}) {
        const double base = power == 1 ? pi : pi * pi;
        const double r = x / base;
        auto [p, q] = detail::best_rational(r, 1024);
        if (p != 0 && std::abs(r - double(p) / double(q)) <= 1e-9 * std::max(1.0, std::abs(r)))
            if (!best || q < best->den)
                best = PiForm{p, q, power};
    }
    return best;
}

inline std::string pi_form_string(const PiForm& f) {
    const std::string pi_sym = f.power == 1 ? "π" : "π²";
    if (f.den == 1) {
        if (f.num == 1)
            return pi_sym;
        if (f.num == -1)
            return "-" + pi_sym;
        return std::to_string(f.num) + pi_sym;
    }
    if (std::abs(f.num) > f.den)
        if (auto dec = detail::terminating_decimal(f.num, f.den))
            return *dec + pi_sym;
    const std::string head = f.num == 1 ? "" : f.num == -1 ? "-" : std::to_string(f.num);
    return head + pi_sym + "/" + std::to_string(f.den);
}

inline std::string format_number(double x) {
    if (x == 0.0)
        return "0";  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

/// "367.566298264724 (117π)" when x matches a pi multiple, plain decimal otherwise.
inline std::string format_quantity(double x) {
    std::string s = format_number(x);
    if (auto f = match_pi_form(x))
        s += " (" + pi_form_string(*f) + ")";
    return s;
}

}  // namespace ovalkit
