#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ovalkit/equidistants.hpp"
#include "ovalkit/geometry.hpp"
#include "ovalkit/inequalities.hpp"
#include "random_ovals.hpp"

using namespace ovalkit;
using ovalkit_tests::OvalGen;

namespace {

constexpr double pi = std::numbers::pi;

FourierSupport m3() { return FourierSupport(11.0, {{3, 1.0, 0.0}}); }
FourierSupport m7() { return FourierSupport(51.0, {{7, 1.0, 0.0}}); }
FourierSupport ellipse_like() { return FourierSupport(5.0, {{2, 1.0, 0.0}}); }
FourierSupport stability_example() {
    return FourierSupport(10.0, {{2, 2.0, 0.0}, {3, 0.0, -1.0 / 3.0}, {4, -0.25, 0.0}});
}

double rel_err(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

}  // namespace

TEST_CASE("equidistant_point: lambda 0 and 1 reproduce the curve") {
    OvalGen gen(7201);
    const auto s = gen.next();
    for (double theta : {0.3, 1.4, 2.8, 5.0}) {
        const auto at0 = equidistant_point({s, 0.0}, theta);
        const auto opposite = curve_point(s, theta + pi);
        CHECK(at0.x == doctest::Approx(opposite.x).epsilon(1e-12));
        CHECK(at0.y == doctest::Approx(opposite.y).epsilon(1e-12));
        const auto at1 = equidistant_point({s, 1.0}, theta);
        const auto base = curve_point(s, theta);
        CHECK(at1.x == doctest::Approx(base.x).epsilon(1e-12));
        CHECK(at1.y == doctest::Approx(base.y).epsilon(1e-12));
    }
}

TEST_CASE("equidistant_point: Wigner caustic of a centrally symmetric oval is the center") {
    const auto s = ellipse_like();
    for (double theta : {0.0, 0.5, 1.2, 2.7, 4.1, 5.9}) {
        const auto p = equidistant_point({s, 0.5}, theta);
        CHECK(std::abs(p.x) < 1e-12);
        CHECK(std::abs(p.y) < 1e-12);
    }
}

TEST_CASE("equidistant_point: midpoint chord of the constant-width example") {
    const auto p = equidistant_point({m3(), 0.5}, 0.0);
    CHECK(p.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(p.y) < 1e-13);
}

TEST_CASE("equidistant_point agrees with the support-form parameterization") {
    OvalGen gen(7202);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> lam(-0.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = gen.next();
        const EquidistantSupport eq{s, lam(rng)};
        for (int i = 0; i < 10; ++i) {
            const double theta = angle(rng);
            const auto direct = equidistant_point(eq, theta);
            const auto v = evaluate(eq, theta);
            const double c = std::cos(v.theta), sn = std::sin(v.theta);
            const PlanarPoint form{v.p * c - v.dp * sn, v.p * sn + v.dp * c};
            CHECK(std::abs(direct.x - form.x) <= 1e-12 * (1.0 + std::abs(form.x)));
            CHECK(std::abs(direct.y - form.y) <= 1e-12 * (1.0 + std::abs(form.y)));
        }
    }
}

TEST_CASE("psi_functional: closed forms") {
    CHECK(psi_functional(m3()) == doctest::Approx(125.0 * pi).epsilon(1e-14));
    CHECK(psi_functional(ellipse_like()) == doctest::Approx(23.5 * pi).epsilon(1e-14));
    const FourierSupport circle(2.0, {});
    CHECK(psi_functional(circle) == doctest::Approx(4.0 * pi).epsilon(1e-15));
}

TEST_CASE("psi_functional matches the integral form by quadrature") {
    OvalGen gen(7203);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = gen.next();
        auto f = [&](double t) {
            const auto a = evaluate(s, t);
            const auto b = evaluate(s, t + pi);
            return a.p * b.p - a.dp * b.dp;
        };
        const int count = std::max(8, 4 * s.max_harmonic() + 4);
        const double integral = 0.5 * integrate_periodic(f, count);
        CHECK(psi_functional(s) == doctest::Approx(integral).epsilon(1e-11));
    }
}

TEST_CASE("oriented_area: paper values") {
    CHECK(oriented_area({m3(), 0.5}) == doctest::Approx(-2.0 * pi).epsilon(1e-13));
    CHECK(oriented_area({stability_example(), 0.5}) == doctest::Approx(-2.0 * pi / 9.0).epsilon(1e-12));
}

TEST_CASE("oriented_area: degenerate caustic of a centrally symmetric oval is exactly zero") {
    CHECK(oriented_area({ellipse_like(), 0.5}) == 0.0);
}

TEST_CASE("oriented_area: lambda 0 and 1 give the curve area") {
    const auto s = stability_example();
    CHECK(oriented_area({s, 0.0}) == area_closed_form(s));
    CHECK(oriented_area({s, 1.0}) == area_closed_form(s));
}

TEST_CASE("oriented_area symmetry: E_lambda = E_{1-lambda}") {
    OvalGen gen(7204);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> lam(-1.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = gen.next();
        const double l = lam(rng);
        const double a = oriented_area({s, l});
        const double b = oriented_area({s, 1.0 - l});
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("oriented_area formula matches the shoelace oracle on dense samples") {
    OvalGen gen(7205);
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = gen.next({.force_odd3 = true});
        for (double l : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const EquidistantSupport eq{s, l};
            double shoelace = polyline_signed_area(sample_equidistant(eq, 100000));
            if (l == 0.5)
                shoelace *= 0.5;  // the [0, 2 pi) sample double-covers the caustic
            const double formula = oriented_area(eq);
            CHECK(std::abs(formula - shoelace) <= 1e-6 * std::max(std::abs(formula), 1e-9));
        }
    }
}

TEST_CASE("wigner caustic area is never positive") {
    OvalGen gen(7206);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen.next();
        CHECK(oriented_area({s, 0.5}) <= 1e-12);
    }
}

TEST_CASE("cusp_parameters: 7-cusp family member") {
    const auto roots = cusp_parameters({m7(), 0.5});
    REQUIRE(roots.size() == 7);
    for (std::size_t k = 0; k < 7; ++k)
        CHECK(std::abs(roots[k] - (pi + 2.0 * k * pi) / 14.0) <= 1e-10);
}

TEST_CASE("cusp_parameters: 3 cusps of the constant-width example") {
    const auto roots = cusp_parameters({m3(), 0.5});
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - pi / 6.0) <= 1e-12);
    CHECK(std::abs(roots[1] - pi / 2.0) <= 1e-12);
    CHECK(std::abs(roots[2] - 5.0 * pi / 6.0) <= 1e-12);
}

TEST_CASE("cusp_parameters: circle caustic is degenerate") {
    CHECK_THROWS_AS(cusp_parameters({FourierSupport(2.0, {}), 0.5}), DegenerateRoot);
    CHECK_THROWS_AS(cusp_parameters({ellipse_like(), 0.5}), DegenerateRoot);
}

TEST_CASE("cusp_parameters: the residual at each root is below 1e-12 a0") {
    OvalGen gen(7207);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = gen.next({.force_odd3 = true});
        const EquidistantSupport eq{s, 0.5};
        const auto g = detail::equidistant_speed_poly(eq);
        for (double r : cusp_parameters(eq))
            CHECK(std::abs(detail::eval_trig(g, r)) <= 1e-12 * s.a0());
    }
}

TEST_CASE("cusp parity: odd at lambda = 1/2, even otherwise") {
    OvalGen gen(7208);
    int below_three = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = gen.next({.force_odd3 = true});
        try {
            const auto wigner = cusp_parameters({s, 0.5});
            CHECK(wigner.size() % 2 == 1);
            if (wigner.size() < 3)
                ++below_three;
        } catch (const DegenerateRoot&) {
        }
        try {
            const auto generic = cusp_parameters({s, 0.3});
            CHECK(generic.size() % 2 == 0);
        } catch (const DegenerateRoot&) {
        }
    }
    if (below_three > 0)
        MESSAGE("wigner caustics with fewer than 3 detected cusps: ", below_three);
}

TEST_CASE("equidistant_length: point caustics and the 16-length caustic") {
    CHECK(equidistant_length({FourierSupport(3.0, {}), 0.5}, 4096) == 0.0);
    CHECK(equidistant_length({ellipse_like(), 0.5}, 4096) == 0.0);

    // L(E_1/2) of the constant-width example: (1/2) integral of |-8 cos 3t| = 16
    const double len = equidistant_length({m3(), 0.5}, 100000);
    CHECK(rel_err(len, 16.0) <= 1e-6);

    // dense polyline-length oracle (the sampled caustic double-covers)
    const double poly_len = 0.5 * polyline_length(sample_equidistant({m3(), 0.5}, 200000));
    CHECK(rel_err(len, poly_len) <= 1e-5);
}

TEST_CASE("equidistant_length: lambda 0 and 1 give the curve length") {
    const auto s = stability_example();
    CHECK(equidistant_length({s, 0.0}, 4096) == doctest::Approx(length_closed_form(s)).epsilon(1e-12));
    CHECK(equidistant_length({s, 1.0}, 4096) == doctest::Approx(length_closed_form(s)).epsilon(1e-12));
}

TEST_CASE("equidistant_length bound, including lambda outside [0, 1]") {
    OvalGen gen(7209);
    for (int trial = 0; trial < 15; ++trial) {
        const auto s = gen.next();
        const double L = length_closed_form(s);
        for (double l : {-0.5, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 1.5}) {
            const double len = equidistant_length({s, l}, 4096);
            const double bound = (std::abs(l) + std::abs(1.0 - l)) * L;
            CHECK(len <= bound + 1e-9);
            if (l > 0.0 && l < 1.0)
                CHECK(len <= L + 1e-9);
            if (l < 0.0 || l > 1.0)  // speed never changes sign: equality
                CHECK(len == doctest::Approx(bound).epsilon(1e-12));
        }
    }
}

TEST_CASE("make_cusp_family: members and cusp counts") {
    const auto f1 = make_cusp_family(1);
    CHECK(f1.a0() == 11.0);
    REQUIRE(f1.terms().size() == 1);
    CHECK(f1.terms()[0].n == 3);
    CHECK(f1.terms()[0].a == 1.0);
    CHECK(f1.terms()[0].b == 0.0);

    const auto f3 = make_cusp_family(3);
    CHECK(f3.a0() == 51.0);
    CHECK(f3.terms()[0].n == 7);

    for (int n = 1; n <= 5; ++n) {
        const auto s = make_cusp_family(n);
        CHECK(validate_convexity(s, std::max(1024, 64 * s.max_harmonic())) > 0.0);
        CHECK(is_constant_width(s));
        const double w = 2.0 * (2.0 * n + 1.0) * (2.0 * n + 1.0) + 4.0;
        CHECK(width(s, 0.37) == doctest::Approx(w).epsilon(1e-13));
        CHECK(cusp_parameters({s, 0.5}).size() == static_cast<std::size_t>(2 * n + 1));
    }
    CHECK_THROWS_AS(make_cusp_family(0), std::invalid_argument);
}

TEST_CASE("equidistant_report: wigner flag and degenerate caustic") {
    const auto r = equidistant_report(m3(), 0.5);
    CHECK(r.is_wigner);
    CHECK(r.cusp_thetas.size() == 3);
    CHECK(r.oriented_area == doctest::Approx(-2.0 * pi).epsilon(1e-13));

    const auto d = equidistant_report(ellipse_like(), 0.5);
    CHECK(d.is_wigner);
    CHECK(d.cusp_thetas.empty());
    CHECK(d.oriented_area == 0.0);
    CHECK(d.length_estimate == 0.0);

    const auto g = equidistant_report(m3(), 0.25);
    CHECK(!g.is_wigner);
}
