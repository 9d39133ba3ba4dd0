#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mag/geometry.hpp"
#include "mag/spacetimes.hpp"

using namespace mag;

TEST_CASE("polynomial evaluation and derivative") {
    Polynomial p;
    p.terms.push_back({2.0, {2, 1}}); // 2 x^2 y
    p.terms.push_back({-1.0, {0, 3}}); // -y^3
    Point q{1.5, -0.5};
    CHECK(p(q) == doctest::Approx(2.0 * 2.25 * -0.5 + 0.125));
    Polynomial dx = p.derivative(0);
    CHECK(dx(q) == doctest::Approx(4.0 * 1.5 * -0.5));
    Polynomial dy = p.derivative(1);
    CHECK(dy(q) == doctest::Approx(2.0 * 2.25 - 3.0 * 0.25));
}

TEST_CASE("polynomial fields: analytic closure equals finite differences") {
    std::vector<Polynomial> comps;
    for (int k = 0; k < 3; ++k) {
        Polynomial p;
        p.terms.push_back({0.3 + 0.1 * k, {1, 1, 0}});
        p.terms.push_back({-0.2, {0, 0, 2}});
        comps.push_back(p);
    }
    TensorField analytic = polynomial_field(3, {up()}, comps, true);
    TensorField numeric = polynomial_field(3, {up()}, comps, false);
    Point p{0.4, -0.3, 0.7};
    Tensor da = analytic.derivative(1)(p);
    Tensor dn = numeric.derivative(1)(p);
    for (int i = 0; i < 3; ++i) CHECK(da(i) == doctest::Approx(dn(i)).epsilon(1e-9));
}

TEST_CASE("random spaces are deterministic in the seed") {
    MetricAffineSpace s1 = random_space(3, 2024);
    MetricAffineSpace s2 = random_space(3, 2024);
    MetricAffineSpace s3 = random_space(3, 2025);
    Point p = random_point(3, 7);
    Tensor d = s1.connection(p);
    d -= s2.connection(p);
    CHECK(d.max_abs() == 0.0);
    Tensor e = s1.connection(p);
    e -= s3.connection(p);
    CHECK(e.max_abs() > 0.0);
}

TEST_CASE("synthetic space round-trips prescribed torsion and nonmetricity") {
    TensorField metric = random_space(3, 301).metric;
    Tensor Tconst(3, {up(), down(), down()});
    Tconst(1, 0, 2) = 0.05;
    Tconst(1, 2, 0) = -0.05;
    Tensor Qconst(3, {down(), down(), down()});
    Qconst(0, 1, 1) = 0.03;
    MetricAffineSpace space = synthetic_space(3, metric, constant_field(Tconst),
                                              constant_field(Qconst), "prescribed");
    Point p = random_point(3, 302);
    Tensor T = torsion(space, p);
    Tensor Q = nonmetricity(space, p);
    T -= Tconst;
    Q -= Qconst;
    CHECK(T.max_abs() < 1e-8);
    CHECK(Q.max_abs() < 1e-8);
}

TEST_CASE("central-body metric components and domain guard") {
    const double rg = 2.5e5;
    SchwarzschildSpace ss = schwarzschild(rg);
    const double r = 4.0 * rg;
    Point p{0.0, r, 0.8, 0.3};
    Tensor g = ss.space.metric(p);
    CHECK(g(0, 0) == doctest::Approx(ss.c * ss.c * (r - rg) / r));
    CHECK(g(1, 1) == doctest::Approx(-r / (r - rg)));
    CHECK(g(2, 2) == doctest::Approx(-r * r));
    CHECK(g(3, 3) == doctest::Approx(-r * r * std::sin(0.8) * std::sin(0.8)));
    CHECK_THROWS_AS(ss.space.metric(Point{0.0, 0.5 * rg, 0.8, 0.3}), DomainError);
}

TEST_CASE("central-body analytic derivatives match finite differences") {
    SchwarzschildSpace ss = schwarzschild(1.0e5);
    Point p{0.0, 3.7e5, 0.9, 0.4};
    for (int axis = 1; axis <= 2; ++axis) {
        Tensor a = ss.space.connection.derivative(axis)(p);
        TensorField numeric;
        TensorField conn = ss.space.connection;
        numeric.eval = conn.eval;
        Tensor n = partial_derivative(numeric, p, axis);
        double scale = std::max(1.0, a.max_abs());
        Tensor d = a;
        d -= n;
        CHECK(d.max_abs() / scale < 1e-7);
    }
}

TEST_CASE("radial photon redshift: closed form, ODE, and far-field limit") {
    SchwarzschildSpace ss = schwarzschild(1.0e5);
    const double r1 = 3.0e5, r2 = 1.0e6;
    double closed = radial_photon_redshift(ss, r1, r2, 1.0);
    double ode = radial_photon_redshift_ode(ss, r1, r2, 1.0);
    CHECK(std::abs(ode - closed) <= 1e-8 * closed);
    // Emission deeper in the well arrives redshifted.
    CHECK(closed < 1.0);

    // Emitted at r = 2 rg, observed far away: ratio -> sqrt(1/2).
    double far = radial_photon_redshift(ss, 2.0e5, 1.0e12, 1.0);
    CHECK(far == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
}

TEST_CASE("cosmological connection components in conformal time") {
    FriedmannSpace fs = friedmann_closed_cosh();
    const double t = 0.7, hub = std::tanh(t); // adot/a for a = cosh
    Point p{t, 0.4, 0.9, 0.3};
    Tensor gamma = fs.conformal.connection(p);
    CHECK(gamma(0, 0, 0) == doctest::Approx(hub).epsilon(1e-8));
    CHECK(gamma(1, 0, 1) == doctest::Approx(hub).epsilon(1e-8));
    CHECK(gamma(1, 1, 0) == doctest::Approx(hub).epsilon(1e-8));
    CHECK(gamma(0, 1, 1) == doctest::Approx(hub).epsilon(1e-8));
}

TEST_CASE("cosmological redshift and its rate") {
    FriedmannSpace fs = friedmann_closed_cosh();
    const double t1 = 0.3, t2 = 0.9;
    double K = friedmann_redshift(fs, t1, t2);
    CHECK(K == doctest::Approx(std::cosh(t1) / std::cosh(t2)).epsilon(1e-12));

    // Rate oracle: finite difference at fixed comoving separation.
    const double h = 1e-6;
    double fd = (friedmann_redshift(fs, t1 + h, t2 + h) -
                 friedmann_redshift(fs, t1 - h, t2 - h)) /
                (2.0 * h);
    CHECK(friedmann_redshift_rate(fs, t1, t2) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("frequency invariant along an integrated null ray") {
    FriedmannSpace fs = friedmann_closed_cosh();
    CHECK(friedmann_null_invariant_drift(fs, 0.3, 0.6) <= 1e-8);
}

TEST_CASE("comoving boost in the cosmic chart") {
    FriedmannSpace fs = friedmann_closed_cosh();
    Point p{0.5, 0.4, 0.9, 0.3};
    const double V = 0.6; // c = 1
    auto [e, ep] = friedmann_boost(fs, p, V);
    const double gamma = 1.25;
    CHECK(ep(0, 0) == doctest::Approx(gamma * e(0, 0)).epsilon(1e-10));
    CHECK(ep(1, 0) == doctest::Approx(gamma * V * e(1, 1)).epsilon(1e-10));
    CHECK_THROWS_AS(friedmann_boost(fs, p, 1.2), DomainError);
}

TEST_CASE("flat space has zero connection and curvature") {
    MetricAffineSpace flat = minkowski(4, 2.0);
    Point p{0.3, -0.2, 0.9, 1.4};
    CHECK(flat.connection(p).max_abs() == 0.0);
    CHECK(curvature(flat, p).max_abs() < 1e-12);
    Tensor g = flat.metric(p);
    CHECK(g(0, 0) == doctest::Approx(4.0)); // c^2
    CHECK(g(1, 1) == doctest::Approx(-1.0));
}
