#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mag/geometry.hpp"
#include "mag/spacetimes.hpp"

using namespace mag;

namespace {

Tensor diff(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d -= b;
    return d;
}

} // namespace

TEST_CASE("torsion of a constant-torsion space round-trips") {
    Tensor T(3, {up(), down(), down()});
    T(0, 1, 2) = 0.4;
    T(0, 2, 1) = -0.4;
    MetricAffineSpace space = flat_torsion_space(T);
    Point p{0.3, -0.2, 0.1};
    Tensor got = torsion(space, p);
    CHECK(diff(got, T).max_abs() < 1e-12);
    CHECK(nonmetricity(space, p).max_abs() < 1e-12);

    // Antisymmetry of the lower pair is exact.
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(got(a, i, j) == -got(a, j, i));
}

TEST_CASE("torsion sign convention: T^a_cb = difference of transposed symbols") {
    // Single connection component Gamma^0_{12} = kappa (transported index 1,
    // derivative index 2) and its transpose zero.
    const double kappa = 0.25;
    TensorField metric = constant_field([] {
        Tensor g(3, {down(), down()});
        g(0, 0) = 1.0;
        g(1, 1) = -1.0;
        g(2, 2) = -1.0;
        return g;
    }());
    Tensor gamma(3, {up(), down(), down()});
    gamma(0, 1, 2) = kappa;
    MetricAffineSpace space{3, metric, constant_field(gamma), "single-component"};
    Tensor T = torsion(space, Point{0.0, 0.0, 0.0});
    CHECK(T(0, 2, 1) == doctest::Approx(kappa));
    CHECK(T(0, 1, 2) == doctest::Approx(-kappa));
}

TEST_CASE("nonmetricity of a linearly growing metric with zero connection") {
    const double lambda = 0.15;
    TensorField metric;
    metric.eval = [lambda](const Point& p) {
        Tensor g(2, {down(), down()});
        g(0, 0) = 1.0 + 2.0 * lambda * p[0];
        g(1, 1) = -1.0;
        return g;
    };
    MetricAffineSpace space{2, metric,
                            constant_field(Tensor(2, {up(), down(), down()})), "linear-g"};
    Tensor Q = nonmetricity(space, Point{0.2, 0.0});
    // Q_kij = -g_ij;k and the covariant derivative reduces to the partial.
    CHECK(Q(0, 0, 0) == doctest::Approx(-2.0 * lambda).epsilon(1e-9));
    CHECK(std::abs(Q(1, 0, 0)) < 1e-10);
}

TEST_CASE("connection reconstruction round-trips on a random space") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        MetricAffineSpace space = random_space(3, seed);
        Point p = random_point(3, seed + 50);
        Tensor rebuilt = reconstruct_connection(space.metric, torsion_field(space),
                                                nonmetricity_field(space), p);
        Tensor conn = space.connection(p);
        CHECK(diff(rebuilt, conn).max_abs() / std::max(1.0, conn.max_abs()) < 1e-7);
    }
}

TEST_CASE("companion connection is metric compatible and keeps the torsion") {
    MetricAffineSpace space = random_space(3, 17);
    MetricAffineSpace companion = cartan_space(space);
    Point p = random_point(3, 18);
    CHECK(nonmetricity(companion, p).max_abs() < 1e-9);
    CHECK(diff(torsion(companion, p), torsion(space, p)).max_abs() < 1e-9);

    // The correction symbol is symmetric in its lower pair.
    Tensor C = cartan_symbol(space, p);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                CHECK(C(i, k, l) == doctest::Approx(C(i, l, k)).epsilon(1e-12));
}

TEST_CASE("two-sphere scalar curvature") {
    for (double R : {1.0, 2.5}) {
        MetricAffineSpace sphere = two_sphere(R);
        Point p{1.0, 0.5};
        CHECK(scalar_curvature(sphere, p) == doctest::Approx(2.0 / (R * R)).epsilon(1e-8));
    }
}

TEST_CASE("central-body connection table") {
    const double rg = 1.0e5;
    SchwarzschildSpace ss = schwarzschild(rg);
    Point p{0.0, 2.0 * rg, 1.1, 0.3};
    Tensor gamma = schwarzschild_connection(ss, p);
    CHECK(gamma(0, 1, 0) == doctest::Approx(1.0 / (4.0 * rg)).epsilon(1e-12));
    CHECK(gamma(0, 0, 1) == doctest::Approx(1.0 / (4.0 * rg)).epsilon(1e-12));

    // The closed-form table equals the Levi-Civita connection of the metric.
    Tensor lc = christoffel(ss.space.metric, p);
    double scale = gamma.max_abs();
    CHECK(diff(gamma, lc).max_abs() / scale < 1e-8);

    // And equals the field the space carries.
    CHECK(diff(gamma, ss.space.connection(p)).max_abs() == 0.0);
}

TEST_CASE("central-body vacuum curvature") {
    SchwarzschildSpace ss = schwarzschild(1.0e5);
    Point p{0.0, 5.0e5, 1.1, 0.3};
    Tensor ric = ricci(ss.space, p);
    Tensor R = curvature(ss.space, p);
    CHECK(ric.max_abs() / R.max_abs() < 1e-6);
}

TEST_CASE("time translation is an isometry of the central-body metric") {
    SchwarzschildSpace ss = schwarzschild(1.0e5);
    Point p{0.0, 3.0e5, 1.1, 0.3};
    Tensor xi_t(4, {up()});
    xi_t(0) = 1.0;
    Tensor resid = killing_residual(ss.space, constant_field(xi_t), p);
    CHECK(resid.max_abs() / ss.space.metric(p).max_abs() < 1e-9);

    // A radial dilation is not an isometry.
    TensorField dilation;
    dilation.eval = [](const Point& q) {
        Tensor v(4, {up()});
        v(1) = q[1];
        return v;
    };
    Tensor bad = killing_residual(ss.space, dilation, p);
    CHECK(bad.max_abs() / ss.space.metric(p).max_abs() > 1e-3);
}

TEST_CASE("azimuthal rotation satisfies the connection-invariance condition") {
    // On a torsion-free metric-compatible space a Killing vector leaves the
    // connection invariant as well.
    MetricAffineSpace sphere = two_sphere(1.5);
    Tensor xi(2, {up()});
    xi(1) = 1.0; // ∂_φ
    Point p{1.0, 0.4};
    CHECK(killing2_residual(sphere, constant_field(xi), p).max_abs() < 1e-7);
    CHECK(killing_residual(sphere, constant_field(xi), p).max_abs() < 1e-9);
}

TEST_CASE("connection-invariance residual equals the connection Lie derivative") {
    MetricAffineSpace space = random_space(3, 23);
    TensorField xi = random_vector_field(3, 24);
    Point p = random_point(3, 25);
    Tensor a = killing2_residual(space, xi, p);
    Tensor b = lie_derivative_connection(space, xi, p);
    CHECK(diff(a, b).max_abs() < 1e-8);
}

TEST_CASE("metric Lie derivative matches the coordinate oracle") {
    MetricAffineSpace space = random_space(4, 31);
    TensorField xi = random_vector_field(4, 32);
    Point p = random_point(4, 33);
    Tensor f = lie_derivative_metric(space, xi, p);
    Tensor o = lie_derivative_metric_oracle(space, xi, p);
    CHECK(diff(f, o).max_abs() / std::max(1.0, o.max_abs()) < 1e-9);
}

TEST_CASE("connection Lie derivative matches the coordinate oracle") {
    MetricAffineSpace space = random_space(3, 41);
    TensorField xi = random_vector_field(3, 42);
    Point p = random_point(3, 43);
    Tensor f = lie_derivative_connection(space, xi, p);
    Tensor o = lie_derivative_connection_oracle(space, xi, p);
    CHECK(diff(f, o).max_abs() / std::max(1.0, o.max_abs()) < 1e-9);
}

TEST_CASE("second-derivative commutator closes on the central body") {
    SchwarzschildSpace ss = schwarzschild(1.0e5);
    Tensor u(4, {up()});
    u(0) = 1.0;
    Point p{0.0, 4.0e5, 1.1, 0.3};
    Tensor resid = commutator_residual(ss.space, constant_field(u), p);
    Tensor R = curvature(ss.space, p);
    CHECK(resid.max_abs() / std::max(1.0, R.max_abs()) < 1e-6);
}

TEST_CASE("first Bianchi identity on a constant-torsion flat space") {
    Tensor T(3, {up(), down(), down()});
    T(1, 0, 2) = 0.3;
    T(1, 2, 0) = -0.3;
    MetricAffineSpace space = flat_torsion_space(T);
    CHECK(bianchi_residual(space, Point{0.1, 0.2, -0.1}).max_abs() < 1e-10);
}

TEST_CASE("shifted-curvature assembly") {
    MetricAffineSpace space = random_space(3, 51);
    Point p = random_point(3, 52);

    // A = 0 reproduces the base curvature exactly.
    TensorField zero = constant_field(Tensor(3, {up(), down(), down()}));
    CHECK(diff(shifted_curvature(space, zero, p), curvature(space, p)).max_abs() < 1e-12);

    // A = -Γ(C) gives the curvature of the companion connection.
    TensorField A = scale_field(cartan_symbol_field(space), -1.0);
    Tensor assembled = shifted_curvature(space, A, p);
    Tensor direct = curvature(cartan_space(space), p);
    CHECK(diff(assembled, direct).max_abs() / std::max(1.0, direct.max_abs()) < 1e-6);

    // Asymmetric shifts are rejected.
    Tensor bad(3, {up(), down(), down()});
    bad(0, 1, 2) = 1.0;
    CHECK_THROWS_AS(shifted_curvature(space, constant_field(bad), p), TensorError);
}

TEST_CASE("contravariant nonmetricity consistency") {
    MetricAffineSpace space = random_space(3, 61);
    Point p = random_point(3, 62);
    Tensor Q = nonmetricity(space, p);
    Tensor gi = space.ginv(p);
    Tensor Qc = nonmetricity_contravariant(space, p);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double want = 0.0;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) want += gi(i, a) * gi(j, b) * Q(k, a, b);
                CHECK(Qc(k, i, j) == doctest::Approx(want).epsilon(1e-10));
            }
}
