#include "mag/verify.hpp"

#include <algorithm>
#include <cmath>

#include "mag/frames.hpp"
#include "mag/geometry.hpp"
#include "mag/spacetimes.hpp"
#include "mag/transport.hpp"

namespace mag {

namespace {

double rel(const Tensor& diff, double scale) {
    return diff.max_abs() / std::max(1.0, scale);
}

Tensor diff_of(const Tensor& a, const Tensor& b) {
    Tensor d = a;
    d -= b;
    return d;
}

} // namespace

SuiteReport verify_identities(std::uint64_t seed, int space_count, double tol_fd,
                              double tol_analytic) {
    SuiteReport report{"identities", seed, {}};
    const char* names[] = {"bianchi",      "commutator", "lie-metric",
                           "lie-connection", "shifted-curvature",
                           "compatibility", "round-trip"};
    double worst[2][7] = {};

    for (int i = 0; i < space_count; ++i) {
        const int n = 2 + i % 3;
        for (int variant = 0; variant < 2; ++variant) {
            const bool analytic = variant == 0;
            MetricAffineSpace space = random_space(n, seed + static_cast<std::uint64_t>(i),
                                                   analytic);
            Point p = random_point(n, seed + 1000 + static_cast<std::uint64_t>(i));
            TensorField xi = random_vector_field(n, seed + 2000 + static_cast<std::uint64_t>(i),
                                                 analytic);
            TensorField u = random_vector_field(n, seed + 3000 + static_cast<std::uint64_t>(i),
                                                analytic);
            TensorField A = random_symmetric_shift_field(
                n, seed + 4000 + static_cast<std::uint64_t>(i), analytic);

            Tensor R = curvature(space, p);
            double rscale = R.max_abs();
            double* w = worst[variant];

            w[0] = std::max(w[0], rel(bianchi_residual(space, p), rscale));
            w[1] = std::max(w[1], rel(commutator_residual(space, u, p), rscale));
            {
                Tensor f = lie_derivative_metric(space, xi, p);
                Tensor o = lie_derivative_metric_oracle(space, xi, p);
                w[2] = std::max(w[2], rel(diff_of(f, o), o.max_abs()));
            }
            {
                Tensor f = lie_derivative_connection(space, xi, p);
                Tensor o = lie_derivative_connection_oracle(space, xi, p);
                w[3] = std::max(w[3], rel(diff_of(f, o), o.max_abs()));
            }
            {
                MetricAffineSpace shifted = space;
                shifted.connection = add_fields(space.connection, A);
                Tensor direct = curvature(shifted, p);
                Tensor assembled = shifted_curvature(space, A, p);
                w[4] = std::max(w[4], rel(diff_of(assembled, direct), direct.max_abs()));
            }
            w[5] = std::max(w[5], rel(nonmetricity(cartan_space(space), p), 1.0));
            {
                Tensor rebuilt = reconstruct_connection(space.metric, torsion_field(space),
                                                        nonmetricity_field(space), p);
                Tensor conn = space.connection(p);
                w[6] = std::max(w[6], rel(diff_of(rebuilt, conn), conn.max_abs()));
            }
        }
    }

    for (int variant = 0; variant < 2; ++variant) {
        const bool analytic = variant == 0;
        double tol = analytic ? tol_analytic : tol_fd;
        for (int k = 0; k < 7; ++k) {
            CheckResult c;
            c.name = std::string(names[k]) + (analytic ? " (analytic)" : " (fd)");
            c.residual = worst[variant][k];
            c.tolerance = tol;
            c.pass = c.residual <= tol;
            report.checks.push_back(c);
        }
    }
    return report;
}

SuiteReport verify_transport(std::uint64_t seed) {
    SuiteReport report{"transport", seed, {}};
    auto push = [&](const std::string& name, double residual, double tol,
                    bool invert = false) {
        report.checks.push_back({name, residual, tol,
                                 invert ? residual >= tol : residual <= tol});
    };

    // Tangent-length conservation along an extremal, fixed-step RK4, 1e4 steps.
    {
        MetricAffineSpace space = random_space(3, seed, true, 0.03);
        Point x0 = random_point(3, seed + 7, 0.1);
        Tensor u0(3, {up()});
        u0(0) = 1.0;
        u0(1) = 0.12;
        u0(2) = -0.07;
        Tensor g0 = space.metric(x0);
        double nrm = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) nrm += g0(i, j) * u0(i) * u0(j);
        u0 *= 1.0 / std::sqrt(nrm);

        OdeOptions fixed;
        fixed.adaptive = false;
        fixed.fixed_step = 1e-4;
        auto states = extremal(space, x0, u0, 0.0, 1.0, fixed);
        double drift = 0.0;
        for (const auto& st : states) {
            Tensor g = space.metric(st.x);
            double len = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) len += g(i, j) * st.u(i) * st.u(j);
            drift = std::max(drift, std::abs(len - 1.0));
        }
        push("extremal length drift (1e4 steps)", drift, 1e-8);

        // Extremal vs. autoparallel of the independently reconstructed
        // length-preserving connection (same torsion, zero nonmetricity).
        TensorField zeroQ = constant_field(Tensor(3, {down(), down(), down()}));
        TensorField metric = space.metric;
        TensorField torsF = torsion_field(space);
        TensorField hat;
        hat.eval = [metric, torsF, zeroQ](const Point& p) {
            return reconstruct_connection(metric, torsF, zeroQ, p);
        };
        auto a = extremal(space, x0, u0, 0.0, 1.0);
        auto b = autoparallel(hat, x0, u0, 0.0, 1.0);
        double diff = 0.0;
        for (int i = 0; i < 3; ++i) {
            diff = std::max(diff, std::abs(a.back().x[i] - b.back().x[i]));
            diff = std::max(diff, std::abs(a.back().u(i) - b.back().u(i)));
        }
        push("extremal == reconstructed-connection autoparallel", diff, 1e-8);
    }

    // Parallelogram closure scaling on a constant-torsion space.
    {
        const double kappa = 0.3;
        Tensor T(3, {up(), down(), down()});
        T(0, 1, 2) = kappa;
        T(0, 2, 1) = -kappa;
        MetricAffineSpace space = flat_torsion_space(T);
        Tensor a(3, {up()}), b(3, {up()});
        a(1) = 1.0;
        b(2) = 1.0;
        Point p{0.0, 0.0, 0.0};
        double g1 = std::abs(parallelogram_gap(space, p, a, b, 0.1)(0));
        double g2 = std::abs(parallelogram_gap(space, p, a, b, 0.05)(0));
        double exponent = std::log2(g1 / g2);
        push("parallelogram exponent (torsionful) - 2", std::abs(exponent - 2.0), 0.1);
        push("parallelogram coefficient vs torsion", std::abs(g2 / 0.0025 / kappa - 1.0),
             0.02);

        MetricAffineSpace rs = random_space(3, seed + 11, true, 0.05);
        MetricAffineSpace riemann;
        riemann.n = 3;
        riemann.metric = rs.metric;
        riemann.connection = christoffel_field(rs.metric, 3);
        riemann.name = "random-riemann";
        double h1 = parallelogram_gap(riemann, p, a, b, 0.2).max_abs();
        double h2 = parallelogram_gap(riemann, p, a, b, 0.1).max_abs();
        push("parallelogram exponent (torsion-free)", std::log2(h1 / h2), 2.9, true);
    }

    // Tidal deviation vs. two-trajectory oracle: quadratic convergence in the
    // initial separation.
    {
        MetricAffineSpace space = random_space(3, seed + 21, true, 0.05);
        Point x0 = random_point(3, seed + 22, 0.1);
        Tensor u0(3, {up()});
        u0(0) = 1.0;
        u0(1) = 0.15;
        u0(2) = -0.1;
        Tensor gamma0 = space.connection(x0);

        auto error_at = [&](double epsfac) {
            Tensor dx0(3, {up()}), w0(3, {up()});
            dx0(0) = 0.3 * epsfac;
            dx0(1) = 0.2 * epsfac;
            dx0(2) = -0.1 * epsfac;
            w0(0) = 0.05 * epsfac;
            w0(1) = -0.02 * epsfac;
            w0(2) = 0.01 * epsfac;
            auto sol = tidal_deviation(space, x0, u0, nullptr, nullptr, dx0, w0, 1.0);

            // Second trajectory: shifted start, tangent matched to first order.
            Point x2 = x0;
            Tensor u2 = u0;
            for (int i = 0; i < 3; ++i) {
                x2[i] += dx0(i);
                double corr = w0(i);
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) corr -= gamma0(i, k, l) * dx0(k) * u0(l);
                u2(i) += corr;
            }
            auto t1 = autoparallel(space.connection, x0, u0, 0.0, 1.0);
            auto t2 = autoparallel(space.connection, x2, u2, 0.0, 1.0);
            double err = 0.0;
            for (int i = 0; i < 3; ++i) {
                double direct = t2.back().x[i] - t1.back().x[i];
                err = std::max(err, std::abs(sol.back().dx(i) - direct));
            }
            return err;
        };
        double e1 = error_at(1e-2);
        double e2 = error_at(5e-3);
        double ratio = e1 / e2;
        push("tidal oracle ratio - 4 (quadratic)", std::abs(ratio - 4.0), 0.5);
    }

    // Gauge invariance of vector-potential motion on a torsionful flat space.
    {
        const double kappa = 0.2;
        Tensor T(3, {up(), down(), down()});
        T(0, 1, 2) = kappa;
        T(0, 2, 1) = -kappa;
        MetricAffineSpace space = flat_torsion_space(T);

        auto lin = [&](std::initializer_list<double> c0,
                       std::initializer_list<std::initializer_list<double>> m) {
            std::vector<Polynomial> comps;
            auto itc = c0.begin();
            auto itm = m.begin();
            for (int k = 0; k < 3; ++k, ++itc, ++itm) {
                Polynomial poly;
                poly.terms.push_back({*itc, {0, 0, 0}});
                int axis = 0;
                for (double coeff : *itm) {
                    std::vector<int> e(3, 0);
                    e[static_cast<std::size_t>(axis++)] = 1;
                    poly.terms.push_back({coeff, e});
                }
                comps.push_back(poly);
            }
            return polynomial_field(3, {down()}, comps, true);
        };
        TensorField A = lin({0.4, -0.2, 0.3},
                            {{0.1, -0.3, 0.2}, {0.05, 0.2, -0.1}, {-0.15, 0.1, 0.25}});
        // Gradient of Λ = 0.3x² − 0.2xy + 0.15yz + 0.1z²  (symmetric Hessian).
        TensorField dLambda = lin({0.0, 0.0, 0.0},
                                  {{0.6, -0.2, 0.0}, {-0.2, 0.0, 0.15}, {0.0, 0.15, 0.2}});

        Tensor u0(3, {up()});
        u0(0) = 1.0;
        u0(1) = 0.2;
        u0(2) = -0.1;
        Point x0{0.0, 0.0, 0.0};
        ForceSpec f1;
        f1.vector_potential = A;
        f1.charge = 0.5;
        ForceSpec f2 = f1;
        f2.vector_potential = add_fields(A, dLambda);
        auto t1 = forced_motion(space, x0, u0, f1, 1.0);
        auto t2 = forced_motion(space, x0, u0, f2, 1.0);
        double diff = 0.0;
        for (int i = 0; i < 3; ++i)
            diff = std::max(diff, std::abs(t1.back().x[i] - t2.back().x[i]));
        push("forced-motion gauge invariance", diff, 1e-8);
    }

    return report;
}

SuiteReport verify_frames(std::uint64_t seed) {
    SuiteReport report{"frames", seed, {}};
    auto push = [&](const std::string& name, double residual, double tol) {
        report.checks.push_back({name, residual, tol, residual <= tol});
    };

    // Orthonormalization and duality on random spaces.
    {
        double worst_eta = 0.0, worst_dual = 0.0;
        for (int i = 0; i < 10; ++i) {
            int n = 2 + i % 3;
            MetricAffineSpace space = random_space(n, seed + static_cast<std::uint64_t>(i),
                                                   true);
            Point p = random_point(n, seed + 100 + static_cast<std::uint64_t>(i));
            std::vector<Tensor> seeds;
            for (int k = 0; k < n; ++k) {
                Tensor v(n, {up()});
                v(k) = 1.0;
                seeds.push_back(v);
            }
            Tensor E = gram_schmidt_frame(space.metric, seeds, p);
            Tensor eta = frame_metric(space.metric(p), E);
            Tensor D = invert_rank2(E);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double want = (a == b) ? (a == 0 ? 1.0 : -1.0) : 0.0;
                    worst_eta = std::max(worst_eta, std::abs(eta(a, b) - want));
                    double dual = 0.0;
                    for (int j = 0; j < n; ++j) dual += D(a, j) * E(j, b);
                    worst_dual = std::max(worst_dual, std::abs(dual - (a == b ? 1.0 : 0.0)));
                }
        }
        push("gram-schmidt orthonormality", worst_eta, 1e-10);
        push("frame duality", worst_dual, 1e-10);
    }

    // Anholonomy of the polar orthonormal frame on the Euclidean plane.
    {
        TensorField e;
        e.eval = [](const Point& p) {
            Tensor E(2, {up(), down(Basis::frame)});
            E(0, 0) = 1.0;
            E(1, 1) = 1.0 / p[0];
            return E;
        };
        FrameField frame{e};
        Point p{1.7, 0.4};
        Tensor c = anholonomy_object(frame, p);
        double anti = 0.0;
        for (int m = 0; m < 2; ++m)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    anti = std::max(anti, std::abs(c(m, a, b) + c(m, b, a)));
        push("anholonomy antisymmetry", anti, 1e-14);
        push("polar-frame anholonomy magnitude", std::abs(std::abs(c(1, 0, 1)) - 1.0 / p[0]),
             1e-8);
    }

    // Boost invariance of reconstructed vectors; composition consistency.
    {
        Tensor eta(4, {down(Basis::frame), down(Basis::frame)});
        eta(0, 0) = 1.0;
        for (int i = 1; i < 4; ++i) eta(i, i) = -1.0;
        Tensor E(4, {up(), down(Basis::frame)});
        for (int i = 0; i < 4; ++i) E(i, i) = 1.0;
        E(0, 2) = 0.1; // non-diagonal but η-orthonormal frames are not needed here
        Tensor w(4, {up(Basis::frame)});
        w(0) = 0.7;
        w(1) = -0.4;
        w(2) = 0.2;
        w(3) = 0.9;
        auto m1 = lorentz_boost(4, 1, 0.35);
        auto m2 = lorentz_boost(4, 3, -0.6);
        auto [w1, rec1] = invariance_check(E, w, m1, eta);
        Tensor rec0(4, {up()});
        for (int i = 0; i < 4; ++i) {
            double acc = 0.0;
            for (int a = 0; a < 4; ++a) acc += E(i, a) * w(a);
            rec0(i) = acc;
        }
        double drift = diff_of(rec1, rec0).max_abs();
        auto [w2a, rec2a] = invariance_check(boost_frame(E, m1, eta), w1, m2, eta);
        auto [w2b, rec2b] = invariance_check(E, w, compose(m1, m2), eta);
        drift = std::max(drift, diff_of(w2a, w2b).max_abs());
        drift = std::max(drift, diff_of(rec2a, rec2b).max_abs());
        push("boost invariance drift", drift, 1e-12);
    }

    // Loop integral: reparameterization and starting-point invariance.
    {
        TensorField e;
        e.eval = [](const Point& p) {
            Tensor E(2, {up(), down(Basis::frame)});
            E(0, 0) = 1.0 + 0.2 * std::sin(p[1]);
            E(0, 1) = 0.1 * p[1];
            E(1, 1) = 1.0 + 0.1 * std::cos(p[0]);
            return E;
        };
        FrameField frame{e};
        auto circle = [](double t) {
            double a = 2.0 * 3.14159265358979323846 * t;
            return Point{0.6 * std::cos(a), 0.6 * std::sin(a)};
        };
        auto reparam = [&](double t) {
            return circle(t + 0.07 * std::sin(2.0 * 3.14159265358979323846 * t));
        };
        auto rotated = [&](double t) { return circle(t + 0.37 - std::floor(t + 0.37)); };
        double base = loop_integral(frame, circle, 0);
        double r1 = loop_integral(frame, reparam, 0);
        double r2 = line_integral(frame, rotated, 0); // same circuit, shifted seam
        push("loop reparameterization invariance", std::abs(base - r1), 1e-10);
        push("loop starting-point invariance", std::abs(base - r2), 1e-10);
    }

    return report;
}

std::vector<SuiteReport> verify_all(std::uint64_t seed) {
    return {verify_identities(seed), verify_transport(seed), verify_frames(seed)};
}

} // namespace mag
