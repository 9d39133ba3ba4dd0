#include "mag/geometry.hpp"

#include <cmath>
#include <vector>

namespace mag {

namespace {

std::vector<Tensor> field_derivs(const TensorField& f, const Point& p, int n) {
    std::vector<Tensor> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int axis = 0; axis < n; ++axis)
        d.push_back(f.deriv ? f.deriv(axis)(p) : partial_derivative(f, p, axis));
    return d;
}

Tensor torsion_of(const Tensor& gamma) {
    const int n = gamma.dim();
    Tensor t(n, gamma.slots());
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t(a, i, j) = gamma(a, j, i) - gamma(a, i, j);
    return t;
}

TensorField torsion_of_field(const TensorField& connection) {
    TensorField out;
    out.eval = [connection](const Point& p) { return torsion_of(connection(p)); };
    if (connection.deriv) {
        out.deriv = [connection](int axis) { return torsion_of_field(connection.deriv(axis)); };
    }
    out.noise = connection.noise;
    return out;
}

} // namespace

Tensor torsion(const MetricAffineSpace& space, const Point& p) {
    return torsion_of(space.connection(p));
}

TensorField torsion_field(const MetricAffineSpace& space) {
    return torsion_of_field(space.connection);
}

Tensor nonmetricity(const MetricAffineSpace& space, const Point& p) {
    const int n = space.n;
    Tensor g = space.metric(p);
    Tensor gamma = space.connection(p);
    std::vector<Tensor> dg = field_derivs(space.metric, p, n);
    Tensor q(n, {down(), down(), down()});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = dg[static_cast<std::size_t>(k)](i, j);
                for (int r = 0; r < n; ++r)
                    acc -= gamma(r, i, k) * g(r, j) + gamma(r, j, k) * g(r, i);
                q(k, i, j) = -acc;
            }
    return q;
}

TensorField nonmetricity_field(const MetricAffineSpace& space) {
    TensorField out;
    out.eval = [space](const Point& p) { return nonmetricity(space, p); };
    double dg_noise = space.metric.deriv ? space.metric.noise
                                         : std::cbrt(space.metric.noise * space.metric.noise);
    out.noise = std::max(space.connection.noise, dg_noise);
    return out;
}

Tensor nonmetricity_contravariant(const MetricAffineSpace& space, const Point& p) {
    const int n = space.n;
    Tensor q = nonmetricity(space, p);
    Tensor gi = space.ginv(p);
    Tensor out(n, {down(), up(), up()});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        acc += gi(i, a) * gi(j, b) * q(k, a, b);
                out(k, i, j) = acc;
            }
    return out;
}

Tensor reconstruct_connection(const TensorField& metric, const TensorField& T,
                              const TensorField& Q, const Point& p) {
    const int n = p.dim();
    Tensor g = metric(p);
    Tensor gi = invert_metric(g);
    Tensor t = T(p);
    Tensor q = Q(p);
    std::vector<Tensor> dg = field_derivs(metric, p, n);

    // N_kij = ∂_k g_ij + Q_kij
    auto N = [&](int k, int i, int j) {
        return dg[static_cast<std::size_t>(k)](i, j) + q(k, i, j);
    };

    Tensor out(n, {up(), down(), down()});
    for (int pp = 0; pp < n; ++pp)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) {
                    double bracket = N(i, j, k) + N(j, k, i) - N(k, i, j);
                    for (int r = 0; r < n; ++r)
                        bracket -= t(r, j, i) * g(r, k) + t(r, i, k) * g(r, j) +
                                   t(r, j, k) * g(r, i);
                    acc += gi(pp, k) * bracket;
                }
                out(pp, j, i) = 0.5 * acc;
            }
    return out;
}

Tensor cartan_symbol(const MetricAffineSpace& space, const Point& p) {
    const int n = space.n;
    Tensor gi = space.ginv(p);
    Tensor q = nonmetricity(space, p);
    // g_kl;m = −Q_mkl
    Tensor out(n, {up(), down(), down()});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int m = 0; m < n; ++m)
                    acc += gi(i, m) * (-q(m, k, l) + q(l, k, m) + q(k, m, l));
                out(i, k, l) = 0.5 * acc;
            }
    return out;
}

TensorField cartan_symbol_field(const MetricAffineSpace& space) {
    TensorField out;
    out.eval = [space](const Point& p) { return cartan_symbol(space, p); };
    out.noise = nonmetricity_field(space).noise;
    return out;
}

TensorField cartan_connection_field(const MetricAffineSpace& space) {
    TensorField cs = cartan_symbol_field(space);
    TensorField out;
    TensorField conn = space.connection;
    out.eval = [conn, cs](const Point& p) { return conn(p) - cs(p); };
    out.noise = std::max(conn.noise, cs.noise);
    return out;
}

MetricAffineSpace cartan_space(const MetricAffineSpace& space) {
    MetricAffineSpace out = space;
    out.connection = cartan_connection_field(space);
    out.name = space.name.empty() ? "cartan" : space.name + ":cartan";
    return out;
}

Tensor curvature(const MetricAffineSpace& space, const Point& p) {
    const int n = space.n;
    Tensor gamma = space.connection(p);
    std::vector<Tensor> dgamma = field_derivs(space.connection, p, n);
    Tensor r(n, {up(), down(), down(), down()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = dgamma[static_cast<std::size_t>(i)](a, b, j) -
                                 dgamma[static_cast<std::size_t>(j)](a, b, i);
                    for (int c = 0; c < n; ++c)
                        acc += gamma(a, c, i) * gamma(c, b, j) -
                               gamma(a, c, j) * gamma(c, b, i);
                    r(a, b, i, j) = acc;
                }
    return r;
}

Tensor ricci(const MetricAffineSpace& space, const Point& p) {
    return trace(curvature(space, p), 0, 2);
}

double scalar_curvature(const MetricAffineSpace& space, const Point& p) {
    Tensor ric = ricci(space, p);
    Tensor gi = space.ginv(p);
    double acc = 0.0;
    for (int b = 0; b < space.n; ++b)
        for (int j = 0; j < space.n; ++j)
            acc += gi(b, j) * ric(b, j);
    return acc;
}

Tensor shifted_curvature(const MetricAffineSpace& space, const TensorField& A,
                         const Point& p) {
    const int n = space.n;
    Tensor a = A(p);
    if (a.rank() != 3)
        throw TensorError("shifted_curvature: shift must be rank (1,2)");
    double scale = std::max(a.max_abs(), 1.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (std::abs(a(x, y, z) - a(x, z, y)) > 1e-12 * scale)
                    throw TensorError("shifted_curvature: shift not symmetric in its lower pair");

    Tensor r = curvature(space, p);
    Tensor t = torsion(space, p);
    Tensor covA = covariant_derivative(A, space.connection, p); // A^a_bc;d
    Tensor out(n, {up(), down(), down(), down()});
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (int e = 0; e < n; ++e) {
                    double acc = r(x, b, d, e) + covA(x, b, e, d) - covA(x, b, d, e);
                    for (int c = 0; c < n; ++c)
                        acc += a(x, c, d) * a(c, b, e) - a(x, c, e) * a(c, b, d);
                    for (int q = 0; q < n; ++q)
                        acc += t(q, d, e) * a(x, b, q);
                    out(x, b, d, e) = acc;
                }
    return out;
}

Tensor lie_derivative_metric(const MetricAffineSpace& space, const TensorField& xi,
                             const Point& p) {
    const int n = space.n;
    Tensor g = space.metric(p);
    Tensor x = xi(p);
    Tensor covXi = covariant_derivative(xi, space.connection, p); // ξ^k_;a
    Tensor t = torsion(space, p);
    Tensor q = nonmetricity(space, p);
    Tensor out(n, {down(), down()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) {
                acc += covXi(k, a) * g(k, b) + covXi(k, b) * g(k, a);
                acc -= q(k, a, b) * x(k); // g_ab;k ξ^k
                for (int l = 0; l < n; ++l)
                    acc += t(l, k, a) * g(l, b) * x(k) + t(l, k, b) * g(l, a) * x(k);
            }
            out(a, b) = acc;
        }
    return out;
}

Tensor lie_derivative_metric_oracle(const MetricAffineSpace& space, const TensorField& xi,
                                    const Point& p) {
    const int n = space.n;
    Tensor g = space.metric(p);
    Tensor x = xi(p);
    std::vector<Tensor> dg = field_derivs(space.metric, p, n);
    std::vector<Tensor> dxi = field_derivs(xi, p, n);
    Tensor out(n, {down(), down()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double acc = 0.0;
            for (int c = 0; c < n; ++c)
                acc += x(c) * dg[static_cast<std::size_t>(c)](a, b) +
                       g(c, b) * dxi[static_cast<std::size_t>(a)](c) +
                       g(a, c) * dxi[static_cast<std::size_t>(b)](c);
            out(a, b) = acc;
        }
    return out;
}

Tensor lie_derivative_connection(const MetricAffineSpace& space, const TensorField& xi,
                                 const Point& p) {
    const int n = space.n;
    Tensor x = xi(p);
    Tensor r = curvature(space, p);
    Tensor t = torsion(space, p);
    Tensor covXi = covariant_derivative(xi, space.connection, p);
    TensorField covXiF = covariant_derivative_field(xi, space.connection, n);
    Tensor covXi2 = covariant_derivative(covXiF, space.connection, p); // ξ^a_;bc
    Tensor covT = covariant_derivative(torsion_field(space), space.connection, p); // T^a_bp;c
    Tensor out(n, {up(), down(), down()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                double acc = covXi2(a, b, c);
                for (int q = 0; q < n; ++q)
                    acc -= r(a, b, c, q) * x(q) + covT(a, b, q, c) * x(q) +
                           t(a, b, q) * covXi(q, c);
                out(a, b, c) = acc;
            }
    return out;
}

Tensor lie_derivative_connection_oracle(const MetricAffineSpace& space,
                                        const TensorField& xi, const Point& p) {
    const int n = space.n;
    Tensor gamma = space.connection(p);
    Tensor x = xi(p);
    std::vector<Tensor> dgamma = field_derivs(space.connection, p, n);
    std::vector<Tensor> dxi = field_derivs(xi, p, n);
    // ∂_b∂_c ξ^a, symmetrized to damp FD noise
    std::vector<std::vector<Tensor>> d2xi(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
        TensorField db = xi.derivative(b);
        for (int c = 0; c < n; ++c)
            d2xi[static_cast<std::size_t>(b)].push_back(
                db.deriv ? db.deriv(c)(p) : partial_derivative(db, p, c));
    }
    Tensor out(n, {up(), down(), down()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                double acc = 0.5 * (d2xi[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)](a) +
                                    d2xi[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)](a));
                for (int q = 0; q < n; ++q)
                    acc += x(q) * dgamma[static_cast<std::size_t>(q)](a, b, c) -
                           gamma(q, b, c) * dxi[static_cast<std::size_t>(q)](a) +
                           gamma(a, q, c) * dxi[static_cast<std::size_t>(b)](q) +
                           gamma(a, b, q) * dxi[static_cast<std::size_t>(c)](q);
                out(a, b, c) = acc;
            }
    return out;
}

Tensor bianchi_residual(const MetricAffineSpace& space, const Point& p) {
    const int n = space.n;
    Tensor r = curvature(space, p);
    Tensor t = torsion(space, p);
    Tensor covT = covariant_derivative(torsion_field(space), space.connection, p);
    Tensor out(n, {up(), down(), down(), down()});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) {
                    double acc = covT(k, i, j, m) + covT(k, m, i, j) + covT(k, j, m, i);
                    for (int q = 0; q < n; ++q)
                        acc += t(k, q, i) * t(q, j, m) + t(k, q, m) * t(q, i, j) +
                               t(k, q, j) * t(q, m, i);
                    acc -= r(k, j, m, i) + r(k, i, j, m) + r(k, m, i, j);
                    out(k, i, j, m) = acc;
                }
    return out;
}

Tensor killing_residual(const MetricAffineSpace& space, const TensorField& xi,
                        const Point& p) {
    return lie_derivative_metric(space, xi, p);
}

Tensor killing2_residual(const MetricAffineSpace& space, const TensorField& xi,
                         const Point& p) {
    return lie_derivative_connection(space, xi, p);
}

Tensor commutator_residual(const MetricAffineSpace& space, const TensorField& u,
                           const Point& p) {
    const int n = space.n;
    Tensor uv = u(p);
    Tensor r = curvature(space, p);
    Tensor t = torsion(space, p);
    TensorField cov1F = covariant_derivative_field(u, space.connection, n);
    Tensor cov1 = cov1F(p);
    Tensor cov2 = covariant_derivative(cov1F, space.connection, p); // u^a_;kl
    Tensor out(n, {up(), down(), down()});
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                double acc = cov2(a, k, l) - cov2(a, l, k);
                for (int b = 0; b < n; ++b)
                    acc -= r(a, b, l, k) * uv(b);
                for (int q = 0; q < n; ++q)
                    acc += t(q, l, k) * cov1(a, q);
                out(a, k, l) = acc;
            }
    return out;
}

} // namespace mag
