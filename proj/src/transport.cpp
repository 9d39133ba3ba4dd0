#include "mag/transport.hpp"

#include <cmath>

#include "mag/frames.hpp"

namespace mag {

namespace {

std::vector<double> curve_velocity(const std::function<Point(double)>& curve, double t,
                                   int n) {
    const double h = 1e-4;
    Point a = curve(t - h), b = curve(t - h / 2), c = curve(t + h / 2), d = curve(t + h);
    std::vector<double> dx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        dx[static_cast<std::size_t>(i)] =
            (4.0 * (c[i] - b[i]) / h - (d[i] - a[i]) / (2.0 * h)) / 3.0;
    return dx;
}

Point state_point(const std::vector<double>& y, int n) {
    return Point(std::vector<double>(y.begin(), y.begin() + n));
}

Tensor state_vector(const std::vector<double>& y, int n, int offset) {
    Tensor v(n, {up()});
    for (int i = 0; i < n; ++i) v(i) = y[static_cast<std::size_t>(offset + i)];
    return v;
}

} // namespace

Tensor parallel_transport(const TensorField& connection,
                          const std::function<Point(double)>& curve, double s0,
                          double s1, const Tensor& v0, const OdeOptions& opt) {
    const int n = v0.dim();
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = v0(i);
    OdeRhs rhs = [&](double s, const std::vector<double>& v, std::vector<double>& dv) {
        Point x = curve(s);
        Tensor gamma = connection(x);
        std::vector<double> dx = curve_velocity(curve, s, n);
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    acc -= gamma(k, i, j) * v[static_cast<std::size_t>(i)] *
                           dx[static_cast<std::size_t>(j)];
            dv[static_cast<std::size_t>(k)] = acc;
        }
    };
    std::vector<double> yf = integrate(rhs, s0, s1, y, opt);
    Tensor out(n, v0.slots());
    for (int i = 0; i < n; ++i) out(i) = yf[static_cast<std::size_t>(i)];
    return out;
}

std::vector<TrajectoryState> autoparallel(const TensorField& connection,
                                          const Point& x0, const Tensor& u0,
                                          double s0, double s1,
                                          const OdeOptions& opt) {
    const int n = x0.dim();
    std::vector<double> y(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(i)] = x0[i];
        y[static_cast<std::size_t>(n + i)] = u0(i);
    }
    OdeRhs rhs = [&connection, n](double, const std::vector<double>& y,
                                  std::vector<double>& dy) {
        Point x = state_point(y, n);
        Tensor gamma = connection(x);
        for (int i = 0; i < n; ++i) dy[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(n + i)];
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    acc -= gamma(k, i, j) * y[static_cast<std::size_t>(n + i)] *
                           y[static_cast<std::size_t>(n + j)];
            dy[static_cast<std::size_t>(n + k)] = acc;
        }
    };
    std::vector<TrajectoryState> states;
    auto observe = [&](const OdeSample& smp) {
        states.push_back({smp.s, state_point(smp.y, n), state_vector(smp.y, n, n)});
    };
    integrate(rhs, s0, s1, y, opt, observe);
    return states;
}

std::vector<TrajectoryState> extremal(const MetricAffineSpace& space, const Point& x0,
                                      const Tensor& u0, double s0, double s1,
                                      const OdeOptions& opt) {
    return autoparallel(cartan_connection_field(space), x0, u0, s0, s1, opt);
}

FrenetData frenet_transport(const MetricAffineSpace& space,
                            const std::function<Point(double)>& curve, double s,
                            double fd_scale) {
    const int n = space.n;
    TensorField gammah = cartan_connection_field(space);

    // Velocity of the curve at parameter t.
    auto vel = [&](double t) {
        std::vector<double> dx = curve_velocity(curve, t, n);
        Tensor v(n, {up()});
        for (int i = 0; i < n; ++i) v(i) = dx[static_cast<std::size_t>(i)];
        return v;
    };

    // Length-preserving transport derivative of a vector function along the
    // curve: D a = da/dt + Γ̂(a, v); central differences of width h.
    std::function<Tensor(const std::function<Tensor(double)>&, double, double)> D =
        [&](const std::function<Tensor(double)>& a, double t, double h) {
            Tensor da = a(t + h);
            da -= a(t - h);
            da *= 1.0 / (2.0 * h);
            Tensor gamma = gammah(curve(t));
            Tensor at = a(t);
            Tensor v = vel(t);
            for (int i = 0; i < n; ++i) {
                double acc = da(i);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) acc += gamma(i, k, l) * at(k) * v(l);
                da(i) = acc;
            }
            return da;
        };

    // Osculating flag: w1 = v, w_{k+1} = D w_k, with widening steps so nested
    // differencing stays stable.
    std::function<Tensor(int, double)> flag = [&](int k, double t) -> Tensor {
        if (k == 1) return vel(t);
        double h = fd_scale * std::pow(10.0, k - 2);
        return D([&](double tt) { return flag(k - 1, tt); }, t, h);
    };

    auto gs_at = [&](double t) {
        std::vector<Tensor> seeds;
        for (int k = 1; k <= n; ++k) seeds.push_back(flag(k, t));
        return gram_schmidt_frame(space.metric, seeds, curve(t));
    };

    Tensor frame = gs_at(s);
    Tensor g = space.metric(curve(s));
    FrenetData out;
    out.frame = frame;
    for (int a = 0; a < n; ++a) {
        double nn = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) nn += g(i, j) * frame(i, a) * frame(j, a);
        out.eps.push_back(nn > 0.0 ? 1.0 : -1.0);
    }
    // ξ_p = ε_{p+1} g(D e_p, e_{p+1})
    for (int pidx = 0; pidx + 1 < n; ++pidx) {
        auto ep = [&](double t) {
            Tensor fr = gs_at(t);
            Tensor v(n, {up()});
            for (int i = 0; i < n; ++i) v(i) = fr(i, pidx);
            return v;
        };
        Tensor de = D(ep, s, fd_scale);
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += g(i, j) * de(i) * frame(j, pidx + 1);
        out.xi.push_back(out.eps[static_cast<std::size_t>(pidx + 1)] * acc);
    }
    return out;
}

std::vector<TidalState> tidal_deviation(const MetricAffineSpace& space, const Point& x0,
                                        const Tensor& u0, const Acceleration& a1,
                                        const Acceleration& a2, const Tensor& dx0,
                                        const Tensor& w0, double s1,
                                        const OdeOptions& opt) {
    const int n = space.n;
    TensorField torsF = torsion_field(space);
    TensorField covTF = covariant_derivative_field(torsF, space.connection, n);

    std::vector<double> y(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(i)] = x0[i];
        y[static_cast<std::size_t>(n + i)] = u0(i);
        y[static_cast<std::size_t>(2 * n + i)] = dx0(i);
        y[static_cast<std::size_t>(3 * n + i)] = w0(i);
    }

    OdeRhs rhs = [&](double s, const std::vector<double>& y, std::vector<double>& dy) {
        Point x = state_point(y, n);
        Tensor v = state_vector(y, n, n);
        Tensor dx = state_vector(y, n, 2 * n);
        Tensor w = state_vector(y, n, 3 * n);
        Tensor gamma = space.connection(x);
        Tensor r = curvature(space, x);
        Tensor t = torsF(x);
        Tensor covT = covTF(x);
        Tensor acc1 = a1 ? a1(s, x, v) : Tensor(n, {up()});
        Tensor acc2 = a2 ? a2(s, x, v) : Tensor(n, {up()});

        for (int i = 0; i < n; ++i) {
            dy[static_cast<std::size_t>(i)] = v(i);
            double dv = acc1(i);
            double ddx = w(i);
            double dw = acc2(i) - acc1(i);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    dv -= gamma(i, k, l) * v(k) * v(l);
                    ddx -= gamma(i, k, l) * dx(k) * v(l);
                    dw -= gamma(i, k, l) * w(k) * v(l); // transport part of Dw/ds
                    for (int m = 0; m < n; ++m)
                        dw += (r(i, k, l, m) + covT(i, k, m, l)) * dx(m) * v(k) * v(l);
                }
            for (int l = 0; l < n; ++l) {
                for (int q = 0; q < n; ++q) dw += t(i, l, q) * w(q) * v(l);
                for (int m = 0; m < n; ++m) dw += gamma(i, m, l) * dx(m) * acc1(l);
            }
            dy[static_cast<std::size_t>(n + i)] = dv;
            dy[static_cast<std::size_t>(2 * n + i)] = ddx;
            dy[static_cast<std::size_t>(3 * n + i)] = dw;
        }
    };

    std::vector<TidalState> states;
    auto observe = [&](const OdeSample& smp) {
        states.push_back({smp.s, state_point(smp.y, n), state_vector(smp.y, n, n),
                          state_vector(smp.y, n, 2 * n), state_vector(smp.y, n, 3 * n)});
    };
    integrate(rhs, 0.0, s1, y, opt, observe);
    return states;
}

namespace {

// First and second derivative of sampled vectors at the middle of three
// (nonuniformly spaced) samples, by Lagrange differentiation.
Tensor lagrange_d1(const Tensor& f0, const Tensor& f1, const Tensor& f2, double s0,
                   double s1, double s2) {
    const double h01 = s1 - s0, h12 = s2 - s1, h02 = s2 - s0;
    Tensor out = f0;
    for (int i = 0; i < f0.dim(); ++i)
        out(i) = -h12 / (h01 * h02) * f0(i) + (h12 - h01) / (h01 * h12) * f1(i) +
                 h01 / (h12 * h02) * f2(i);
    return out;
}

} // namespace

Tensor tidal_lie_residual(const MetricAffineSpace& space,
                          const std::vector<TidalState>& solution, std::size_t index,
                          const Acceleration& a2) {
    const int n = space.n;
    if (index < 2 || index + 2 >= solution.size())
        throw IntegrationError("tidal_lie_residual: index must have two neighbors per side");

    // D w at a sample from its two neighbors.
    auto Dw_at = [&](std::size_t j) {
        const TidalState& a = solution[j - 1];
        const TidalState& b = solution[j];
        const TidalState& c = solution[j + 1];
        Tensor dw = lagrange_d1(a.w, b.w, c.w, a.s, b.s, c.s);
        Tensor gamma = space.connection(b.x);
        for (int i = 0; i < n; ++i) {
            double acc = dw(i);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) acc += gamma(i, k, l) * b.w(k) * b.v(l);
            dw(i) = acc;
        }
        return dw;
    };

    const TidalState& st = solution[index];
    Tensor dw_m = Dw_at(index - 1), dw_0 = Dw_at(index), dw_p = Dw_at(index + 1);
    Tensor d2w = lagrange_d1(dw_m, dw_0, dw_p, solution[index - 1].s, st.s,
                             solution[index + 1].s);
    Tensor gamma = space.connection(st.x);
    for (int i = 0; i < n; ++i) {
        double acc = d2w(i);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) acc += gamma(i, k, l) * dw_0(k) * st.v(l);
        d2w(i) = acc;
    }

    Tensor r = curvature(space, st.x);
    Tensor t = torsion(space, st.x);
    Tensor covT =
        covariant_derivative(torsion_field(space), space.connection, st.x);
    // The identity differentiates the first-order deviation equation once, so
    // the forcing enters through its covariant rate along the curve.
    Tensor acc2(n, {up()});
    if (a2) {
        const TidalState& sm = solution[index - 1];
        const TidalState& sp = solution[index + 1];
        Tensor am = a2(sm.s, sm.x, sm.v);
        Tensor a0 = a2(st.s, st.x, st.v);
        Tensor ap = a2(sp.s, sp.x, sp.v);
        acc2 = lagrange_d1(am, a0, ap, sm.s, st.s, sp.s);
        for (int i = 0; i < n; ++i) {
            double acc = acc2(i);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) acc += gamma(i, k, l) * a0(k) * st.v(l);
            acc2(i) = acc;
        }
    }

    Tensor res(n, {up()});
    for (int i = 0; i < n; ++i) {
        double lhs = d2w(i);
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l)
                for (int p = 0; p < n; ++p)
                    lhs -= (r(i, k, l, p) + covT(i, k, p, l)) * st.w(p) * st.v(k) * st.v(l);
            for (int e = 0; e < n; ++e) lhs -= t(i, k, e) * dw_0(e) * st.v(k);
        }
        res(i) = lhs - acc2(i);
    }
    return res;
}

Tensor parallelogram_gap(const MetricAffineSpace& space, const Point& p,
                         const Tensor& a, const Tensor& b, double rho,
                         const OdeOptions& opt_in) {
    const int n = space.n;
    {
        // Collinearity guard via the Gram determinant of the coordinate span.
        double aa = 0, bb = 0, ab = 0;
        for (int i = 0; i < n; ++i) {
            aa += a(i) * a(i);
            bb += b(i) * b(i);
            ab += a(i) * b(i);
        }
        if (aa * bb - ab * ab <= 1e-20 * aa * bb)
            throw DomainError("parallelogram_gap: a and b are collinear");
    }
    OdeOptions opt = opt_in;
    opt.rtol = std::min(opt.rtol, 1e-12);
    opt.atol = std::min(opt.atol, 1e-14);

    const TensorField& conn = space.connection;
    // One leg: autoparallel from (x, u) over canonical length rho, carrying a
    // second vector by parallel transport.
    auto leg = [&](const Point& x0, const Tensor& u0, const Tensor& carry0) {
        std::vector<double> y(static_cast<std::size_t>(3 * n));
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] = x0[i];
            y[static_cast<std::size_t>(n + i)] = u0(i);
            y[static_cast<std::size_t>(2 * n + i)] = carry0(i);
        }
        OdeRhs rhs = [&conn, n](double, const std::vector<double>& y,
                                std::vector<double>& dy) {
            Point x = state_point(y, n);
            Tensor gamma = conn(x);
            for (int i = 0; i < n; ++i) dy[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(n + i)];
            for (int k = 0; k < n; ++k) {
                double du = 0.0, dc = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        du -= gamma(k, i, j) * y[static_cast<std::size_t>(n + i)] *
                              y[static_cast<std::size_t>(n + j)];
                        dc -= gamma(k, i, j) * y[static_cast<std::size_t>(2 * n + i)] *
                              y[static_cast<std::size_t>(n + j)];
                    }
                dy[static_cast<std::size_t>(n + k)] = du;
                dy[static_cast<std::size_t>(2 * n + k)] = dc;
            }
        };
        std::vector<double> yf = integrate(rhs, 0.0, rho, y, opt);
        return std::make_pair(state_point(yf, n), state_vector(yf, n, 2 * n));
    };

    auto [xB, bB] = leg(p, a, b);
    auto [xC, ignore1] = leg(xB, bB, bB);
    auto [xD, aD] = leg(p, b, a);
    auto [xE, ignore2] = leg(xD, aD, aD);
    (void)ignore1;
    (void)ignore2;

    Tensor gap(n, {up()});
    for (int i = 0; i < n; ++i) gap(i) = xE[i] - xC[i];
    return gap;
}

Tensor field_strength(const MetricAffineSpace& space, const TensorField& A,
                      const Point& p) {
    const int n = space.n;
    Tensor covA = covariant_derivative(A, space.connection, p); // A_d;c
    Tensor t = torsion(space, p);
    Tensor Av = A(p);
    Tensor f(n, {down(), down()});
    for (int d = 0; d < n; ++d)
        for (int c = 0; c < n; ++c) {
            double acc = covA(d, c) - covA(c, d);
            for (int q = 0; q < n; ++q) acc += t(q, c, d) * Av(q);
            f(d, c) = acc;
        }
    return f;
}

std::vector<TrajectoryState> forced_motion(const MetricAffineSpace& space,
                                           const Point& x0, const Tensor& u0,
                                           const ForceSpec& force, double s1,
                                           const OdeOptions& opt) {
    if (!(force.mass > 0.0)) throw DomainError("forced_motion: mass must be positive");
    const int n = space.n;
    const double mc = force.mass * force.light_speed;
    TensorField gammah = cartan_connection_field(space);

    OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        Point x = state_point(y, n);
        Tensor u = state_vector(y, n, n);
        Tensor gamma = gammah(x);
        Tensor gi = space.ginv(x);
        for (int i = 0; i < n; ++i) dy[static_cast<std::size_t>(i)] = u(i);
        std::vector<double> f(static_cast<std::size_t>(n), 0.0);
        if (force.scalar_potential) {
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int i = 0; i < n; ++i) {
                    Tensor dU = force.scalar_potential->deriv
                                    ? force.scalar_potential->deriv(i)(x)
                                    : partial_derivative(*force.scalar_potential, x, i);
                    acc += gi(l, i) * dU.values()[0];
                }
                f[static_cast<std::size_t>(l)] += u(0) / mc * acc;
            }
        }
        if (force.vector_potential) {
            Tensor F = field_strength(space, *force.vector_potential, x);
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int d = 0; d < n; ++d)
                    for (int c = 0; c < n; ++c) acc += gi(l, d) * F(d, c) * u(c);
                f[static_cast<std::size_t>(l)] += force.charge / mc * acc;
            }
        }
        for (int k = 0; k < n; ++k) {
            double du = f[static_cast<std::size_t>(k)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) du -= gamma(k, i, j) * u(i) * u(j);
            dy[static_cast<std::size_t>(n + k)] = du;
        }
    };

    std::vector<double> y(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<std::size_t>(i)] = x0[i];
        y[static_cast<std::size_t>(n + i)] = u0(i);
    }
    std::vector<TrajectoryState> states;
    auto observe = [&](const OdeSample& smp) {
        states.push_back({smp.s, state_point(smp.y, n), state_vector(smp.y, n, n)});
    };
    integrate(rhs, 0.0, s1, y, opt, observe);
    return states;
}

} // namespace mag
