#include "mag/spacetimes.hpp"

#include <cmath>
#include <memory>
#include <random>

#include "mag/ode.hpp"

namespace mag {

double Polynomial::operator()(const Point& p) const {
    double acc = 0.0;
    for (const Term& t : terms) {
        double v = t.coeff;
        for (std::size_t k = 0; k < t.exp.size(); ++k)
            for (int e = 0; e < t.exp[k]; ++e) v *= p[static_cast<int>(k)];
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::derivative(int axis) const {
    Polynomial d;
    for (const Term& t : terms) {
        int e = t.exp[static_cast<std::size_t>(axis)];
        if (e == 0) continue;
        Term nt = t;
        nt.coeff *= e;
        nt.exp[static_cast<std::size_t>(axis)] = e - 1;
        d.terms.push_back(std::move(nt));
    }
    return d;
}

TensorField polynomial_field(int n, std::vector<Slot> slots,
                             std::vector<Polynomial> comps, bool analytic) {
    std::size_t expected = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) expected *= static_cast<std::size_t>(n);
    if (comps.size() != expected)
        throw TensorError("polynomial_field: component count mismatch");

    auto shared = std::make_shared<std::vector<Polynomial>>(std::move(comps));
    TensorField f;
    f.eval = [n, slots, shared](const Point& p) {
        Tensor t(n, slots);
        auto vals = t.values();
        for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = (*shared)[k](p);
        return t;
    };
    if (analytic) {
        f.deriv = [n, slots, shared](int axis) {
            std::vector<Polynomial> d;
            d.reserve(shared->size());
            for (const Polynomial& c : *shared) d.push_back(c.derivative(axis));
            return polynomial_field(n, slots, std::move(d), true);
        };
    }
    return f;
}

MetricAffineSpace minkowski(int n, double light_speed) {
    Tensor g(n, {down(), down()});
    g(0, 0) = light_speed * light_speed;
    for (int i = 1; i < n; ++i) g(i, i) = -1.0;
    MetricAffineSpace s;
    s.n = n;
    s.metric = constant_field(g);
    s.connection = constant_field(Tensor(n, {up(), down(), down()}));
    s.name = "minkowski";
    return s;
}

MetricAffineSpace two_sphere(double radius) {
    const double R2 = radius * radius;
    TensorField metric;
    metric.eval = [R2](const Point& p) {
        Tensor g(2, {down(), down()});
        double s = std::sin(p[0]);
        g(0, 0) = R2;
        g(1, 1) = R2 * s * s;
        return g;
    };
    metric.deriv = [R2](int axis) {
        TensorField d;
        d.eval = [R2, axis](const Point& p) {
            Tensor g(2, {down(), down()});
            if (axis == 0) g(1, 1) = R2 * std::sin(2.0 * p[0]);
            return g;
        };
        return d;
    };
    MetricAffineSpace s;
    s.n = 2;
    s.metric = metric;
    s.connection = christoffel_field(metric, 2);
    s.name = "two-sphere";
    return s;
}

MetricAffineSpace flat_torsion_space(const Tensor& torsion_const) {
    const int n = torsion_const.dim();
    Tensor g(n, {down(), down()});
    g(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) g(i, i) = -1.0;
    TensorField metric = constant_field(g);
    TensorField T = constant_field(torsion_const);
    TensorField Q = constant_field(Tensor(n, {down(), down(), down()}));
    Point origin(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    Tensor gamma = reconstruct_connection(metric, T, Q, origin);
    MetricAffineSpace s;
    s.n = n;
    s.metric = metric;
    s.connection = constant_field(gamma);
    s.name = "flat-torsion";
    return s;
}

MetricAffineSpace synthetic_space(int n, TensorField metric, TensorField T,
                                  TensorField Q, const char* name) {
    MetricAffineSpace s;
    s.n = n;
    s.metric = metric;
    TensorField conn;
    conn.eval = [metric, T, Q](const Point& p) {
        return reconstruct_connection(metric, T, Q, p);
    };
    double dg_noise = metric.deriv ? metric.noise : std::cbrt(metric.noise * metric.noise);
    conn.noise = std::max({T.noise, Q.noise, dg_noise});
    s.connection = conn;
    s.name = name;
    return s;
}

namespace {

Polynomial random_poly(std::mt19937_64& rng, int n, double amplitude, int max_degree,
                       bool include_const) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Polynomial poly;
    std::vector<std::vector<int>> exps;
    std::vector<int> zero(static_cast<std::size_t>(n), 0);
    if (include_const) exps.push_back(zero);
    if (max_degree >= 1)
        for (int i = 0; i < n; ++i) {
            auto e = zero;
            e[static_cast<std::size_t>(i)] = 1;
            exps.push_back(e);
        }
    if (max_degree >= 2)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                auto e = zero;
                e[static_cast<std::size_t>(i)] += 1;
                e[static_cast<std::size_t>(j)] += 1;
                exps.push_back(e);
            }
    double scale = amplitude / static_cast<double>(exps.size());
    for (auto& e : exps) poly.terms.push_back({scale * u(rng), std::move(e)});
    return poly;
}

} // namespace

MetricAffineSpace random_space(int n, std::uint64_t seed, bool analytic_derivs,
                               double amplitude) {
    std::mt19937_64 rng(seed);
    const std::size_t nn = static_cast<std::size_t>(n);

    // Metric: diag(+1, −1, ...) + symmetric polynomial perturbation.
    std::vector<Polynomial> gcomps(nn * nn);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Polynomial pert = random_poly(rng, n, amplitude, 2, false);
            if (i == j)
                pert.terms.push_back({i == 0 ? 1.0 : -1.0,
                                      std::vector<int>(nn, 0)});
            gcomps[static_cast<std::size_t>(i * n + j)] = pert;
            gcomps[static_cast<std::size_t>(j * n + i)] = pert;
        }
    TensorField metric =
        polynomial_field(n, {down(), down()}, std::move(gcomps), analytic_derivs);

    // Connection: Levi-Civita + symmetric polynomial shift (nonmetricity) +
    // antisymmetric constant-plus-linear part (torsion).
    std::vector<Polynomial> shift(nn * nn * nn);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Polynomial s = random_poly(rng, n, amplitude, 2, true);
                shift[static_cast<std::size_t>((a * n + b) * n + c)] = s;
                shift[static_cast<std::size_t>((a * n + c) * n + b)] = s;
            }
    std::vector<Polynomial> anti(nn * nn * nn);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Polynomial s = random_poly(rng, n, amplitude, 1, true);
                Polynomial neg = s;
                for (auto& t : neg.terms) t.coeff = -t.coeff;
                anti[static_cast<std::size_t>((a * n + b) * n + c)] = s;
                anti[static_cast<std::size_t>((a * n + c) * n + b)] = neg;
            }
    std::vector<Slot> cslots{up(), down(), down()};
    TensorField extra = add_fields(
        polynomial_field(n, cslots, std::move(shift), analytic_derivs),
        polynomial_field(n, cslots, std::move(anti), analytic_derivs));

    MetricAffineSpace s;
    s.n = n;
    s.metric = metric;
    s.connection = add_fields(christoffel_field(metric, n), extra);
    s.name = "random";
    return s;
}

TensorField random_vector_field(int n, std::uint64_t seed, bool analytic_derivs,
                                double amplitude) {
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> comps;
    for (int i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, amplitude, 2, true));
    return polynomial_field(n, {up()}, std::move(comps), analytic_derivs);
}

TensorField random_symmetric_shift_field(int n, std::uint64_t seed,
                                         bool analytic_derivs, double amplitude) {
    std::mt19937_64 rng(seed);
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<Polynomial> comps(nn * nn * nn);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Polynomial s = random_poly(rng, n, amplitude, 2, true);
                comps[static_cast<std::size_t>((a * n + b) * n + c)] = s;
                comps[static_cast<std::size_t>((a * n + c) * n + b)] = s;
            }
    return polynomial_field(n, {up(), down(), down()}, std::move(comps), analytic_derivs);
}

Point random_point(int n, std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& c : x) c = u(rng);
    return Point(std::move(x));
}

// ---------------------------------------------------------------------------
// Schwarzschild

namespace {

void check_region(double r, double rg) {
    if (!(r > rg))
        throw DomainError("schwarzschild: r = " + std::to_string(r) +
                          " is not outside rg = " + std::to_string(rg));
}

} // namespace

Tensor schwarzschild_connection(const SchwarzschildSpace& ss, const Point& p) {
    const double rg = ss.rg, c = ss.c;
    const double r = p[1], phi = p[2];
    check_region(r, rg);
    const double A = rg / (2.0 * r * (r - rg));
    const double B = c * c * rg * (r - rg) / (2.0 * r * r * r);
    Tensor g(4, {up(), down(), down()});
    g(0, 0, 1) = g(0, 1, 0) = A;
    g(1, 0, 0) = B;
    g(1, 1, 1) = -A;
    g(1, 2, 2) = -(r - rg);
    g(1, 3, 3) = -(r - rg) * std::sin(phi) * std::sin(phi);
    g(2, 1, 2) = g(2, 2, 1) = 1.0 / r;
    g(2, 3, 3) = -std::sin(phi) * std::cos(phi);
    g(3, 1, 3) = g(3, 3, 1) = 1.0 / r;
    g(3, 2, 3) = g(3, 3, 2) = std::cos(phi) / std::sin(phi);
    return g;
}

SchwarzschildSpace schwarzschild(double rg, double light_speed) {
    SchwarzschildSpace ss;
    ss.rg = rg;
    ss.c = light_speed;
    const double c = light_speed;

    TensorField metric;
    metric.eval = [rg, c](const Point& p) {
        const double r = p[1], phi = p[2];
        check_region(r, rg);
        Tensor g(4, {down(), down()});
        g(0, 0) = c * c * (r - rg) / r;
        g(1, 1) = -r / (r - rg);
        g(2, 2) = -r * r;
        g(3, 3) = -r * r * std::sin(phi) * std::sin(phi);
        return g;
    };
    metric.deriv = [rg, c](int axis) {
        TensorField d;
        d.eval = [rg, c, axis](const Point& p) {
            const double r = p[1], phi = p[2];
            check_region(r, rg);
            Tensor g(4, {down(), down()});
            if (axis == 1) {
                g(0, 0) = c * c * rg / (r * r);
                g(1, 1) = rg / ((r - rg) * (r - rg));
                g(2, 2) = -2.0 * r;
                g(3, 3) = -2.0 * r * std::sin(phi) * std::sin(phi);
            } else if (axis == 2) {
                g(3, 3) = -r * r * std::sin(2.0 * phi);
            }
            return g;
        };
        return d;
    };

    TensorField conn;
    SchwarzschildSpace key = ss; // rg, c only; space not needed for eval
    conn.eval = [key](const Point& p) { return schwarzschild_connection(key, p); };
    conn.deriv = [rg, c](int axis) {
        TensorField d;
        d.eval = [rg, c, axis](const Point& p) {
            const double r = p[1], phi = p[2];
            check_region(r, rg);
            Tensor g(4, {up(), down(), down()});
            if (axis == 1) {
                const double dA = -rg * (2.0 * r - rg) /
                                  (2.0 * r * r * (r - rg) * (r - rg));
                const double dB = c * c * rg * (3.0 * rg - 2.0 * r) /
                                  (2.0 * r * r * r * r);
                g(0, 0, 1) = g(0, 1, 0) = dA;
                g(1, 0, 0) = dB;
                g(1, 1, 1) = -dA;
                g(1, 2, 2) = -1.0;
                g(1, 3, 3) = -std::sin(phi) * std::sin(phi);
                g(2, 1, 2) = g(2, 2, 1) = -1.0 / (r * r);
                g(3, 1, 3) = g(3, 3, 1) = -1.0 / (r * r);
            } else if (axis == 2) {
                g(1, 3, 3) = -(r - rg) * std::sin(2.0 * phi);
                g(2, 3, 3) = -std::cos(2.0 * phi);
                const double s = std::sin(phi);
                g(3, 2, 3) = g(3, 3, 2) = -1.0 / (s * s);
            }
            return g;
        };
        return d;
    };

    ss.space.n = 4;
    ss.space.metric = metric;
    ss.space.connection = conn;
    ss.space.name = "schwarzschild";
    return ss;
}

SchwarzschildSpace schwarzschild_of_mass(double mass_g) {
    if (!(mass_g > 0.0)) throw DomainError("schwarzschild_of_mass: mass must be positive");
    return schwarzschild(constants::schwarzschild_radius(mass_g));
}

double radial_photon_redshift(const SchwarzschildSpace& ss, double r_emit,
                              double r_obs, double omega_emit) {
    check_region(r_emit, ss.rg);
    check_region(r_obs, ss.rg);
    auto factor = [&](double r) { return std::sqrt((r - ss.rg) / r); };
    return omega_emit * factor(r_emit) / factor(r_obs);
}

double radial_photon_redshift_ode(const SchwarzschildSpace& ss, double r_emit,
                                  double r_obs, double omega_emit) {
    check_region(r_emit, ss.rg);
    check_region(r_obs, ss.rg);
    const double rg = ss.rg, c = ss.c;
    auto factor = [&](double r) { return std::sqrt((r - rg) / r); };
    const double dir = (r_obs >= r_emit) ? 1.0 : -1.0;
    // State (k⁰, k¹) as functions of r along the null ray dx/dλ = k.
    std::vector<double> y{omega_emit / (c * factor(r_emit)),
                          dir * omega_emit * factor(r_emit)};
    OdeRhs rhs = [rg, c](double r, const std::vector<double>& k,
                         std::vector<double>& dk) {
        const double A = rg / (2.0 * r * (r - rg));
        const double B = c * c * rg * (r - rg) / (2.0 * r * r * r);
        const double k0 = k[0], k1 = k[1];
        dk[0] = -2.0 * A * k0 * k1 / k1;
        dk[1] = -(B * k0 * k0 - A * k1 * k1) / k1;
    };
    OdeOptions opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-14;
    std::vector<double> yf = integrate(rhs, r_emit, r_obs, y, opt);
    return c * yf[0] * factor(r_obs);
}

// ---------------------------------------------------------------------------
// Friedmann

FriedmannSpace friedmann(bool closed, std::function<double(double)> a,
                         std::function<double(double)> adot, double light_speed) {
    FriedmannSpace fs;
    fs.closed = closed;
    fs.a = a;
    fs.adot = adot;
    fs.c = light_speed;
    auto f = [closed](double chi) { return closed ? std::sin(chi) : std::sinh(chi); };

    TensorField conf;
    conf.eval = [a, f](const Point& p) {
        const double aa = a(p[0]);
        const double ff = f(p[1]);
        const double st = std::sin(p[2]);
        Tensor g(4, {down(), down()});
        g(0, 0) = aa * aa;
        g(1, 1) = -aa * aa;
        g(2, 2) = -aa * aa * ff * ff;
        g(3, 3) = -aa * aa * ff * ff * st * st;
        return g;
    };
    fs.conformal.n = 4;
    fs.conformal.metric = conf;
    fs.conformal.connection = christoffel_field(conf, 4);
    fs.conformal.name = closed ? "friedmann-closed-conformal" : "friedmann-open-conformal";

    const double c = light_speed;
    TensorField cosm;
    cosm.eval = [a, f, c](const Point& p) {
        const double aa = a(p[0]);
        const double ff = f(p[1]);
        const double st = std::sin(p[2]);
        Tensor g(4, {down(), down()});
        g(0, 0) = c * c;
        g(1, 1) = -aa * aa;
        g(2, 2) = -aa * aa * ff * ff;
        g(3, 3) = -aa * aa * ff * ff * st * st;
        return g;
    };
    fs.cosmic.n = 4;
    fs.cosmic.metric = cosm;
    fs.cosmic.connection = christoffel_field(cosm, 4);
    fs.cosmic.name = closed ? "friedmann-closed-cosmic" : "friedmann-open-cosmic";
    return fs;
}

FriedmannSpace friedmann_closed_cosh() {
    return friedmann(true, [](double t) { return std::cosh(t); },
                     [](double t) { return std::sinh(t); });
}

double friedmann_redshift(const FriedmannSpace& fs, double t1, double t2) {
    return fs.a(t1) / fs.a(t2);
}

double friedmann_redshift_rate(const FriedmannSpace& fs, double t1, double t2) {
    const double a2 = fs.a(t2);
    return (fs.adot(t1) * a2 - fs.a(t1) * fs.adot(t2)) / (a2 * a2);
}

double friedmann_null_invariant_drift(const FriedmannSpace& fs, double t1, double dchi) {
    const double chi0 = 0.5;
    // State (t, χ, k⁰, k¹) along affine λ; radial null ray, θ = π/2 plane.
    const double k0 = 1.0 / (fs.a(t1) * fs.a(t1)); // aω = a²k⁰ = 1 initially
    std::vector<double> y{t1, chi0, k0, k0};
    const TensorField& conn = fs.conformal.connection;
    OdeRhs rhs = [&conn](double, const std::vector<double>& y, std::vector<double>& dy) {
        Point p{y[0], y[1], 1.5707963267948966, 0.3};
        Tensor gamma = conn(p);
        const double k[2] = {y[2], y[3]};
        dy[0] = k[0];
        dy[1] = k[1];
        for (int a = 0; a < 2; ++a) {
            double acc = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) acc -= gamma(a, i, j) * k[i] * k[j];
            dy[2 + a] = acc;
        }
    };
    double drift = 0.0;
    const double inv0 = fs.a(t1) * fs.a(t1) * k0;
    auto observe = [&](const OdeSample& s) {
        double inv = fs.a(s.y[0]) * fs.a(s.y[0]) * s.y[2];
        drift = std::max(drift, std::abs(inv - inv0) / std::abs(inv0));
    };
    // λ is not χ; integrate until χ has advanced by dchi using an event-free
    // overshoot-then-trim approach: dχ/dλ = k¹ > 0, so integrate λ adaptively
    // in segments and stop past the target.
    OdeOptions opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-14;
    double lambda = 0.0;
    std::vector<double> state = y;
    std::size_t guard = 0;
    while (state[1] < chi0 + dchi) {
        if (++guard > 10000) throw IntegrationError("friedmann ray: no progress");
        double step = (chi0 + dchi - state[1]) / std::max(state[3], 1e-300);
        state = integrate(rhs, lambda, lambda + step, state, opt, observe);
        lambda += step;
    }
    return drift;
}

std::pair<Tensor, Tensor> friedmann_boost(const FriedmannSpace& fs, const Point& p,
                                          double V) {
    const double c = fs.c;
    if (!(std::abs(V) < c)) throw DomainError("friedmann_boost: |V| must be < c");
    const double aa = fs.a(p[0]);
    const double ff = fs.closed ? std::sin(p[1]) : std::sinh(p[1]);
    const double st = std::sin(p[2]);
    Tensor e(4, {up(), down(Basis::frame)});
    e(0, 0) = 1.0 / c;
    e(1, 1) = 1.0 / aa;
    e(2, 2) = 1.0 / (aa * ff);
    e(3, 3) = 1.0 / (aa * ff * st);
    const double beta = V / c;
    const double gam = 1.0 / std::sqrt(1.0 - beta * beta);
    Tensor ep = e;
    for (int i = 0; i < 4; ++i) {
        ep(i, 0) = gam * e(i, 0) + gam * beta * e(i, 1);
        ep(i, 1) = gam * beta * e(i, 0) + gam * e(i, 1);
    }
    return {e, ep};
}

} // namespace mag
