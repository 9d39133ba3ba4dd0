#include "mag/frames.hpp"

#include <cmath>

namespace mag {

TensorField FrameField::dual_field() const {
    TensorField self = e;
    TensorField d;
    d.eval = [self](const Point& p) { return invert_rank2(self(p)); };
    d.noise = e.noise;
    return d;
}

Tensor frame_metric(const Tensor& g, const Tensor& frame) {
    const int n = g.dim();
    Tensor eta(n, {down(Basis::frame), down(Basis::frame)});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) acc += g(i, j) * frame(i, a) * frame(j, b);
            eta(a, b) = acc;
        }
    return eta;
}

Tensor gram_schmidt_frame(const TensorField& metric, const std::vector<Tensor>& seeds,
                          const Point& p, double tol) {
    const int n = p.dim();
    if (static_cast<int>(seeds.size()) != n)
        throw FrameError("gram_schmidt_frame: need exactly n seed vectors");
    Tensor g = metric(p);
    auto dot = [&](const Tensor& a, const Tensor& b) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += g(i, j) * a(i) * b(j);
        return acc;
    };

    std::vector<Tensor> e;
    std::vector<double> eps;
    for (int k = 0; k < n; ++k) {
        Tensor v = seeds[static_cast<std::size_t>(k)];
        double seed_norm = std::abs(dot(v, v));
        for (int l = 0; l < k; ++l) {
            double coef = eps[static_cast<std::size_t>(l)] * dot(v, e[static_cast<std::size_t>(l)]);
            Tensor adj = e[static_cast<std::size_t>(l)];
            adj *= coef;
            v -= adj;
        }
        double nn = dot(v, v);
        if (std::abs(nn) <= tol * std::max(1.0, seed_norm))
            throw FrameError("gram_schmidt_frame: seed " + std::to_string(k) +
                             " is null or dependent after projection");
        eps.push_back(nn > 0.0 ? 1.0 : -1.0);
        v *= 1.0 / std::sqrt(std::abs(nn));
        e.push_back(v);
    }
    Tensor out(n, {up(), down(Basis::frame)});
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) out(i, a) = e[static_cast<std::size_t>(a)](i);
    return out;
}

Tensor anholonomy_object(const FrameField& frame, const Point& p) {
    const int n = p.dim();
    Tensor E = frame.e(p);
    Tensor D = invert_rank2(E);
    std::vector<Tensor> dE;
    for (int l = 0; l < n; ++l)
        dE.push_back(frame.e.deriv ? frame.e.deriv(l)(p)
                                   : partial_derivative(frame.e, p, l));
    Tensor c(n, {up(Basis::frame), down(Basis::frame), down(Basis::frame)});
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        acc += D(m, j) * (E(l, a) * dE[static_cast<std::size_t>(l)](j, b) -
                                          E(l, b) * dE[static_cast<std::size_t>(l)](j, a));
                c(m, a, b) = acc;
            }
    return c;
}

Tensor anholonomic_connection(const MetricAffineSpace& space, const FrameField& frame,
                              const Point& p) {
    const int n = space.n;
    Tensor E = frame.e(p);
    Tensor D = invert_rank2(E);
    Tensor gamma = space.connection(p);
    std::vector<Tensor> dE;
    for (int l = 0; l < n; ++l)
        dE.push_back(frame.e.deriv ? frame.e.deriv(l)(p)
                                   : partial_derivative(frame.e, p, l));
    Tensor out(n, {up(Basis::frame), down(Basis::frame), down(Basis::frame)});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int q = 0; q < n; ++q) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) {
                    double inner = 0.0;
                    for (int l = 0; l < n; ++l) {
                        inner += E(l, q) * dE[static_cast<std::size_t>(l)](j, k);
                        for (int m = 0; m < n; ++m)
                            inner += gamma(j, m, l) * E(m, k) * E(l, q);
                    }
                    acc += D(i, j) * inner;
                }
                out(i, k, q) = acc;
            }
    return out;
}

namespace {

const double kGaussNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                               0.3399810435848563, 0.8611363115940526};
const double kGaussWeights[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};

double form_along(const FrameField& frame, int frame_index, const Point& x,
                  const std::vector<double>& dx) {
    Tensor D = invert_rank2(frame.e(x));
    double acc = 0.0;
    for (int k = 0; k < x.dim(); ++k) acc += D(frame_index, k) * dx[static_cast<std::size_t>(k)];
    return acc;
}

} // namespace

double loop_integral(const FrameField& frame, const std::vector<Point>& loop,
                     int frame_index) {
    if (loop.size() < 4) throw FrameError("loop_integral: need at least 3 vertices");
    const int n = loop.front().dim();
    double scale = 0.0;
    for (const Point& p : loop)
        for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(p[i]));
    for (int i = 0; i < n; ++i)
        if (std::abs(loop.front()[i] - loop.back()[i]) > 1e-12 * std::max(scale, 1.0))
            throw FrameError("loop_integral: polyline is not closed");

    std::vector<Point> v(loop.begin(), loop.end() - 1);
    const std::size_t m = v.size();
    auto vert = [&](std::ptrdiff_t i) -> const Point& {
        return v[static_cast<std::size_t>(((i % static_cast<std::ptrdiff_t>(m)) +
                                           static_cast<std::ptrdiff_t>(m)) %
                                          static_cast<std::ptrdiff_t>(m))];
    };

    double total = 0.0;
    for (std::size_t seg = 0; seg < m; ++seg) {
        const Point& p0 = vert(static_cast<std::ptrdiff_t>(seg) - 1);
        const Point& p1 = vert(static_cast<std::ptrdiff_t>(seg));
        const Point& p2 = vert(static_cast<std::ptrdiff_t>(seg) + 1);
        const Point& p3 = vert(static_cast<std::ptrdiff_t>(seg) + 2);
        for (int q = 0; q < 4; ++q) {
            double t = 0.5 * (kGaussNodes[q] + 1.0);
            std::vector<double> x(static_cast<std::size_t>(n)), dx(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                // Catmull–Rom cubic through p1 (t=0) and p2 (t=1).
                double a0 = p0[i], a1 = p1[i], a2 = p2[i], a3 = p3[i];
                double c1 = 0.5 * (a2 - a0);
                double c2 = 0.5 * (2.0 * a0 - 5.0 * a1 + 4.0 * a2 - a3);
                double c3 = 0.5 * (-a0 + 3.0 * a1 - 3.0 * a2 + a3);
                x[static_cast<std::size_t>(i)] = a1 + t * (c1 + t * (c2 + t * c3));
                dx[static_cast<std::size_t>(i)] = c1 + t * (2.0 * c2 + 3.0 * t * c3);
            }
            total += 0.5 * kGaussWeights[q] *
                     form_along(frame, frame_index, Point(x), dx);
        }
    }
    return total;
}

double loop_integral(const FrameField& frame,
                     const std::function<Point(double)>& curve, int frame_index,
                     int nseg) {
    const Point start = curve(0.0);
    const Point end = curve(1.0);
    const int n = start.dim();
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(start[i]));
    for (int i = 0; i < n; ++i)
        if (std::abs(start[i] - end[i]) > 1e-10 * scale)
            throw FrameError("loop_integral: curve(0) != curve(1)");
    return line_integral(frame, curve, frame_index, nseg);
}

double line_integral(const FrameField& frame,
                     const std::function<Point(double)>& curve, int frame_index,
                     int nseg) {
    const int n = curve(0.0).dim();
    auto velocity = [&](double t) {
        // O(h^4) central difference of the curve; the curve map is assumed
        // smooth and 1-periodic beyond [0,1].
        const double h = 1e-4;
        Point a = curve(t - h), b = curve(t - h / 2), c = curve(t + h / 2), d = curve(t + h);
        std::vector<double> dx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            dx[static_cast<std::size_t>(i)] =
                (4.0 * (c[i] - b[i]) / h - (d[i] - a[i]) / (2.0 * h)) / 3.0;
        return dx;
    };

    double total = 0.0;
    const double w = 1.0 / static_cast<double>(nseg);
    for (int seg = 0; seg < nseg; ++seg) {
        double t0 = seg * w;
        for (int q = 0; q < 4; ++q) {
            double t = t0 + 0.5 * w * (kGaussNodes[q] + 1.0);
            total += 0.5 * w * kGaussWeights[q] *
                     form_along(frame, frame_index, curve(t), velocity(t));
        }
    }
    return total;
}

void check_lorentz(const LorentzFrameMap& map, const Tensor& eta, double tol) {
    const int n = eta.dim();
    double scale = std::max(eta.max_abs(), 1.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) acc += eta(i, l) * map.b(i, j) * map.b(l, k);
            if (std::abs(acc - eta(j, k)) > tol * scale)
                throw FrameError("check_lorentz: map does not preserve the frame metric");
        }
}

LorentzFrameMap lorentz_boost(int n, int spatial_axis, double beta) {
    if (spatial_axis < 1 || spatial_axis >= n)
        throw FrameError("lorentz_boost: spatial axis out of range");
    if (!(std::abs(beta) < 1.0))
        throw DomainError("lorentz_boost: |beta| must be < 1");
    const double gam = 1.0 / std::sqrt(1.0 - beta * beta);
    Tensor b(n, {up(Basis::frame), down(Basis::frame)});
    for (int i = 0; i < n; ++i) b(i, i) = 1.0;
    b(0, 0) = gam;
    b(spatial_axis, spatial_axis) = gam;
    b(0, spatial_axis) = gam * beta;
    b(spatial_axis, 0) = gam * beta;
    return {b};
}

LorentzFrameMap compose(const LorentzFrameMap& first, const LorentzFrameMap& second) {
    const int n = first.b.dim();
    Tensor b(n, first.b.slots());
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int m = 0; m < n; ++m) acc += first.b(l, m) * second.b(m, k);
            b(l, k) = acc;
        }
    return {b};
}

Tensor boost_frame(const Tensor& frame, const LorentzFrameMap& map, const Tensor& eta) {
    check_lorentz(map, eta);
    const int n = frame.dim();
    Tensor out(n, frame.slots());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += frame(i, l) * map.b(l, k);
            out(i, k) = acc;
        }
    return out;
}

std::pair<Tensor, Tensor> invariance_check(const Tensor& frame, const Tensor& w_frame,
                                           const LorentzFrameMap& map, const Tensor& eta) {
    const int n = frame.dim();
    Tensor newframe = boost_frame(frame, map, eta);
    Tensor binv = invert_rank2(map.b);
    Tensor w_new(n, w_frame.slots());
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) acc += binv(k, l) * w_frame(l);
        w_new(k) = acc;
    }
    Tensor rec(n, {up()});
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a) acc += newframe(i, a) * w_new(a);
        rec(i) = acc;
    }
    return {w_new, rec};
}

} // namespace mag
