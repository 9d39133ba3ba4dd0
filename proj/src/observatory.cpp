#include "mag/observatory.hpp"

#include <cmath>
#include <numbers>

namespace mag {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

DelayResult time_delay(const OrbitScenario& scenario) {
    using namespace constants;
    if (!(scenario.mass > 0.0)) throw DomainError("time_delay: mass must be positive");
    DelayResult out;
    out.rg = schwarzschild_radius(scenario.mass);

    double r = scenario.radius;
    double T = scenario.period;
    if (r <= 0.0 && T <= 0.0)
        throw DomainError("time_delay: need radius or period");
    if (r <= 0.0) {
        r = std::cbrt(G * scenario.mass * T * T / (4.0 * kPi * kPi));
        out.radius_from_kepler = true;
    }
    if (T <= 0.0) T = 2.0 * kPi * std::sqrt(r * r * r / (G * scenario.mass));
    if (!(r > out.rg)) throw DomainError("time_delay: orbit inside rg");

    const double alpha = 2.0 * kPi / T;
    const double inner = (r - out.rg) / r - alpha * alpha * r * r / (c * c);
    if (!(inner > 0.0)) throw DomainError("time_delay: superluminal orbit");

    out.radius = r;
    out.period = T;
    out.ds = (2.0 * kPi / alpha) * (c * std::sqrt((r - out.rg) / r) - c * std::sqrt(inner));
    out.dt = out.ds / c;
    return out;
}

double measured_orbital_speed(const SchwarzschildSpace& ss, double r, double omega) {
    if (!(r > ss.rg)) throw DomainError("measured_orbital_speed: r must exceed rg");
    return std::sqrt(r / (r - ss.rg)) * r * omega;
}

DopplerResult s2_doppler(const OrbitScenario& scenario) {
    using namespace constants;
    if (!(scenario.mass > 0.0)) throw DomainError("s2_doppler: mass must be positive");
    if (!(scenario.r_peri > 0.0 && scenario.r_apo >= scenario.r_peri))
        throw DomainError("s2_doppler: need 0 < r_peri <= r_apo");
    const double rg = schwarzschild_radius(scenario.mass);
    if (!(scenario.r_peri > rg)) throw DomainError("s2_doppler: pericentre inside rg");
    const double a = 0.5 * (scenario.r_peri + scenario.r_apo);

    auto speed = [&](double r) {
        double v2 = G * scenario.mass * (2.0 / r - 1.0 / a);
        if (!(v2 >= 0.0 && v2 < c * c)) throw DomainError("s2_doppler: unphysical speed");
        return std::sqrt(v2);
    };
    auto ratio = [&](double r, double V) {
        return std::sqrt(r / (r - rg)) / std::sqrt(1.0 - V * V / (c * c));
    };

    DopplerResult out;
    out.V_peri = speed(scenario.r_peri);
    out.V_apo = speed(scenario.r_apo);
    out.ratio_peri = ratio(scenario.r_peri, out.V_peri);
    out.ratio_apo = ratio(scenario.r_apo, out.V_apo);
    if (scenario.lambda_emit > 0.0) {
        out.lambda_peri = scenario.lambda_emit / out.ratio_peri;
        out.lambda_apo = scenario.lambda_emit / out.ratio_apo;
        out.dlambda = out.lambda_apo - out.lambda_peri;
    }
    return out;
}

Tensor stationary_frame(const SchwarzschildSpace& ss, const Point& p) {
    const double r = p[1], phi = p[2];
    if (!(r > ss.rg)) throw DomainError("stationary_frame: r must exceed rg");
    Tensor e(4, {up(), down(Basis::frame)});
    e(0, 0) = std::sqrt(r / (r - ss.rg)) / ss.c;
    e(1, 1) = std::sqrt((r - ss.rg) / r);
    e(2, 2) = 1.0 / r;
    e(3, 3) = 1.0 / (r * std::sin(phi));
    return e;
}

namespace {

std::pair<Tensor, Tensor> boosted_pair(const SchwarzschildSpace& ss, const Point& p,
                                       double beta, int axis) {
    if (!(std::abs(beta) < 1.0))
        throw DomainError("boost: speed must be below light speed");
    Tensor e = stationary_frame(ss, p);
    Tensor eta(4, {down(Basis::frame), down(Basis::frame)});
    eta(0, 0) = 1.0;
    for (int i = 1; i < 4; ++i) eta(i, i) = -1.0;
    Tensor ep = boost_frame(e, lorentz_boost(4, axis, beta), eta);
    return {e, ep};
}

} // namespace

std::pair<Tensor, Tensor> orbital_boost_frame(const SchwarzschildSpace& ss,
                                              const Point& p, double omega) {
    const double V = measured_orbital_speed(ss, p[1], omega);
    return boosted_pair(ss, p, V / ss.c, 2);
}

std::pair<Tensor, Tensor> radial_boost_frame(const SchwarzschildSpace& ss,
                                             const Point& p, double v_coordinate) {
    const double r = p[1];
    if (!(r > ss.rg)) throw DomainError("radial_boost_frame: r must exceed rg");
    const double V = r / (r - ss.rg) * v_coordinate;
    return boosted_pair(ss, p, V / ss.c, 1);
}

double orbit_gamma(const SchwarzschildSpace& ss, double r, double omega) {
    Point p{0.0, r, kPi / 2.0, 0.0};
    auto [e, ep] = orbital_boost_frame(ss, p, omega);
    return ep(0, 0) / e(0, 0);
}

double time_delay_from_boost(const SchwarzschildSpace& ss, double r, double omega,
                             int nseg) {
    static const double nodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                    0.3399810435848563, 0.8611363115940526};
    static const double weights[4] = {0.3478548451374538, 0.6521451548625461,
                                      0.6521451548625461, 0.3478548451374538};
    const double T = 2.0 * kPi / omega;
    const double red = std::sqrt((r - ss.rg) / r);
    double acc = 0.0;
    const double w = T / nseg;
    for (int seg = 0; seg < nseg; ++seg) {
        for (int q = 0; q < 4; ++q) {
            double t = (seg + 0.5 * (nodes[q] + 1.0)) * w;
            Point p{t, r, kPi / 2.0, omega * t};
            auto [e, ep] = orbital_boost_frame(ss, p, omega);
            double gamma = ep(0, 0) / e(0, 0);
            acc += 0.5 * w * weights[q] * (gamma - 1.0) * red;
        }
    }
    return acc;
}

} // namespace mag
