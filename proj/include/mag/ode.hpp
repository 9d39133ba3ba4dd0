#ifndef MAG_ODE_HPP
#define MAG_ODE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mag/errors.hpp"

namespace mag {

// y' = f(s, y) over flat double vectors.
using OdeRhs = std::function<void(double s, const std::vector<double>& y,
                                  std::vector<double>& dy)>;

struct OdeOptions {
    bool adaptive = true;      // false: fixed-step classical RK4
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 0.0; // 0: auto
    double fixed_step = 0.0;   // required when !adaptive
    std::size_t max_steps = 2'000'000;
};

struct OdeSample {
    double s;
    std::vector<double> y;
};

namespace detail {

inline void rk4_step(const OdeRhs& f, double s, std::vector<double>& y, double h,
                     std::vector<double>& k1, std::vector<double>& k2,
                     std::vector<double>& k3, std::vector<double>& k4,
                     std::vector<double>& tmp) {
    const std::size_t n = y.size();
    f(s, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(s + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(s + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    f(s + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

} // namespace detail

// Integrates y from s0 to s1, calling `observe` (when set) after every accepted
// step.  Adaptive path is the Dormand–Prince 5(4) embedded pair with PI-free
// step control; fixed path is classical RK4.
inline std::vector<double> integrate(
    const OdeRhs& f, double s0, double s1, std::vector<double> y,
    const OdeOptions& opt = {},
    const std::function<void(const OdeSample&)>& observe = nullptr) {
    const std::size_t n = y.size();
    if (observe) observe({s0, y});
    if (s1 == s0) return y;
    const double dir = (s1 > s0) ? 1.0 : -1.0;

    if (!opt.adaptive) {
        if (opt.fixed_step <= 0.0)
            throw IntegrationError("integrate: fixed_step must be positive");
        std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
        double s = s0;
        std::size_t steps = 0;
        while (dir * (s1 - s) > 0.0) {
            if (++steps > opt.max_steps)
                throw IntegrationError("integrate: step budget exhausted at s=" +
                                       std::to_string(s));
            double h = dir * std::min(opt.fixed_step, dir * (s1 - s));
            detail::rk4_step(f, s, y, h, k1, k2, k3, k4, tmp);
            s += h;
            for (double v : y)
                if (!std::isfinite(v))
                    throw IntegrationError("integrate: non-finite state at s=" +
                                           std::to_string(s));
            if (observe) observe({s, y});
        }
        return y;
    }

    // Dormand–Prince 5(4) coefficients.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n);
    double s = s0;
    double h = opt.initial_step != 0.0 ? std::abs(opt.initial_step)
                                       : std::abs(s1 - s0) / 100.0;
    std::size_t steps = 0;
    bool first = true;
    f(s, y, k1); // FSAL seed
    while (dir * (s1 - s) > 0.0) {
        if (++steps > opt.max_steps)
            throw IntegrationError("integrate: step budget exhausted at s=" +
                                   std::to_string(s));
        h = std::min(h, dir * (s1 - s));
        if (h <= 0.0 || s + dir * h == s)
            throw IntegrationError("integrate: step underflow at s=" + std::to_string(s));
        const double hd = dir * h;
        if (!first) {
            k1 = k7; // FSAL
        }
        first = false;
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + hd * a21 * k1[i];
        f(s + c2 * hd, tmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hd * (a31 * k1[i] + a32 * k2[i]);
        f(s + c3 * hd, tmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hd * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(s + c4 * hd, tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hd * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(s + c5 * hd, tmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hd * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        f(s + hd, tmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hd * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                   b6 * k6[i]);
        f(s + hd, ynew, k7);

        double err = 0.0;
        bool finite = true;
        for (std::size_t i = 0; i < n; ++i) {
            double e = hd * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (e / sc) * (e / sc);
            if (!std::isfinite(ynew[i])) finite = false;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (finite && err <= 1.0) {
            s += hd;
            y = ynew;
            if (observe) observe({s, y});
        } else {
            first = true; // k1 must be recomputed? No: same point, k1 still valid.
            k7 = k1;      // keep FSAL seed at the unchanged point
        }
        double fac = finite ? 0.9 * std::pow(std::max(err, 1e-16), -0.2) : 0.25;
        fac = std::min(5.0, std::max(0.2, fac));
        h = h * fac;
        if (h < std::abs(s1 - s0) * 1e-14 && dir * (s1 - s) > 0.0)
            throw IntegrationError("integrate: step underflow (stiff or singular) at s=" +
                                   std::to_string(s));
    }
    return y;
}

} // namespace mag

#endif
