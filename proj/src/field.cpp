#include "mag/field.hpp"

#include <algorithm>

namespace mag {

double fd_step(double noise, double x_axis) {
    double n = std::max(noise, std::numeric_limits<double>::epsilon());
    return std::cbrt(n) * std::max(1.0, std::abs(x_axis));
}

Tensor partial_derivative(const TensorField& field, const Point& p, int axis) {
    if (axis < 0 || axis >= p.dim())
        throw DifferentiationError("partial_derivative: axis " + std::to_string(axis) +
                                   " out of range for dimension " + std::to_string(p.dim()));
    const double h = fd_step(field.noise, p[axis]);

    auto central = [&](double step) {
        Tensor hi = field(p.shifted(axis, +step));
        Tensor lo = field(p.shifted(axis, -step));
        Tensor d = hi;
        d -= lo;
        d *= 1.0 / (2.0 * step);
        return d;
    };

    // One Richardson level: (4 D(h/2) - D(h)) / 3 cancels the h^2 error term.
    Tensor coarse = central(h);
    Tensor fine = central(h / 2.0);
    Tensor out = 4.0 * fine - coarse;
    out *= 1.0 / 3.0;
    if (!out.finite())
        throw DifferentiationError("partial_derivative: non-finite field values near axis " +
                                   std::to_string(axis));
    return out;
}

TensorField TensorField::derivative(int axis) const {
    if (deriv) return deriv(axis);
    TensorField self = *this;
    TensorField d;
    d.eval = [self, axis](const Point& p) { return partial_derivative(self, p, axis); };
    // Central differencing leaves relative error ~ noise^(2/3); record it so a
    // second derivative picks a wider step instead of amplifying round-off.
    d.noise = std::cbrt(self.noise * self.noise);
    return d;
}

TensorField add_fields(const TensorField& a, const TensorField& b) {
    TensorField f;
    f.eval = [a, b](const Point& p) { return a(p) + b(p); };
    if (a.deriv && b.deriv)
        f.deriv = [a, b](int axis) { return add_fields(a.deriv(axis), b.deriv(axis)); };
    f.noise = std::max(a.noise, b.noise);
    return f;
}

TensorField scale_field(const TensorField& a, double factor) {
    TensorField f;
    f.eval = [a, factor](const Point& p) {
        Tensor t = a(p);
        t *= factor;
        return t;
    };
    if (a.deriv)
        f.deriv = [a, factor](int axis) { return scale_field(a.deriv(axis), factor); };
    f.noise = a.noise;
    return f;
}

TensorField constant_field(Tensor value) {
    TensorField f;
    f.eval = [value](const Point&) { return value; };
    int dim = value.dim();
    auto slots = value.slots();
    f.deriv = [dim, slots](int) {
        Tensor zero(dim, slots);
        return constant_field(zero);
    };
    return f;
}

} // namespace mag
