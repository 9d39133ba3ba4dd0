#ifndef MAG_FIELD_HPP
#define MAG_FIELD_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include "mag/tensor.hpp"

namespace mag {

// A smooth tensor-valued field: pure function Point -> TensorComponents.
// `deriv`, when set, returns the analytic partial-derivative field along one
// axis; otherwise derivative() falls back to finite differences.  `noise` is
// the relative evaluation error, used to pick the FD step (machine epsilon
// for closed-form evaluators, larger for fields that are themselves FD-built).
struct TensorField {
    std::function<Tensor(const Point&)> eval;
    std::function<TensorField(int)> deriv;
    double noise = std::numeric_limits<double>::epsilon();

    Tensor operator()(const Point& p) const { return eval(p); }

    // Analytic derivative field when available, FD-backed otherwise.
    TensorField derivative(int axis) const;
};

using ScalarField = TensorField; // rank-0 components

// FD step for one axis: h = max(noise, eps)^(1/3) * max(1, |x_axis|).
double fd_step(double noise, double x_axis);

// Central difference with one Richardson extrapolation level (O(h^4) for C^5
// fields).  Throws DifferentiationError when the field evaluates non-finite
// near p.
Tensor partial_derivative(const TensorField& field, const Point& p, int axis);

// Constant field with the given components.
TensorField constant_field(Tensor value);

// Pointwise sum; keeps analytic derivative closures when both operands have
// them.
TensorField add_fields(const TensorField& a, const TensorField& b);

// Pointwise scalar multiple; keeps analytic derivative closures.
TensorField scale_field(const TensorField& a, double factor);

} // namespace mag

#endif
