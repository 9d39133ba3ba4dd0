#ifndef MAG_SPACE_HPP
#define MAG_SPACE_HPP

#include <string>

#include "mag/field.hpp"

namespace mag {

// A chart domain carrying a metric g_ij and an independent connection whose
// components Γ^a_bc need not be symmetric in (b, c).  Index layout of the
// connection tensor: slot 0 contravariant, slot 1 the transported index, slot
// 2 the derivative direction, matching a^i_;l = ∂_l a^i + Γ^i_kl a^k.
struct MetricAffineSpace {
    int n = 0;
    TensorField metric;     // g_ij, slots (down, down)
    TensorField connection; // Γ^a_bc, slots (up, down, down)
    std::string name;

    Tensor g(const Point& p) const { return metric(p); }
    Tensor ginv(const Point& p) const { return invert_metric(metric(p)); }
    Tensor gamma(const Point& p) const { return connection(p); }
};

// Covariant derivative of an arbitrary holonomic-slot tensor field; the new
// covariant (derivative) slot is appended last:
//   f^i_;l = ∂_l f^i + Γ^i_kl f^k,   f_i;l = ∂_l f_i − Γ^k_il f_k.
Tensor covariant_derivative(const TensorField& f, const TensorField& gamma,
                            const Point& p);

// Field version; `n` is the chart dimension (needed to prebuild per-axis
// derivative fields).  No analytic derivative closure is attached, so nesting
// falls back to finite differences with a widened step.
TensorField covariant_derivative_field(const TensorField& f, const TensorField& gamma,
                                       int n);

// Levi-Civita connection of a metric field:
//   Γ^i_kl = ½ g^im (∂_k g_ml + ∂_l g_mk − ∂_m g_kl).
Tensor christoffel(const TensorField& metric, const Point& p);
TensorField christoffel_field(const TensorField& metric, int n);

} // namespace mag

#endif
