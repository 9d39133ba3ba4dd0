#ifndef MAG_TRANSPORT_HPP
#define MAG_TRANSPORT_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mag/geometry.hpp"
#include "mag/ode.hpp"

namespace mag {

struct TrajectoryState {
    double s = 0.0;
    Point x;
    Tensor u; // tangent dx/ds
};

// Solves dv^k/ds = −Γ^k_ij v^i (dx^j/ds) along the given curve; the curve map
// must be smooth (velocity is taken by high-order finite differences).
Tensor parallel_transport(const TensorField& connection,
                          const std::function<Point(double)>& curve, double s0,
                          double s1, const Tensor& v0, const OdeOptions& opt = {});

// Integrates dx/ds = u, du^k/ds = −Γ^k_ij u^i u^j; returns every accepted step.
std::vector<TrajectoryState> autoparallel(const TensorField& connection,
                                          const Point& x0, const Tensor& u0,
                                          double s0, double s1,
                                          const OdeOptions& opt = {});

// Stationary-length curve: autoparallel of the metric-compatible companion
// connection Γ̂ = Γ − Γ(C); conserves g_ij u^i u^j along the way.
std::vector<TrajectoryState> extremal(const MetricAffineSpace& space, const Point& x0,
                                      const Tensor& u0, double s0, double s1,
                                      const OdeOptions& opt = {});

// Accompanying-frame data at one parameter value: orthonormalized osculating
// frame, its signs ε_p = sign g(e_p, e_p), and curvatures ξ_p (p = 1..n−1)
// measured through the length-preserving transport derivative (which is the
// Γ̂ transport, since Γ(C) is symmetric).
struct FrenetData {
    Tensor frame;            // e(i, (p)), orthonormal
    std::vector<double> eps; // n signs
    std::vector<double> xi;  // n−1 curvatures
};

FrenetData frenet_transport(const MetricAffineSpace& space,
                            const std::function<Point(double)>& curve, double s,
                            double fd_scale = 1e-3);

// Acceleration prescription a(s, x, u) for trajectory pairs; empty = free fall.
using Acceleration =
    std::function<Tensor(double s, const Point& x, const Tensor& u)>;

struct TidalState {
    double s = 0.0;
    Point x;
    Tensor v;  // base tangent
    Tensor dx; // deviation δx
    Tensor w;  // transport rate of the deviation
};

// Integrates the base trajectory (acceleration a1) together with the deviation
// equation
//   D²δx^i/ds² = T^i_ln w^n v^l + (R^i_klm + T^i_km;l) δx^m v^k v^l
//                + a2 − a1 + Γ^i_ml δx^m a1^l,
// where w = Dδx/ds and all transports use the space's own connection.
std::vector<TidalState> tidal_deviation(const MetricAffineSpace& space, const Point& x0,
                                        const Tensor& u0, const Acceleration& a1,
                                        const Acceleration& a2, const Tensor& dx0,
                                        const Tensor& w0, double s1,
                                        const OdeOptions& opt = {});

// Residual of the along-curve identity tying the deviation rate to the Lie
// derivative of the connection,
//   (L_w Γ)^i_kl v^k v^l − (a₂ − a₁ + Γ^i_ml δx^m a₁^l),
// assembled from the transported quantities of one tidal solution sample.
// Valid as stated for a geodesic base (a1 = 0); the a1 ≠ 0 case would need
// the transverse gradient of w, which a single solution does not carry.
Tensor tidal_lie_residual(const MetricAffineSpace& space,
                          const std::vector<TidalState>& solution, std::size_t index,
                          const Acceleration& a2);

// Closure failure of the small parallelogram spanned by ρ·a and ρ·b at p:
// shoot an autoparallel leg along a, carry b by parallel transport, shoot the
// second leg, and compare against the opposite order.  Returns the coordinate
// gap; leading order T^k_mn a^m b^n ρ².
Tensor parallelogram_gap(const MetricAffineSpace& space, const Point& p,
                         const Tensor& a, const Tensor& b, double rho,
                         const OdeOptions& opt = {});

struct ForceSpec {
    std::optional<TensorField> scalar_potential; // U, rank 0
    std::optional<TensorField> vector_potential; // A_k, slots (down)
    double charge = 0.0;
    double mass = 1.0;
    double light_speed = 1.0;
};

// Field strength F_dc = A_d;c − A_c;d + T^p_cd A_p (gauge invariant: a pure
// gradient A = ∂Λ yields F = 0).
Tensor field_strength(const MetricAffineSpace& space, const TensorField& A,
                      const Point& p);

// Length-preserving (Γ̂) transport dynamics with force terms:
//   du^l/ds = −Γ̂^l_kj u^k u^j + (u⁰/(m c)) g^li ∂_i U + (e/(m c)) g^ld F_dc u^c.
// Zero potentials reduce to the extremal curve.
std::vector<TrajectoryState> forced_motion(const MetricAffineSpace& space,
                                           const Point& x0, const Tensor& u0,
                                           const ForceSpec& force, double s1,
                                           const OdeOptions& opt = {});

} // namespace mag

#endif
