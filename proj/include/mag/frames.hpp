#ifndef MAG_FRAMES_HPP
#define MAG_FRAMES_HPP

#include <functional>
#include <vector>

#include "mag/space.hpp"

namespace mag {

// A frame (tetrad) field: holonomic components of the frame vectors,
// e(i, (a)) = e^i_(a), slots (holonomic up, frame down).  The dual co-frame
// e^(a)_i is the pointwise matrix inverse.
struct FrameField {
    TensorField e;

    Tensor frame(const Point& p) const { return e(p); }
    Tensor dual(const Point& p) const { return invert_rank2(e(p)); }
    TensorField dual_field() const;
};

// Frame metric η_(a)(b) = g_ij e^i_(a) e^j_(b).
Tensor frame_metric(const Tensor& g, const Tensor& frame);

// Gram–Schmidt orthonormalization of independent seed vectors against an
// indefinite metric; normalizes each leg to g(e,e) = ±1 in seed order.
// Throws FrameError on (near-)null or dependent seeds.
Tensor gram_schmidt_frame(const TensorField& metric, const std::vector<Tensor>& seeds,
                          const Point& p, double tol = 1e-10);

// Anholonomy object c^(m)_(a)(b) = e^(m)_j (e^l_(a) ∂_l e^j_(b) − e^l_(b) ∂_l e^j_(a));
// antisymmetric in (a)(b); zero iff the frame is locally a coordinate basis.
Tensor anholonomy_object(const FrameField& frame, const Point& p);

// Connection coefficients seen in the frame:
//   Γ^(i)_(k)(p) = e^(i)_j e^l_(p) ∂_l e^j_(k) + e^(i)_j Γ^j_kl e^k_(k) e^l_(p);
// slots are all frame-basis.
Tensor anholonomic_connection(const MetricAffineSpace& space, const FrameField& frame,
                              const Point& p);

// Line integral ∮ e^(i)_k dx^k of one dual form around a closed loop.
// Polyline overload: vertices interpolated with periodic Catmull–Rom cubics,
// composite 4-point Gauss quadrature per segment.  Parametric overload:
// curve(t), t ∈ [0,1] with curve(0) = curve(1), split into nseg segments.
double loop_integral(const FrameField& frame, const std::vector<Point>& loop,
                     int frame_index);
double loop_integral(const FrameField& frame,
                     const std::function<Point(double)>& curve, int frame_index,
                     int nseg = 256);

// Open-line version of the same quadrature (no closure requirement); lets a
// closed circuit be assembled from smooth legs that meet at corners.
double line_integral(const FrameField& frame,
                     const std::function<Point(double)>& curve, int frame_index,
                     int nseg = 256);

// Frame-index map b^(l)_(k) preserving the frame metric η.
struct LorentzFrameMap {
    Tensor b; // slots (frame up, frame down)
};

// Throws FrameError unless η_(i)(l) b^(i)_(j) b^(l)_(k) = η_(j)(k) within tol.
void check_lorentz(const LorentzFrameMap& map, const Tensor& eta, double tol = 1e-12);

// Pure boost mixing frame axes 0 and spatial_axis with velocity ratio beta.
LorentzFrameMap lorentz_boost(int n, int spatial_axis, double beta);

LorentzFrameMap compose(const LorentzFrameMap& first, const LorentzFrameMap& second);

// e′_(k) = e_(l) b^(l)_(k); validates the map against eta first.
Tensor boost_frame(const Tensor& frame, const LorentzFrameMap& map, const Tensor& eta);

// Transform components contravariantly while transforming the frame; returns
// (new components, reconstructed holonomic vector).  The reconstruction is
// basis-independent.
std::pair<Tensor, Tensor> invariance_check(const Tensor& frame, const Tensor& w_frame,
                                           const LorentzFrameMap& map, const Tensor& eta);

} // namespace mag

#endif
