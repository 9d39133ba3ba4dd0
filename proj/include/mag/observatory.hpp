#ifndef MAG_OBSERVATORY_HPP
#define MAG_OBSERVATORY_HPP

#include <utility>

#include "mag/frames.hpp"
#include "mag/spacetimes.hpp"

namespace mag {

// Circular/elliptical orbit around a central mass, CGS units.  Either radius
// or period may be omitted (0); the other is then derived from Kepler's third
// law r³ = GMT²/(4π²).
struct OrbitScenario {
    double mass = 0.0;        // g
    double radius = 0.0;      // cm (0: derive from period)
    double period = 0.0;      // s  (0: derive from radius)
    double r_peri = 0.0;      // cm (elliptical Doppler)
    double r_apo = 0.0;       // cm
    double lambda_emit = 0.0; // cm
};

struct DelayResult {
    double rg = 0.0;    // cm
    double radius = 0.0; // cm (as used)
    double period = 0.0; // s
    double ds = 0.0;    // cm, proper-length gap per revolution
    double dt = 0.0;    // s,  ds / c
    bool radius_from_kepler = false;
};

// Proper-time gap per revolution between a stationary observer and one on a
// circular orbit of angular speed α = 2π/T at the same radius:
//   Δs = (2π/α) (c√((r−rg)/r) − √(((r−rg)c² − α²r²·r)/r)).
DelayResult time_delay(const OrbitScenario& scenario);

// Speed of the orbiting observer as measured by the stationary one:
//   V = √(r/(r−rg)) · rω.
double measured_orbital_speed(const SchwarzschildSpace& ss, double r, double omega);

struct DopplerResult {
    double V_peri = 0.0, V_apo = 0.0;           // cm/s (vis-viva)
    double ratio_peri = 0.0, ratio_apo = 0.0;   // ω′/ω
    double lambda_peri = 0.0, lambda_apo = 0.0; // cm
    double dlambda = 0.0;                       // cm, apo − peri
};

// Combined gravitational and kinematic shift for emission at pericentre and
// apocentre: ω′/ω = √(r/(r−rg)) / √(1−V²/c²) with Keplerian vis-viva speed
// V² = GM(2/r − 1/a), a = (r_peri + r_apo)/2.
DopplerResult s2_doppler(const OrbitScenario& scenario);

// Orthonormal frame of the stationary observer at p = (t, r, φ, θ):
//   e_(0) = (1/c)√(r/(r−rg)) ∂_t, e_(1) = √((r−rg)/r) ∂_r,
//   e_(2) = (1/r) ∂_φ, e_(3) = (1/(r sin φ)) ∂_θ.
Tensor stationary_frame(const SchwarzschildSpace& ss, const Point& p);

// (stationary, orbiting) frame pair at p; the orbital boost mixes frame axes
// 0 and 2 with β = V/c, V from measured_orbital_speed.
std::pair<Tensor, Tensor> orbital_boost_frame(const SchwarzschildSpace& ss,
                                              const Point& p, double omega);

// (stationary, radially moving) frame pair; boost axes 0 and 1 with
// V = (r/(r−rg)) v, v the coordinate speed dr/dt.
std::pair<Tensor, Tensor> radial_boost_frame(const SchwarzschildSpace& ss,
                                             const Point& p, double v_coordinate);

// Kinematic Lorentz factor of the circular orbit, read off the boosted frame.
double orbit_gamma(const SchwarzschildSpace& ss, double r, double omega);

// Cross-module check: accumulate the per-revolution proper-time gap from the
// boost γ along the orbit, Δt = ∫₀ᵀ (γ−1)√((r−rg)/r) dt, by composite Gauss
// quadrature with γ sampled from orbital_boost_frame.
double time_delay_from_boost(const SchwarzschildSpace& ss, double r, double omega,
                             int nseg = 64);

} // namespace mag

#endif
