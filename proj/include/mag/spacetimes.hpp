#ifndef MAG_SPACETIMES_HPP
#define MAG_SPACETIMES_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mag/constants.hpp"
#include "mag/geometry.hpp"

namespace mag {

// Multivariate polynomial in the chart coordinates; the building block for
// synthetic test spaces with exact (closure-provided) derivatives.
struct Polynomial {
    struct Term {
        double coeff;
        std::vector<int> exp; // one exponent per coordinate
    };
    std::vector<Term> terms;

    double operator()(const Point& p) const;
    Polynomial derivative(int axis) const;
};

// Tensor field whose components are polynomials.  With analytic=true the
// field carries exact derivative closures to any order; with false it is
// evaluation-only (derivatives fall back to finite differences), which is how
// the FD columns of the identity suite are produced.
TensorField polynomial_field(int n, std::vector<Slot> slots,
                             std::vector<Polynomial> comps, bool analytic = true);

// Flat space with metric diag(c², −1, ..., −1) and zero connection.
MetricAffineSpace minkowski(int n = 4, double light_speed = 1.0);

// Round two-sphere of radius R, chart (θ, φ), Levi-Civita connection.
MetricAffineSpace two_sphere(double radius);

// Flat metric diag(+1, −1, ..., −1) with the connection reconstructed from a
// constant torsion tensor and zero nonmetricity.
MetricAffineSpace flat_torsion_space(const Tensor& torsion_const);

// Space whose connection is reconstructed pointwise from (g, T, Q); the
// declared torsion/nonmetricity round-trip by construction.
MetricAffineSpace synthetic_space(int n, TensorField metric, TensorField T,
                                  TensorField Q, const char* name = "synthetic");

// Seeded random metric-affine space: metric = diag(+1,−1,...) plus a small
// polynomial perturbation; connection = Levi-Civita plus a small symmetric
// polynomial shift plus a small (constant + linear) antisymmetric part, so
// both torsion and nonmetricity are nonzero.  analytic_derivs toggles the
// closure-vs-FD derivative path for the metric, shift, and probe fields.
MetricAffineSpace random_space(int n, std::uint64_t seed, bool analytic_derivs = true,
                               double amplitude = 0.05);

// Random polynomial probe fields on the same chart.
TensorField random_vector_field(int n, std::uint64_t seed, bool analytic_derivs = true,
                                double amplitude = 0.5);
TensorField random_symmetric_shift_field(int n, std::uint64_t seed,
                                         bool analytic_derivs = true,
                                         double amplitude = 0.05);
Point random_point(int n, std::uint64_t seed, double radius = 0.3);

// Central-body vacuum spacetime, chart (t [s], r [cm], φ polar, θ azimuthal):
//   ds² = c²(r−rg)/r dt² − r/(r−rg) dr² − r² dφ² − r² sin²φ dθ².
// Valid region r > rg; metric and connection carry analytic derivative
// closures.
struct SchwarzschildSpace {
    double rg = 0.0;
    double c = constants::c;
    MetricAffineSpace space;
};

SchwarzschildSpace schwarzschild(double rg, double light_speed = constants::c);
SchwarzschildSpace schwarzschild_of_mass(double mass_g);

// Closed-form connection table; equals the finite-difference Levi-Civita
// connection of the metric.
Tensor schwarzschild_connection(const SchwarzschildSpace& ss, const Point& p);

// Static-observer frequency transport for a radial photon: closed form from
// the invariant ω(r)·√((r−rg)/r) = const, and an ODE cross-check integrating
// dk^i/dλ = −Γ^i_kl k^k k^l along the null ray.
double radial_photon_redshift(const SchwarzschildSpace& ss, double r_emit,
                              double r_obs, double omega_emit);
double radial_photon_redshift_ode(const SchwarzschildSpace& ss, double r_emit,
                                  double r_obs, double omega_emit);

// Homogeneous-isotropic cosmology.  Conformal chart (t, χ, θ, φ):
//   ds² = a(t)² (dt² − dχ² − f(χ)² (dθ² + sin²θ dφ²)),
// f = sin (closed) or sinh (open).  Cosmic chart: ds² = c²dt² − a(t)²(dχ² + ...).
struct FriedmannSpace {
    bool closed = true;
    std::function<double(double)> a;
    std::function<double(double)> adot;
    double c = 1.0;
    MetricAffineSpace conformal;
    MetricAffineSpace cosmic;
};

FriedmannSpace friedmann(bool closed, std::function<double(double)> a,
                         std::function<double(double)> adot, double light_speed = 1.0);
// Closed model with a(t) = cosh t in conformal time.
FriedmannSpace friedmann_closed_cosh();

// K = ω₂/ω₁ = a(t₁)/a(t₂) for a radial null ray emitted at t₁, received at t₂.
double friedmann_redshift(const FriedmannSpace& fs, double t1, double t2);
// dK/dt₁ at fixed comoving separation (t₂ − t₁ held by null propagation).
double friedmann_redshift_rate(const FriedmannSpace& fs, double t1, double t2);
// Max relative drift of the invariant a²k⁰ along an integrated radial null ray
// of conformal length dchi starting at t1.
double friedmann_null_invariant_drift(const FriedmannSpace& fs, double t1, double dchi);

// Comoving frame at p in the cosmic chart and its boost by peculiar speed V
// (|V| < c): e′₀ = γe₀ + γ(V/c)e₁, e′₁ = γ(V/c)e₀ + γe₁.  Returned tensors
// hold holonomic components, slots (holonomic up, frame down).
std::pair<Tensor, Tensor> friedmann_boost(const FriedmannSpace& fs, const Point& p,
                                          double V);

} // namespace mag

#endif
