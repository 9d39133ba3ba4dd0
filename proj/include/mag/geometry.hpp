#ifndef MAG_GEOMETRY_HPP
#define MAG_GEOMETRY_HPP

#include "mag/space.hpp"

namespace mag {

// Torsion T^a_cb = Γ^a_bc − Γ^a_cb; antisymmetric in the lower pair exactly.
Tensor torsion(const MetricAffineSpace& space, const Point& p);
TensorField torsion_field(const MetricAffineSpace& space);

// Nonmetricity Q_kij = −g_ij;k = −(∂_k g_ij − Γ^p_ik g_pj − Γ^p_jk g_pi).
Tensor nonmetricity(const MetricAffineSpace& space, const Point& p);
TensorField nonmetricity_field(const MetricAffineSpace& space);

// Contravariant form Q_k^ij = g^ia g^jb Q_kab.
Tensor nonmetricity_contravariant(const MetricAffineSpace& space, const Point& p);

// Unique connection with the prescribed torsion and nonmetricity:
//   Γ^p_ji = ½ g^pk [N_ijk + N_jki − N_kij − T^r_ji g_rk − T^r_ik g_rj − T^r_jk g_ri],
//   N_kij = ∂_k g_ij + Q_kij.
// Round-trips with torsion()/nonmetricity() on the resulting space.
Tensor reconstruct_connection(const TensorField& metric, const TensorField& T,
                              const TensorField& Q, const Point& p);

// Correction built from the covariant derivative of the metric (semicolon
// taken with the space's own connection):
//   Γ(C)^i_kl = ½ g^im (g_kl;m − g_km;l − g_ml;k).
Tensor cartan_symbol(const MetricAffineSpace& space, const Point& p);
TensorField cartan_symbol_field(const MetricAffineSpace& space);

// Metric-compatible companion connection Γ̂ = Γ − Γ(C); same torsion, zero
// nonmetricity.
TensorField cartan_connection_field(const MetricAffineSpace& space);
MetricAffineSpace cartan_space(const MetricAffineSpace& space);

// Curvature R^a_bij = ∂_i Γ^a_bj − ∂_j Γ^a_bi + Γ^a_ci Γ^c_bj − Γ^a_cj Γ^c_bi;
// antisymmetric in the last pair.  Ricci R_bj = R^a_baj.
Tensor curvature(const MetricAffineSpace& space, const Point& p);
Tensor ricci(const MetricAffineSpace& space, const Point& p);
double scalar_curvature(const MetricAffineSpace& space, const Point& p);

// Curvature of the shifted connection Γ̄ = Γ + A assembled from the base
// curvature without re-differentiating Γ̄:
//   R̄^a_bde = R^a_bde + A^a_be;d − A^a_bd;e + A^a_cd A^c_be − A^a_ce A^c_bd
//             + T^p_de A^a_bp   (semicolon w.r.t. the base connection).
Tensor shifted_curvature(const MetricAffineSpace& space, const TensorField& A,
                         const Point& p);

// Covariant Lie-derivative assembly for the metric,
//   (L_ξ g)_ab = ξ^k_;a g_kb + ξ^k_;b g_ka + T^l_ka g_lb ξ^k + T^l_kb g_la ξ^k
//              + g_ab;k ξ^k,
// and its definition-level oracle ξ^c ∂_c g_ab + g_cb ∂_a ξ^c + g_ac ∂_b ξ^c.
Tensor lie_derivative_metric(const MetricAffineSpace& space, const TensorField& xi,
                             const Point& p);
Tensor lie_derivative_metric_oracle(const MetricAffineSpace& space, const TensorField& xi,
                                    const Point& p);

// Covariant Lie-derivative assembly for the connection,
//   (L_ξ Γ)^a_bc = −R^a_bcp ξ^p − T^a_bp;c ξ^p − T^a_bp ξ^p_;c + ξ^a_;bc,
// and the coordinate oracle
//   ξ^p ∂_p Γ^a_bc − Γ^p_bc ∂_p ξ^a + Γ^a_pc ∂_b ξ^p + Γ^a_bp ∂_c ξ^p + ∂_b∂_c ξ^a.
Tensor lie_derivative_connection(const MetricAffineSpace& space, const TensorField& xi,
                                 const Point& p);
Tensor lie_derivative_connection_oracle(const MetricAffineSpace& space,
                                        const TensorField& xi, const Point& p);

// First Bianchi identity residual (zero for every space):
//   T^k_ij;m + T^k_mi;j + T^k_jm;i + T^k_pi T^p_jm + T^k_pm T^p_ij + T^k_pj T^p_mi
//   − R^k_jmi − R^k_ijm − R^k_mij.
Tensor bianchi_residual(const MetricAffineSpace& space, const Point& p);

// First-type Killing residual: lie_derivative_metric (zero iff ξ generates an
// isometry).
Tensor killing_residual(const MetricAffineSpace& space, const TensorField& xi,
                        const Point& p);

// Second-type Killing residual (connection invariance):
//   ξ^a_;bc − R^a_bcp ξ^p − T^a_bp;c ξ^p − T^a_bp ξ^p_;c.
Tensor killing2_residual(const MetricAffineSpace& space, const TensorField& xi,
                         const Point& p);

// Second-derivative commutator residual (zero for every space):
//   u^a_;kl − u^a_;lk − R^a_blk u^b + T^p_lk u^a_;p.
Tensor commutator_residual(const MetricAffineSpace& space, const TensorField& u,
                           const Point& p);

} // namespace mag

#endif
