#ifndef MAG_VERIFY_HPP
#define MAG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mag {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Differential identities on seeded random metric-affine spaces (dimensions
// cycle 2..4): first Bianchi, second-derivative commutator, Lie-derivative
// assemblies vs. their coordinate-definition oracles, shifted curvature vs.
// direct curvature of the shifted connection, metric compatibility of the
// companion connection, and the (metric, torsion, nonmetricity) → connection
// round-trip.  Each identity is evaluated both with closure (analytic)
// derivatives and with pure finite differences.
SuiteReport verify_identities(std::uint64_t seed, int space_count = 100,
                              double tol_fd = 1e-6, double tol_analytic = 1e-9);

// Transport properties: tangent-length conservation on extremals, extremal
// vs. independently reconstructed length-preserving connection, parallelogram
// closure scaling, tidal-deviation convergence against a two-trajectory
// oracle, and gauge invariance of potential-driven motion.
SuiteReport verify_transport(std::uint64_t seed);

// Frame properties: orthonormalization/duality, anholonomy antisymmetry and
// closed-form check, boost frame-metric preservation, component invariance,
// and loop-integral reparameterization invariance.
SuiteReport verify_frames(std::uint64_t seed);

std::vector<SuiteReport> verify_all(std::uint64_t seed);

} // namespace mag

#endif
