#ifndef MAG_ERRORS_HPP
#define MAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor shape, variance, or basis mismatch.
struct TensorError : Error {
    using Error::Error;
};

// Metric determinant below the degeneracy tolerance.
struct DegenerateMetricError : Error {
    using Error::Error;
};

// Non-finite field evaluation while differentiating.
struct DifferentiationError : Error {
    using Error::Error;
};

// ODE step failure (singularity crossing, step underflow).
struct IntegrationError : Error {
    using Error::Error;
};

// Frame construction failure (null or dependent seeds, non-Lorentz map).
struct FrameError : Error {
    using Error::Error;
};

// Domain violation (r <= rg, |V| >= c, superluminal orbit, m <= 0).
struct DomainError : Error {
    using Error::Error;
};

} // namespace mag

#endif
