#pragma once

#include <cstdint>
#include <vector>

#include "starlike/class_params.hpp"
#include "starlike/kernels.hpp"

namespace starlike {

// Schwarz function omega(z) = e^{i rotation} z prod_k (a_k - z)/(1 - conj(a_k) z).
// omega(0) = 0 and |omega(z)| < 1 on the unit disk by construction.
struct SchwarzSpec {
    double rotation = 0.0;               // radians
    std::vector<Complex> blaschke_zeros; // each |a_k| < 1
};

// A concrete member of S*(A,B,b): the Schwarz function selects p, and p
// determines z f'/f and f.
struct ClassMember {
    ClassParams params;
    SchwarzSpec schwarz;
};

struct QuadratureConfig {
    double tol = 1e-10; // absolute tolerance on the log-integral
    int max_nodes = 1024;
};

Complex eval_schwarz(const SchwarzSpec& s, Complex z);

// p(z) = (1 + A omega(z))/(1 + B omega(z)).
Complex eval_p(const ClassMember& m, Complex z);

// z f'(z)/f(z) = 1 + b (p(z) - 1).
Complex eval_logderiv(const ClassMember& m, Complex z);

// f(z) = z exp( int_0^1 b (p(zt) - 1)/t dt ) by adaptive Gauss-Legendre
// quadrature; the integrand's t = 0 singularity is removable.
Complex eval_f(const ClassMember& m, Complex z, const QuadratureConfig& quad = {});

// Same integral with omega(z) = c z, |c| <= 1; analytically equal to
// z (1 + B c z)^{b(A-B)/B} (B != 0) or z e^{bAcz} (B = 0).
Complex eval_f_linear(const ClassParams& params, Complex c, Complex z,
                      const QuadratureConfig& quad = {});

// Extremal function f*(z) = z (1+Bz)^{b(A-B)/B} for B != 0, z e^{bAz} for
// B = 0, using the principal branch of log(1+Bz) (Re(1+Bz) > 0 on the disk).
Complex eval_extremal(const ClassParams& params, Complex z);

// Deterministic sampler: the index-th Schwarz function of the stream `seed`.
// Rotation uniform on [0,2pi); 0..3 Blaschke zeros uniform on the disk of
// radius 0.95. The result depends only on (seed, index).
SchwarzSpec sample_schwarz(std::uint64_t seed, std::uint64_t index);

// Flattens a member for the batch kernels.
kernels::BatchMember to_batch(const ClassMember& m);
kernels::BatchMember to_batch(const SchwarzSpec& s);

} // namespace starlike
