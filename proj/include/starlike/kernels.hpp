#pragma once

#include <cstddef>
#include <vector>

namespace starlike::kernels {

// Batch-evaluation backends. Scalar is the reference; Avx2 is selected at
// runtime when both the build and the CPU support it. The environment
// variable STARLIKE_KERNEL (values "scalar" or "avx2") overrides detection.
enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool backend_supported(Backend backend);
const char* backend_name(Backend backend);
// Throws OutOfRange if the backend is not supported on this machine.
void set_backend(Backend backend);

// Flattened member for the batch kernels. rot is the linear factor of the
// Schwarz function (unit modulus for plain rotations, any |rot| <= 1 for the
// omega(z) = c z family); zeros are the Blaschke zeros a_k with |a_k| < 1.
struct BatchMember {
    double rot_re = 1.0;
    double rot_im = 0.0;
    std::vector<double> zero_re;
    std::vector<double> zero_im;
    double A = 1.0;
    double B = -1.0;
    double b_re = 1.0;
    double b_im = 0.0;
};

// w_j = omega(z_j) = rot * z_j * prod_k (a_k - z_j)/(1 - conj(a_k) z_j).
void schwarz_batch(const BatchMember& m, const double* z_re, const double* z_im,
                   double* w_re, double* w_im, std::size_t n);

// v_j = 1 + b (A-B) w_j / (1 + B w_j) with w_j = omega(z_j); this is
// z f'/f at z_j, and reduces to p(z_j) when b = 1.
void logderiv_batch(const BatchMember& m, const double* z_re, const double* z_im,
                    double* v_re, double* v_im, std::size_t n);

// q_j = (A-B) w_j / (1 + B w_j) = p(z_j) - 1, computed without the
// cancellation of subtracting 1; b is ignored. This is the growth-integral
// integrand up to the b/t factor.
void p_minus_one_batch(const BatchMember& m, const double* z_re,
                       const double* z_im, double* q_re, double* q_im,
                       std::size_t n);

} // namespace starlike::kernels
