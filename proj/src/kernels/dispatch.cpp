#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "backends.hpp"
#include "starlike/class_params.hpp"

namespace starlike::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(STARLIKE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("STARLIKE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
        // Unknown or unsupported request falls back to detection.
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_backend()};
    return slot;
}

} // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

bool backend_supported(Backend backend) {
    switch (backend) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return cpu_has_avx2();
    }
    return false;
}

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

void set_backend(Backend backend) {
    if (!backend_supported(backend))
        throw OutOfRange(std::string("kernel backend not supported here: ") +
                         backend_name(backend));
    backend_slot().store(backend, std::memory_order_relaxed);
}

void schwarz_batch(const BatchMember& m, const double* z_re, const double* z_im,
                   double* w_re, double* w_im, std::size_t n) {
#if defined(STARLIKE_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        detail::schwarz_batch_avx2(m, z_re, z_im, w_re, w_im, n);
        return;
    }
#endif
    detail::schwarz_batch_scalar(m, z_re, z_im, w_re, w_im, n);
}

void logderiv_batch(const BatchMember& m, const double* z_re, const double* z_im,
                    double* v_re, double* v_im, std::size_t n) {
#if defined(STARLIKE_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        detail::logderiv_batch_avx2(m, z_re, z_im, v_re, v_im, n);
        return;
    }
#endif
    detail::logderiv_batch_scalar(m, z_re, z_im, v_re, v_im, n);
}

void p_minus_one_batch(const BatchMember& m, const double* z_re,
                       const double* z_im, double* q_re, double* q_im,
                       std::size_t n) {
#if defined(STARLIKE_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        detail::p_minus_one_batch_avx2(m, z_re, z_im, q_re, q_im, n);
        return;
    }
#endif
    detail::p_minus_one_batch_scalar(m, z_re, z_im, q_re, q_im, n);
}

} // namespace starlike::kernels
