#include "backends.hpp"
#include "point_eval.hpp"

namespace starlike::kernels::detail {

void schwarz_batch_scalar(const BatchMember& m, const double* z_re,
                          const double* z_im, double* w_re, double* w_im,
                          std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        schwarz_point(m, z_re[j], z_im[j], w_re[j], w_im[j]);
}

void p_minus_one_batch_scalar(const BatchMember& m, const double* z_re,
                             const double* z_im, double* q_re, double* q_im,
                             std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        p_minus_one_point(m, z_re[j], z_im[j], q_re[j], q_im[j]);
}

void logderiv_batch_scalar(const BatchMember& m, const double* z_re,
                           const double* z_im, double* v_re, double* v_im,
                           std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        logderiv_point(m, z_re[j], z_im[j], v_re[j], v_im[j]);
}

} // namespace starlike::kernels::detail
