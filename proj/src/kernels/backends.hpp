#pragma once

#include "starlike/kernels.hpp"

namespace starlike::kernels::detail {

void schwarz_batch_scalar(const BatchMember& m, const double* z_re,
                          const double* z_im, double* w_re, double* w_im,
                          std::size_t n);
void logderiv_batch_scalar(const BatchMember& m, const double* z_re,
                           const double* z_im, double* v_re, double* v_im,
                           std::size_t n);
void p_minus_one_batch_scalar(const BatchMember& m, const double* z_re,
                              const double* z_im, double* q_re, double* q_im,
                              std::size_t n);

#if defined(STARLIKE_HAVE_AVX2)
void schwarz_batch_avx2(const BatchMember& m, const double* z_re,
                        const double* z_im, double* w_re, double* w_im,
                        std::size_t n);
void logderiv_batch_avx2(const BatchMember& m, const double* z_re,
                         const double* z_im, double* v_re, double* v_im,
                         std::size_t n);
void p_minus_one_batch_avx2(const BatchMember& m, const double* z_re,
                            const double* z_im, double* q_re, double* q_im,
                            std::size_t n);
#endif

} // namespace starlike::kernels::detail
