#include "backends.hpp"

#if defined(STARLIKE_HAVE_AVX2)

#include <immintrin.h>

#include "point_eval.hpp"

namespace starlike::kernels::detail {

namespace {

// q = num / den for 4 complex values in split re/im registers.
inline void cdiv4(__m256d nr, __m256d ni, __m256d dr, __m256d di, __m256d& qr,
                  __m256d& qi) {
    const __m256d d2 = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    qr = _mm256_div_pd(_mm256_fmadd_pd(nr, dr, _mm256_mul_pd(ni, di)), d2);
    qi = _mm256_div_pd(_mm256_fmsub_pd(ni, dr, _mm256_mul_pd(nr, di)), d2);
}

// omega at 4 points.
inline void schwarz4(const BatchMember& m, __m256d zr, __m256d zi, __m256d& wr,
                     __m256d& wi) {
    const __m256d rot_re = _mm256_set1_pd(m.rot_re);
    const __m256d rot_im = _mm256_set1_pd(m.rot_im);
    __m256d xr = _mm256_fmsub_pd(rot_re, zr, _mm256_mul_pd(rot_im, zi));
    __m256d xi = _mm256_fmadd_pd(rot_re, zi, _mm256_mul_pd(rot_im, zr));
    const __m256d one = _mm256_set1_pd(1.0);
    for (std::size_t k = 0; k < m.zero_re.size(); ++k) {
        const __m256d ar = _mm256_set1_pd(m.zero_re[k]);
        const __m256d ai = _mm256_set1_pd(m.zero_im[k]);
        const __m256d nr = _mm256_sub_pd(ar, zr);
        const __m256d ni = _mm256_sub_pd(ai, zi);
        // 1 - conj(a) z
        const __m256d dr =
            _mm256_sub_pd(one, _mm256_fmadd_pd(ar, zr, _mm256_mul_pd(ai, zi)));
        const __m256d di = _mm256_fmsub_pd(ai, zr, _mm256_mul_pd(ar, zi));
        __m256d qr, qi;
        cdiv4(nr, ni, dr, di, qr, qi);
        const __m256d tr = _mm256_fmsub_pd(xr, qr, _mm256_mul_pd(xi, qi));
        const __m256d ti = _mm256_fmadd_pd(xr, qi, _mm256_mul_pd(xi, qr));
        xr = tr;
        xi = ti;
    }
    wr = xr;
    wi = xi;
}

} // namespace

void schwarz_batch_avx2(const BatchMember& m, const double* z_re,
                        const double* z_im, double* w_re, double* w_im,
                        std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d zr = _mm256_loadu_pd(z_re + j);
        const __m256d zi = _mm256_loadu_pd(z_im + j);
        __m256d wr, wi;
        schwarz4(m, zr, zi, wr, wi);
        _mm256_storeu_pd(w_re + j, wr);
        _mm256_storeu_pd(w_im + j, wi);
    }
    for (; j < n; ++j) schwarz_point(m, z_re[j], z_im[j], w_re[j], w_im[j]);
}

void p_minus_one_batch_avx2(const BatchMember& m, const double* z_re,
                            const double* z_im, double* q_re, double* q_im,
                            std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d ab = _mm256_set1_pd(m.A - m.B);
    const __m256d bb = _mm256_set1_pd(m.B);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d zr = _mm256_loadu_pd(z_re + j);
        const __m256d zi = _mm256_loadu_pd(z_im + j);
        __m256d wr, wi;
        schwarz4(m, zr, zi, wr, wi);
        const __m256d nr = _mm256_mul_pd(ab, wr);
        const __m256d ni = _mm256_mul_pd(ab, wi);
        const __m256d dr = _mm256_fmadd_pd(bb, wr, one);
        const __m256d di = _mm256_mul_pd(bb, wi);
        __m256d qr, qi;
        cdiv4(nr, ni, dr, di, qr, qi);
        _mm256_storeu_pd(q_re + j, qr);
        _mm256_storeu_pd(q_im + j, qi);
    }
    for (; j < n; ++j) p_minus_one_point(m, z_re[j], z_im[j], q_re[j], q_im[j]);
}

void logderiv_batch_avx2(const BatchMember& m, const double* z_re,
                         const double* z_im, double* v_re, double* v_im,
                         std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d ab = _mm256_set1_pd(m.A - m.B);
    const __m256d bb = _mm256_set1_pd(m.B);
    const __m256d b_re = _mm256_set1_pd(m.b_re);
    const __m256d b_im = _mm256_set1_pd(m.b_im);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d zr = _mm256_loadu_pd(z_re + j);
        const __m256d zi = _mm256_loadu_pd(z_im + j);
        __m256d wr, wi;
        schwarz4(m, zr, zi, wr, wi);
        // q = (A-B) w / (1 + B w)
        const __m256d nr = _mm256_mul_pd(ab, wr);
        const __m256d ni = _mm256_mul_pd(ab, wi);
        const __m256d dr = _mm256_fmadd_pd(bb, wr, one);
        const __m256d di = _mm256_mul_pd(bb, wi);
        __m256d qr, qi;
        cdiv4(nr, ni, dr, di, qr, qi);
        const __m256d vr = _mm256_add_pd(
            one, _mm256_fmsub_pd(b_re, qr, _mm256_mul_pd(b_im, qi)));
        const __m256d vi = _mm256_fmadd_pd(b_re, qi, _mm256_mul_pd(b_im, qr));
        _mm256_storeu_pd(v_re + j, vr);
        _mm256_storeu_pd(v_im + j, vi);
    }
    for (; j < n; ++j) logderiv_point(m, z_re[j], z_im[j], v_re[j], v_im[j]);
}

} // namespace starlike::kernels::detail

#endif // STARLIKE_HAVE_AVX2
