#pragma once

#include "starlike/kernels.hpp"

// Scalar per-point evaluation shared by the scalar backend and the SIMD
// remainder loops, so that tails match the reference bit for bit.

namespace starlike::kernels::detail {

inline void schwarz_point(const BatchMember& m, double zr, double zi,
                          double& wr, double& wi) {
    double xr = m.rot_re * zr - m.rot_im * zi;
    double xi = m.rot_re * zi + m.rot_im * zr;
    for (std::size_t k = 0; k < m.zero_re.size(); ++k) {
        const double ar = m.zero_re[k];
        const double ai = m.zero_im[k];
        const double nr = ar - zr;
        const double ni = ai - zi;
        // 1 - conj(a) z
        const double dr = 1.0 - (ar * zr + ai * zi);
        const double di = -(ar * zi - ai * zr);
        const double d2 = dr * dr + di * di;
        const double qr = (nr * dr + ni * di) / d2;
        const double qi = (ni * dr - nr * di) / d2;
        const double tr = xr * qr - xi * qi;
        const double ti = xr * qi + xi * qr;
        xr = tr;
        xi = ti;
    }
    wr = xr;
    wi = xi;
}

// q = (A-B) w / (1 + B w) with w = omega(z)
inline void p_minus_one_point(const BatchMember& m, double zr, double zi,
                              double& qr, double& qi) {
    double wr, wi;
    schwarz_point(m, zr, zi, wr, wi);
    const double ab = m.A - m.B;
    const double nr = ab * wr;
    const double ni = ab * wi;
    const double dr = 1.0 + m.B * wr;
    const double di = m.B * wi;
    const double d2 = dr * dr + di * di;
    qr = (nr * dr + ni * di) / d2;
    qi = (ni * dr - nr * di) / d2;
}

inline void logderiv_point(const BatchMember& m, double zr, double zi,
                           double& vr, double& vi) {
    double qr, qi;
    p_minus_one_point(m, zr, zi, qr, qi);
    vr = 1.0 + m.b_re * qr - m.b_im * qi;
    vi = m.b_re * qi + m.b_im * qr;
}

} // namespace starlike::kernels::detail
