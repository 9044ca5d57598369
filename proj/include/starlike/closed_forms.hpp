#pragma once

#include "starlike/class_params.hpp"

namespace starlike {

// Closed disk {w : |w - center| <= radius}.
struct Disk {
    Complex center;
    double radius; // >= 0
};

// Envelope for |f(z)| on |z| = r.
struct Bounds {
    double lower; // >= 0
    double upper; // >= lower
};

struct StarlikeRadius {
    // First positive zero of the positivity numerator; may exceed 1.
    double raw;
    // min(raw, 1).
    double effective;
    // True when the numerator has no zero inside (0,1), i.e. every class
    // member is starlike on the whole disk.
    bool boundary_free;
};

// Disk containing p(z) = (1+A w)/(1+B w) for |z| <= r.  b is ignored.
Disk p_disk(const ClassParams& params, double r);

// Disk containing z f'(z)/f(z) for |z| <= r:
// center (1 - [B^2 + b(AB-B^2)] r^2)/(1 - B^2 r^2), radius |b|(A-B)r/(1 - B^2 r^2).
Disk st_disk(const ClassParams& params, double r);

// Sharp lower bound for Re(z f'/f) on |z| = r; equals
// Re(st_disk.center) - st_disk.radius.
double re_lower_bound(const ClassParams& params, double r);

// Radius of starlikeness: the first positive zero of
// 1 - |b|(A-B) r - [B^2 + (AB-B^2) Re b] r^2, evaluated in the
// cancellation-free form 2 / (|b|(A-B) + sqrt(discriminant)).
StarlikeRadius radius_of_starlikeness(const ClassParams& params);

// Growth bounds: lower = F(r;-A,-B,|b|), upper = F(r;A,B,|b|).
Bounds distortion(const ClassParams& params, double r);

// Koebe radius: (1-B)^{|b|(A-B)/B} for B != 0, e^{-|b|A} for B = 0.
// Equals the r -> 1 limit of distortion(params, r).lower.
double koebe_radius(const ClassParams& params);

// The envelope factor F(r;A,B,m) = r(1+Br)^{m(A-B)/B} (B != 0) or r e^{mAr}.
double growth_envelope(double r, double A, double B, double b_abs);

// Growth bounds valid for arbitrary complex order: the pointwise extremes of
// Re[b(p-1)] over the exact p-disk, integrated along the ray. Coincides with
// distortion() for real b > 0; for non-real b, distortion()'s lower bound
// can be violated by class members while this one cannot.
Bounds distortion_general(const ClassParams& params, double r);

} // namespace starlike
