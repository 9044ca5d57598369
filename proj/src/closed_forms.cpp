#include "starlike/closed_forms.hpp"

#include <cmath>
#include <sstream>

namespace starlike {

namespace {

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        std::ostringstream os;
        os << "r must satisfy 0 <= r < 1 (got " << r << ")";
        throw OutOfRange(os.str());
    }
}

} // namespace

Disk p_disk(const ClassParams& params, double r) {
    require_radius(r);
    const double den = 1.0 - params.B * params.B * r * r;
    const double center = (1.0 - params.A * params.B * r * r) / den;
    const double radius = (params.A - params.B) * r / den;
    return Disk{Complex(center, 0.0), radius};
}

Disk st_disk(const ClassParams& params, double r) {
    require_radius(r);
    const double den = 1.0 - params.B * params.B * r * r;
    // B^2 + b(AB - B^2) = B^2 + b B (A - B)
    const Complex coef =
        params.B * params.B + params.b * (params.B * (params.A - params.B));
    const Complex center = (1.0 - coef * (r * r)) / den;
    const double radius = std::abs(params.b) * (params.A - params.B) * r / den;
    return Disk{center, radius};
}

double re_lower_bound(const ClassParams& params, double r) {
    require_radius(r);
    const double beta1 = std::abs(params.b) * (params.A - params.B);
    const double beta2 = params.B * params.B +
                         params.B * (params.A - params.B) * params.b.real();
    return (1.0 - beta1 * r - beta2 * r * r) /
           (1.0 - params.B * params.B * r * r);
}

StarlikeRadius radius_of_starlikeness(const ClassParams& params) {
    const double ab = params.A - params.B;
    const double beta1 = std::abs(params.b) * ab;
    // The discriminant |b|^2(A-B)^2 + 4[B^2 + (AB-B^2)Re b] rearranges to
    // [(A-B)Re b + 2B]^2 + (A-B)^2 (Im b)^2, which is never negative and
    // avoids cancellation near its zeros.
    const double u = ab * params.b.real() + 2.0 * params.B;
    const double v = ab * params.b.imag();
    const double disc = u * u + v * v;
    const double raw = 2.0 / (beta1 + std::sqrt(disc));
    StarlikeRadius out;
    out.raw = raw;
    out.effective = std::min(raw, 1.0);
    out.boundary_free = !(raw < 1.0);
    return out;
}

double growth_envelope(double r, double A, double B, double b_abs) {
    if (B != 0.0) return r * std::pow(1.0 + B * r, b_abs * (A - B) / B);
    return r * std::exp(b_abs * A * r);
}

Bounds distortion(const ClassParams& params, double r) {
    require_radius(r);
    const double m = std::abs(params.b);
    return Bounds{growth_envelope(r, -params.A, -params.B, m),
                  growth_envelope(r, params.A, params.B, m)};
}

Bounds distortion_general(const ClassParams& params, double r) {
    require_radius(r);
    const double ab = params.A - params.B;
    const double babs = std::abs(params.b);
    double base, spread;
    if (params.B != 0.0) {
        const double br = std::abs(params.B) * r;
        // int_0^1 Re[b] c1(rt)/t dt and int_0^1 |b| R(rt)/t dt with
        // c1(rho) = -B(A-B)rho^2/(1-B^2 rho^2), R(rho) = (A-B)rho/(1-B^2 rho^2)
        base = params.b.real() * ab * std::log1p(-br * br) / (2.0 * params.B);
        spread = babs * ab * std::atanh(br) / std::abs(params.B);
    } else {
        base = 0.0;
        spread = babs * params.A * r;
    }
    return Bounds{r * std::exp(base - spread), r * std::exp(base + spread)};
}

double koebe_radius(const ClassParams& params) {
    const double m = std::abs(params.b);
    if (params.B != 0.0)
        return std::pow(1.0 - params.B, m * (params.A - params.B) / params.B);
    return std::exp(-m * params.A);
}

} // namespace starlike
