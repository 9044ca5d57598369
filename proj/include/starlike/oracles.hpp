#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starlike/class_params.hpp"
#include "starlike/closed_forms.hpp"
#include "starlike/function_rep.hpp"

namespace starlike {

// One certification result. abs_err = |closed_form - numeric|; the tolerance
// that decided the verdict is recorded in note.
struct OracleReport {
    std::string quantity;
    double closed_form = 0.0;
    double numeric = 0.0;
    double abs_err = 0.0;
    std::int64_t samples = 0;
    bool pass = false;
    std::string note;
};

struct ScanConfig {
    int angle_count = 2048;      // grid on [0, 2pi)
    double bisect_tol = 1e-9;
    int sample_count = 200;      // random members per check
    std::uint64_t seed = 1;
    double slack = 1e-9;         // containment slack
    QuadratureConfig quad{};
};

// Minimum of Re(z f'/f) for the identity-omega member over |z| = r:
// angle-grid scan refined by golden-section search near the grid minimum.
double min_re_logderiv_extremal(const ClassParams& params, double r,
                                const ScanConfig& cfg);

// Bisection on r of the scanned minimum; returns 1 when the minimum stays
// positive up to 1 - 1e-6. Agrees with radius_of_starlikeness().effective
// within max(bisect_tol, 1e-6).
double estimate_radius_numeric(const ClassParams& params, const ScanConfig& cfg);

// Minimum positivity-loss radius over sample_count random members plus the
// identity member (which attains the class infimum).
double estimate_radius_sampled(const ClassParams& params, const ScanConfig& cfg);

// estimate_radius_numeric against radius_of_starlikeness().effective, within
// max(bisect_tol, 1e-6).
OracleReport radius_agreement(const ClassParams& params, const ScanConfig& cfg);

// Containment of z f'/f samples in an arbitrary disk; numeric is the largest
// observed distance to the disk center. Used with st_disk for the real check
// and with deliberately wrong disks as a test fixture.
OracleReport check_disk_containment_against(const ClassParams& params, double r,
                                            const ScanConfig& cfg, const Disk& disk,
                                            const std::string& quantity);

// Containment in st_disk(params, r).
OracleReport check_disk_containment(const ClassParams& params, double r,
                                    const ScanConfig& cfg);

// Containment of p samples in p_disk(params, r).
OracleReport check_p_disk_containment(const ClassParams& params, double r,
                                      const ScanConfig& cfg);

// Sampled |f| values against the distortion bounds; numeric is the largest
// one-sided violation (0 when everything is inside). For real b > 0 the
// upper bound must also be attained by the extremal function (sharpness).
OracleReport distortion_envelope(const ClassParams& params, double r,
                                 const ScanConfig& cfg);

// distortion(params, r).lower at r = 1-10^{-k}, k = 2..6: the error against
// koebe_radius must shrink monotonically and be < 1e-3 at k = 6.
OracleReport koebe_limit_numeric(const ClassParams& params);

// Quadrature representation of f against the closed forms: the identity
// member against the extremal function and the omega(z) = cz family against
// z(1+Bcz)^{b(A-B)/B}, at a fixed point set.
OracleReport integral_vs_closed_form(const ClassParams& params,
                                     const ScanConfig& cfg);

// A published specialized expression that disagrees with the general formula
// it specializes. `published` and `general` are both evaluated at the
// reference parameters described in note.
struct DiscrepancyNote {
    std::string quantity;
    double published;
    double general;
    std::string note;
};

// The documented cases where a specialized radius/Koebe expression from the
// literature contradicts the general formula; the library always uses the
// general formula.
std::vector<DiscrepancyNote> documented_discrepancies();

} // namespace starlike
