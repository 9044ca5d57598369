#include "starlike/function_rep.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "gauss_legendre.hpp"
#include "internal.hpp"

namespace starlike {

namespace {

// Evaluation stays strictly inside the disk; the growth factors blow up on
// the boundary.
constexpr double kDomainCap = 1.0 - 1e-9;

void require_in_disk(Complex z) {
    if (!(std::abs(z) <= kDomainCap)) {
        std::ostringstream os;
        os << "|z| must be < 1 - 1e-9 (got |z| = " << std::abs(z) << ")";
        throw OutOfDomain(os.str());
    }
}

void require_zeros_in_disk(const SchwarzSpec& s) {
    for (const Complex& a : s.blaschke_zeros)
        if (!(std::abs(a) < 1.0))
            throw OutOfRange("Blaschke zeros must satisfy |a| < 1");
}

// Compensated accumulator; the quadrature sums must not lose digits against
// the 1e-9 representation-equivalence budget.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct Scratch {
    std::vector<double> zr, zi, wr, wi;
    void resize(std::size_t n) {
        zr.resize(n);
        zi.resize(n);
        wr.resize(n);
        wi.resize(n);
    }
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

namespace detail {

// int_0^1 b (p(zt) - 1) / t dt by Gauss-Legendre doubling until two
// successive estimates agree within quad.tol. The t = 0 singularity is
// removable (p(zt) - 1 vanishes linearly) and interior nodes never touch it.
Complex integrate_log(const ClassParams& params, const kernels::BatchMember& bm,
                      Complex z, const QuadratureConfig& quad) {
    if (quad.max_nodes < 64) throw OutOfRange("max_nodes must be >= 64");
    if (!(quad.tol > 0.0)) throw OutOfRange("quadrature tol must be > 0");
    Complex prev;
    bool have_prev = false;
    for (int n = 32; n <= quad.max_nodes; n *= 2) {
        const auto& rule = detail::gauss_legendre_unit(n);
        Scratch& s = scratch();
        s.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            s.zr[j] = z.real() * rule.nodes[j];
            s.zi[j] = z.imag() * rule.nodes[j];
        }
        kernels::p_minus_one_batch(bm, s.zr.data(), s.zi.data(), s.wr.data(),
                                   s.wi.data(), static_cast<std::size_t>(n));
        NeumaierSum sum_re, sum_im;
        for (int j = 0; j < n; ++j) {
            const double scale = rule.weights[j] / rule.nodes[j];
            const Complex g = params.b * Complex(s.wr[j], s.wi[j]);
            sum_re.add(scale * g.real());
            sum_im.add(scale * g.imag());
        }
        const Complex cur(sum_re.value(), sum_im.value());
        if (have_prev && std::abs(cur - prev) < quad.tol) return cur;
        prev = cur;
        have_prev = true;
    }
    std::ostringstream os;
    os << "quadrature did not reach tol " << quad.tol << " with "
       << quad.max_nodes << " nodes";
    throw QuadratureFailure(os.str());
}

} // namespace detail

Complex eval_schwarz(const SchwarzSpec& s, Complex z) {
    require_in_disk(z);
    require_zeros_in_disk(s);
    Complex w = std::polar(1.0, s.rotation) * z;
    for (const Complex& a : s.blaschke_zeros)
        w *= (a - z) / (1.0 - std::conj(a) * z);
    return w;
}

Complex eval_p(const ClassMember& m, Complex z) {
    const Complex w = eval_schwarz(m.schwarz, z);
    // 1 + (A-B) w / (1 + B w); same value as (1+Aw)/(1+Bw) but stable near
    // w = 0.
    return 1.0 + (m.params.A - m.params.B) * w / (1.0 + m.params.B * w);
}

Complex eval_logderiv(const ClassMember& m, Complex z) {
    return 1.0 + m.params.b * (eval_p(m, z) - 1.0);
}

Complex eval_f(const ClassMember& m, Complex z, const QuadratureConfig& quad) {
    require_in_disk(z);
    require_zeros_in_disk(m.schwarz);
    if (z == Complex(0.0, 0.0)) return z;
    const Complex integral = detail::integrate_log(m.params, to_batch(m), z, quad);
    return z * std::exp(integral);
}

Complex eval_f_linear(const ClassParams& params, Complex c, Complex z,
                      const QuadratureConfig& quad) {
    require_in_disk(z);
    if (!(std::abs(c) <= 1.0)) throw OutOfRange("|c| must be <= 1");
    if (z == Complex(0.0, 0.0)) return z;
    kernels::BatchMember bm;
    bm.rot_re = c.real();
    bm.rot_im = c.imag();
    bm.A = params.A;
    bm.B = params.B;
    bm.b_re = params.b.real();
    bm.b_im = params.b.imag();
    const Complex integral = detail::integrate_log(params, bm, z, quad);
    return z * std::exp(integral);
}

Complex eval_extremal(const ClassParams& params, Complex z) {
    require_in_disk(z);
    if (params.B != 0.0) {
        const Complex exponent = params.b * (params.A - params.B) / params.B;
        return z * std::exp(exponent * std::log(1.0 + params.B * z));
    }
    return z * std::exp(params.b * params.A * z);
}

SchwarzSpec sample_schwarz(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(splitmix64(splitmix64(seed) + index));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SchwarzSpec s;
    s.rotation = 2.0 * std::numbers::pi * unit(rng);
    std::uniform_int_distribution<int> count(0, 3);
    const int k = count(rng);
    s.blaschke_zeros.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        // area-uniform on the disk of radius 0.95
        const double rho = 0.95 * std::sqrt(unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        s.blaschke_zeros.push_back(std::polar(rho, phi));
    }
    return s;
}

kernels::BatchMember to_batch(const SchwarzSpec& s) {
    require_zeros_in_disk(s);
    kernels::BatchMember bm;
    const Complex rot = std::polar(1.0, s.rotation);
    bm.rot_re = rot.real();
    bm.rot_im = rot.imag();
    bm.zero_re.reserve(s.blaschke_zeros.size());
    bm.zero_im.reserve(s.blaschke_zeros.size());
    for (const Complex& a : s.blaschke_zeros) {
        bm.zero_re.push_back(a.real());
        bm.zero_im.push_back(a.imag());
    }
    return bm;
}

kernels::BatchMember to_batch(const ClassMember& m) {
    kernels::BatchMember bm = to_batch(m.schwarz);
    bm.A = m.params.A;
    bm.B = m.params.B;
    bm.b_re = m.params.b.real();
    bm.b_im = m.params.b.imag();
    return bm;
}

} // namespace starlike
