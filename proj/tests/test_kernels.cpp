#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "starlike/class_params.hpp"
#include "starlike/function_rep.hpp"
#include "starlike/kernels.hpp"

using namespace starlike;

namespace {

struct Batch {
    std::vector<double> zr, zi;
};

Batch random_points(std::mt19937_64& rng, std::size_t n, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Batch b;
    b.zr.resize(n);
    b.zi.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex z = std::polar(rmax * std::sqrt(unit(rng)),
                                     2.0 * std::numbers::pi * unit(rng));
        b.zr[j] = z.real();
        b.zi[j] = z.imag();
    }
    return b;
}

ClassMember random_member(std::mt19937_64& rng, std::uint64_t index) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double A = -0.999 + 1.999 * unit(rng);
    const double B = -1.0 + (A + 1.0) * 0.999 * unit(rng);
    const Complex b = std::polar(0.05 + 3.0 * unit(rng),
                                 2.0 * std::numbers::pi * unit(rng));
    return ClassMember{new_class_params(A, B, b), sample_schwarz(99, index)};
}

struct BackendGuard {
    kernels::Backend saved = kernels::active_backend();
    ~BackendGuard() { kernels::set_backend(saved); }
};

} // namespace

TEST_CASE("backend plumbing") {
    CHECK(kernels::backend_supported(kernels::Backend::Scalar));
    CHECK(kernels::backend_name(kernels::Backend::Scalar) ==
          std::string("scalar"));
    CHECK(kernels::backend_name(kernels::Backend::Avx2) == std::string("avx2"));
    BackendGuard guard;
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    if (!kernels::backend_supported(kernels::Backend::Avx2))
        CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::Avx2), OutOfRange);
}

TEST_CASE("scalar batch kernels match the std::complex evaluators") {
    BackendGuard guard;
    kernels::set_backend(kernels::Backend::Scalar);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const ClassMember m = random_member(rng, static_cast<std::uint64_t>(i));
        const kernels::BatchMember bm = to_batch(m);
        const Batch pts = random_points(rng, 57, 0.999);
        std::vector<double> wr(57), wi(57), vr(57), vi(57);
        kernels::schwarz_batch(bm, pts.zr.data(), pts.zi.data(), wr.data(),
                               wi.data(), 57);
        kernels::logderiv_batch(bm, pts.zr.data(), pts.zi.data(), vr.data(),
                                vi.data(), 57);
        for (std::size_t j = 0; j < 57; ++j) {
            const Complex z(pts.zr[j], pts.zi[j]);
            const Complex w = eval_schwarz(m.schwarz, z);
            const Complex v = eval_logderiv(m, z);
            CHECK(std::abs(Complex(wr[j], wi[j]) - w) < 1e-13);
            CHECK(std::abs(Complex(vr[j], vi[j]) - v) <
                  1e-12 * (1.0 + std::abs(v)));
        }
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!kernels::backend_supported(kernels::Backend::Avx2)) {
        MESSAGE("avx2 not available; skipping equivalence check");
        return;
    }
    BackendGuard guard;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const ClassMember m = random_member(rng, 1000 + static_cast<std::uint64_t>(i));
        const kernels::BatchMember bm = to_batch(m);
        // odd size exercises the remainder lanes
        const std::size_t n = 253;
        const Batch pts = random_points(rng, n, 0.999);
        std::vector<double> wr_s(n), wi_s(n), vr_s(n), vi_s(n);
        std::vector<double> wr_v(n), wi_v(n), vr_v(n), vi_v(n);
        kernels::set_backend(kernels::Backend::Scalar);
        kernels::schwarz_batch(bm, pts.zr.data(), pts.zi.data(), wr_s.data(),
                               wi_s.data(), n);
        kernels::logderiv_batch(bm, pts.zr.data(), pts.zi.data(), vr_s.data(),
                                vi_s.data(), n);
        kernels::set_backend(kernels::Backend::Avx2);
        kernels::schwarz_batch(bm, pts.zr.data(), pts.zi.data(), wr_v.data(),
                               wi_v.data(), n);
        kernels::logderiv_batch(bm, pts.zr.data(), pts.zi.data(), vr_v.data(),
                                vi_v.data(), n);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(std::abs(wr_s[j] - wr_v[j]) < 1e-12);
            CHECK(std::abs(wi_s[j] - wi_v[j]) < 1e-12);
            CHECK(std::abs(vr_s[j] - vr_v[j]) <
                  1e-12 * (1.0 + std::abs(vr_s[j])));
            CHECK(std::abs(vi_s[j] - vi_v[j]) <
                  1e-12 * (1.0 + std::abs(vi_s[j])));
        }
    }
}

TEST_CASE("short batches and empty batches") {
    const kernels::BatchMember bm = to_batch(
        ClassMember{new_class_params(1.0, -1.0, 2.0), sample_schwarz(3, 0)});
    kernels::logderiv_batch(bm, nullptr, nullptr, nullptr, nullptr, 0);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<double> zr(n, 0.25), zi(n, -0.1), vr(n), vi(n);
        kernels::logderiv_batch(bm, zr.data(), zi.data(), vr.data(), vi.data(), n);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(vr[j] == vr[0]);
            CHECK(vi[j] == vi[0]);
        }
    }
}

TEST_CASE("p_minus_one batch agrees across backends and with eval_p") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const ClassMember m = random_member(rng, 2000 + static_cast<std::uint64_t>(i));
        const kernels::BatchMember bm = to_batch(m);
        const std::size_t n = 101;
        const Batch pts = random_points(rng, n, 0.99);
        std::vector<double> qr_s(n), qi_s(n), qr_v(n), qi_v(n);
        BackendGuard guard;
        kernels::set_backend(kernels::Backend::Scalar);
        kernels::p_minus_one_batch(bm, pts.zr.data(), pts.zi.data(), qr_s.data(),
                                   qi_s.data(), n);
        if (kernels::backend_supported(kernels::Backend::Avx2)) {
            kernels::set_backend(kernels::Backend::Avx2);
            kernels::p_minus_one_batch(bm, pts.zr.data(), pts.zi.data(),
                                       qr_v.data(), qi_v.data(), n);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(qr_s[j] - qr_v[j]) < 1e-12);
                CHECK(std::abs(qi_s[j] - qi_v[j]) < 1e-12);
            }
        }
        for (std::size_t j = 0; j < n; j += 10) {
            const Complex q =
                eval_p(m, Complex(pts.zr[j], pts.zi[j])) - Complex(1.0, 0.0);
            CHECK(std::abs(Complex(qr_s[j], qi_s[j]) - q) < 1e-12);
        }
    }
}

TEST_CASE("logderiv batch with b = 1 produces p values") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        ClassMember m = random_member(rng, 500 + static_cast<std::uint64_t>(i));
        m.params.b = Complex(1.0, 0.0);
        const kernels::BatchMember bm = to_batch(m);
        const Batch pts = random_points(rng, 16, 0.9);
        std::vector<double> vr(16), vi(16);
        kernels::logderiv_batch(bm, pts.zr.data(), pts.zi.data(), vr.data(),
                                vi.data(), 16);
        for (std::size_t j = 0; j < 16; ++j) {
            const Complex p = eval_p(m, Complex(pts.zr[j], pts.zi[j]));
            CHECK(std::abs(Complex(vr[j], vi[j]) - p) < 1e-12);
        }
    }
}
