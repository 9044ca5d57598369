#include "starlike/class_params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace starlike {

namespace {

[[noreturn]] void fail(const char* name, double got, const char* range) {
    std::ostringstream os;
    os << name << " must satisfy " << range << " (got " << got << ")";
    throw OutOfRange(os.str());
}

constexpr double kHalfPi = std::numbers::pi / 2.0;

} // namespace

ClassParams new_class_params(double A, double B, Complex b) {
    if (!(A > -1.0 && A <= 1.0)) fail("A", A, "-1 < A <= 1");
    if (!(B >= -1.0 && B < A)) fail("B", B, "-1 <= B < A");
    if (b == Complex(0.0, 0.0)) throw OutOfRange("b must be nonzero");
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
        throw OutOfRange("b must be finite");
    return ClassParams{A, B, b};
}

ClassParams resolve_named(const NamedClass& n) {
    return std::visit(
        [](const auto& c) -> ClassParams {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Starlike>) {
                return new_class_params(1.0, -1.0, 1.0);
            } else if constexpr (std::is_same_v<T, StarlikeComplexOrder>) {
                return new_class_params(1.0, -1.0, c.b);
            } else if constexpr (std::is_same_v<T, StarlikeOfOrder>) {
                if (!(c.beta >= 0.0 && c.beta < 1.0))
                    fail("beta", c.beta, "0 <= beta < 1");
                return new_class_params(1.0, -1.0, 1.0 - c.beta);
            } else if constexpr (std::is_same_v<T, Spirallike>) {
                if (!(std::abs(c.lambda) < kHalfPi))
                    fail("lambda", c.lambda, "|lambda| < pi/2");
                return new_class_params(1.0, -1.0,
                                        std::polar(std::cos(c.lambda), -c.lambda));
            } else if constexpr (std::is_same_v<T, SpirallikeOfOrder>) {
                if (!(c.alpha >= 0.0 && c.alpha < 1.0))
                    fail("alpha", c.alpha, "0 <= alpha < 1");
                if (!(std::abs(c.lambda) < kHalfPi))
                    fail("lambda", c.lambda, "|lambda| < pi/2");
                return new_class_params(
                    1.0, -1.0,
                    (1.0 - c.alpha) * std::polar(std::cos(c.lambda), -c.lambda));
            } else if constexpr (std::is_same_v<T, St6>) {
                return new_class_params(1.0, 0.0, c.b);
            } else if constexpr (std::is_same_v<T, St7>) {
                if (!(c.beta > 0.0 && c.beta < 1.0))
                    fail("beta", c.beta, "0 < beta < 1");
                return new_class_params(c.beta, 0.0, c.b);
            } else if constexpr (std::is_same_v<T, St8>) {
                if (!(c.beta > 0.0 && c.beta < 1.0))
                    fail("beta", c.beta, "0 < beta < 1");
                return new_class_params(c.beta, -c.beta, c.b);
            } else if constexpr (std::is_same_v<T, St9>) {
                if (!(c.M > 0.5)) fail("M", c.M, "M > 1/2");
                return new_class_params(1.0, 1.0 / c.M - 1.0, c.b);
            } else {
                static_assert(std::is_same_v<T, St10>);
                if (!(c.beta >= 0.0 && c.beta < 1.0))
                    fail("beta", c.beta, "0 <= beta < 1");
                return new_class_params(1.0 - 2.0 * c.beta, -1.0, c.b);
            }
        },
        n);
}

} // namespace starlike
