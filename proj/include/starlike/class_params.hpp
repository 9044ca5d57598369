#pragma once

#include <complex>
#include <stdexcept>
#include <variant>

namespace starlike {

using Complex = std::complex<double>;

// A parameter violated its documented range; the message names the constraint.
struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An evaluation point left the open unit disk.
struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter triple of the Janowski starlike class S*(A,B,b).
// Valid iff -1 < A <= 1, -1 <= B < A and b != 0.
struct ClassParams {
    double A;
    double B;
    Complex b;
};

// Validates the triple; throws OutOfRange naming the violated constraint.
ClassParams new_class_params(double A, double B, Complex b);

// Named subclasses that reduce to concrete (A,B,b) triples.
struct Starlike {};                                        // S*(1,-1,1)
struct StarlikeComplexOrder { Complex b; };                // S*(1,-1,b)
struct StarlikeOfOrder { double beta; };                   // S*(1,-1,1-beta)
struct Spirallike { double lambda; };                      // S*(1,-1,e^{-il}cos l)
struct SpirallikeOfOrder { double alpha; double lambda; }; // S*(1,-1,(1-a)e^{-il}cos l)
struct St6 { Complex b; };                                 // |ST(b)-1| < 1
struct St7 { double beta; Complex b; };                    // |ST(b)-1| < beta
struct St8 { double beta; Complex b; };                    // |(ST(b)-1)/(ST(b)+1)| < beta
struct St9 { double M; Complex b; };                       // |ST(b)-M| < M
struct St10 { double beta; Complex b; };                   // Re ST(b) > beta

using NamedClass = std::variant<Starlike, StarlikeComplexOrder, StarlikeOfOrder,
                                Spirallike, SpirallikeOfOrder, St6, St7, St8, St9,
                                St10>;

// Maps a named subclass to its triple. Throws OutOfRange if a free
// parameter is outside the range listed with the class.
ClassParams resolve_named(const NamedClass& n);

} // namespace starlike
