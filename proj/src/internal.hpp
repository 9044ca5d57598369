#pragma once

#include "starlike/class_params.hpp"
#include "starlike/function_rep.hpp"
#include "starlike/kernels.hpp"

// Cross-module internals; not part of the installed surface.

namespace starlike::detail {

// Log-integral of eval_f for an already-flattened member.
Complex integrate_log(const ClassParams& params, const kernels::BatchMember& bm,
                      Complex z, const QuadratureConfig& quad);

} // namespace starlike::detail
