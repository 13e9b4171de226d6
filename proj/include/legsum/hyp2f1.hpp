#pragma once

#include "legsum/common.hpp"

namespace legsum::specfun {

// Gauss hypergeometric 2F1(a, b; c; w) by partial summation, |w| < 1.
// abs_err bounds the truncation tail plus accumulated cancellation.
// Throws DomainError when c is a non-positive integer (callers that can
// terminate the series before the bad denominator are served first).
EvalResultC hyp2f1(cplx a, cplx b, cplx c, cplx w);

}  // namespace legsum::specfun
