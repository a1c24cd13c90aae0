#pragma once

#include "bramble/params.hpp"

namespace bramble::detail {

/// Parameter chain evaluated at an explicit working precision, shared by the
/// public entry point and certificate re-verification (which replays at the
/// recorded precision). Validates the input domain but does not enforce
/// chainOk.
PipelineParameters computeParametersAt(int k, double alpha, double eps, double cA, double cT,
                                       double logBase, unsigned digits);

}  // namespace bramble::detail
