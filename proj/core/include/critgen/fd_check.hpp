#pragma once

#include "critgen/exp_forms.hpp"

namespace critgen {

/// Compares the closed-form gradient against central finite differences at
/// pt (floating mode). Returns the worst relative error over all partials,
/// with denominator max(1, |closed-form partial|). Throws on h <= 0.
double fd_check_gradient(const AnyFunction& f, const Point& pt, double h);

}  // namespace critgen
