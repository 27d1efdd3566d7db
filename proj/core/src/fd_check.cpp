#include "critgen/fd_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critgen {

double fd_check_gradient(const AnyFunction& f, const Point& pt, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> x = pt.to_floating().fp;
  if (x.size() != function_nvars(f)) throw std::invalid_argument("point dimension mismatch");

  const std::vector<double> sym = eval_function_gradient(f, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    x[i] = xi + h;
    const double fp = eval_function(f, x);
    x[i] = xi - h;
    const double fm = eval_function(f, x);
    x[i] = xi;
    const double fd = (fp - fm) / (2.0 * h);
    const double err = std::abs(fd - sym[i]) / std::max(1.0, std::abs(sym[i]));
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace critgen
