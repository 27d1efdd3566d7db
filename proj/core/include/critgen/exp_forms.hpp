#pragma once

#include "critgen/polynomial.hpp"

#include <variant>
#include <vector>

namespace critgen {

/// f(v) = exp(v[w_index]) * base(v), where base never involves w_index.
/// Gradient: exp(w) * grad(base) in the non-w slots, exp(w) * base in slot w.
struct ExpTimesPoly {
  std::uint32_t w_index = 0;
  Polynomial base;  // over the full variable space, w-free

  ExpTimesPoly(std::uint32_t w, Polynomial b);
  std::uint32_t nvars() const { return base.nvars(); }
};

/// f(v) = exp(inner(v)); gradient exp(inner) * grad(inner), so critical
/// points coincide with those of inner.
struct ExpOfPoly {
  Polynomial inner;

  std::uint32_t nvars() const { return inner.nvars(); }
};

/// Any of the function shapes an instance can carry.
using AnyFunction = std::variant<Polynomial, ExpTimesPoly, ExpOfPoly>;

std::uint32_t function_nvars(const AnyFunction& f);

/// Floating-point function value; throws EvalOverflow when exp overflows.
double eval_function(const AnyFunction& f, std::span<const double> coords);

/// Floating-point gradient via the closed-form product rules.
std::vector<double> eval_exp_gradient(const ExpTimesPoly& f, std::span<const double> coords);
std::vector<double> eval_exp_gradient(const ExpOfPoly& f, std::span<const double> coords);
std::vector<double> eval_function_gradient(const AnyFunction& f, std::span<const double> coords);

/// Symbolic gradient components where they exist as polynomials: for a plain
/// polynomial this is its gradient; for the exp shapes it is the gradient of
/// the polynomial part, with the transcendental factor handled by callers.
std::vector<Polynomial> base_gradient(const AnyFunction& f);

/// Exact test for a vanishing gradient at an exact point. The exp factor is
/// strictly positive, so for exp shapes this reduces to exact zero tests on
/// the polynomial part (base gradient and base value, or inner gradient).
bool gradient_is_exactly_zero(const AnyFunction& f, const Point& pt);

}  // namespace critgen
