#include "critgen/exp_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace critgen {

ExpTimesPoly::ExpTimesPoly(std::uint32_t w, Polynomial b) : w_index(w), base(std::move(b)) {
  if (w_index >= base.nvars())
    throw std::invalid_argument("w index outside the variable space");
  for (const auto& [mono, coeff] : base.terms())
    if (mono.exponent(w_index) != 0)
      throw std::invalid_argument("base polynomial must not involve the exponential variable");
}

std::uint32_t function_nvars(const AnyFunction& f) {
  return std::visit([](const auto& g) { return g.nvars(); }, f);
}

namespace {

double checked_exp(double w) {
  const double e = std::exp(w);
  if (!std::isfinite(e)) throw EvalOverflow("exp overflow at w = " + std::to_string(w));
  return e;
}

void check_dim(std::uint32_t nvars, std::size_t got) {
  if (got != nvars) throw std::invalid_argument("point dimension mismatch");
}

}  // namespace

double eval_function(const AnyFunction& f, std::span<const double> coords) {
  if (const auto* p = std::get_if<Polynomial>(&f)) return p->eval(coords);
  if (const auto* ep = std::get_if<ExpTimesPoly>(&f)) {
    check_dim(ep->nvars(), coords.size());
    const double v = checked_exp(coords[ep->w_index]) * ep->base.eval(coords);
    if (!std::isfinite(v)) throw EvalOverflow("exp-times-poly value overflowed");
    return v;
  }
  const auto& eop = std::get<ExpOfPoly>(f);
  check_dim(eop.nvars(), coords.size());
  return checked_exp(eop.inner.eval(coords));
}

std::vector<double> eval_exp_gradient(const ExpTimesPoly& f, std::span<const double> coords) {
  check_dim(f.nvars(), coords.size());
  const double ew = checked_exp(coords[f.w_index]);
  std::vector<double> g(f.nvars());
  for (std::uint32_t v = 0; v < f.nvars(); ++v) {
    if (v == f.w_index)
      g[v] = ew * f.base.eval(coords);
    else
      g[v] = ew * f.base.partial(v).eval(coords);
    if (!std::isfinite(g[v])) throw EvalOverflow("exp-times-poly gradient overflowed");
  }
  return g;
}

std::vector<double> eval_exp_gradient(const ExpOfPoly& f, std::span<const double> coords) {
  check_dim(f.nvars(), coords.size());
  const double ef = checked_exp(f.inner.eval(coords));
  std::vector<double> g(f.nvars());
  for (std::uint32_t v = 0; v < f.nvars(); ++v) {
    g[v] = ef * f.inner.partial(v).eval(coords);
    if (!std::isfinite(g[v])) throw EvalOverflow("exp-of-poly gradient overflowed");
  }
  return g;
}

std::vector<double> eval_function_gradient(const AnyFunction& f, std::span<const double> coords) {
  if (const auto* p = std::get_if<Polynomial>(&f)) {
    check_dim(p->nvars(), coords.size());
    std::vector<double> g(p->nvars());
    for (std::uint32_t v = 0; v < p->nvars(); ++v) g[v] = p->partial(v).eval(coords);
    return g;
  }
  if (const auto* ep = std::get_if<ExpTimesPoly>(&f)) return eval_exp_gradient(*ep, coords);
  return eval_exp_gradient(std::get<ExpOfPoly>(f), coords);
}

std::vector<Polynomial> base_gradient(const AnyFunction& f) {
  if (const auto* p = std::get_if<Polynomial>(&f)) return p->gradient();
  if (const auto* ep = std::get_if<ExpTimesPoly>(&f)) return ep->base.gradient();
  return std::get<ExpOfPoly>(f).inner.gradient();
}

bool gradient_is_exactly_zero(const AnyFunction& f, const Point& pt) {
  if (!pt.is_exact()) throw std::invalid_argument("exact zero-gradient test needs an exact point");
  const std::span<const Rat> coords(pt.rat);
  if (const auto* p = std::get_if<Polynomial>(&f)) {
    check_dim(p->nvars(), coords.size());
    for (std::uint32_t v = 0; v < p->nvars(); ++v)
      if (p->partial(v).eval(coords) != 0) return false;
    return true;
  }
  if (const auto* ep = std::get_if<ExpTimesPoly>(&f)) {
    check_dim(ep->nvars(), coords.size());
    if (ep->base.eval(coords) != 0) return false;  // the w slot carries exp(w)*base
    for (std::uint32_t v = 0; v < ep->nvars(); ++v) {
      if (v == ep->w_index) continue;
      if (ep->base.partial(v).eval(coords) != 0) return false;
    }
    return true;
  }
  const auto& eop = std::get<ExpOfPoly>(f);
  check_dim(eop.nvars(), coords.size());
  for (std::uint32_t v = 0; v < eop.nvars(); ++v)
    if (eop.inner.partial(v).eval(coords) != 0) return false;
  return true;
}

}  // namespace critgen
