#pragma once

#include "critgen/point.hpp"
#include "critgen/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgen {

struct VarPow {
  std::uint32_t var;
  std::uint32_t exp;
  bool operator==(const VarPow&) const = default;
};

/// Product of variable powers; factors sorted by variable index, exponents >= 1.
class Monomial {
 public:
  Monomial() = default;  // the constant monomial 1
  explicit Monomial(std::vector<VarPow> factors);
  static Monomial var(std::uint32_t v, std::uint32_t e = 1);

  std::uint32_t degree() const;
  bool is_constant() const { return factors_.empty(); }
  const std::vector<VarPow>& factors() const { return factors_; }
  std::uint32_t exponent(std::uint32_t v) const;
  std::uint32_t max_var() const;  // largest variable index; 0 if constant

  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<VarPow> factors_;
};

/// Graded-lexicographic order, descending (leading term first): higher total
/// degree wins; ties broken by the lexicographically larger exponent vector.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over exact rationals, kept in canonical
/// form: no zero coefficients, terms ordered graded-lex descending.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  explicit Polynomial(std::uint32_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::uint32_t nvars, Rat c);
  static Polynomial variable(std::uint32_t nvars, std::uint32_t v);

  std::uint32_t nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat constant_term() const;

  /// Accumulates coeff * mono, dropping the term if it cancels to zero.
  void add_term(Monomial mono, const Rat& coeff);

  /// Reinterprets the polynomial in a larger variable space.
  Polynomial widened(std::uint32_t new_nvars) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rat& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
  friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
  Polynomial operator*(const Polynomial& other) const;
  Polynomial squared() const { return *this * *this; }

  bool operator==(const Polynomial&) const = default;

  Rat eval(std::span<const Rat> coords) const;
  double eval(std::span<const double> coords) const;
  /// Mode-dispatching evaluation; exact points stay exact. Floating
  /// evaluation throws EvalOverflow if the result is not finite.
  Rat eval_exact(const Point& pt) const;
  double eval_checked(const Point& pt) const;

  Polynomial partial(std::uint32_t v) const;
  std::vector<Polynomial> gradient() const;
  std::vector<Polynomial> hessian_diagonal() const;

  /// Canonical text: one term per line, "num/den : v^e v^e ...", graded-lex
  /// descending; the zero polynomial serializes to the empty string.
  std::string to_text() const;
  static Polynomial from_text(std::string_view text, std::uint32_t nvars);

  std::string to_json() const;
  static Polynomial from_json(const std::string& text);

 private:
  std::uint32_t nvars_;
  TermMap terms_;
};

/// Sum of squared partial derivatives; evaluates to the squared gradient norm.
Polynomial grad_norm_sq(const Polynomial& p);

/// Converts an arbitrary-precision integer to a floating scalar by 32-bit
/// chunks. Exact whenever the value fits the scalar's mantissa, which keeps
/// __float128 conversions exact far beyond the double range.
template <typename S>
S int_to_scalar(const Int& z) {
  const bool neg = z < 0;
  Int a = neg ? Int(-z) : z;
  S acc = S(0);
  const S radix = S(4294967296.0);  // 2^32
  std::vector<std::uint32_t> chunks;
  while (a != 0) {
    chunks.push_back(static_cast<std::uint32_t>(mpz_get_ui(Int(a & 0xffffffffu).get_mpz_t())));
    a >>= 32;
  }
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) acc = acc * radix + S(static_cast<double>(*it));
  return neg ? -acc : acc;
}

template <typename S>
S to_scalar(const Rat& q) {
  return int_to_scalar<S>(q.get_num()) / int_to_scalar<S>(q.get_den());
}

/// Flattened evaluator for hot floating-point loops. Exponents are unrolled
/// into repeated variable indices, so evaluation is pure multiply-add.
template <typename S>
struct CompiledPoly {
  struct Term {
    S coeff;
    std::array<std::uint16_t, 8> vars;
    std::uint8_t count;
  };
  std::uint32_t nvars = 0;
  std::vector<Term> terms;

  S operator()(const S* x) const {
    S acc = S(0);
    for (const Term& t : terms) {
      S prod = t.coeff;
      for (std::uint8_t i = 0; i < t.count; ++i) prod *= x[t.vars[i]];
      acc += prod;
    }
    return acc;
  }
};

template <typename S>
CompiledPoly<S> compile(const Polynomial& p) {
  CompiledPoly<S> out;
  out.nvars = p.nvars();
  out.terms.reserve(p.term_count());
  for (const auto& [mono, coeff] : p.terms()) {
    typename CompiledPoly<S>::Term t;
    t.coeff = to_scalar<S>(coeff);
    t.count = 0;
    for (const VarPow& f : mono.factors())
      for (std::uint32_t e = 0; e < f.exp; ++e) {
        if (t.count >= t.vars.size()) throw std::invalid_argument("compiled term degree cap exceeded");
        t.vars[t.count++] = static_cast<std::uint16_t>(f.var);
      }
    out.terms.push_back(t);
  }
  return out;
}

class EvalOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critgen
