#include "critgen/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace critgen {

using nlohmann::json;

Monomial::Monomial(std::vector<VarPow> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
  for (const VarPow& f : factors) {
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
}

Monomial Monomial::var(std::uint32_t v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({v, e});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const VarPow& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent(std::uint32_t v) const {
  for (const VarPow& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

std::uint32_t Monomial::max_var() const {
  return factors_.empty() ? 0 : factors_.back().var;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t a = 0, b = 0;
  while (a < factors_.size() && b < other.factors_.size()) {
    if (factors_[a].var < other.factors_[b].var)
      out.factors_.push_back(factors_[a++]);
    else if (factors_[a].var > other.factors_[b].var)
      out.factors_.push_back(other.factors_[b++]);
    else {
      out.factors_.push_back({factors_[a].var, factors_[a].exp + other.factors_[b].exp});
      ++a;
      ++b;
    }
  }
  for (; a < factors_.size(); ++a) out.factors_.push_back(factors_[a]);
  for (; b < other.factors_.size(); ++b) out.factors_.push_back(other.factors_[b]);
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // Same degree: walk variables in increasing index; the first position where
  // exponents differ decides, larger exponent first.
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var < fb[j].var) return true;          // a has positive exp where b has 0
    if (fa[i].var > fb[j].var) return false;
    if (fa[i].exp != fb[j].exp) return fa[i].exp > fb[j].exp;
    ++i;
    ++j;
  }
  return i < fa.size();
}

Polynomial Polynomial::constant(std::uint32_t nvars, Rat c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::uint32_t nvars, std::uint32_t v) {
  if (v >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::var(v), Rat(1));
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(Monomial mono, const Rat& coeff) {
  if (coeff == 0) return;
  if (!mono.is_constant() && mono.max_var() >= nvars_)
    throw std::invalid_argument("monomial references a variable outside the polynomial's space");
  auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::widened(std::uint32_t new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("cannot shrink a polynomial's variable space");
  Polynomial out = *this;
  out.nvars_ = new_nvars;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable-count mismatch in +");
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable-count mismatch in -");
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, Rat(-coeff));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable-count mismatch in *");
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), Rat(ca * cb));
  return out;
}

Rat Polynomial::eval(std::span<const Rat> coords) const {
  if (coords.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rat acc(0);
  for (const auto& [mono, coeff] : terms_) {
    Rat prod = coeff;
    bool zero = false;
    for (const VarPow& f : mono.factors()) {
      const Rat& x = coords[f.var];
      if (x == 0) {
        zero = true;
        break;
      }
      prod *= rpow(x, f.exp);
    }
    if (!zero) acc += prod;
  }
  return acc;
}

double Polynomial::eval(std::span<const double> coords) const {
  if (coords.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  double acc = 0.0;
  for (const auto& [mono, coeff] : terms_) {
    double prod = to_double(coeff);
    for (const VarPow& f : mono.factors()) {
      const double x = coords[f.var];
      for (std::uint32_t e = 0; e < f.exp; ++e) prod *= x;
    }
    acc += prod;
  }
  return acc;
}

Rat Polynomial::eval_exact(const Point& pt) const {
  if (!pt.is_exact()) throw std::invalid_argument("eval_exact requires an exact-mode point");
  return eval(std::span<const Rat>(pt.rat));
}

double Polynomial::eval_checked(const Point& pt) const {
  const Point fp = pt.to_floating();
  const double v = eval(std::span<const double>(fp.fp));
  if (!std::isfinite(v)) throw EvalOverflow("floating evaluation overflowed");
  return v;
}

Polynomial Polynomial::partial(std::uint32_t v) const {
  Polynomial out(nvars_);
  for (const auto& [mono, coeff] : terms_) {
    const std::uint32_t e = mono.exponent(v);
    if (e == 0) continue;
    std::vector<VarPow> factors;
    for (const VarPow& f : mono.factors()) {
      if (f.var == v) {
        if (f.exp > 1) factors.push_back({f.var, f.exp - 1});
      } else {
        factors.push_back(f);
      }
    }
    out.add_term(Monomial(std::move(factors)), Rat(coeff * e));
  }
  return out;
}

std::vector<Polynomial> Polynomial::gradient() const {
  std::vector<Polynomial> g;
  g.reserve(nvars_);
  for (std::uint32_t v = 0; v < nvars_; ++v) g.push_back(partial(v));
  return g;
}

std::vector<Polynomial> Polynomial::hessian_diagonal() const {
  std::vector<Polynomial> h;
  h.reserve(nvars_);
  for (std::uint32_t v = 0; v < nvars_; ++v) h.push_back(partial(v).partial(v));
  return h;
}

std::string Polynomial::to_text() const {
  std::ostringstream out;
  for (const auto& [mono, coeff] : terms_) {
    out << rat_to_string(coeff) << " :";
    for (const VarPow& f : mono.factors()) out << " " << f.var << "^" << f.exp;
    out << "\n";
  }
  return out.str();
}

Polynomial Polynomial::from_text(std::string_view text, std::uint32_t nvars) {
  Polynomial p(nvars);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("polynomial term missing ':': '" + line + "'");
    std::string coeff_text = line.substr(0, colon);
    coeff_text.erase(coeff_text.find_last_not_of(" \t") + 1);
    coeff_text.erase(0, coeff_text.find_first_not_of(" \t"));
    const Rat coeff = rat_from_string(coeff_text);
    std::istringstream fs(line.substr(colon + 1));
    std::vector<VarPow> factors;
    std::string tok;
    while (fs >> tok) {
      const auto caret = tok.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("malformed factor: '" + tok + "'");
      const auto var = static_cast<std::uint32_t>(std::stoul(tok.substr(0, caret)));
      const auto exp = static_cast<std::uint32_t>(std::stoul(tok.substr(caret + 1)));
      factors.push_back({var, exp});
    }
    p.add_term(Monomial(std::move(factors)), coeff);
  }
  return p;
}

std::string Polynomial::to_json() const {
  json terms = json::array();
  for (const auto& [mono, coeff] : terms_) {
    json factors = json::array();
    for (const VarPow& f : mono.factors()) factors.push_back(json::array({f.var, f.exp}));
    terms.push_back(json::array({rat_to_string(coeff), std::move(factors)}));
  }
  json j;
  j["nvars"] = nvars_;
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
  json j = json::parse(text);
  Polynomial p(j.at("nvars").get<std::uint32_t>());
  for (const auto& term : j.at("terms")) {
    const Rat coeff = rat_from_string(term.at(0).get<std::string>());
    std::vector<VarPow> factors;
    for (const auto& f : term.at(1))
      factors.push_back({f.at(0).get<std::uint32_t>(), f.at(1).get<std::uint32_t>()});
    p.add_term(Monomial(std::move(factors)), coeff);
  }
  return p;
}

Polynomial grad_norm_sq(const Polynomial& p) {
  Polynomial out(p.nvars());
  for (std::uint32_t v = 0; v < p.nvars(); ++v) {
    const Polynomial d = p.partial(v);
    out += d * d;
  }
  return out;
}

}  // namespace critgen
