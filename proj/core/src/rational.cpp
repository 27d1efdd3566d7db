#include "critgen/rational.hpp"

#include <stdexcept>

namespace critgen {

Int pow2(unsigned e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

Int ipow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& base, unsigned e) {
  Rat r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  Int n, d;
  if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) bad();
  if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) bad();
  if (d == 0) bad();
  Rat q(n, d);
  q.canonicalize();
  return q;
}

double to_double(const Rat& q) { return q.get_d(); }

Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rat sqrt_lower(const Rat& q, unsigned bits) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  // floor(sqrt(q * 4^bits)) / 2^bits; floor of sqrt of floor stays a lower bound.
  Int scaled = (q.get_num() * pow2(2 * bits)) / q.get_den();
  Rat r(isqrt_floor(scaled), pow2(bits));
  r.canonicalize();
  return r;
}

Rat sqrt_upper(const Rat& q, unsigned bits) {
  Rat lo = sqrt_lower(q, bits);
  if (lo * lo == q) return lo;
  Rat hi = lo + Rat(1, pow2(bits));
  hi.canonicalize();
  return hi;
}

}  // namespace critgen
