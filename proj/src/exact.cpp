#include "carlitz/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace carlitz {

namespace {

// Classical recursion on nonnegative arguments; returns the coefficient pair
// that the examples of this operation are normalized to.
Bezout egcd_nonneg(const BigInt& a, const BigInt& b) {
  if (a == 0) return {b, BigInt(0), BigInt(1)};
  Bezout sub = egcd_nonneg(b % a, a);
  // g = (b mod a)*x' + a*y' with b mod a = b - (b/a)*a.
  return {sub.g, sub.y - (b / a) * sub.x, sub.x};
}

}  // namespace

Bezout egcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw std::domain_error("egcd: gcd(0, 0) is undefined");
  Bezout r = egcd_nonneg(abs(a), abs(b));
  if (a < 0) r.x = -r.x;
  if (b < 0) r.y = -r.y;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  if (d <= 0) throw std::domain_error("floor_div: divisor must be positive");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& n, const BigInt& d) {
  if (d <= 0) throw std::domain_error("floor_mod: divisor must be positive");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

BigRat frac(const BigRat& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - BigRat(fl);
}

BigRat sawtooth(const BigRat& x) {
  if (x.get_den() == 1) return BigRat(0);
  return frac(x) - BigRat(1, 2);
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRat& x) { return x.get_str(); }

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size())
    throw std::domain_error("parse_bigint: malformed integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::domain_error("parse_bigint: malformed integer '" + text + "'");
  BigInt n;
  const std::string digits = (text[0] == '+') ? text.substr(1) : text;
  mpz_set_str(n.get_mpz_t(), digits.c_str(), 10);
  return n;
}

BigRat parse_bigrat(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return BigRat(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("parse_bigrat: zero denominator in '" + text + "'");
  return make_rat(num, den);
}

}  // namespace carlitz
