#include "carlitz/laurent.hpp"

#include <sstream>
#include <utility>

namespace carlitz {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw std::domain_error("LaurentPoly: dimension must be >= 1");
}

}  // namespace

Exp to_exp(const BigInt& n) {
  if (!n.fits_slong_p())
    throw std::domain_error("to_exp: value too large for an exponent");
  return static_cast<Exp>(n.get_si());
}

LaurentPoly::LaurentPoly(int dim) : dim_(dim) { check_dim(dim); }

LaurentPoly LaurentPoly::monomial(const ExpVec& e, const BigInt& coeff) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(int dim, const BigInt& value) {
  LaurentPoly p(dim);
  p.add_term(ExpVec(dim, 0), value);
  return p;
}

BigInt LaurentPoly::coeff(const ExpVec& e) const {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::coeff: exponent dimension mismatch");
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::add_term: exponent dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("LaurentPoly: dimension mismatch in +");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("LaurentPoly: dimension mismatch in -");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.dim_ != rhs.dim_)
    throw std::invalid_argument("LaurentPoly: dimension mismatch in *");
  LaurentPoly out(lhs.dim_);
  ExpVec e(lhs.dim_);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (int i = 0; i < lhs.dim_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::mul_monomial(const ExpVec& e, const BigInt& coeff) const {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::mul_monomial: dimension mismatch");
  LaurentPoly out(dim_);
  if (coeff == 0) return out;
  ExpVec shifted(dim_);
  for (const auto& [e1, c1] : terms_) {
    for (int i = 0; i < dim_; ++i) shifted[i] = e1[i] + e[i];
    out.terms_.emplace(shifted, c1 * coeff);
  }
  return out;
}

BigRat rat_pow(const BigRat& base, Exp e) {
  if (e == 0) return BigRat(1);
  bool invert = e < 0;
  unsigned long long mag = invert ? -static_cast<unsigned long long>(e) : e;
  if (invert && base == 0)
    throw pole_error("rat_pow: zero raised to a negative power");
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(mag));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(mag));
  BigRat r(num, den);  // already canonical: base was canonical
  if (invert) r = BigRat(1) / r;
  return r;
}

BigRat LaurentPoly::eval(const std::vector<BigRat>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::eval: point dimension mismatch");
  BigRat sum(0);
  for (const auto& [e, c] : terms_) {
    BigRat term(c);
    for (int i = 0; i < dim_; ++i) term *= rat_pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

BigRat LaurentPoly::derivative_at_one(const std::vector<Exp>& order) const {
  if (static_cast<int>(order.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::derivative_at_one: order dimension mismatch");
  for (Exp k : order)
    if (k < 0)
      throw std::domain_error("LaurentPoly::derivative_at_one: negative order");
  // d^k/dz^k z^e at z = 1 is the falling factorial e(e-1)...(e-k+1).
  BigInt sum(0);
  for (const auto& [e, c] : terms_) {
    BigInt prod = c;
    for (int i = 0; i < dim_ && prod != 0; ++i) {
      for (Exp k = 0; k < order[i]; ++k) prod *= BigInt(e[i] - k);
    }
    sum += prod;
  }
  return BigRat(sum);
}

LaurentPoly LaurentPoly::substitute(const std::vector<ExpVec>& images) const {
  if (static_cast<int>(images.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::substitute: one image per variable required");
  if (images.empty())
    throw std::invalid_argument("LaurentPoly::substitute: empty image list");
  const int tdim = static_cast<int>(images[0].size());
  for (const auto& im : images)
    if (static_cast<int>(im.size()) != tdim)
      throw std::invalid_argument("LaurentPoly::substitute: image dimensions disagree");
  LaurentPoly out(tdim);
  ExpVec ne(tdim);
  for (const auto& [e, c] : terms_) {
    for (int j = 0; j < tdim; ++j) ne[j] = 0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < tdim; ++j) ne[j] += e[i] * images[i][j];
    out.add_term(ne, c);
  }
  return out;
}

std::vector<std::string> default_var_names(int dim) {
  check_dim(dim);
  if (dim == 1) return {"u"};
  if (dim == 2) return {"u", "v"};
  if (dim == 3) return {"u", "v", "w"};
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 1; i <= dim; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

std::string LaurentPoly::to_string() const { return to_string(default_var_names(dim_)); }

std::string LaurentPoly::to_string(const std::vector<std::string>& vars) const {
  if (static_cast<int>(vars.size()) != dim_)
    throw std::invalid_argument("LaurentPoly::to_string: variable name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace carlitz
