#include "topoidx/exactnum.hpp"

#include <cctype>
#include <string>

#include "topoidx/error.hpp"

namespace topoidx {

namespace {

bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Exact integer q-th root of a non-negative z, if one exists.
std::optional<mpz_class> root_exact(const mpz_class& z, unsigned long q) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), q) == 0) return std::nullopt;
  return r;
}

}  // namespace

BigInt BigInt::parse(std::string_view text) {
  text = trim(text);
  if (!is_decimal_literal(text)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(r);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(r);
}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rat::Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(BigInt::parse(text));
  BigInt num = BigInt::parse(text.substr(0, slash));
  BigInt den = BigInt::parse(text.substr(slash + 1));
  return Rat(num, den);
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rat(den(), num());
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::to_short_string() const {
  return is_integer() ? v_.get_num().get_str() : to_string();
}

Rat pow(const Rat& a, long k) {
  if (k == 0) return Rat(1);
  if (k < 0) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
    return pow(a.reciprocal(), -k);
  }
  mpz_class n, d;
  auto e = static_cast<unsigned long>(k);
  mpz_pow_ui(n.get_mpz_t(), a.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), a.raw().get_den_mpz_t(), e);
  return Rat(mpq_class(n, d));
}

std::optional<Rat> pow_exact(const Rat& a, const Rat& e) {
  if (e.is_integer()) {
    if (!e.num().fits_long()) return std::nullopt;
    return pow(a, e.num().to_long());
  }
  if (a.is_zero()) {
    if (e.sign() < 0) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
    return Rat(0);
  }
  if (!e.den().fits_long() || !e.num().fits_long()) return std::nullopt;
  const auto q = static_cast<unsigned long>(e.den().to_long());
  if (a.sign() < 0) {
    // Odd roots of negatives stay real; even roots do not.
    if (q % 2 == 0) return std::nullopt;
    auto r = pow_exact(-a, e);
    if (!r) return std::nullopt;
    return e.num().to_long() % 2 != 0 ? -*r : *r;
  }
  auto rn = root_exact(a.raw().get_num(), q);
  auto rd = root_exact(a.raw().get_den(), q);
  if (!rn || !rd) return std::nullopt;
  return pow(Rat(mpq_class(*rn, *rd)), e.num().to_long());
}

std::optional<Rat> sqrt_exact(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  return pow_exact(r, Rat(BigInt(1), BigInt(2)));
}

}  // namespace topoidx
