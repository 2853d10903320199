#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace topoidx {

/// Arbitrary-precision signed integer.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) : v_(v) {}

  /// Parses an optionally signed decimal literal; throws ParseError.
  static BigInt parse(std::string_view text);
  static BigInt pow(const BigInt& base, unsigned long exponent);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }
  const mpz_class& raw() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);

/// Exact rational, always stored in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  /// num/den reduced; throws DivisionByZero when den == 0.
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& v);

  /// Accepts "p", "p/q", with optional sign. Result is reduced.
  static Rat parse(std::string_view text);

  BigInt num() const { return BigInt(v_.get_num()); }
  BigInt den() const { return BigInt(v_.get_den()); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat reciprocal() const;
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

  /// Always "num/den", e.g. "162/1".
  std::string to_string() const;
  /// "num" when the value is an integer, otherwise "num/den".
  std::string to_short_string() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

/// a^k for any integer k; throws DivisionByZero for 0 with k < 0.
Rat pow(const Rat& a, long k);

/// Exact a^e for rational e = p/q when the q-th root of |a| is rational.
/// Returns nullopt when the result leaves the rationals.
/// Throws DivisionByZero for 0 raised to a negative power.
std::optional<Rat> pow_exact(const Rat& a, const Rat& e);

/// Exact square root when r is the square of a rational.
std::optional<Rat> sqrt_exact(const Rat& r);

/// Sparse polynomial in x with rational exponents and integer coefficients.
/// Zero coefficients are never stored.
class ExpPoly {
 public:
  using Terms = std::map<Rat, BigInt, std::greater<>>;

  ExpPoly() = default;
  static ExpPoly monomial(const Rat& exponent, const BigInt& coeff = BigInt(1));
  /// Inverse of render(); throws ParseError.
  static ExpPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of x^e, zero when absent.
  BigInt coeff(const Rat& exponent) const;

  void add_term(const Rat& exponent, const BigInt& coeff);

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator*=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
  ExpPoly scaled(const BigInt& k) const;

  /// p(x). x = 1 works for any exponents; otherwise every exponent must be
  /// an integer (UnsupportedEvaluation) and x != 0 for negative ones.
  Rat eval(const Rat& x) const;
  /// p'(1) = sum of coeff * exponent.
  Rat derivative_at_one() const;

  /// Canonical text: terms by descending exponent, "<c>*x^<num>[/<den>]"
  /// joined by " + "; the zero polynomial renders as "0".
  std::string render() const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace topoidx
