#include <cctype>
#include <string>
#include <vector>

#include "topoidx/error.hpp"
#include "topoidx/exactnum.hpp"

namespace topoidx {

namespace {

std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  constexpr std::string_view sep = " + ";
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

}  // namespace

ExpPoly ExpPoly::monomial(const Rat& exponent, const BigInt& coeff) {
  ExpPoly p;
  p.add_term(exponent, coeff);
  return p;
}

BigInt ExpPoly::coeff(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ExpPoly::add_term(const Rat& exponent, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
  ExpPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

ExpPoly ExpPoly::scaled(const BigInt& k) const {
  ExpPoly out;
  if (k.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

Rat ExpPoly::eval(const Rat& x) const {
  Rat sum;
  if (x == Rat(1)) {
    for (const auto& [e, c] : terms_) sum += Rat(c);
    return sum;
  }
  for (const auto& [e, c] : terms_) {
    if (!e.is_integer() || !e.num().fits_long()) {
      throw Error(ErrorCode::UnsupportedEvaluation,
                  "exact evaluation of x^" + e.to_short_string() + " at x = " + x.to_short_string());
    }
    if (x.is_zero() && e.sign() < 0) {
      throw Error(ErrorCode::UnsupportedEvaluation,
                  "x^" + e.to_short_string() + " is undefined at x = 0");
    }
    sum += Rat(c) * pow(x, e.num().to_long());
  }
  return sum;
}

Rat ExpPoly::derivative_at_one() const {
  Rat sum;
  for (const auto& [e, c] : terms_) sum += Rat(c) * e;
  return sum;
}

std::string ExpPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    out += "*x^";
    out += e.to_short_string();
  }
  return out;
}

ExpPoly ExpPoly::parse(std::string_view text) {
  ExpPoly p;
  if (text == "0") return p;
  for (auto term : split_terms(text)) {
    auto star = term.find("*x^");
    if (star == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "malformed polynomial term '" + std::string(term) + "'");
    }
    auto coeff = BigInt::parse(term.substr(0, star));
    auto exponent = Rat::parse(term.substr(star + 3));
    if (coeff.is_zero()) {
      throw Error(ErrorCode::ParseError, "zero coefficient in '" + std::string(term) + "'");
    }
    if (p.terms_.count(exponent) != 0) {
      throw Error(ErrorCode::ParseError, "repeated exponent in '" + std::string(text) + "'");
    }
    p.terms_.emplace(exponent, coeff);
  }
  return p;
}

}  // namespace topoidx
