#include "g2kl/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "g2kl/error.hpp"

namespace g2kl {

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::two() { return monomial(1, 1) + monomial(1, -1); }

LaurentPoly LaurentPoly::two_power(unsigned k) { return pow(two(), k); }

LaurentPoly LaurentPoly::from_two_basis(const std::vector<Integer>& coeffs) {
  LaurentPoly out;
  LaurentPoly power = 1;
  const LaurentPoly t = two();
  for (const Integer& c : coeffs) {
    if (c != 0) out += power.scaled(c);
    power *= t;
  }
  return out;
}

int LaurentPoly::degree() const {
  if (is_zero()) fail(ErrorCode::invalid_argument, "degree of the zero polynomial");
  return terms_.back().exponent;
}

int LaurentPoly::valuation() const {
  if (is_zero()) fail(ErrorCode::invalid_argument, "valuation of the zero polynomial");
  return terms_.front().exponent;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.push_back({-it->exponent, it->coeff});
  return out;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out = *this;
  for (Term& t : out.terms_) t.exponent += by;
  return out;
}

bool LaurentPoly::has_only_even_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exponent % 2 == 0; });
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

std::vector<Integer> LaurentPoly::to_two_basis() const {
  std::vector<Integer> out;
  LaurentPoly rest = *this;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    if (d < 0) fail(ErrorCode::invalid_argument, "polynomial " + str() + " is not bar-invariant");
    const Integer c = rest.terms_.back().coeff;
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1);
    out[static_cast<std::size_t>(d)] = c;
    rest -= two_power(static_cast<unsigned>(d)).scaled(c);
  }
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back({b->exponent, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (c != 0) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const int low = x.valuation() + y.valuation();
  const int high = x.degree() + y.degree();
  std::vector<Integer> dense(static_cast<std::size_t>(high - low + 1));
  for (const auto& a : x.terms_)
    for (const auto& b : y.terms_)
      dense[static_cast<std::size_t>(a.exponent + b.exponent - low)] += a.coeff * b.coeff;
  LaurentPoly out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.terms_.push_back({low + static_cast<int>(i), std::move(dense[i])});
  return out;
}

LaurentPoly pow(const LaurentPoly& x, unsigned n) {
  LaurentPoly out = 1;
  for (unsigned i = 0; i < n; ++i) out *= x;
  return out;
}

namespace {

void append_signed(std::string& out, const Integer& c, const std::string& body, bool first,
                   bool star) {
  const bool negative = c < 0;
  const Integer magnitude = negative ? Integer(-c) : c;
  if (negative) out.push_back('-');
  else if (!first) out.push_back('+');
  if (body.empty()) {
    out += magnitude.str();
    return;
  }
  if (magnitude != 1) {
    out += magnitude.str();
    if (star) out.push_back('*');
  }
  out += body;
}

std::string power_body(const char* var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return std::string(var) + "^" + std::to_string(k);
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_signed(out, it->coeff, power_body("v", it->exponent), first, true);
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  LaurentPoly parse() {
    if (text_.empty()) error("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      out += term().scaled(sign);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse, "cannot parse polynomial \"" + text_ + "\": " + what);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
    return out;
  }

  LaurentPoly term() {
    Integer coeff = 1;
    std::string number = digits();
    if (!number.empty()) {
      coeff = Integer(number);
      if (peek() != '*') return LaurentPoly(coeff);
      take();
    }
    if (peek() != 'v') error("expected 'v'");
    take();
    int exponent = 1;
    if (peek() == '^') {
      take();
      int sign = 1;
      if (peek() == '-') {
        take();
        sign = -1;
      }
      std::string e = digits();
      if (e.empty()) error("missing exponent");
      exponent = sign * std::stoi(e);
    }
    return LaurentPoly::monomial(coeff, exponent);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  if (text == "0") return {};
  return PolyParser(text).parse();
}

void require_q_polynomial(const LaurentPoly& p, const std::string& context) {
  for (const auto& t : p.terms())
    if (t.exponent < 0 || t.exponent % 2 != 0)
      fail(ErrorCode::invariant_violation,
           context + ": " + p.str() + " is not a polynomial in q");
}

int q_degree(const LaurentPoly& p) { return p.is_zero() ? -1 : p.degree() / 2; }

Integer q_coeff(const LaurentPoly& p, int k) { return p.coeff(2 * k); }

std::string q_str(const LaurentPoly& p) {
  require_q_polynomial(p, "q_str");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_signed(out, it->coeff, power_body("q", it->exponent / 2), first, true);
    first = false;
  }
  return out;
}

std::string two_str(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const std::vector<Integer> coeffs = p.to_two_basis();
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    append_signed(out, coeffs[k], power_body("[2]", static_cast<int>(k)), first, false);
    first = false;
  }
  return out;
}

}  // namespace g2kl

std::size_t std::hash<g2kl::LaurentPoly>::operator()(const g2kl::LaurentPoly& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : p.terms()) {
    h ^= static_cast<std::size_t>(t.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= boost::multiprecision::hash_value(t.coeff) + (h << 6) + (h >> 2);
  }
  return h;
}
