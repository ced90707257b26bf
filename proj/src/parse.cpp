#include "amoh/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "amoh/error.hpp"

namespace amoh {

namespace {

struct UnivariateAlgebra {
  using Value = QPoly;
  char variable;

  std::vector<std::string> variable_names() const { return {std::string(1, variable)}; }
  std::optional<Value> lookup(char c) const {
    if (c == variable) return QPoly::identity();
    return std::nullopt;
  }
  static Value from_rational(const Rational& r) { return QPoly::constant(r); }
  static std::size_t degree(const Value& v) { return v.is_zero() ? 0 : v.deg(); }
  static Value pow(const Value& v, std::size_t k) { return v.pow(k); }
};

struct BivariateAlgebra {
  using Value = BivarExpr<Rational>;

  static std::vector<std::string> variable_names() { return {"x", "y"}; }
  static std::optional<Value> lookup(char c) {
    if (c == 'x') return Value::X();
    if (c == 'y') return Value::Y();
    return std::nullopt;
  }
  static Value from_rational(const Rational& r) { return Value::constant(r); }
  static std::size_t degree(const Value& v) { return v.weighted_degree(1, 1); }
  static Value pow(const Value& v, std::size_t k) { return v.pow(k); }
};

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, Algebra algebra) : text_(text), algebra_(std::move(algebra)) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) error({"+", "-", "*", "^", "end of input"});
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  [[noreturn]] void error(std::vector<std::string> expected, const std::string& detail = {}) {
    std::ostringstream msg;
    msg << "parse error at position " << pos_;
    if (!detail.empty()) msg << ": " << detail;
    msg << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? ", " : "") << "'" << expected[i] << "'";
    msg << ")";
    throw ParseError(pos_, std::move(expected), msg.str());
  }

  std::vector<std::string> atom_starts() const {
    std::vector<std::string> out{"number", "("};
    for (auto& v : algebra_.variable_names()) out.push_back(v);
    out.emplace_back("+");
    out.emplace_back("-");
    return out;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (peek('*')) {
      ++pos_;
      Value rhs = unary();
      if (Algebra::degree(acc) + Algebra::degree(rhs) > kMaxParsedDegree) error({"smaller degree"}, "degree too large");
      acc = acc * rhs;
    }
    return acc;
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) error({"nonnegative integer exponent"});
    if (digits.size() > 6 || std::stoul(digits) > kMaxParsedDegree) {
      pos_ = start;
      error({"exponent <= " + std::to_string(kMaxParsedDegree)}, "exponent too large");
    }
    const std::size_t k = std::stoul(digits);
    if (Algebra::degree(base) * k > kMaxParsedDegree) {
      pos_ = start;
      error({"smaller exponent"}, "degree too large");
    }
    return Algebra::pow(base, k);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) error(atom_starts(), "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value inner = expr();
      if (!peek(')')) error({")"});
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = read_digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = read_digits();
        if (den.empty()) error({"integer denominator"});
        if (mpz_class(den, 10) == 0) error({"nonzero denominator"}, "zero denominator");
      }
      return Algebra::from_rational(Rational(mpz_class(num, 10), mpz_class(den, 10)));
    }
    if (auto v = algebra_.lookup(c)) {
      ++pos_;
      return *v;
    }
    error(atom_starts());
  }

  std::string_view text_;
  Algebra algebra_;
  std::size_t pos_ = 0;
};

std::string power_suffix(std::string_view var, std::size_t k) {
  if (k == 0) return "";
  std::string s(var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// Joins (coefficient, monomial) pairs high to low as "a*m + b*m2 - ...".
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    Rational c = terms[t].first;
    const std::string& mono = terms[t].second;
    const bool negative = c.sign() < 0;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace

QPoly parse_poly(std::string_view text, char variable) {
  return Parser<UnivariateAlgebra>(text, UnivariateAlgebra{variable}).parse();
}

BivarExpr<Rational> parse_bivariate(std::string_view text) {
  return Parser<BivariateAlgebra>(text, BivariateAlgebra{}).parse();
}

std::string render(const QPoly& p, std::string_view variable) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    if (!p.coeffs()[k].is_zero()) terms.emplace_back(p.coeffs()[k], power_suffix(variable, k));
  }
  return join_terms(terms);
}

std::string render(const BivarExpr<Rational>& e, std::string_view x, std::string_view y) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto [i, j] = it->first;
    std::string mono = power_suffix(x, i);
    const std::string ys = power_suffix(y, j);
    if (!mono.empty() && !ys.empty()) mono += "*";
    mono += ys;
    terms.emplace_back(it->second, std::move(mono));
  }
  return join_terms(terms);
}

std::string render(const RationalFunction& r, std::string_view variable) {
  if (r.is_polynomial()) return render(r.numerator(), variable);
  return "(" + render(r.numerator(), variable) + ")/(" + render(r.denominator(), variable) + ")";
}

std::string render(const BiPoly& p) {
  if (auto expr = to_xy_expr(p)) return render(*expr, "x", "y");
  std::string out;
  for (std::size_t j = p.coeffs().size(); j-- > 0;) {
    if (p.coeffs()[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + render(p.coeffs()[j]) + ")";
    if (j > 0) out += "*" + power_suffix("y", j);
  }
  return out.empty() ? "0" : out;
}

std::string render(const BivarExpr<RationalFunction>& e) {
  std::string out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto [i, j] = it->first;
    if (!out.empty()) out += " + ";
    out += "(" + render(it->second) + ")";
    if (i > 0) out += "*" + power_suffix("X", i);
    if (j > 0) out += "*" + power_suffix("Y", j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace amoh
