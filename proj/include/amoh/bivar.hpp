#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "amoh/poly.hpp"

namespace amoh {

/// A formal polynomial P(X, Y). Used for membership certificates, inverse
/// maps and basis provenance: P certifies u when P(f, g) = u.
template <ExactField F>
class BivarExpr {
 public:
  using Exponent = std::pair<std::size_t, std::size_t>;  // (power of X, power of Y)
  using Terms = std::map<Exponent, F>;

  BivarExpr() = default;

  static BivarExpr monomial(const F& c, std::size_t i, std::size_t j) {
    BivarExpr e;
    if (!detail::scalar_is_zero(c)) e.terms_.emplace(Exponent{i, j}, c);
    return e;
  }
  static BivarExpr constant(const F& c) { return monomial(c, 0, 0); }
  static BivarExpr X() { return monomial(F(1), 1, 0); }
  static BivarExpr Y() { return monomial(F(1), 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  F coeff(std::size_t i, std::size_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const F& c, std::size_t i, std::size_t j) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// max(i*wx + j*wy) over the terms; 0 for the zero expression.
  std::size_t weighted_degree(std::size_t wx, std::size_t wy) const {
    std::size_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.first * wx + e.second * wy);
    return best;
  }

  BivarExpr swap_xy() const {
    BivarExpr r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
    return r;
  }

  BivarExpr operator-() const {
    BivarExpr r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  BivarExpr& operator+=(const BivarExpr& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(c, e.first, e.second);
    return *this;
  }
  BivarExpr& operator-=(const BivarExpr& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(-c, e.first, e.second);
    return *this;
  }
  BivarExpr& operator*=(const F& s) {
    if (detail::scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * s;
    return *this;
  }

  friend BivarExpr operator+(BivarExpr a, const BivarExpr& b) { return a += b; }
  friend BivarExpr operator-(BivarExpr a, const BivarExpr& b) { return a -= b; }
  friend BivarExpr operator*(BivarExpr a, const F& s) { return a *= s; }
  friend BivarExpr operator*(const F& s, BivarExpr a) { return a *= s; }

  friend BivarExpr operator*(const BivarExpr& a, const BivarExpr& b) {
    BivarExpr r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
      }
    }
    return r;
  }

  BivarExpr pow(std::size_t k) const {
    BivarExpr result = constant(F(1));
    BivarExpr base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BivarExpr&, const BivarExpr&) = default;

 private:
  Terms terms_;
};

/// Substitutes X -> f, Y -> g and expands exactly.
template <ExactField F>
Poly<F> eval_bivariate(const BivarExpr<F>& expr, const Poly<F>& f, const Poly<F>& g) {
  if (expr.is_zero()) return Poly<F>();
  // Group by the power of Y, then Horner in g over groups and in f within each.
  std::map<std::size_t, std::map<std::size_t, F>, std::greater<>> by_y;
  for (const auto& [e, c] : expr.terms()) by_y[e.second][e.first] = c;

  auto horner_f = [&](const std::map<std::size_t, F>& row) {
    Poly<F> acc;
    std::size_t current = row.rbegin()->first;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      while (current > it->first) {
        acc = acc * f;
        --current;
      }
      acc += Poly<F>::constant(it->second);
    }
    return acc * f.pow(current);
  };

  Poly<F> result;
  std::size_t current = by_y.begin()->first;
  for (const auto& [j, row] : by_y) {
    while (current > j) {
      result = result * g;
      --current;
    }
    result += horner_f(row);
  }
  return result * g.pow(current);
}

}  // namespace amoh
