#pragma once

/**
 * Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored low to high with no trailing zeros, so the zero
 * polynomial is the empty sequence and equality is structural. The engine
 * is instantiated over the rationals and over rational functions in x.
 */

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amoh/error.hpp"

namespace amoh {

template <class F>
concept ExactField = std::regular<F> && requires(F a, F b) {
  { F(0) } -> std::convertible_to<F>;
  { F(1) } -> std::convertible_to<F>;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Polynomial degree; the zero polynomial has degree minus infinity, which
/// compares below every finite degree.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t value) : value_(value) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial is minus infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) {
      return a.value_.has_value() <=> b.value_.has_value();
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Degree& a, std::size_t b) {
    return a.value_ && *a.value_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, std::size_t b) {
    return a <=> Degree(b);
  }

 private:
  std::optional<std::size_t> value_;
};

namespace detail {

template <class F>
bool scalar_is_zero(const F& c) {
  return is_zero(c);
}

}  // namespace detail

template <ExactField F>
class Poly {
 public:
  using Scalar = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  /// The parameter itself, z.
  static Poly identity() { return monomial(F(1), 1); }

  const std::vector<F>& coeffs() const noexcept { return coeffs_; }

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Degree of a nonzero polynomial; throws on zero.
  std::size_t deg() const { return degree().value(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }
  F constant_term() const { return coeff(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == F(1); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  Poly& operator*=(const F& c) {
    if (detail::scalar_is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }
  Poly& operator/=(const F& c) {
    for (auto& x : coeffs_) x = x / c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& c) { return a *= c; }
  friend Poly operator*(const F& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const F& c) { return a /= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::scalar_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(std::size_t k) const {
    Poly result = constant(F(1));
    Poly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// this ∘ inner
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner;
      acc += constant(*it);
    }
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<F> out(coeffs_.size() - 1, F(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      out[k - 1] = coeffs_[k] * F(static_cast<int>(k));
    }
    return Poly(std::move(out));
  }

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "polynomial division by zero");
    if (coeffs_.size() < divisor.coeffs_.size()) return {Poly(), *this};
    std::vector<F> rem = coeffs_;
    const std::size_t dq = divisor.coeffs_.size() - 1;
    std::vector<F> quot(rem.size() - dq, F(0));
    const F lead_inv = F(1) / divisor.coeffs_.back();
    for (std::size_t k = rem.size(); k-- > dq;) {
      if (detail::scalar_is_zero(rem[k])) continue;
      const F q = rem[k] * lead_inv;
      quot[k - dq] = q;
      for (std::size_t j = 0; j <= dq; ++j) {
        rem[k - dq + j] = rem[k - dq + j] - q * divisor.coeffs_[j];
      }
    }
    rem.resize(dq);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace amoh
