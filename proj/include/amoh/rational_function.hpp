#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "amoh/poly.hpp"
#include "amoh/rational.hpp"

namespace amoh {

using QPoly = Poly<Rational>;

/// Element of Q(x) kept in canonical form: coprime numerator and monic
/// denominator, so equality is coefficient-wise.
class RationalFunction {
 public:
  RationalFunction() : den_(QPoly::constant(Rational(1))) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c)                          // NOLINT(google-explicit-constructor)
      : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}
  explicit RationalFunction(QPoly num) : RationalFunction(std::move(num), QPoly::constant(Rational(1))) {}
  RationalFunction(QPoly num, QPoly den);

  /// The indeterminate x.
  static RationalFunction x() { return RationalFunction(QPoly::identity()); }

  const QPoly& numerator() const noexcept { return num_; }
  const QPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The rational value when this is a constant of Q.
  std::optional<Rational> as_constant() const;

  RationalFunction derivative() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RationalFunction& r) noexcept { return r.is_zero(); }

}  // namespace amoh
