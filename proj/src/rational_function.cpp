#include "amoh/rational_function.hpp"

#include <stdexcept>

namespace amoh {

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(Rational(1));
    return;
  }
  if (!den.is_constant()) {
    const QPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
  }
  const Rational lc = den.leading();
  num_ = num / lc;
  den_ = den / lc;
}

std::optional<Rational> RationalFunction::as_constant() const {
  if (num_.is_constant() && den_.is_constant()) return num_.constant_term();
  return std::nullopt;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace amoh
