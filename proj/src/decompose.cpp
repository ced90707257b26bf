#include "amoh/decompose.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "amoh/error.hpp"

namespace amoh {

std::optional<QPoly> right_factor(const QPoly& f, std::size_t e) {
  if (f.is_constant() || e == 0 || f.deg() % e != 0) {
    fail(ErrorKind::BadDegree, "inner degree " + std::to_string(e) + " does not divide deg f");
  }
  const std::size_t n = f.deg();
  const std::size_t r = n / e;
  const Rational lc = f.leading();

  // h = z^e + c_{e-1} z^{e-1} + ... + c_1 z. The coefficient of z^{n-k} in
  // h^r is r * c_{e-k} plus terms in c_{e-1}, ..., c_{e-k+1} only.
  std::vector<Rational> h(e + 1, Rational(0));
  h[e] = Rational(1);
  for (std::size_t k = 1; k < e; ++k) {
    const QPoly power = QPoly(h).pow(r);
    const Rational target = f.coeff(n - k) / lc;
    h[e - k] = (target - power.coeff(n - k)) / Rational(static_cast<long>(r));
  }
  QPoly inner(std::move(h));
  try {
    left_cofactor(f, inner);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotComposable) return std::nullopt;
    throw;
  }
  return inner;
}

QPoly left_cofactor(const QPoly& f, const QPoly& h) {
  if (h.is_constant()) fail(ErrorKind::PreconditionViolated, "inner polynomial must be nonconstant");
  std::vector<Rational> digits;
  QPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod(h);
    if (!r.is_constant()) fail(ErrorKind::NotComposable, "polynomial does not factor through the inner map");
    digits.push_back(r.constant_term());
    rest = std::move(q);
  }
  QPoly outer(std::move(digits));
  if (outer.compose(h) != f) {
    fail(ErrorKind::InternalInconsistency, "left cofactor failed recomposition");
  }
  return outer;
}

Decomposition common_parameter(const QPoly& f, const QPoly& g) {
  if (f.is_constant() && g.is_constant()) {
    fail(ErrorKind::TrivialAlgebra, "both generators are constants");
  }
  const QPoly& primary = f.is_constant() ? g : f;
  const std::size_t df = f.is_constant() ? 0 : f.deg();
  const std::size_t dg = g.is_constant() ? 0 : g.deg();
  const std::size_t common = std::gcd(df, dg);
  for (std::size_t e = common; e >= 1; --e) {
    if (common % e != 0) continue;
    auto h = right_factor(primary, e);
    if (!h) continue;
    try {
      return Decomposition{*h, left_cofactor(f, *h), left_cofactor(g, *h)};
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotComposable) throw;
    }
  }
  fail(ErrorKind::InternalInconsistency, "identity parameter rejected");
}

bool is_faithful(const QPoly& f, const QPoly& g) { return common_parameter(f, g).h.deg() == 1; }

}  // namespace amoh
