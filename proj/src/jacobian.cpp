#include "amoh/jacobian.hpp"

#include <map>
#include <random>
#include <vector>

namespace amoh {

BiPoly to_bipoly(const BivarExpr<Rational>& expr) {
  std::map<std::size_t, std::vector<Rational>> rows;
  for (const auto& [e, c] : expr.terms()) {
    auto& row = rows[e.second];
    if (row.size() <= e.first) row.resize(e.first + 1, Rational(0));
    row[e.first] = c;
  }
  std::vector<RationalFunction> coeffs(rows.empty() ? 0 : rows.rbegin()->first + 1);
  for (auto& [j, row] : rows) coeffs[j] = RationalFunction(QPoly(std::move(row)));
  return BiPoly(std::move(coeffs));
}

std::optional<BivarExpr<Rational>> to_xy_expr(const BiPoly& p) {
  BivarExpr<Rational> out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const RationalFunction& c = p.coeffs()[j];
    if (!c.is_polynomial()) return std::nullopt;
    const QPoly num = c.numerator() / c.denominator().leading();
    for (std::size_t i = 0; i < num.coeffs().size(); ++i) out.add_term(num.coeffs()[i], i, j);
  }
  return out;
}

BiPoly partial_x(const BiPoly& p) {
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.derivative());
  return BiPoly(std::move(coeffs));
}

BiPoly partial_y(const BiPoly& p) { return p.derivative(); }

BiPoly jacobian_det(const BiPoly& f, const BiPoly& g) {
  return partial_x(f) * partial_y(g) - partial_y(f) * partial_x(g);
}

namespace {

MembershipResult<RationalFunction> member_over_qx(const BiPoly& u, const BiPoly& f, const BiPoly& g) {
  if (!f.is_constant() || !g.is_constant()) return is_member(u, f, g);
  // Q(x)[f, g] is Q(x) itself.
  MembershipResult<RationalFunction> out;
  if (u.is_constant()) {
    out.member = true;
    out.certificate = RfExpr::constant(u.constant_term());
  } else {
    out.obstruction_degree = u.deg();
  }
  return out;
}

}  // namespace

Prop21Report prop21_probe(const BiPoly& f, const BiPoly& g) {
  Prop21Report report;
  report.jacobian = jacobian_det(f, g);
  if (report.jacobian.is_constant() && !report.jacobian.is_zero()) {
    report.jacobian_constant = report.jacobian.constant_term().as_constant().has_value();
  }
  report.fy_member = member_over_qx(partial_y(f), f, g);
  report.gy_member = member_over_qx(partial_y(g), f, g);
  return report;
}

TameMap random_tame_automorphism(std::uint64_t seed, std::size_t steps, std::size_t max_deg) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> move(0, 4);
  std::uniform_int_distribution<int> side(0, 1);
  auto nonzero = [&] {
    long c = 0;
    while (c == 0) c = coeff(rng);
    return Rational(c);
  };

  TameMap map{BiPoly::constant(RationalFunction::x()), BiPoly::identity(), Rational(1)};
  for (std::size_t s = 0; s < steps; ++s) {
    const int kind = move(rng);
    if (kind == 0) {
      std::swap(map.f, map.g);
      map.jacobian = -map.jacobian;
    } else if (kind == 1) {
      const Rational c = nonzero();
      (side(rng) == 0 ? map.f : map.g) *= RationalFunction(c);
      map.jacobian *= c;
    } else {
      const bool onto_g = side(rng) == 0;
      BiPoly& target = onto_g ? map.g : map.f;
      const BiPoly& source = onto_g ? map.f : map.g;
      const std::size_t p_deg = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      std::vector<RationalFunction> p(p_deg + 1);
      for (std::size_t k = 0; k < p_deg; ++k) p[k] = RationalFunction(Rational(coeff(rng)));
      p[p_deg] = RationalFunction(nonzero());
      BiPoly updated = target + BiPoly(std::move(p)).compose(source);
      if (!updated.is_zero() && updated.deg() > max_deg) continue;
      target = std::move(updated);
    }
  }
  return map;
}

}  // namespace amoh
