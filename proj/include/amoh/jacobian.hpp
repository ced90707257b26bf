#pragma once

#include <cstdint>
#include <optional>

#include "amoh/bivar.hpp"
#include "amoh/rational_function.hpp"
#include "amoh/subalgebra.hpp"

namespace amoh {

/// A polynomial in y with coefficients in Q(x).
using BiPoly = Poly<RationalFunction>;
using RfExpr = BivarExpr<RationalFunction>;

/// From a formal polynomial in (x, y) given as X -> x, Y -> y.
BiPoly to_bipoly(const BivarExpr<Rational>& expr);
/// Back to (x, y) form when every coefficient is a polynomial in x.
std::optional<BivarExpr<Rational>> to_xy_expr(const BiPoly& p);

BiPoly partial_x(const BiPoly& p);
BiPoly partial_y(const BiPoly& p);

/// f_x g_y - f_y g_x
BiPoly jacobian_det(const BiPoly& f, const BiPoly& g);

struct Prop21Report {
  BiPoly jacobian;
  bool jacobian_constant = false;  // jacobian lies in Q^*
  MembershipResult<RationalFunction> fy_member;
  MembershipResult<RationalFunction> gy_member;
};

/// Tests f_y, g_y for membership in Q(x)[f, g] inside Q(x)[y].
Prop21Report prop21_probe(const BiPoly& f, const BiPoly& g);

struct TameMap {
  BiPoly f;
  BiPoly g;
  Rational jacobian;  // product of the elementary determinants
};

/// Composes random swaps, scalings and elementary maps (u, v) -> (u, v + p(u))
/// onto the identity (x, y). Steps that would push a y-degree above max_deg
/// are rejected.
TameMap random_tame_automorphism(std::uint64_t seed, std::size_t steps, std::size_t max_deg);

}  // namespace amoh
