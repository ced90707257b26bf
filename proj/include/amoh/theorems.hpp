#pragma once

#include <optional>
#include <vector>

#include "amoh/line.hpp"

namespace amoh {

/// Outcome of testing the degree-divisibility theorem for one shift a: if
/// k[f, g] has elements of degrees deg f - a and deg g - a, one of deg f,
/// deg g divides the other.
struct StrongAmReport {
  bool applicable = false;
  std::size_t a = 0;
  std::size_t u_degree = 0;
  std::size_t v_degree = 0;
  std::optional<QExpr> u_witness;
  std::optional<QExpr> v_witness;
  bool divisibility_holds = false;
};

/// Throws PreconditionViolated unless f, g are nonconstant and
/// 1 <= a <= min(deg f, deg g); throws InternalInconsistency if the theorem
/// is contradicted.
StrongAmReport check_strong_am(const QPoly& f, const QPoly& g, std::size_t a);

/// check_strong_am for every a in 1..min(deg f, deg g), sharing the basis.
std::vector<StrongAmReport> check_strong_am_sweep(const QPoly& f, const QPoly& g);

struct Prop22Report {
  bool condition_221_holds = false;
  std::optional<Rational> a;  // n f' g - m f g' when it is a constant
  bool condition_222_holds = false;
  std::optional<Rational> b;  // f^{n/d} - g^{m/d} when it is a constant
  bool is_line = false;
  std::optional<Rational> canonical_c;
  std::optional<Rational> canonical_b;
  bool derived_derivatives_verified = false;
};

/// Evaluates n f' g - m f g' in k^* and f^{n/d} - g^{m/d} in k for monic f,
/// g; when both hold, replays the derivative identities that follow from
/// them and recovers f = z + c, g = (z + c)^n - b (for deg f <= deg g).
/// Throws NotMonic.
Prop22Report check_prop22(const QPoly& f, const QPoly& g);

}  // namespace amoh
