#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "amoh/bivar.hpp"
#include "amoh/rational_function.hpp"

namespace amoh {

using QExpr = BivarExpr<Rational>;

namespace reason {
struct CriterionHolds {
  friend bool operator==(const CriterionHolds&, const CriterionHolds&) = default;
};
struct DerivativeNotMember {
  char which = 'f';  // 'f' or 'g'
  friend bool operator==(const DerivativeNotMember&, const DerivativeNotMember&) = default;
};
struct AlgebraTrivial {
  friend bool operator==(const AlgebraTrivial&, const AlgebraTrivial&) = default;
};
struct DivisibilityFailure {
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const DivisibilityFailure&, const DivisibilityFailure&) = default;
};
struct UnfaithfulParameter {
  std::size_t deg_h = 0;
  friend bool operator==(const UnfaithfulParameter&, const UnfaithfulParameter&) = default;
};
}  // namespace reason

using LineReason = std::variant<reason::CriterionHolds, reason::DerivativeNotMember, reason::AlgebraTrivial,
                                reason::DivisibilityFailure, reason::UnfaithfulParameter>;

const char* reason_name(const LineReason& r) noexcept;

struct LineVerdict {
  bool is_line = false;
  std::optional<QExpr> inverse;  // P with P(f(z), g(z)) = z
  LineReason reason;
};

/// Derivative criterion: k[f, g] != k and f', g' both in k[f, g].
bool criterion_check(const QPoly& f, const QPoly& g);

/// Same test, reporting which part failed.
LineReason criterion_reason(const QPoly& f, const QPoly& g);

/// Repeatedly replaces the higher-degree generator F by F - a (b^{-1} G)^l
/// (a, b leading coefficients, l = deg F / deg G) until a generator is
/// linear or the degrees stop dividing each other.
LineVerdict reduce_to_line(const QPoly& f, const QPoly& g);

/// Faithful-parameter check, then the elimination, cross-checked against
/// the derivative criterion. Throws InternalInconsistency on disagreement.
LineVerdict is_line(const QPoly& f, const QPoly& g);

/// A curve with k[f, g] = k[z], built from (z, 0) by random swaps, scalings
/// and substitutions F -> F + p(G). Degrees never exceed max_degree.
std::pair<QPoly, QPoly> random_line_curve(std::uint64_t seed, std::size_t steps, long max_coeff,
                                          std::size_t max_degree = 30);

}  // namespace amoh

namespace amoh {

enum class CorpusKind { Line, Unfaithful, ExamplePattern, Mutated };

const char* to_string(CorpusKind kind) noexcept;

struct CorpusCurve {
  CorpusKind kind;
  QPoly f;
  QPoly g;
};

/// Deterministic test curve of the given kind:
///  - Line: random_line_curve(seed, steps, max_coeff), degrees <= 30;
///  - Unfaithful: a small line composed with z^2 or z^3 (never a line);
///  - ExamplePattern: (z^p, z^{kp} + c z^q) with q >= 2 and p not dividing q
///    (never a line);
///  - Mutated: a line with c z^2 added to g (status left to the deciders).
CorpusCurve corpus_curve(std::uint64_t seed, CorpusKind kind, std::size_t steps = 6, long max_coeff = 3);

}  // namespace amoh
