#include "amoh/line.hpp"

#include <algorithm>
#include <random>

#include "amoh/decompose.hpp"
#include "amoh/error.hpp"
#include "amoh/subalgebra.hpp"

namespace amoh {

const char* reason_name(const LineReason& r) noexcept {
  struct Visitor {
    const char* operator()(const reason::CriterionHolds&) const { return "CriterionHolds"; }
    const char* operator()(const reason::DerivativeNotMember&) const { return "DerivativeNotMember"; }
    const char* operator()(const reason::AlgebraTrivial&) const { return "AlgebraTrivial"; }
    const char* operator()(const reason::DivisibilityFailure&) const { return "DivisibilityFailure"; }
    const char* operator()(const reason::UnfaithfulParameter&) const { return "UnfaithfulParameter"; }
  };
  return std::visit(Visitor{}, r);
}

LineReason criterion_reason(const QPoly& f, const QPoly& g) {
  if (f.is_constant() && g.is_constant()) return reason::AlgebraTrivial{};
  const auto basis = sagbi_basis(f, g);
  if (!is_member(f.derivative(), basis, Certify::No).member) return reason::DerivativeNotMember{'f'};
  if (!is_member(g.derivative(), basis, Certify::No).member) return reason::DerivativeNotMember{'g'};
  return reason::CriterionHolds{};
}

bool criterion_check(const QPoly& f, const QPoly& g) {
  return std::holds_alternative<reason::CriterionHolds>(criterion_reason(f, g));
}

namespace {

LineVerdict line_from_linear(const QPoly& linear, const QExpr& expr) {
  // linear = a z + b, so z = (expr - b) / a.
  const Rational a = linear.leading();
  QExpr inverse = expr;
  inverse.add_term(-linear.constant_term(), 0, 0);
  inverse *= Rational(1) / a;
  return LineVerdict{true, std::move(inverse), reason::CriterionHolds{}};
}

}  // namespace

LineVerdict reduce_to_line(const QPoly& f, const QPoly& g) {
  QPoly cur_f = f;
  QPoly cur_g = g;
  QExpr expr_f = QExpr::X();
  QExpr expr_g = QExpr::Y();
  while (true) {
    if (cur_f.degree() == 1) return line_from_linear(cur_f, expr_f);
    if (cur_g.degree() == 1) return line_from_linear(cur_g, expr_g);
    if (cur_f.is_constant() && cur_g.is_constant()) return LineVerdict{false, std::nullopt, reason::AlgebraTrivial{}};
    // One constant generator leaves k[G] with deg G >= 2.
    if (cur_f.is_constant()) return LineVerdict{false, std::nullopt, reason::UnfaithfulParameter{cur_g.deg()}};
    if (cur_g.is_constant()) return LineVerdict{false, std::nullopt, reason::UnfaithfulParameter{cur_f.deg()}};

    const std::size_t m = cur_f.deg();
    const std::size_t n = cur_g.deg();
    const bool reduce_f = m >= n;
    QPoly& big = reduce_f ? cur_f : cur_g;
    QExpr& big_expr = reduce_f ? expr_f : expr_g;
    const QPoly& small = reduce_f ? cur_g : cur_f;
    const QExpr& small_expr = reduce_f ? expr_g : expr_f;
    const std::size_t big_deg = std::max(m, n);
    const std::size_t small_deg = std::min(m, n);
    if (big_deg % small_deg != 0) {
      return LineVerdict{false, std::nullopt, reason::DivisibilityFailure{m, n}};
    }
    const std::size_t l = big_deg / small_deg;
    Rational b_pow(1);
    for (std::size_t i = 0; i < l; ++i) b_pow *= small.leading();
    const Rational scale = big.leading() / b_pow;
    big -= small.pow(l) * scale;
    big_expr -= small_expr.pow(l) * scale;
  }
}

LineVerdict is_line(const QPoly& f, const QPoly& g) {
  if (f.is_constant() && g.is_constant()) return LineVerdict{false, std::nullopt, reason::AlgebraTrivial{}};
  const bool criterion = criterion_check(f, g);
  const Decomposition dec = common_parameter(f, g);
  LineVerdict verdict;
  if (dec.h.deg() > 1) {
    verdict = LineVerdict{false, std::nullopt, reason::UnfaithfulParameter{dec.h.deg()}};
  } else {
    verdict = reduce_to_line(f, g);
  }
  if (verdict.is_line != criterion) {
    fail(ErrorKind::InternalInconsistency, "derivative criterion and elimination disagree");
  }
  if (verdict.is_line && eval_bivariate(*verdict.inverse, f, g) != QPoly::identity()) {
    fail(ErrorKind::InternalInconsistency, "inverse does not evaluate to z");
  }
  return verdict;
}

std::pair<QPoly, QPoly> random_line_curve(std::uint64_t seed, std::size_t steps, long max_coeff,
                                          std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  max_coeff = std::max(max_coeff, 1L);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  auto nonzero = [&] {
    long c = 0;
    while (c == 0) c = coeff(rng);
    return Rational(c);
  };
  std::uniform_int_distribution<int> move(0, 5);
  std::uniform_int_distribution<int> side(0, 1);

  std::pair<QPoly, QPoly> curve{QPoly::identity(), QPoly()};
  for (std::size_t s = 0; s < steps; ++s) {
    const int kind = move(rng);
    if (kind == 0) {
      std::swap(curve.first, curve.second);
    } else if (kind == 1) {
      QPoly& target = side(rng) == 0 ? curve.first : curve.second;
      target *= nonzero();
    } else {
      const bool onto_first = side(rng) == 0;
      QPoly& target = onto_first ? curve.first : curve.second;
      const QPoly& other = onto_first ? curve.second : curve.first;
      const std::size_t other_deg = other.is_constant() ? 1 : other.deg();
      const std::size_t top = std::max<std::size_t>(1, std::min<std::size_t>(3, max_degree / other_deg));
      const std::size_t p_deg = std::uniform_int_distribution<std::size_t>(1, top)(rng);
      std::vector<Rational> p(p_deg + 1);
      for (std::size_t k = 0; k < p_deg; ++k) p[k] = Rational(coeff(rng));
      p[p_deg] = nonzero();
      target += QPoly(std::move(p)).compose(other);
    }
  }
  return curve;
}

}  // namespace amoh

namespace amoh {

const char* to_string(CorpusKind kind) noexcept {
  switch (kind) {
    case CorpusKind::Line: return "line";
    case CorpusKind::Unfaithful: return "unfaithful";
    case CorpusKind::ExamplePattern: return "example-pattern";
    case CorpusKind::Mutated: return "mutated";
  }
  return "unknown";
}

CorpusCurve corpus_curve(std::uint64_t seed, CorpusKind kind, std::size_t steps, long max_coeff) {
  switch (kind) {
    case CorpusKind::Line: {
      auto [f, g] = random_line_curve(seed, steps, max_coeff, 30);
      return {kind, std::move(f), std::move(g)};
    }
    case CorpusKind::Unfaithful: {
      auto [f, g] = random_line_curve(seed, steps, max_coeff, 10);
      const QPoly inner = QPoly::monomial(Rational(1), seed % 2 == 0 ? 2 : 3);
      return {kind, f.compose(inner), g.compose(inner)};
    }
    case CorpusKind::ExamplePattern: {
      std::mt19937_64 rng(seed);
      const std::size_t p = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
      std::size_t q = 0;
      while (q % p == 0) q = std::uniform_int_distribution<std::size_t>(2, k * p - 1)(rng);
      long c = 0;
      while (c == 0) c = std::uniform_int_distribution<long>(-max_coeff, max_coeff)(rng);
      return {kind, QPoly::monomial(Rational(1), p),
              QPoly::monomial(Rational(1), k * p) + QPoly::monomial(Rational(c), q)};
    }
    case CorpusKind::Mutated: {
      auto [f, g] = random_line_curve(seed, steps, max_coeff, 30);
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      long c = 0;
      while (c == 0) c = std::uniform_int_distribution<long>(-max_coeff, max_coeff)(rng);
      return {kind, std::move(f), g + QPoly::monomial(Rational(c), 2)};
    }
  }
  fail(ErrorKind::PreconditionViolated, "unknown corpus kind");
}

}  // namespace amoh
