#include <gtest/gtest.h>

#include "amoh/decompose.hpp"
#include "amoh/error.hpp"
#include "amoh/line.hpp"
#include "amoh/subalgebra.hpp"
#include "test_support.hpp"

using namespace amoh;
using namespace amoh::testing;

namespace {

const QPoly kZ = P("z");

std::size_t deg0(const QPoly& p) { return p.is_zero() ? 0 : p.deg(); }

void expect_inverse(const LineVerdict& v, const QPoly& f, const QPoly& g) {
  ASSERT_TRUE(v.is_line);
  ASSERT_TRUE(v.inverse.has_value());
  EXPECT_EQ(eval_bivariate(*v.inverse, f, g), kZ) << render(f) << " | " << render(g);
}

}  // namespace

TEST(CriterionCheck, Examples) {
  EXPECT_TRUE(criterion_check(P("z^2"), P("z^4 + z")));
  EXPECT_FALSE(criterion_check(P("z^3"), P("z^6 + z^2")));
  EXPECT_EQ(criterion_reason(P("z^3"), P("z^6 + z^2")), LineReason{reason::DerivativeNotMember{'g'}});
  EXPECT_FALSE(criterion_check(QPoly::constant(Q(3)), QPoly::constant(Q(5))));
  EXPECT_EQ(criterion_reason(QPoly::constant(Q(3)), QPoly::constant(Q(5))), LineReason{reason::AlgebraTrivial{}});
  EXPECT_EQ(criterion_reason(P("z^2"), P("z^4 + z")), LineReason{reason::CriterionHolds{}});
  // f' = 2z is not in k[z^2, z^4].
  EXPECT_EQ(criterion_reason(P("z^2"), P("z^4")), LineReason{reason::DerivativeNotMember{'f'}});
}

TEST(ReduceToLine, Examples) {
  const auto v1 = reduce_to_line(P("z^2"), P("z^4 + z"));
  expect_inverse(v1, P("z^2"), P("z^4 + z"));
  EXPECT_EQ(*v1.inverse, E("y - x^2"));

  const auto v2 = reduce_to_line(P("z^3"), P("z^6 + z^2"));
  EXPECT_FALSE(v2.is_line);
  EXPECT_FALSE(v2.inverse.has_value());
  EXPECT_EQ(v2.reason, LineReason{(reason::DivisibilityFailure{3, 2})});

  const auto v3 = reduce_to_line(kZ, P("z^7 - 3*z"));
  expect_inverse(v3, kZ, P("z^7 - 3*z"));
  EXPECT_EQ(*v3.inverse, E("x"));

  EXPECT_EQ(reduce_to_line(QPoly::constant(Q(1)), QPoly()).reason, LineReason{reason::AlgebraTrivial{}});
  EXPECT_FALSE(reduce_to_line(P("z^2"), QPoly::constant(Q(4))).is_line);
}

TEST(ReduceToLine, EqualDegreesAndScaling) {
  // f reduced against g on ties: f - (1/2 * ... ) keeps exactness with
  // non-monic leading coefficients.
  const QPoly f = P("3*z^2 + z"), g = P("-2*z^2 + 5");
  const auto v = reduce_to_line(f, g);
  expect_inverse(v, f, g);
  const QPoly f2 = P("1/2*z - 7"), g2 = P("z^3");
  expect_inverse(reduce_to_line(f2, g2), f2, g2);
}

TEST(IsLine, Examples) {
  EXPECT_FALSE(is_line(P("z^3"), P("z^6 + z^2")).is_line);
  const auto v = is_line(P("z^2"), P("z^4 + z"));
  expect_inverse(v, P("z^2"), P("z^4 + z"));
  EXPECT_EQ(*v.inverse, E("y - x^2"));
  EXPECT_EQ(v.reason, LineReason{reason::CriterionHolds{}});
  const auto u = is_line(P("z^4 + 2*z^2"), P("z^6"));
  EXPECT_FALSE(u.is_line);
  EXPECT_EQ(u.reason, LineReason{reason::UnfaithfulParameter{2}});
  EXPECT_EQ(is_line(QPoly::constant(Q(2)), QPoly::constant(Q(2))).reason, LineReason{reason::AlgebraTrivial{}});
  EXPECT_EQ(is_line(P("z^3 + z"), QPoly::constant(Q(2))).reason, LineReason{reason::UnfaithfulParameter{3}});
  EXPECT_STREQ(reason_name(LineReason{reason::DivisibilityFailure{3, 2}}), "DivisibilityFailure");
}

TEST(RandomLineCurve, Examples) {
  EXPECT_EQ(random_line_curve(5, 8, 3), random_line_curve(5, 8, 3));
  const auto [f0, g0] = random_line_curve(5, 0, 3);
  EXPECT_EQ(f0, kZ);
  EXPECT_TRUE(g0.is_zero());
}

TEST(LineProperties, GeneratorSoundnessAndInverseCorrectness) {
  std::size_t max_deg = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto [f, g] = random_line_curve(seed, 8, 3);
    ASSERT_LE(std::max(deg0(f), deg0(g)), 30u);
    max_deg = std::max({max_deg, deg0(f), deg0(g)});
    const auto v = is_line(f, g);
    expect_inverse(v, f, g);
  }
  EXPECT_GE(max_deg, 9u);
}

TEST(LineProperties, DeciderAgreementAgainstBruteForce) {
  // Independent oracle: z is in k[f, g] iff a dense linear solve over the
  // monomials of weighted degree <= deg f * deg g + 1 succeeds.
  int lines = 0, non_lines = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const CorpusKind kind : {CorpusKind::Line, CorpusKind::Mutated, CorpusKind::ExamplePattern}) {
      const auto c = corpus_curve(seed, kind, 4, 2);
      const std::size_t df = deg0(c.f), dg = deg0(c.g);
      if (df * dg > 40 || df == 0 || dg == 0) continue;
      const bool crit = criterion_check(c.f, c.g);
      const auto v = reduce_to_line(c.f, c.g);
      EXPECT_EQ(crit, v.is_line);
      const bool oracle = brute_force_member(kZ, c.f, c.g, df * dg + 1).has_value();
      EXPECT_EQ(v.is_line, oracle) << to_string(kind) << ": " << render(c.f) << " | " << render(c.g);
      (oracle ? lines : non_lines)++;
    }
  }
  EXPECT_GT(lines, 10);
  EXPECT_GT(non_lines, 10);
}

TEST(LineProperties, CompositionBreaksLines) {
  Gen gen(90);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto [f, g] = random_line_curve(seed, 5, 3, 8);
    QPoly q = gen.poly_of_degree(gen.size(2, 3), 3);
    const auto v = is_line(f.compose(q), g.compose(q));
    EXPECT_FALSE(v.is_line);
    ASSERT_TRUE(std::holds_alternative<reason::UnfaithfulParameter>(v.reason));
    EXPECT_EQ(std::get<reason::UnfaithfulParameter>(v.reason).deg_h, q.deg());
  }
}

TEST(LineProperties, Symmetry) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (const CorpusKind kind : {CorpusKind::Line, CorpusKind::Mutated, CorpusKind::Unfaithful}) {
      const auto c = corpus_curve(seed, kind);
      const auto a = is_line(c.f, c.g);
      const auto b = is_line(c.g, c.f);
      ASSERT_EQ(a.is_line, b.is_line);
      if (a.is_line) {
        // Inverses are unique only modulo the relation ideal, so compare
        // them through evaluation.
        EXPECT_EQ(eval_bivariate(a.inverse->swap_xy(), c.g, c.f), kZ);
        EXPECT_EQ(eval_bivariate(b.inverse->swap_xy(), c.f, c.g), kZ);
      }
    }
  }
}

TEST(Corpus, KindsBehaveAsLabelled) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_TRUE(is_line(corpus_curve(seed, CorpusKind::Line).f, corpus_curve(seed, CorpusKind::Line).g).is_line);
    const auto u = corpus_curve(seed, CorpusKind::Unfaithful);
    EXPECT_FALSE(is_faithful(u.f, u.g));
    const auto e = corpus_curve(seed, CorpusKind::ExamplePattern);
    EXPECT_FALSE(is_line(e.f, e.g).is_line);
    EXPECT_EQ(corpus_curve(seed, CorpusKind::Mutated).f, corpus_curve(seed, CorpusKind::Mutated).f);
  }
  EXPECT_STREQ(to_string(CorpusKind::ExamplePattern), "example-pattern");
}
