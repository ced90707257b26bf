#include <gtest/gtest.h>

#include <map>

#include "amoh/error.hpp"
#include "amoh/theorems.hpp"
#include "test_support.hpp"

using namespace amoh;
using namespace amoh::testing;

namespace {

// Degrees of nonzero elements in span{f^i g^j : i deg f + j deg g <= bound},
// by leading-degree echelon reduction. Independent of the SAGBI machinery.
std::set<std::size_t> span_degrees(const QPoly& f, const QPoly& g, std::size_t bound) {
  std::map<std::size_t, QPoly> pivots;
  const std::size_t m = f.deg(), n = g.deg();
  for (std::size_t i = 0; i * m <= bound; ++i) {
    for (std::size_t j = 0; i * m + j * n <= bound; ++j) {
      QPoly p = f.pow(i) * g.pow(j);
      while (!p.is_zero()) {
        auto it = pivots.find(p.deg());
        if (it == pivots.end()) {
          pivots.emplace(p.deg(), p);
          break;
        }
        p -= it->second * (p.leading() / it->second.leading());
      }
    }
  }
  std::set<std::size_t> out;
  for (const auto& [d, _] : pivots) out.insert(d);
  return out;
}

QPoly shifted_power(const Rational& c, std::size_t n, const Rational& b) {
  return QPoly{c, Q(1)}.pow(n) - QPoly::constant(b);
}

}  // namespace

TEST(StrongAm, Examples) {
  const QPoly f = P("z^3"), g = P("z^6 + z^2");
  const auto r = check_strong_am(f, g, 1);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.u_degree, 2u);
  EXPECT_EQ(r.v_degree, 5u);
  EXPECT_EQ(eval_bivariate(*r.u_witness, f, g).deg(), 2u);
  EXPECT_EQ(eval_bivariate(*r.v_witness, f, g).deg(), 5u);
  EXPECT_TRUE(r.divisibility_holds);

  const auto r2 = check_strong_am(P("z^2"), P("z^3"), 1);
  EXPECT_FALSE(r2.applicable);
  EXPECT_FALSE(r2.u_witness.has_value());
  EXPECT_FALSE(r2.divisibility_holds);

  const QPoly f3 = P("z"), g3 = P("z^5");
  const auto r3 = check_strong_am(f3, g3, 1);
  EXPECT_TRUE(r3.applicable);
  EXPECT_EQ(r3.u_degree, 0u);
  EXPECT_EQ(r3.v_degree, 4u);
  EXPECT_EQ(eval_bivariate(*r3.u_witness, f3, g3).deg(), 0u);
  EXPECT_EQ(eval_bivariate(*r3.v_witness, f3, g3), P("z^4"));
  EXPECT_TRUE(r3.divisibility_holds);
}

TEST(StrongAm, Preconditions) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  EXPECT_EQ(kind([] { check_strong_am(P("z^3"), P("z^6"), 0); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind([] { check_strong_am(P("z^3"), P("z^6"), 4); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind([] { check_strong_am(QPoly::constant(Q(1)), P("z^6"), 1); }), ErrorKind::PreconditionViolated);
}

TEST(StrongAm, UnfaithfulCurveUsesCofactors) {
  // (z^4, z^8 + z^2) = (w^2, w^4 + w) o z^2, and w = g - f^2 realizes degree 2.
  const QPoly f = P("z^4"), g = P("z^8 + z^2");
  const auto r = check_strong_am(f, g, 2);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(eval_bivariate(*r.u_witness, f, g).deg(), 2u);
  EXPECT_EQ(eval_bivariate(*r.v_witness, f, g).deg(), 6u);
  EXPECT_TRUE(r.divisibility_holds);
  // (z^4 + 2z^2, z^6) = (w^2 + 2w, w^3) o z^2 has no element of degree 2.
  EXPECT_FALSE(check_strong_am(P("z^4 + 2*z^2"), P("z^6"), 2).applicable);
  // Odd degrees never occur in k[z^2]-based algebras.
  EXPECT_FALSE(check_strong_am(f, g, 1).applicable);
}

TEST(StrongAmProperties, ApplicabilityMatchesSpanOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const CorpusKind kind : {CorpusKind::Line, CorpusKind::Unfaithful, CorpusKind::ExamplePattern,
                                  CorpusKind::Mutated}) {
      const auto c = corpus_curve(seed, kind, 4, 2);
      if (c.f.is_constant() || c.g.is_constant()) continue;
      const std::size_t m = c.f.deg(), n = c.g.deg();
      if (m * n > 60) continue;
      const auto degs = span_degrees(c.f, c.g, m * n + std::max(m, n));
      for (std::size_t a = 1; a <= std::min(m, n); ++a) {
        const auto r = check_strong_am(c.f, c.g, a);
        const bool oracle = degs.contains(m - a) && degs.contains(n - a);
        EXPECT_EQ(r.applicable, oracle) << render(c.f) << " | " << render(c.g) << " a=" << a;
        if (r.applicable) {
          EXPECT_TRUE(r.divisibility_holds);
          EXPECT_TRUE(m % n == 0 || n % m == 0);
          EXPECT_EQ(eval_bivariate(*r.u_witness, c.f, c.g).deg(), m - a);
          EXPECT_EQ(eval_bivariate(*r.v_witness, c.f, c.g).deg(), n - a);
        }
      }
    }
  }
}

TEST(StrongAm, SweepMatchesSingleChecks) {
  const QPoly f = P("z^4"), g = P("z^8 + z^2 - 3");
  const auto sweep = check_strong_am_sweep(f, g);
  ASSERT_EQ(sweep.size(), 4u);
  for (std::size_t a = 1; a <= 4; ++a) {
    const auto single = check_strong_am(f, g, a);
    EXPECT_EQ(sweep[a - 1].a, a);
    EXPECT_EQ(sweep[a - 1].applicable, single.applicable);
    EXPECT_EQ(sweep[a - 1].u_witness, single.u_witness);
    EXPECT_EQ(sweep[a - 1].v_witness, single.v_witness);
  }
  EXPECT_THROW(check_strong_am_sweep(P("z"), QPoly::constant(Q(2))), Error);
}

TEST(Prop22, Examples) {
  const QPoly f = P("z + 1"), g = shifted_power(Q(1), 3, Q(2));
  const auto r = check_prop22(f, g);
  EXPECT_TRUE(r.condition_221_holds);
  EXPECT_EQ(r.a, Q(-6));
  EXPECT_TRUE(r.condition_222_holds);
  EXPECT_EQ(r.b, Q(2));
  EXPECT_TRUE(r.is_line);
  EXPECT_TRUE(r.derived_derivatives_verified);
  EXPECT_EQ(r.canonical_c, Q(1));
  EXPECT_EQ(r.canonical_b, Q(2));
  // Oracle: the defining combination, computed directly.
  EXPECT_EQ(f.derivative() * g * Q(3) - f * g.derivative(), QPoly::constant(Q(-6)));

  const auto r2 = check_prop22(P("z^3"), P("z^6 + z^2"));
  EXPECT_FALSE(r2.condition_221_holds);
  EXPECT_FALSE(r2.a.has_value());
  EXPECT_FALSE(r2.derived_derivatives_verified);
  EXPECT_EQ(P("z^3").derivative() * P("z^6 + z^2") * Q(6) - P("z^3") * P("z^6 + z^2").derivative() * Q(3),
            P("12*z^4"));

  const auto r3 = check_prop22(P("z"), P("z"));
  EXPECT_FALSE(r3.condition_221_holds);
  EXPECT_TRUE(r3.condition_222_holds);
  EXPECT_EQ(r3.b, Q(0));

  EXPECT_THROW(check_prop22(P("2*z + 1"), P("z^2")), Error);
  try {
    check_prop22(P("z"), P("3*z^2"));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonic);
  }
}

TEST(Prop22, SwappedOrientation) {
  const auto r = check_prop22(shifted_power(Q(-2), 4, Q(1)), P("z - 2"));
  EXPECT_TRUE(r.condition_221_holds);
  EXPECT_TRUE(r.condition_222_holds);
  EXPECT_TRUE(r.is_line);
  EXPECT_TRUE(r.derived_derivatives_verified);
  EXPECT_FALSE(r.canonical_c.has_value());
}

TEST(Prop22Properties, GridSoundnessAndNecessity) {
  int cases = 0;
  for (long c = -3; c <= 3; ++c) {
    for (long b : {-3L, -2L, -1L, 1L, 2L, 3L}) {
      for (std::size_t n = 2; n <= 7; ++n) {
        const QPoly f{Q(c), Q(1)};
        const QPoly g = shifted_power(Q(c), n, Q(b));
        const auto r = check_prop22(f, g);
        ASSERT_TRUE(r.condition_221_holds && r.condition_222_holds);
        EXPECT_TRUE(r.is_line);
        EXPECT_TRUE(r.derived_derivatives_verified);
        EXPECT_EQ(r.canonical_c, Q(c));
        EXPECT_EQ(r.canonical_b, Q(b));

        const auto p = check_prop22(f, g + P("z"));
        EXPECT_FALSE(p.condition_221_holds && p.condition_222_holds);
        ++cases;
      }
    }
  }
  EXPECT_EQ(cases, 7 * 6 * 6);
}
