#include <gtest/gtest.h>

#include "amoh/decompose.hpp"
#include "amoh/error.hpp"
#include "test_support.hpp"

using namespace amoh;
using namespace amoh::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(RightFactor, Examples) {
  EXPECT_EQ(right_factor(P("z^4 + 2*z^2"), 2), P("z^2"));
  EXPECT_EQ(right_factor(P("3*z^5 - z + 7"), 1), P("z"));
  EXPECT_FALSE(right_factor(P("z^6 + z^2"), 3).has_value());
  // z^6 + z^2 = (z^2)^3 + z^2 does have a degree-2 factor.
  EXPECT_EQ(right_factor(P("z^6 + z^2"), 2), P("z^2"));
  // Shifted inner factor: (z^2 + z)^3 - 2(z^2 + z).
  const QPoly h = P("z^2 + z");
  EXPECT_EQ(right_factor(P("z^3 - 2*z").compose(h), 2), h);
  EXPECT_EQ(right_factor(P("z^6"), 6), P("z^6"));
}

TEST(RightFactor, Errors) {
  EXPECT_EQ(kind_of([] { right_factor(P("z^5"), 2); }), ErrorKind::BadDegree);
  EXPECT_EQ(kind_of([] { right_factor(P("z^4"), 0); }), ErrorKind::BadDegree);
  EXPECT_EQ(kind_of([] { right_factor(QPoly::constant(Q(2)), 1); }), ErrorKind::BadDegree);
}

TEST(LeftCofactor, Examples) {
  EXPECT_EQ(left_cofactor(P("z^6"), P("z^2")), P("z^3"));
  EXPECT_EQ(left_cofactor(P("z^4 + 2*z^2"), P("z^2")), P("z^2 + 2*z"));
  EXPECT_EQ(kind_of([] { left_cofactor(P("z^3 + z"), P("z^2")); }), ErrorKind::NotComposable);
  EXPECT_EQ(kind_of([] { left_cofactor(P("z^3"), QPoly::constant(Q(1))); }), ErrorKind::PreconditionViolated);
  // Non-normalized inner factor is accepted.
  EXPECT_EQ(left_cofactor(P("4*z^2 + 4*z + 5"), P("2*z + 1")), P("z^2 + 4"));
}

TEST(CommonParameter, Examples) {
  const auto d1 = common_parameter(P("z^4 + 2*z^2"), P("z^6"));
  EXPECT_EQ(d1.h, P("z^2"));
  EXPECT_EQ(d1.f_tilde, P("z^2 + 2*z"));
  EXPECT_EQ(d1.g_tilde, P("z^3"));

  EXPECT_EQ(common_parameter(P("z^3"), P("z^6 + z^2")).h, P("z"));
  EXPECT_EQ(common_parameter(P("z"), P("z^9 - 4")).h, P("z"));

  // One constant generator: the other one alone determines h.
  const auto d2 = common_parameter(P("z^4 + 1"), QPoly::constant(Q(3)));
  EXPECT_EQ(d2.h, P("z^4"));
  EXPECT_EQ(d2.f_tilde, P("z + 1"));
  EXPECT_EQ(d2.g_tilde, QPoly::constant(Q(3)));

  EXPECT_EQ(kind_of([] { common_parameter(QPoly::constant(Q(1)), QPoly()); }), ErrorKind::TrivialAlgebra);
}

TEST(IsFaithful, Examples) {
  EXPECT_TRUE(is_faithful(P("z^3"), P("z^6 + z^2")));
  EXPECT_FALSE(is_faithful(P("z^2"), P("z^4")));
  EXPECT_TRUE(is_faithful(P("z"), QPoly()));
  EXPECT_THROW(is_faithful(QPoly(), QPoly()), Error);
}

TEST(DecomposeProperties, RoundTrip) {
  Gen gen(77);
  for (int t = 0; t < 60; ++t) {
    const std::size_t e = gen.size(2, 3);
    QPoly h = gen.poly_of_degree(e, 4);
    h = h.monic() - QPoly::constant(h.monic().constant_term());
    const QPoly ft = gen.poly_of_degree(gen.size(1, 8 / e + 1), 4);
    const QPoly gt = gen.poly_of_degree(gen.size(1, 8 / e + 1), 4);
    const QPoly f = ft.compose(h), g = gt.compose(h);
    const auto d = common_parameter(f, g);
    EXPECT_GE(d.h.deg(), e);
    EXPECT_EQ(d.f_tilde.compose(d.h), f);
    EXPECT_EQ(d.g_tilde.compose(d.h), g);
    EXPECT_TRUE(d.h.is_monic());
    EXPECT_TRUE(d.h.constant_term().is_zero());
    EXPECT_EQ(d.f_tilde.deg() * d.h.deg(), f.deg());
    EXPECT_EQ(d.g_tilde.deg() * d.h.deg(), g.deg());
    // The extracted parameter is faithful.
    EXPECT_EQ(common_parameter(d.f_tilde, d.g_tilde).h.deg(), 1u);
    // h itself is an inner factor of degree e, and it is recovered exactly
    // (normalized inner factors of a given degree are unique).
    EXPECT_EQ(right_factor(f, e), h);
  }
}

TEST(DecomposeProperties, RightFactorIsOnlyReturnedWhenItComposes) {
  Gen gen(78);
  for (int t = 0; t < 80; ++t) {
    const QPoly f = gen.poly_of_degree(gen.size(2, 12), 2);
    for (std::size_t e = 1; e <= f.deg(); ++e) {
      if (f.deg() % e != 0) continue;
      const auto h = right_factor(f, e);
      if (!h) continue;
      EXPECT_EQ(h->deg(), e);
      EXPECT_TRUE(h->is_monic());
      EXPECT_TRUE(h->constant_term().is_zero());
      EXPECT_EQ(left_cofactor(f, *h).compose(*h), f);
    }
  }
}
