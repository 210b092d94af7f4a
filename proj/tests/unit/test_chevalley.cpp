#include <gtest/gtest.h>

#include <random>

#include "liesub/chevalley.hpp"

using namespace liesub;

namespace {

std::shared_ptr<const LieAlgebra> alg(const std::string& t, Field f = FieldSpec::rationals()) {
  return build_algebra(RootSystem(parse_type(t).cartan_matrix()), f);
}

FieldElement q(const LieAlgebra& L, Rational v) { return FieldElement(L.field(), v); }

GVector random_vector(const LieAlgebra& L, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  GVector v = L.zero();
  for (auto& c : v) c = q(L, d(rng));
  return v;
}

// Principal sl2 of A2: h = 2h_1 + 2h_2, e = x_1 + x_2, f = 2y_1 + 2y_2.
CanonicalGenSet principal_a2(const LieAlgebra& L) {
  CanonicalGenSet g;
  g.cartan = {{2}};
  GVector h = L.zero();
  h[L.h_index(0)] = q(L, 2);
  h[L.h_index(1)] = q(L, 2);
  GVector e = add(L.basis_vector(L.x_index(0)), L.basis_vector(L.x_index(1)));
  GVector f = scaled(add(L.basis_vector(L.y_index(0)), L.basis_vector(L.y_index(1))), q(L, 2));
  g.h = {h};
  g.x = {e};
  g.y = {f};
  return g;
}

}  // namespace

TEST(BuildAlgebra, A1) {
  const auto L = alg("A1");
  ASSERT_EQ(L->dimension(), 3);
  const GVector x = L->basis_vector(L->x_index(0));
  const GVector y = L->basis_vector(L->y_index(0));
  const GVector h = L->basis_vector(L->h_index(0));
  EXPECT_EQ(L->bracket(h, x), scaled(x, q(*L, 2)));
  EXPECT_EQ(L->bracket(h, y), scaled(y, q(*L, -2)));
  EXPECT_EQ(L->bracket(x, y), h);
}

TEST(BuildAlgebra, Dimensions) {
  EXPECT_EQ(alg("A2")->dimension(), 8);
  EXPECT_EQ(alg("G2")->dimension(), 14);
  EXPECT_EQ(alg("D4")->dimension(), 28);
  EXPECT_EQ(alg("A1+B2")->dimension(), 13);
}

TEST(BuildAlgebra, JacobiOnAllBasisTriples) {
  for (const char* t : {"A2", "B2", "G2", "B3", "C3", "A1+A2"}) {
    const auto L = alg(t);
    const int n = L->dimension();
    for (int a = 0; a < n; ++a) {
      const GVector va = L->basis_vector(a);
      for (int b = a + 1; b < n; ++b) {
        const GVector vb = L->basis_vector(b);
        const GVector ab = L->bracket(va, vb);
        for (int c = b + 1; c < n; ++c) {
          const GVector vc = L->basis_vector(c);
          GVector s = L->bracket(ab, vc);
          s = add(s, L->bracket(L->bracket(vb, vc), va));
          s = add(s, L->bracket(L->bracket(vc, va), vb));
          ASSERT_TRUE(is_zero_vector(s)) << t << " " << a << " " << b << " " << c;
        }
      }
    }
  }
}

TEST(BuildAlgebra, JacobiOnRandomTriples) {
  std::mt19937 rng(1);
  for (const char* t : {"G2", "F4", "D5"}) {
    const auto L = alg(t);
    std::uniform_int_distribution<int> pick(0, L->dimension() - 1);
    const int trials = std::string(t) == "G2" ? 1000 : 300;
    for (int k = 0; k < trials; ++k) {
      const GVector a = L->basis_vector(pick(rng));
      const GVector b = L->basis_vector(pick(rng));
      const GVector c = L->basis_vector(pick(rng));
      GVector s = L->bracket(L->bracket(a, b), c);
      s = add(s, L->bracket(L->bracket(b, c), a));
      s = add(s, L->bracket(L->bracket(c, a), b));
      ASSERT_TRUE(is_zero_vector(s)) << t;
    }
  }
}

TEST(BuildAlgebra, ChevalleyProperties) {
  // N(a,b) = +-(p+1) where b - p a is the bottom of the a-string through b,
  // and [h_i, x_b] = b(h_i) x_b.
  for (const char* t : {"B3", "G2", "F4", "C4"}) {
    const auto L = alg(t);
    const auto& rs = L->root_system();
    const int nroots = 2 * rs.num_positive();
    for (int a = 0; a < nroots; ++a) {
      for (int b = 0; b < nroots; ++b) {
        RootVec s = rs.root(a);
        const RootVec rb = rs.root(b);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rb[i];
        const bool root_sum = rs.root_index(s).has_value();
        const auto n = L->structure_constant(a, b);
        if (!root_sum) {
          EXPECT_EQ(n, 0);
          continue;
        }
        int p = 0;
        RootVec down = rb;
        const RootVec ra = rs.root(a);
        for (;;) {
          for (std::size_t i = 0; i < down.size(); ++i) down[i] -= ra[i];
          if (!rs.root_index(down)) break;
          ++p;
        }
        EXPECT_EQ(std::abs(n), p + 1) << t;
        const int na = a < rs.num_positive() ? a + rs.num_positive() : a - rs.num_positive();
        const int nb = b < rs.num_positive() ? b + rs.num_positive() : b - rs.num_positive();
        EXPECT_EQ(L->structure_constant(na, nb), -n);
      }
    }
    for (int i = 0; i < rs.rank(); ++i) {
      for (int b = 0; b < nroots; ++b) {
        const GVector got = L->bracket(L->basis_vector(L->h_index(i)), L->basis_vector(b));
        EXPECT_EQ(got, scaled(L->basis_vector(b), q(*L, rs.pairing_with_coroot(rs.root(b), i))));
      }
    }
  }
}

TEST(KillingForm, A1Values) {
  const auto L = alg("A1");
  const GVector h = L->basis_vector(L->h_index(0));
  EXPECT_EQ(killing_form(*L, h, h), q(*L, 8));
  EXPECT_EQ(killing_form(*L, L->basis_vector(0), L->basis_vector(1)), q(*L, 4));
}

TEST(KillingForm, GradingSymmetryInvariance) {
  std::mt19937 rng(2);
  for (const char* t : {"B2", "G2", "A3"}) {
    const auto L = alg(t);
    for (int a = 0; a < 2 * L->num_positive(); ++a) {
      for (int i = 0; i < L->rank(); ++i) {
        EXPECT_TRUE(killing_form(*L, L->basis_vector(a), L->basis_vector(L->h_index(i))).is_zero());
      }
    }
    for (int k = 0; k < 20; ++k) {
      const GVector x = random_vector(*L, rng);
      const GVector y = random_vector(*L, rng);
      const GVector z = random_vector(*L, rng);
      EXPECT_EQ(killing_form(*L, x, y), killing_form(*L, y, x));
      EXPECT_EQ(killing_form(*L, L->bracket(x, y), z), killing_form(*L, x, L->bracket(y, z)));
    }
  }
}

TEST(KillingForm, DirectSumIdealsAreOrthogonal) {
  const auto L = alg("A1+A1");
  // First ideal: x_0, y_0, h_0; second: x_1, y_1, h_1.
  const std::vector<int> first{L->x_index(0), L->y_index(0), L->h_index(0)};
  const std::vector<int> second{L->x_index(1), L->y_index(1), L->h_index(1)};
  for (int a : first) {
    for (int b : second) EXPECT_TRUE(killing_form(*L, L->basis_vector(a), L->basis_vector(b)).is_zero());
  }
}

TEST(KillingForm, ProportionalToNormalizedForm) {
  // On a simple algebra the Killing form is 2 h^vee times the normalized form.
  const auto L = alg("B3");
  const auto& rs = L->root_system();
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) {
      const GVector hi = L->basis_vector(L->h_index(i));
      const GVector hj = L->basis_vector(L->h_index(j));
      EXPECT_EQ(killing_form(*L, hi, hj), q(*L, rs.coroot_gram()[i][j] * 10));  // h^vee(B3) = 5
    }
  }
}

TEST(WeightSpace, Examples) {
  const auto L = alg("A1");
  const GVector h = L->basis_vector(L->h_index(0));
  auto ws = weight_space(*L, {h}, {q(*L, 2)});
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws[0], L->basis_vector(L->x_index(0)));
  ws = weight_space(*L, {h}, {q(*L, 0)});
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws[0], h);
  const auto A2 = alg("A2");
  GVector reg = add(A2->basis_vector(A2->h_index(0)), A2->basis_vector(A2->h_index(1)));
  EXPECT_EQ(weight_space(*A2, {reg}, {q(*A2, 0)}).size(), 2u);
}

TEST(WeightSpace, NonCartanToralAndErrors) {
  const auto L = alg("A1");
  const GVector s = add(L->basis_vector(L->x_index(0)), L->basis_vector(L->y_index(0)));
  EXPECT_EQ(weight_space(*L, {s}, {q(*L, 2)}).size(), 1u);
  EXPECT_EQ(weight_space(*L, {s}, {q(*L, 0)}).size(), 1u);
  EXPECT_EQ(weight_space(*L, {s}, {q(*L, 1)}).size(), 0u);
  EXPECT_THROW(weight_space(*L, {L->basis_vector(L->h_index(0)), L->basis_vector(0)}, {q(*L, 0), q(*L, 0)}),
               NotToral);
}

TEST(Centralizer, Examples) {
  const auto L = alg("A1");
  EXPECT_EQ(centralizer(*L, {}).size(), 3u);
  const auto c = centralizer(*L, {L->basis_vector(L->h_index(0))});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], L->basis_vector(L->h_index(0)));
}

TEST(Centralizer, NilpotentCountsIrreducibleSummands) {
  const auto A2 = alg("A2");
  const auto p = principal_a2(*A2);
  // Summands of ad restricted to the sl2 = dim g(0) + dim g(1) for its h.
  auto summands = [&](const GVector& h) {
    return weight_space(*A2, {h}, {q(*A2, 0)}).size() + weight_space(*A2, {h}, {q(*A2, 1)}).size();
  };
  EXPECT_EQ(centralizer(*A2, {p.x[0]}).size(), summands(p.h[0]));
  EXPECT_EQ(summands(p.h[0]), 2u);
  const int top = 2;  // x_{a1+a2}
  GVector hmin = A2->basis_vector(A2->h_index(0));
  hmin = add(hmin, A2->basis_vector(A2->h_index(1)));
  EXPECT_EQ(centralizer(*A2, {A2->basis_vector(A2->x_index(top))}).size(), summands(hmin));
  EXPECT_EQ(summands(hmin), 4u);
}

TEST(DynkinIndex, Examples) {
  const auto A2 = alg("A2");
  CanonicalGenSet reg;
  reg.cartan = {{2}};
  reg.h = {A2->basis_vector(A2->h_index(0))};
  reg.x = {A2->basis_vector(A2->x_index(0))};
  reg.y = {A2->basis_vector(A2->y_index(0))};
  EXPECT_EQ(dynkin_index(*A2, reg), std::vector<Rational>{1});
  EXPECT_EQ(dynkin_index(*A2, principal_a2(*A2)), std::vector<Rational>{4});
  EXPECT_EQ(dynkin_index(*A2, standard_generators(*A2)), std::vector<Rational>{1});
  const auto B2 = alg("B2");
  auto sl2_on = [&](int i) {
    CanonicalGenSet g;
    g.cartan = {{2}};
    g.h = {B2->basis_vector(B2->h_index(i))};
    g.x = {B2->basis_vector(B2->x_index(i))};
    g.y = {B2->basis_vector(B2->y_index(i))};
    return g;
  };
  EXPECT_EQ(dynkin_index(*B2, sl2_on(0)), std::vector<Rational>{1});  // long
  EXPECT_EQ(dynkin_index(*B2, sl2_on(1)), std::vector<Rational>{2});  // short
  CanonicalGenSet zero = sl2_on(0);
  zero.h[0] = B2->zero();
  EXPECT_THROW(dynkin_index(*B2, zero), DegenerateRestriction);
}

TEST(VerifyCanonical, Examples) {
  for (const char* t : {"A2", "G2", "B3", "A1+B2"}) {
    const auto L = alg(t);
    EXPECT_TRUE(verify_canonical(*L, standard_generators(*L), L->root_system().cartan())) << t;
  }
  const auto A2 = alg("A2");
  auto p = principal_a2(*A2);
  EXPECT_TRUE(verify_canonical(*A2, p, {{2}}));
  std::vector<GVector> gens{p.x[0], p.y[0]};
  EXPECT_EQ(generated_subalgebra(*A2, gens).size(), 3u);
  p.y[0] = scaled(p.y[0], q(*A2, 3));
  EXPECT_FALSE(verify_canonical(*A2, p, {{2}}));
  EXPECT_FALSE(explain_canonical(*A2, p, {{2}}).empty());
}

TEST(VerifyCanonical, OverExtensionField) {
  const Field f = parse_field("3,0,1");
  const auto L = alg("A2", f);
  EXPECT_TRUE(verify_canonical(*L, standard_generators(*L), L->root_system().cartan()));
  // Rescale x by t and y by 1/t.
  auto g = standard_generators(*L);
  const auto t = FieldElement::generator(f);
  g.x[0] = scaled(g.x[0], t);
  g.y[0] = scaled(g.y[0], t.inverse());
  EXPECT_TRUE(verify_canonical(*L, g, L->root_system().cartan()));
}

TEST(CartanVectors, RoundTrip) {
  const auto L = alg("B3");
  const CartanElement h{{2, -1, Rational(1, 2)}};
  EXPECT_EQ(L->cartan_element(L->cartan_vector(h)), h);
  EXPECT_THROW(L->cartan_element(L->basis_vector(0)), NotInCartan);
}
