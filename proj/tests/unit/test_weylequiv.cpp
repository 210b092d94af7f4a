#include <gtest/gtest.h>

#include <random>

#include "liesub/nilpotent.hpp"
#include "liesub/weylequiv.hpp"
#include "oracles.hpp"

using namespace liesub;

namespace {

CartanElement labels(std::vector<long> v) {
  CartanElement h;
  for (long x : v) h.labels.emplace_back(x);
  return h;
}

WeylWord random_word(int rank, std::mt19937& rng, int max_len = 12) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, rank - 1);
  WeylWord w;
  for (int n = len(rng); n > 0; --n) w.word.push_back(letter(rng));
  return w;
}

std::vector<CartanElement> apply_all(const RootSystem& rs, const WeylWord& w, const std::vector<CartanElement>& t) {
  std::vector<CartanElement> out;
  for (const auto& h : t) out.push_back(apply(rs, w, h));
  return out;
}

std::vector<oracle::QVec> as_qvecs(const std::vector<CartanElement>& t) {
  std::vector<oracle::QVec> out;
  for (const auto& h : t) out.push_back(h.labels);
  return out;
}

}  // namespace

TEST(ConjugateOrdered, IdentityOnEqualTuples) {
  const RootSystem rs(parse_type("B3").cartan_matrix());
  const auto t = make_htuple(rs, {labels({1, -1, 2}), labels({0, 1, 0})});
  const auto w = conjugate_ordered(rs, t, t);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(apply_all(rs, *w, t.elements), t.elements);
}

TEST(ConjugateOrdered, RandomRoundTrip) {
  std::mt19937 rng(3);
  for (const char* type : {"A3", "B3", "G2", "D4", "F4"}) {
    const RootSystem rs(parse_type(type).cartan_matrix());
    std::uniform_int_distribution<int> lab(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<CartanElement> a;
      for (int k = 0; k < 3; ++k) {
        CartanElement h;
        for (int i = 0; i < rs.rank(); ++i) h.labels.emplace_back(lab(rng));
        a.push_back(h);
      }
      const auto b = apply_all(rs, random_word(rs.rank(), rng, 30), a);
      const auto w = conjugate_ordered(rs, make_htuple(rs, a), make_htuple(rs, b));
      ASSERT_TRUE(w.has_value()) << type;
      EXPECT_EQ(apply_all(rs, *w, a), b);
    }
  }
}

TEST(ConjugateOrdered, DifferentDominantRepresentatives) {
  const RootSystem rs(parse_type("A2").cartan_matrix());
  EXPECT_FALSE(conjugate_ordered(rs, make_htuple(rs, {labels({1, 1})}), make_htuple(rs, {labels({2, 2})})));
  EXPECT_THROW(conjugate_ordered(rs, make_htuple(rs, {labels({1, 1})}), make_htuple(rs, {})), GramMismatch);
}

TEST(ConjugateSets, PermutedTuplesAreFound) {
  const RootSystem rs(parse_type("D4").cartan_matrix());
  const std::vector<CartanElement> a{labels({2, -1, 0, 0}), labels({0, 0, 2, -1}), labels({0, -1, 0, 2})};
  std::vector<CartanElement> b{a[2], a[0], a[1]};
  b = apply_all(rs, WeylWord{{0, 1, 2, 3, 1}}, b);
  const auto ta = make_htuple(rs, a);
  const auto tb = make_htuple(rs, b);
  const auto res = conjugate_sets(rs, ta, tb);
  ASSERT_TRUE(res.has_value());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(apply(rs, res->word, a[res->perm[i]]), b[i]);
}

TEST(ConjugateSets, SwapOfOrthogonalCoroots) {
  // Swapping two orthogonal coroots of different factors needs the permutation.
  const RootSystem rs(parse_type("A1+A1+A1").cartan_matrix());
  const auto ta = make_htuple(rs, {labels({2, 0, 0}), labels({0, 2, 0})});
  const auto tb = make_htuple(rs, {labels({0, 2, 0}), labels({2, 0, 0})});
  EXPECT_FALSE(conjugate_ordered(rs, ta, tb).has_value());
  const auto res = conjugate_sets(rs, ta, tb);
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->perm, (std::vector<int>{1, 0}));
}

TEST(ConjugateSets, DifferentGramSpectraRejected) {
  const RootSystem rs(parse_type("A2").cartan_matrix());
  EXPECT_FALSE(conjugate_sets(rs, make_htuple(rs, {labels({1, 1})}), make_htuple(rs, {labels({2, 2})})));
}

TEST(ConjugateSets, AgreesWithBruteForce) {
  std::mt19937 rng(11);
  int positives = 0;
  for (const char* type : {"A2", "B2", "G2", "A3", "B3", "C3", "A1+A2"}) {
    const RootSystem rs(parse_type(type).cartan_matrix());
    const auto group = oracle::weyl_group(rs.cartan());
    std::uniform_int_distribution<int> lab(-1, 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = len(rng);
      std::vector<CartanElement> a;
      for (int k = 0; k < r; ++k) {
        CartanElement h;
        for (int i = 0; i < rs.rank(); ++i) h.labels.emplace_back(lab(rng));
        a.push_back(h);
      }
      std::vector<CartanElement> b;
      if (trial % 2 == 0) {
        b = apply_all(rs, random_word(rs.rank(), rng), a);
        std::shuffle(b.begin(), b.end(), rng);
      } else {
        for (int k = 0; k < r; ++k) {
          CartanElement h;
          for (int i = 0; i < rs.rank(); ++i) h.labels.emplace_back(lab(rng));
          b.push_back(h);
        }
      }
      const auto ta = make_htuple(rs, a);
      const auto tb = make_htuple(rs, b);
      const auto res = conjugate_sets(rs, ta, tb);
      const bool brute = oracle::brute_conjugate_sets(group, as_qvecs(a), as_qvecs(b));
      ASSERT_EQ(res.has_value(), brute) << type;
      if (res) {
        ++positives;
        for (int i = 0; i < r; ++i) EXPECT_EQ(apply(rs, res->word, a[res->perm[i]]), b[i]);
      }
      // Keys are complete invariants of the set orbit.
      EXPECT_EQ(set_key(rs, ta).elements == set_key(rs, tb).elements, brute) << type;
      ASSERT_EQ(conjugate_ordered(rs, ta, tb).has_value(),
                oracle::brute_conjugate_ordered(group, as_qvecs(a), as_qvecs(b)));
    }
  }
  EXPECT_GT(positives, 500);
}

TEST(ConjugateSets, NodeCapRaisesUndecided) {
  const RootSystem rs(parse_type("A1+A1+A1+A1").cartan_matrix());
  const auto t = make_htuple(rs, {labels({2, 0, 0, 0}), labels({0, 2, 0, 0}), labels({0, 0, 2, 0}), labels({0, 0, 0, 2})});
  EXPECT_THROW(set_key(rs, t, 3), Undecided);
}

TEST(LinearlyEquivalent, Examples) {
  const auto L = build_algebra(RootSystem(parse_type("A2").cartan_matrix()), FieldSpec::rationals());
  const auto regular = L->cartan_vector(labels({1, 1}));
  const auto principal = L->cartan_vector(labels({2, 2}));
  EXPECT_FALSE(linearly_equivalent(*L, {regular}, {principal}));
  EXPECT_TRUE(linearly_equivalent(*L, {regular}, {regular}));
  const auto moved = L->cartan_vector(apply(L->root_system(), WeylWord{{0, 1}}, labels({1, 1})));
  EXPECT_TRUE(linearly_equivalent(*L, {regular}, {moved}));
  EXPECT_THROW(linearly_equivalent(*L, {L->basis_vector(0)}, {regular}), NotInCartan);
}
