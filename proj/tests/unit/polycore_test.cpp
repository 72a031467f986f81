#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cmdef/errors.hpp"
#include "cmdef/field.hpp"
#include "cmdef/groebner.hpp"
#include "cmdef/linalg.hpp"
#include "cmdef/poly.hpp"
#include "support.hpp"

using namespace cmdef;
using cmdef::testing::eval_oracle;
using cmdef::testing::random_point;
using cmdef::testing::random_poly;

namespace {

Poly P(const char* s, Coeff p, std::size_t n) { return Poly::parse(s, p, n); }

}  // namespace

TEST(Field, InversesByExhaustion) {
  for (Coeff p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(p);
    for (Coeff a = 1; a < p; ++a) {
      Coeff brute = 0;
      for (Coeff b = 1; b < p; ++b)
        if (a * b % p == 1) brute = b;
      EXPECT_EQ(f.inv(a), brute) << "p=" << p << " a=" << a;
    }
  }
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
}

TEST(Poly, TextFormatIsBitExact) {
  EXPECT_EQ(Poly(3, 2).to_string(), "0");
  EXPECT_EQ(P("x0^2*x1 + 2*x1", 3, 2).to_string(), "1*x0^2*x1+2*x1");
  // -1 prints as p - 1
  EXPECT_EQ(P("x0 - 1", 5, 1).to_string(), "1*x0+4");
  EXPECT_EQ(P("x1 + x0", 2, 2).to_string(), "1*x0+1*x1");
}

TEST(Poly, GrevlexOrder) {
  // equal degree: the smaller exponent in the last variable wins
  auto f = P("x0*x2 + x1^2", 2, 3);
  EXPECT_EQ(f.to_string(), "1*x1^2+1*x0*x2");
  EXPECT_EQ(P("x0 + x1^2", 2, 2).leading_monomial().degree(), 2u);
}

TEST(Poly, ParseRejectsGarbage) {
  EXPECT_THROW(P("x0 +", 2, 1), InvalidArgument);
  EXPECT_THROW(P("x5", 2, 2), InvalidArgument);
  EXPECT_THROW(P("y0", 2, 2), InvalidArgument);
}

TEST(Poly, RingMismatchThrows) {
  EXPECT_THROW(P("x0", 2, 1) + P("x0", 3, 1), RingMismatch);
  EXPECT_THROW(P("x0", 2, 1) * P("x0", 2, 2), RingMismatch);
}

TEST(PolyProperty, ArithmeticAgreesWithPointEvaluation) {
  std::mt19937 rng(7);
  for (Coeff p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_poly(rng, p, 4, 5, 3);
      auto g = random_poly(rng, p, 4, 5, 3);
      auto sum = f + g, diff = f - g, prod = f * g;
      for (int s = 0; s < 8; ++s) {
        auto pt = random_point(rng, p, 4);
        Coeff a = eval_oracle(f, pt), b = eval_oracle(g, pt);
        EXPECT_EQ(eval_oracle(sum, pt), (a + b) % p);
        EXPECT_EQ(eval_oracle(diff, pt), (a + p - b) % p);
        EXPECT_EQ(eval_oracle(prod, pt), a * b % p);
        EXPECT_EQ(evaluate(prod, pt), a * b % p);
      }
    }
  }
}

TEST(PolyProperty, TextRoundTrip) {
  std::mt19937 rng(11);
  for (Coeff p : {2u, 3u, 7u})
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_poly(rng, p, 5, 6, 4);
      EXPECT_EQ(Poly::parse(f.to_string(), p, 5), f);
    }
}

TEST(PolyProperty, FrobeniusIsAdditive) {
  std::mt19937 rng(3);
  for (Coeff p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto f = random_poly(rng, p, 3, 4, 2), g = random_poly(rng, p, 3, 4, 2);
      EXPECT_EQ((f + g).pow(p), f.pow(p) + g.pow(p));
    }
  }
}

TEST(PolyProperty, SubstitutionIsEvaluationCompatible) {
  std::mt19937 rng(5);
  const Coeff p = 3;
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_poly(rng, p, 2, 4, 3);
    std::vector<Poly> images{random_poly(rng, p, 3, 3, 2), random_poly(rng, p, 3, 3, 2)};
    auto h = f.substitute(images, 3);
    auto pt = random_point(rng, p, 3);
    std::vector<Coeff> inner{eval_oracle(images[0], pt), eval_oracle(images[1], pt)};
    EXPECT_EQ(eval_oracle(h, pt), eval_oracle(f, inner));
  }
}

namespace {

// |row space| = p^rank, counted by enumerating all combinations of the rows.
std::size_t brute_rank(const GfMatrix& a) {
  const Coeff p = a.p();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) combos *= p;
  std::vector<GfVector> seen;
  for (std::size_t c = 0; c < combos; ++c) {
    GfVector v(a.cols(), 0);
    std::size_t code = c;
    for (std::size_t i = 0; i < a.rows(); ++i, code /= p)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = (v[j] + (code % p) * a(i, j)) % p;
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t n = 1; n < seen.size(); n *= p) ++r;
  return r;
}

GfMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Coeff p) {
  std::uniform_int_distribution<Coeff> d(0, p - 1);
  GfMatrix a(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng) % 2 ? d(rng) : 0;
  return a;
}

}  // namespace

TEST(Linalg, RankMatchesRowSpaceCount) {
  std::mt19937 rng(13);
  for (Coeff p : {2u, 3u})
    for (int trial = 0; trial < 80; ++trial) {
      auto a = random_matrix(rng, 4, 5, p);
      EXPECT_EQ(a.rank(), brute_rank(a));
    }
}

TEST(Linalg, NullspaceIsKernelWithRightDimension) {
  std::mt19937 rng(17);
  for (Coeff p : {2u, 3u, 5u})
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_matrix(rng, 4, 7, p);
      RowEchelon e(p, 7);
      for (std::size_t i = 0; i < 4; ++i) e.insert(a.row(i));
      auto ns = e.nullspace();
      EXPECT_EQ(ns.size() + a.rank(), 7u);
      for (const auto& v : ns) {
        auto av = a * v;
        EXPECT_TRUE(std::all_of(av.begin(), av.end(), [](Coeff c) { return c == 0; }));
      }
    }
}

TEST(Linalg, SparseSolveReportsInconsistency) {
  SparseSystem s(3, 2);
  s.add_equation({{0, 1}, {1, 1}}, 1);
  s.add_equation({{0, 2}, {1, 2}}, 1);  // 2 * first row has rhs 2, not 1
  auto r = s.solve();
  EXPECT_FALSE(r.solution);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.augmented_rank, 2u);
}

TEST(Linalg, SparseSolveSolutionSatisfiesSystem) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Coeff p = 5;
    auto a = random_matrix(rng, 5, 6, p);
    auto x = random_point(rng, p, 6);
    auto b = a * x;
    SparseSystem s(p, 6);
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<std::pair<std::size_t, Coeff>> row;
      for (std::size_t j = 0; j < 6; ++j)
        if (a(i, j)) row.push_back({j, a(i, j)});
      s.add_equation(row, b[i]);
    }
    auto r = s.solve();
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(a * *r.solution, b);
  }
}

TEST(Groebner, ReducedBasisOfTwistedCubic) {
  // the 2x2 minors of [[x0 x1 x2] [x1 x2 x3]]
  const Coeff p = 3;
  auto ib = groebner(p, 4, {P("x0*x2 - x1^2", p, 4), P("x0*x3 - x1*x2", p, 4), P("x1*x3 - x2^2", p, 4)});
  EXPECT_EQ(ib.groebner().size(), 3u);
  EXPECT_TRUE(ideal_contains(ib, P("x0*x2 - x1^2", p, 4) * P("x3 + x0", p, 4)));
  EXPECT_FALSE(ideal_contains(ib, P("x0", p, 4)));
  EXPECT_EQ(ideal_codim(ib.generators()), 2u);
}

TEST(Groebner, NormalFormOfMembersIsZero) {
  std::mt19937 rng(23);
  const Coeff p = 2;
  std::vector<Poly> gens{P("x0*x1 + x2^2", p, 3), P("x1^2 + x0*x2", p, 3)};
  auto ib = groebner(p, 3, gens);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(rng, p, 3, 3, 2) * gens[0] + random_poly(rng, p, 3, 3, 2) * gens[1];
    EXPECT_TRUE(normal_form(f, ib).is_zero());
  }
}

TEST(Groebner, MonomialCodimMatchesHittingSetOracle) {
  std::mt19937 rng(29);
  const std::size_t n = 5;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> gens;
    for (int g = 0; g < 4; ++g) {
      auto m = cmdef::testing::random_monomial(rng, n, 3);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    std::size_t best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool hits = std::all_of(gens.begin(), gens.end(), [&](const Monomial& m) {
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i & 1) && m[i]) return true;
        return false;
      });
      if (hits) best = std::min<std::size_t>(best, __builtin_popcount(mask));
    }
    EXPECT_EQ(monomial_ideal_codim(gens, n), best);
  }
}

TEST(Groebner, CoprimeDetectsCommonFactor) {
  const Coeff p = 3;
  auto a = P("x0*x1 + x2^2", p, 3);
  EXPECT_TRUE(coprime(P("x0", p, 3), P("x1", p, 3)));
  EXPECT_FALSE(coprime(a * P("x0", p, 3), a * P("x1 + x2", p, 3)));
}

TEST(Groebner, CapIsEnforced) {
  Caps caps;
  caps.max_degree = 2;  // every S-pair of the minors has degree 3
  const Coeff p = 3;
  EXPECT_THROW(groebner(p, 4, {P("x0*x2 - x1^2", p, 4), P("x0*x3 - x1*x2", p, 4), P("x1*x3 - x2^2", p, 4)}, caps),
               ResourceCapExceeded);
}
