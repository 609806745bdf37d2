#include <gtest/gtest.h>

#include <random>

#include "mtdual/error.hpp"
#include "mtdual/polymat.hpp"
#include "random_codes.hpp"

using namespace mtdual;
using mtdual::testing::random_poly;
using mtdual::testing::small_field;

namespace {

// Unimodular matrix built from random elementary row operations.
PolyMatrix random_unimodular(const FieldPtr& F, std::size_t n, int ops, std::mt19937_64& rng) {
  PolyMatrix u = PolyMatrix::identity(F, n);
  for (int k = 0; k < ops; ++k) {
    const std::size_t a = rng() % n, b = rng() % n;
    switch (rng() % 3) {
      case 0:
        if (a != b) u.add_row_multiple(a, b, random_poly(F, 3, rng));
        break;
      case 1:
        u.swap_rows(a, b);
        break;
      default:
        u.scale_row(a, mtdual::testing::random_nonzero(F, rng));
    }
  }
  return u;
}

// Cofactor expansion along the first row.
Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const FieldPtr& F = m.field_ptr();
  if (n == 0) return Poly::constant(F, F->one());
  if (n == 1) return m.at(0, 0);
  Poly d(F);
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(F, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
    const Poly term = m.at(0, j) * cofactor_det(minor);
    d = j % 2 ? d - term : d + term;
  }
  return d;
}

PolyMatrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, int bound, std::mt19937_64& rng) {
  PolyMatrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_poly(F, bound, rng);
  return m;
}

bool is_hnf(const PolyMatrix& h) {
  if (!h.is_upper_triangular()) return false;
  for (std::size_t i = 0; i < h.cols(); ++i) {
    if (!h.at(i, i).is_monic()) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h.at(r, i).degree() >= h.at(i, i).degree()) return false;
  }
  return true;
}

}  // namespace

TEST(PolyMatrix, ParseAndFormatRoundTrip) {
  auto F = small_field(3);
  const PolyMatrix m = PolyMatrix::parse(F, "1 + x | 2\n0 | x^3\n");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.to_string(), "1 + x | 2\n0 | x^3\n");
  EXPECT_EQ(PolyMatrix::parse(F, m.to_string()), m);
  EXPECT_THROW(PolyMatrix::parse(F, "1 | 2\n3\n"), ParseError);
}

TEST(Hnf, WorkedDualExample) {
  auto F = small_field(3);
  const PolyMatrix h = PolyMatrix::parse(F,
                                         "1 + x + x^2 + 2*x^5 + 2*x^6 | 0\n"
                                         "2*x^15 + 2*x^16 + 2*x^18 + 2*x^19 | 1\n");
  const HNFResult r = hermite_normal_form(h);
  EXPECT_EQ(r.hnf, PolyMatrix::parse(F,
                                     "1 | 2*x + 2*x^2 + x^3 + x^4 + x^5\n"
                                     "0 | 2 + 2*x + 2*x^2 + x^5 + x^6\n"));
  EXPECT_EQ(r.transform * h, r.hnf);
  EXPECT_EQ(determinant(r.transform).degree(), 0);
}

TEST(Hnf, Identity) {
  auto F = small_field(4);
  const PolyMatrix i3 = PolyMatrix::identity(F, 3);
  const HNFResult r = hermite_normal_form(i3);
  EXPECT_EQ(r.hnf, i3);
  EXPECT_EQ(r.transform, i3);
  EXPECT_EQ(r.rank, 3u);
}

TEST(Hnf, RankDeficientSquareThrows) {
  auto F = small_field(2);
  const PolyMatrix m = PolyMatrix::parse(F, "x | 1\nx^2 | x\n");
  EXPECT_THROW(hermite_normal_form(m), PreconditionError);
  const HNFResult r = hermite_normal_form(PolyMatrix::parse(F, "x | 1\nx^2 | x\n1 | 0\n"));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Hnf, InvariantUnderUnimodularTransforms) {
  std::mt19937_64 rng(21);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    auto F = small_field(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      PolyMatrix g = random_matrix(F, n + 1, n, 4, rng);
      const HNFResult base = hermite_normal_form(g);
      if (base.rank < n) continue;
      ASSERT_TRUE(is_hnf(base.hnf.row_block(0, n)));
      ASSERT_EQ(base.transform * g, base.hnf);
      ASSERT_EQ(determinant(base.transform).degree(), 0);
      for (int k = 0; k < 100; ++k) {
        const PolyMatrix u = random_unimodular(F, n + 1, 6, rng);
        ASSERT_EQ(hermite_normal_form(u * g).hnf, base.hnf);
      }
    }
  }
}

TEST(Hnf, DeterminantDegreePreserved) {
  std::mt19937_64 rng(23);
  auto F = small_field(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyMatrix m = random_matrix(F, 3, 3, 3, rng);
    const Poly d = determinant(m);
    if (d.is_zero()) continue;
    EXPECT_EQ(determinant(hermite_normal_form(m).hnf), d.monic());
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(29);
  for (std::uint32_t q : {2u, 3u, 4u, 16u}) {
    auto F = small_field(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const PolyMatrix m = random_matrix(F, n, n, 3, rng);
      const PolyMatrix u = random_matrix(F, n, n, 2, rng);
      ASSERT_EQ(determinant(m), cofactor_det(m));
      ASSERT_EQ(determinant(u * m), determinant(u) * determinant(m));
    }
    EXPECT_EQ(determinant(PolyMatrix::identity(F, 4)), Poly::constant(F, F->one()));
    EXPECT_EQ(determinant(PolyMatrix(F, 0, 0)), Poly::constant(F, F->one()));
    EXPECT_THROW(determinant(PolyMatrix(F, 2, 3)), PreconditionError);
  }
}

TEST(SolveLeftFactor, CompanionOfWorkedExample) {
  auto F = small_field(3);
  const PolyMatrix g = PolyMatrix::parse(F,
      "2 + x + 2*x^2 + x^3 + x^4 + 2*x^5 + x^7 + x^9 + 2*x^10 + x^11 + 2*x^13 + x^14 | "
      "x + x^4 + x^5 + x^7 + 2*x^9 + 2*x^11 + 2*x^12 + x^13 + x^14 + x^16 + x^17 + 2*x^19 + 2*x^21 + 2*x^24 + "
      "2*x^25 + 2*x^27 + x^29 + x^31 + x^32 + 2*x^33 + 2*x^34 + 2*x^36 + 2*x^37 + x^39\n"
      "0 | 2 + x^40\n");
  const PolyMatrix d = PolyMatrix::diagonal(F, {Poly::binomial(F, 20, F->from_int(2)), Poly::binomial(F, 40, F->one())});
  const PolyMatrix a = solve_left_factor(g, d);
  EXPECT_EQ(a, PolyMatrix::parse(F, "2 + 2*x + x^4 + x^5 + x^6 | 2*x + 2*x^2 + 2*x^4 + 2*x^5\n0 | 1\n"));
  EXPECT_EQ(a.at(0, 1), Poly::parse(F, "2*x") * Poly::parse(F, "1 + x") * Poly::parse(F, "1 + x") *
                            Poly::parse(F, "1 + x") * Poly::parse(F, "1 + x"));
  EXPECT_EQ(a * g, d);
  EXPECT_EQ(solve_left_factor(d, d), PolyMatrix::identity(F, 2));
}

TEST(SolveLeftFactor, RejectsOutsideRowModule) {
  auto F = small_field(2);
  const PolyMatrix g = PolyMatrix::parse(F, "x | 0\n0 | 1\n");
  EXPECT_THROW(solve_left_factor(g, PolyMatrix::parse(F, "1 | 0\n")), PreconditionError);
  EXPECT_FALSE(try_solve_left_factor(g, PolyMatrix::parse(F, "1 | 0\n")).has_value());
  EXPECT_THROW(solve_left_factor(PolyMatrix::parse(F, "1 | 0\nx | 1\n"), g), PreconditionError);
}

TEST(SolveLeftFactor, RandomExactness) {
  std::mt19937_64 rng(31);
  auto F = small_field(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    PolyMatrix g(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        g.at(i, j) = i == j ? mtdual::testing::random_monic(F, static_cast<int>(rng() % 3), rng) : random_poly(F, 3, rng);
    const PolyMatrix a = random_matrix(F, 2, n, 3, rng);
    ASSERT_EQ(solve_left_factor(g, a * g), a);
  }
}

TEST(FrobeniusMatrix, HomomorphismAndPeriod) {
  std::mt19937_64 rng(37);
  auto F = small_field(16);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyMatrix m = random_matrix(F, 2, 2, 3, rng);
    const PolyMatrix n = random_matrix(F, 2, 2, 3, rng);
    EXPECT_EQ(frobenius_matrix(m, 4), m);
    for (int mu = 0; mu < 4; ++mu)
      EXPECT_EQ(frobenius_matrix(m * n, mu), frobenius_matrix(m, mu) * frobenius_matrix(n, mu));
  }
}

TEST(TraceMatrix, AdditiveAndLandsInSubfield) {
  std::mt19937_64 rng(41);
  auto F = small_field(16);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyMatrix m = random_matrix(F, 2, 3, 4, rng);
    const PolyMatrix n = random_matrix(F, 2, 3, 4, rng);
    EXPECT_EQ(trace_matrix(m + n, 2), trace_matrix(m, 2) + trace_matrix(n, 2));
    EXPECT_TRUE(trace_matrix(m, 2).is_over_subfield(2));
    EXPECT_TRUE(trace_matrix(trace_matrix(m, 2), 2).is_zero());  // e/upsilon = 2 = 0 in F_2
  }
  EXPECT_THROW(trace_matrix(PolyMatrix::identity(F, 2), 3), PreconditionError);
}

TEST(TraceMatrix, WorkedExampleRightHandSide) {
  auto F = small_field(16);
  const PolyMatrix sigma_b = PolyMatrix::parse(F,
      "1 + x^3 | g^8 + g^13*x + g^3*x^2 | g^8 + g^13*x + g^3*x^2\n"
      "0 | 1 + g^5*x + g^10*x^2 + x^3 | g^14*x + g^11*x^2\n"
      "0 | 0 | 1\n");
  const Poly t = Poly::parse(F, "g^10") * Poly::parse(F, "1 + x") * Poly::parse(F, "g^5 + x");
  PolyMatrix expected(F, 3, 3);
  expected.at(0, 1) = t;
  expected.at(0, 2) = t;
  expected.at(1, 2) = Poly::parse(F, "g^10*x") * Poly::parse(F, "1 + x");
  EXPECT_EQ(trace_matrix(sigma_b, 2), expected);
}
