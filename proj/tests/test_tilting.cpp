#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nakct;
using namespace nakct::fixtures;

namespace {

Subcategory a9r2_4z() {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  auto s = projectives(A);
  for (int v : {1, 5, 9}) s.push_back(simple(A, v));
  return Subcategory(s);
}

}  // namespace

TEST(Tilting, SubcategoryNormalizes) {
  const Subcategory c(mods({{2, 3}, {1, 1}, {2, 3}}));
  EXPECT_EQ(c.members, mods({{1, 1}, {2, 3}}));
  EXPECT_TRUE(c.contains({2, 3}));
  EXPECT_FALSE(c.contains({2, 2}));
}

TEST(Tilting, ExtTableMatchesExtDim) {
  const Algebra A = lambda_b();
  const ExtTable t(A, 3);
  const auto xs = indecomposables(A);
  for (size_t x = 0; x < xs.size(); ++x)
    for (size_t y = 0; y < xs.size(); ++y)
      for (int k = 1; k <= 3; ++k) EXPECT_EQ(t.dim(x, y, k), ext_dim(A, xs[x], xs[y], k));
}

TEST(Tilting, VerifyAcceptsRadicalSquareZeroExample) {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  const VerifyReport r = verify_ct(A, a9r2_4z(), 4, Mode::NZ);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_TRUE(verify_ct(A, a9r2_4z(), 4, Mode::N).verdict);
}

TEST(Tilting, VerifyReportsPerpGap) {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  const VerifyReport r = verify_ct(A, a9r2_4z(), 2, Mode::N);
  EXPECT_FALSE(r.verdict);
  bool found = false;
  for (const Failure& f : r.failures)
    if (f.kind == FailureKind::PerpGap && f.x == Indec{3, 3}) {
      found = true;
      EXPECT_EQ(f.side, PerpSide::Both);
    }
  EXPECT_TRUE(found);
}

TEST(Tilting, VerifyReportsMissingAndOrthogonality) {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  Subcategory c = a9r2_4z();
  c.members.erase(std::find(c.members.begin(), c.members.end(), Indec{1, 2}));
  c.members.push_back({4, 4});
  c.normalize();
  const VerifyReport r = verify_ct(A, c, 4, Mode::N);
  EXPECT_FALSE(r.verdict);
  bool missing = false, orth = false;
  for (const Failure& f : r.failures) {
    missing = missing || (f.kind == FailureKind::MissingProjective && f.x == Indec{1, 2});
    orth = orth || (f.kind == FailureKind::OrthogonalityFailure && f.x == Indec{5, 5} && f.y == Indec{4, 4} &&
                    f.degree == 1);
  }
  EXPECT_TRUE(missing);
  EXPECT_TRUE(orth);
}

TEST(Tilting, VerifyRejectsForeignModule) {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  Subcategory c = a9r2_4z();
  c.members.push_back({3, 5});
  try {
    verify_ct(A, c, 4, Mode::N);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSubcategory);
  }
}

TEST(Tilting, NoThreeClusterTiltingForA5R2) {
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 5, 2);
  auto s = projectives(A);
  s.push_back(simple(A, 1));
  s.push_back(simple(A, 4));
  const Subcategory c(s);
  EXPECT_FALSE(verify_ct(A, c, 3, Mode::NZ).verdict);
  EXPECT_FALSE(verify_ct(A, c, 3, Mode::N).verdict);
}

TEST(Tilting, OmegaClosureForRadicalSquareZero) {
  // In A_5/R^2 with n = 2, Omega^2 S_5 = S_3 and Omega^2 S_3 = S_1 is projective.
  const Algebra A = Algebra::homogeneous(Kind::Acyclic, 5, 2);
  auto s = projectives(A);
  for (int v : {1, 3, 5}) s.push_back(simple(A, v));
  const VerifyReport r = verify_ct(A, Subcategory(s), 2, Mode::NZ);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.zero_omega_n.empty());
}

TEST(Tilting, TauNClosure) {
  EXPECT_EQ(tau_n_closure(Algebra::homogeneous(Kind::Acyclic, 7, 3), 4).size(), 9u);
  const Subcategory c = tau_n_closure(Algebra::homogeneous(Kind::Acyclic, 9, 2), 4);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_EQ(c, a9r2_4z());
}

TEST(Tilting, EnumerateSelfinjective) {
  EXPECT_EQ(enumerate_ct(Algebra::homogeneous(Kind::Cyclic, 8, 2), 4, Mode::NZ).size(), 4u);
  const Algebra A = Algebra::homogeneous(Kind::Cyclic, 6, 5);
  const auto cts = enumerate_ct(A, 3, Mode::NZ);
  ASSERT_EQ(cts.size(), 3u);
  auto want = projectives(A);
  for (auto [i, j] : {std::pair{1, 1}, {4, 4}, {1, 4}, {4, 7}}) want.push_back(canonical(A, i, j));
  EXPECT_NE(std::find(cts.begin(), cts.end(), Subcategory(want)), cts.end());
  EXPECT_TRUE(enumerate_ct(Algebra::homogeneous(Kind::Cyclic, 6, 3), 2, Mode::NZ).empty());
  EXPECT_TRUE(enumerate_ct(Algebra::homogeneous(Kind::Cyclic, 6, 3), 3, Mode::NZ).empty());
}

TEST(Tilting, EnumerateAcyclic) {
  const auto a = enumerate_ct(Algebra::homogeneous(Kind::Acyclic, 9, 2), 4, Mode::NZ);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.front(), a9r2_4z());
  EXPECT_TRUE(enumerate_ct(Algebra::homogeneous(Kind::Acyclic, 5, 2), 3, Mode::NZ).empty());
  EXPECT_EQ(enumerate_ct(Algebra::homogeneous(Kind::Acyclic, 7, 2), 3, Mode::NZ).size(), 1u);
  EXPECT_EQ(enumerate_ct(Algebra::homogeneous(Kind::Acyclic, 7, 3), 4, Mode::NZ).size(), 1u);
}

TEST(Tilting, EveryEnumeratedSubcategoryVerifies) {
  for (const Algebra& A : {lambda_a(), lambda_b(), glued15(), Algebra::homogeneous(Kind::Cyclic, 6, 4)})
    for (int n = 2; n <= 5; ++n)
      for (Mode mode : {Mode::N, Mode::NZ})
        for (const Subcategory& c : enumerate_ct(A, n, mode)) EXPECT_TRUE(verify_ct(A, c, n, mode).verdict);
}

TEST(Tilting, NzIsSubsetOfN) {
  for (const Algebra& A : {glued15(), Algebra::homogeneous(Kind::Cyclic, 6, 4),
                           Algebra::homogeneous(Kind::Acyclic, 5, 2)})
    for (int n = 2; n <= 4; ++n) {
      const auto all = enumerate_ct(A, n, Mode::N);
      for (const Subcategory& c : enumerate_ct(A, n, Mode::NZ))
        EXPECT_NE(std::find(all.begin(), all.end(), c), all.end());
    }
}

TEST(Tilting, GroundSetCapacity) {
  const Algebra A = Algebra::homogeneous(Kind::Cyclic, 20, 4);
  try {
    enumerate_ct(A, 2, Mode::NZ);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundSetTooLarge);
    EXPECT_TRUE(is_capacity_error(e.code()));
  }
  EXPECT_NO_THROW(enumerate_ct(A, 2, Mode::NZ, nullptr, 128));
}
