#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nakct;
using namespace nakct::fixtures;

TEST(Algebra, LambdaALmaxRmax) {
  const Algebra A = lambda_a();
  std::vector<int> lmax, rmax;
  for (int v = 1; v <= 7; ++v) {
    lmax.push_back(A.lmax(v));
    rmax.push_back(A.rmax(v));
  }
  EXPECT_EQ(lmax, (std::vector<int>{1, 1, 1, 2, 2, 5, 5}));
  EXPECT_EQ(rmax, (std::vector<int>{3, 5, 5, 5, 7, 7, 7}));
  EXPECT_EQ(bounds(A, 2).lmax, 1);
  EXPECT_EQ(bounds(A, 2).rmax, 5);
}

TEST(Algebra, LambdaBPeriodicBounds) {
  const Algebra B = lambda_b();
  std::vector<int> lmax, rmax;
  for (int v = 1; v <= 7; ++v) {
    lmax.push_back(B.lmax(v));
    rmax.push_back(B.rmax(v));
  }
  EXPECT_EQ(lmax, (std::vector<int>{0, 0, 1, 2, 2, 5, 5}));
  EXPECT_EQ(rmax, (std::vector<int>{3, 5, 5, 5, 7, 7, 9}));
  EXPECT_EQ(bounds(B, 7).lmax, 5);
  EXPECT_EQ(bounds(B, 7).rmax, 9);
  EXPECT_EQ(bounds(B, 14).lmax, 12);
  EXPECT_EQ(bounds(B, 14).rmax, 16);
  EXPECT_EQ(bounds(B, -7).rmax, -5);
}

TEST(Algebra, InvalidKupisch) {
  auto code = [](Kind k, std::vector<int> c) {
    try {
      Algebra::from_kupisch(k, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code(Kind::Acyclic, {1, 1, 2}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Acyclic, {2, 2}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Acyclic, {1, 2, 4}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Acyclic, {1}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Cyclic, {1, 2}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Cyclic, {2, 4}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Cyclic, {4, 2}), ErrorCode::InvalidKupisch);
  EXPECT_EQ(code(Kind::Cyclic, {}), ErrorCode::InvalidKupisch);
  EXPECT_NO_THROW(Algebra::from_kupisch(Kind::Cyclic, {3, 3, 4}));
}

TEST(Algebra, Homogeneous) {
  EXPECT_EQ(Algebra::homogeneous(Kind::Acyclic, 7, 3).kupisch(), (std::vector<int>{1, 2, 3, 3, 3, 3, 3}));
  EXPECT_EQ(Algebra::homogeneous(Kind::Cyclic, 6, 3).kupisch(), (std::vector<int>(6, 3)));
  EXPECT_EQ(Algebra::homogeneous(Kind::Cyclic, 1, 2).kupisch(), (std::vector<int>{2}));
  EXPECT_THROW(Algebra::homogeneous(Kind::Acyclic, 1, 2), Error);
  EXPECT_THROW(Algebra::homogeneous(Kind::Cyclic, 3, 1), Error);
}

TEST(Algebra, HomogeneityAndSelfinjectivity) {
  const Algebra c65 = Algebra::homogeneous(Kind::Cyclic, 6, 5);
  EXPECT_EQ(is_homogeneous(c65), 5);
  EXPECT_TRUE(is_selfinjective(c65));
  EXPECT_FALSE(is_homogeneous(lambda_a()));
  EXPECT_FALSE(is_selfinjective(lambda_a()));
  EXPECT_FALSE(is_homogeneous(lambda_b()));
  EXPECT_FALSE(is_selfinjective(lambda_b()));
  EXPECT_EQ(is_homogeneous(Algebra::from_kupisch(Kind::Acyclic, {1, 2})), 2);
  EXPECT_EQ(is_homogeneous(Algebra::from_kupisch(Kind::Acyclic, {1, 2, 3, 4})), 4);
  EXPECT_FALSE(is_selfinjective(Algebra::homogeneous(Kind::Acyclic, 5, 2)));
}

TEST(Algebra, HomogeneityMatchesRmaxPattern) {
  for (int m = 2; m <= 8; ++m)
    for (int l = 2; l <= 6; ++l) {
      const Algebra a = Algebra::homogeneous(Kind::Acyclic, m, l);
      const Algebra c = Algebra::homogeneous(Kind::Cyclic, m, l);
      for (int i = 1; i <= m; ++i) {
        EXPECT_EQ(a.rmax(i), std::min(i + l - 1, m));
        EXPECT_EQ(c.rmax(i), i + l - 1);
      }
    }
}

TEST(Algebra, GaloisProperty) {
  for (const Algebra& A : {lambda_a(), lambda_b(), lambda_c(), glued15()})
    for (int i = -20; i <= 40; ++i)
      for (int j = i; j <= i + 30; ++j) EXPECT_EQ(A.lmax(j) <= i, j <= A.rmax(i)) << i << "," << j;
}

TEST(Algebra, RoundTrip) {
  for (const Algebra& A : {lambda_a(), lambda_b(), lambda_c(), glued15()})
    EXPECT_EQ(Algebra::from_kupisch(A.kind(), A.kupisch()), A);
}

TEST(Algebra, Glue) {
  const Algebra g = glue(Algebra::homogeneous(Kind::Acyclic, 7, 3), Algebra::homogeneous(Kind::Acyclic, 9, 2));
  EXPECT_EQ(g, glued15());
  EXPECT_EQ(glue(Algebra::homogeneous(Kind::Acyclic, 5, 2), Algebra::homogeneous(Kind::Acyclic, 5, 2)),
            Algebra::homogeneous(Kind::Acyclic, 9, 2));
  EXPECT_THROW(glue(lambda_a(), lambda_b()), Error);

  const Algebra x = lambda_a();
  const Algebra y = Algebra::homogeneous(Kind::Acyclic, 4, 3);
  const Algebra z = Algebra::from_kupisch(Kind::Acyclic, {1, 2, 2, 3});
  EXPECT_EQ(glue(glue(x, y), z), glue(x, glue(y, z)));
}

TEST(Algebra, GluedProjectivesAndInjectives) {
  // Projectives and injectives of a gluing are those of the pieces, with the
  // second piece shifted by m1 - 1.
  const Algebra a1 = Algebra::homogeneous(Kind::Acyclic, 7, 3);
  const Algebra a2 = Algebra::homogeneous(Kind::Acyclic, 9, 2);
  const Algebra g = glue(a1, a2);
  for (int v = 1; v <= 7; ++v) EXPECT_EQ(g.lmax(v), a1.lmax(v));
  for (int v = 2; v <= 9; ++v) EXPECT_EQ(g.lmax(v + 6), a2.lmax(v) + 6);
  for (int v = 1; v <= 6; ++v) EXPECT_EQ(g.rmax(v), a1.rmax(v));
  for (int v = 1; v <= 9; ++v) EXPECT_EQ(g.rmax(v + 6), a2.rmax(v) + 6);
}

TEST(Algebra, SelfGlue) {
  EXPECT_EQ(self_glue(glued15()), lambda_c());
  EXPECT_EQ(self_glue(Algebra::homogeneous(Kind::Acyclic, 2, 2)).kupisch(), (std::vector<int>{2}));
  EXPECT_THROW(self_glue(lambda_b()), Error);
}

TEST(Algebra, CutPoints) {
  const auto cp = cut_points(lambda_c());
  for (int p : {1, 7, 8, 9, 10, 11, 12, 13, 14}) EXPECT_TRUE(cp.count(p)) << p;
  for (int p = 2; p <= 6; ++p) EXPECT_FALSE(cp.count(p)) << p;
  EXPECT_EQ(cut_points(Algebra::homogeneous(Kind::Cyclic, 5, 3)).size(), 0u);
  EXPECT_EQ(cut_points(glued15()), (std::set<int>{7, 8, 9, 10, 11, 12, 13, 14}));
}

TEST(Algebra, Unglue) {
  const Algebra C = lambda_c();
  EXPECT_EQ(unglue(C, 1), glued15());
  EXPECT_THROW(unglue(C, 3), Error);
  for (int p : cut_points(C)) {
    const Algebra B = unglue(C, p);
    EXPECT_EQ(B.m(), 15);
    EXPECT_EQ(self_glue(B), rotate(C, p));
    EXPECT_TRUE(equal_up_to_rotation(self_glue(B), C));
  }
}

TEST(Algebra, CanonicalRotation) {
  const Algebra B = lambda_b();
  const Algebra r = canonical_rotation(B);
  EXPECT_EQ(r.kupisch(), (std::vector<int>{2, 3, 2, 3, 3, 3, 4}));
  for (int p = 1; p <= 7; ++p) EXPECT_EQ(canonical_rotation(rotate(B, p)), r);
}
