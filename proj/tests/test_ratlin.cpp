#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tpw/ratlin.hpp"

using namespace tpw;
using namespace tpw::testing;

namespace {

QPoly P(std::initializer_list<int> c) {
  std::vector<Rat> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(v);
}

}  // namespace

TEST(Rat, SerializationRoundTrip) {
  EXPECT_EQ(format_rat(frac(6, 4)), "3/2");
  EXPECT_EQ(format_rat(frac(4, 2)), "2");
  EXPECT_EQ(parse_rat("-10/4"), frac(-5, 2));
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
}

TEST(Det, Examples) {
  EXPECT_EQ(det(mat_from({{3, 1}, {1, 1}})), 2);
  EXPECT_EQ(det(QMat::identity(4)), 1);
  EXPECT_EQ(det(mat_from({{0, 1}, {1, 0}})), -1);
  EXPECT_THROW(det(QMat(2, 3)), std::invalid_argument);
}

TEST(Det, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 1 + it % 5;
    QMat m = random_mat(rng, n);
    if (it % 7 == 0) m(0, 0) = 0;  // force pivoting
    if (it % 11 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 2 * m(0, j);
    EXPECT_EQ(det(m), cofactor_det(m)) << to_string(m);
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(QMat::identity(2)), P({1, -2, 1}));
  EXPECT_EQ(charpoly(mat_from({{3, 1}, {1, 1}})), P({2, -4, 1}));
  EXPECT_EQ(charpoly(QMat::diag({4, 2, 1})), QPoly::from_roots({4, 2, 1}));
}

TEST(Charpoly, CayleyHamiltonAndDeterminant) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 1 + it % 5;
    QMat m = random_mat(rng, n);
    if (it % 3 == 0 && n > 2) m(2, 0) = m(1, 0) = 0;
    QPoly p = charpoly(m);
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.lead(), 1);
    EXPECT_TRUE(p.eval(m).is_zero());
    // p(0) = (-1)^n det(m)
    Rat d = cofactor_det(m);
    EXPECT_EQ(p.coeff(0), n % 2 ? Rat(-d) : d);
  }
}

TEST(Minpoly, Examples) {
  EXPECT_EQ(minpoly(QMat::identity(2)), P({-1, 1}));
  EXPECT_EQ(minpoly(mat_from({{2, 1}, {0, 2}})), P({4, -4, 1}));
  EXPECT_EQ(minpoly(QMat::diag({2, 2, 1})), P({2, -3, 1}));
}

TEST(Minpoly, DividesCharpolyAndAnnihilates) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + it % 4;
    QMat d = QMat::diag(QVec(n, Rat(it % 3 + 1)));
    d(0, 1) = it % 2;
    QMat s = random_mat(rng, n);
    if (det(s) == 0) continue;
    QMat m = inverse(s) * d * s;
    QPoly q = minpoly(m);
    EXPECT_TRUE(q.eval(m).is_zero());
    EXPECT_TRUE(divmod(charpoly(m), q).second.is_zero());
    EXPECT_EQ(q.degree(), it % 2 ? 2 : 1);
  }
}

TEST(Kernel, Examples) {
  auto k = kernel_basis(mat_from({{0, 1}, {0, 0}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (QVec{1, 0}));
  EXPECT_TRUE(kernel_basis(QMat::identity(2)).empty());
  k = kernel_basis(mat_from({{1, 1}, {1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (QVec{-1, 1}));
}

TEST(Kernel, RankNullity) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 50; ++it) {
    QMat a = random_mat(rng, 4);
    QMat b(4, 4);
    for (int j = 0; j < 4; ++j) b(0, j) = a(0, j), b(1, j) = a(1, j), b(2, j) = a(0, j) + a(1, j);
    auto k = kernel_basis(b);
    EXPECT_EQ(static_cast<int>(k.size()) + rank(b), 4);
    for (const auto& v : k) {
      QVec z = b * v;
      for (const auto& x : z) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Inverse, Identity) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 30; ++it) {
    QMat m = random_mat(rng, 1 + it % 5);
    if (cofactor_det(m) == 0) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    EXPECT_TRUE((inverse(m) * m).is_identity());
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(P({2, -4, 1})));
  EXPECT_FALSE(is_squarefree(P({1, -2, 1})));
  EXPECT_TRUE(is_squarefree(P({-5, 1})));
  EXPECT_THROW(is_squarefree(QPoly()), std::invalid_argument);
}

TEST(Sturm, PositiveRootCountExamples) {
  EXPECT_EQ(count_distinct_positive_roots(P({2, -4, 1})), 2);
  EXPECT_EQ(count_distinct_positive_roots(P({1, 0, 1})), 0);
  EXPECT_EQ(count_distinct_positive_roots(QPoly::from_roots({1, 1, 3})), 2);
}

TEST(Sturm, MatchesKnownRootSets) {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 100; ++it) {
    QVec roots;
    std::set<Rat> positive;
    int k = 1 + it % 6;
    for (int i = 0; i < k; ++i) {
      Rat r = random_rat(rng, -5, 5);
      roots.push_back(r);
      if (r > 0) positive.insert(r);
    }
    QPoly p = QPoly::from_roots(roots) * P({3, 0, 1});  // plus a complex pair
    EXPECT_EQ(count_distinct_positive_roots(p), static_cast<int>(positive.size()));
  }
}

TEST(RationalRoots, RecoversPlantedRoots) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    QVec roots;
    int k = 1 + it % 5;
    for (int i = 0; i < k; ++i) roots.push_back(random_rat(rng, -20, 20));
    QPoly p = QPoly::from_roots(roots) * P({-2, 0, 1});  // irrational pair
    std::set<Rat> want(roots.begin(), roots.end());
    QVec got = rational_roots(frac(7, 3) * p);
    EXPECT_EQ(std::set<Rat>(got.begin(), got.end()), want);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), std::greater<>()));
  }
}

TEST(RationalRoots, Spectrum) {
  auto s = rational_spectrum(mat_from({{3, 1}, {2, 2}}));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (QVec{4, 1}));
  EXPECT_FALSE(rational_spectrum(mat_from({{3, 1}, {1, 1}})));
  s = rational_spectrum(QMat::diag({2, 1, 2}));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (QVec{2, 2, 1}));
}

TEST(SimplestBetween, Basics) {
  EXPECT_EQ(simplest_between(frac(1, 3), frac(1, 2)), frac(1, 2));
  EXPECT_EQ(simplest_between(frac(3, 10), frac(4, 10)), frac(1, 3));
  EXPECT_EQ(simplest_between(frac(-3, 2), frac(1, 2)), 0);
  EXPECT_EQ(simplest_between(frac(-4, 10), frac(-3, 10)), frac(-1, 3));
  EXPECT_EQ(simplest_between(frac(5, 2), frac(5, 2)), frac(5, 2));
}

TEST(SignAtRoot, SqrtTwo) {
  QPoly p = P({-2, 0, 1});  // roots +-sqrt 2
  auto ivs = isolate_positive_roots(p);
  ASSERT_EQ(ivs.size(), 1u);
  EXPECT_EQ(sign_at_root(p, ivs[0], P({-141, 100})), 1);   // sqrt2 - 1.41
  EXPECT_EQ(sign_at_root(p, ivs[0], P({-1415, 1000})), -1);  // sqrt2 - 1.415
  EXPECT_EQ(sign_at_root(p, ivs[0], P({-4, 0, 2})), 0);
  EXPECT_EQ(sign_at_root(p, ivs[0], P({0, 0, 0, 1})), 1);
}

TEST(JordanChevalley, Examples) {
  auto [s, u] = jordan_chevalley_mult(mat_from({{2, 1}, {0, 2}}));
  EXPECT_EQ(s, QMat::diag({2, 2}));
  EXPECT_EQ(u, (QMat{{1, frac(1, 2)}, {0, 1}}));
  auto [s2, u2] = jordan_chevalley_mult(QMat::identity(3));
  EXPECT_TRUE(s2.is_identity());
  EXPECT_TRUE(u2.is_identity());
  QMat g = mat_from({{4, 1}, {0, 1}});
  auto [s3, u3] = jordan_chevalley_mult(g);
  EXPECT_EQ(s3, g);
  EXPECT_TRUE(u3.is_identity());
  EXPECT_THROW(jordan_chevalley_mult(mat_from({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST(JordanChevalley, RandomUpperTriangular) {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> small(1, 3);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + it % 5;
    QMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = small(rng);  // repeated eigenvalues are likely
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = random_rat(rng, -3, 3);
    }
    auto [s, u] = jordan_chevalley_mult(g);
    EXPECT_EQ(s * u, g);
    EXPECT_EQ(s * u, u * s);
    EXPECT_TRUE(is_squarefree(minpoly(s)));
    QMat nil = u - QMat::identity(n);
    EXPECT_TRUE(pow(nil, static_cast<unsigned>(n)).is_zero());
  }
}
