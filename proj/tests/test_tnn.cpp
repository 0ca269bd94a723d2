#include <gtest/gtest.h>

#include <bit>

#include "test_util.hpp"
#include "tpw/sampling.hpp"
#include "tpw/tnn.hpp"

using namespace tpw;
using namespace tpw::testing;

namespace {

std::vector<int> mask_to_idx(unsigned m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

// Every minor by cofactor expansion; the oracle for the DP table.
bool brute_all_minors(const QMat& g, bool strict) {
  int n = static_cast<int>(g.rows());
  for (unsigned R = 1; R < (1u << n); ++R)
    for (unsigned C = 1; C < (1u << n); ++C) {
      if (std::popcount(R) != std::popcount(C)) continue;
      Rat d = cofactor_det(g.submatrix(mask_to_idx(R), mask_to_idx(C)));
      if (strict ? d <= 0 : d < 0) return false;
    }
  return true;
}

CellPoint cp(std::vector<int> w1, QVec p1, TorusElt t, std::vector<int> w2, QVec p2) {
  return CellPoint{std::move(w1), std::move(p1), std::move(t), std::move(w2), std::move(p2)};
}

}  // namespace

TEST(Gen, Examples) {
  EXPECT_EQ(gen(2, 1, 1, Sign::plus), mat_from({{1, 1}, {0, 1}}));
  EXPECT_TRUE(gen(3, 1, 0, Sign::plus).is_identity());
  QMat y = QMat::identity(3);
  y(2, 1) = frac(1, 2);
  EXPECT_EQ(gen(3, 2, frac(1, 2), Sign::minus), y);
  EXPECT_THROW(gen(3, 3, 1, Sign::plus), std::invalid_argument);
  EXPECT_THROW(gen(3, 0, 1, Sign::plus), std::invalid_argument);
}

TEST(Wdot, Examples) {
  EXPECT_EQ(wdot(WeylElt::simple(2, 1)), mat_from({{0, 1}, {-1, 0}}));
  EXPECT_TRUE(wdot(WeylElt::identity(3)).is_identity());
}

TEST(Wdot, IndependentOfReducedWordAndSignedPermutation) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_elements(n)) {
      GroupElt g = wdot(w);
      // Compare with the product along the reversed-peeling word (right descents).
      std::vector<int> rw;
      WeylElt cur = w;
      for (bool again = true; again;) {
        again = false;
        for (int i = n - 1; i >= 1; --i)
          if (cur.right_descent(i)) {
            rw.insert(rw.begin(), i);
            cur = cur.times_simple(i);
            again = true;
            break;
          }
      }
      GroupElt h = QMat::identity(n);
      for (int i : rw)
        h = h * gen(n, i, 1, Sign::plus) * gen(n, i, -1, Sign::minus) * gen(n, i, 1, Sign::plus);
      EXPECT_EQ(g, h);
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
          Rat e = g(r, j);
          if (r == w(j)) EXPECT_TRUE(e == 1 || e == -1);
          else EXPECT_EQ(e, 0);
        }
    }
}

TEST(Realize, Examples) {
  EXPECT_EQ(realize(cp({1}, {1}, {2, 1}, {1}, {1})), mat_from({{3, 1}, {1, 1}}));
  EXPECT_TRUE(realize(cp({}, {}, {1, 1, 1}, {}, {})).is_identity());
  EXPECT_EQ(realize(cp({1}, {1}, {1, 1}, {}, {})), mat_from({{1, 1}, {0, 1}}));
  EXPECT_THROW(realize(cp({1, 1}, {1, 1}, {1, 1}, {}, {})), std::invalid_argument);
  EXPECT_THROW(realize(cp({1}, {-1}, {1, 1}, {}, {})), std::invalid_argument);
  EXPECT_THROW(realize(cp({1}, {1}, {1, 0}, {}, {})), std::invalid_argument);
}

TEST(Minors, TableMatchesBruteForce) {
  Rng rng(5);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + it % 3;
    std::mt19937_64 mt(it);
    QMat g = it % 2 ? realize(random_cellpoint(n, rng)) : random_mat(mt, n, -2, 6);
    EXPECT_EQ(is_tnn(g), brute_all_minors(g, false));
    EXPECT_EQ(is_tp_full(g), brute_all_minors(g, true));
    EXPECT_EQ(is_tp(g), is_tp_full(g)) << to_string(g);
  }
}

TEST(Minors, Examples) {
  QMat g = mat_from({{3, 1}, {1, 1}});
  EXPECT_TRUE(is_tp(g));
  EXPECT_TRUE(is_tnn(QMat::identity(3)));
  EXPECT_FALSE(is_tp(QMat::identity(3)));
  EXPECT_FALSE(is_tnn(mat_from({{0, 1}, {1, 0}})));
}

TEST(Realize, RandomSamplesAreTnn) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 40; ++k) {
      Rng rng = Rng::for_trial(99, n * 1000 + k);
      GroupElt g = realize(random_cellpoint(n, rng));
      if (n <= 4) EXPECT_TRUE(brute_all_minors(g, false));
      else EXPECT_TRUE(is_tnn(g));
    }
}

TEST(Gauss, Examples) {
  auto f = gauss_utu(mat_from({{3, 1}, {1, 1}}));
  EXPECT_EQ(f.u_plus, gen(2, 1, 1, Sign::plus));
  EXPECT_EQ(f.t, (TorusElt{2, 1}));
  EXPECT_EQ(f.u_minus, gen(2, 1, 1, Sign::minus));
  f = gauss_utu(QMat::diag({4, 2}));
  EXPECT_TRUE(f.u_plus.is_identity());
  EXPECT_TRUE(f.u_minus.is_identity());
  try {
    gauss_utu(mat_from({{0, 1}, {1, 0}}));
    FAIL();
  } catch (const FactorizationError& e) {
    EXPECT_EQ(e.trailing_minor(), 1);
  }
}

TEST(Gauss, ProductReproducesInput) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    QMat g = random_mat(rng, 1 + it % 5, 1, 9);
    try {
      auto f = gauss_utu(g);
      EXPECT_TRUE(f.u_plus.is_upper_triangular());
      EXPECT_TRUE(f.u_minus.is_lower_triangular());
      for (std::size_t i = 0; i < g.rows(); ++i) EXPECT_EQ(f.u_plus(i, i) * f.u_minus(i, i), 1);
      EXPECT_EQ(f.u_plus * torus(f.t) * f.u_minus, g);
    } catch (const FactorizationError&) {
    }
  }
}

TEST(UnipotentCell, Examples) {
  auto c = unipotent_cell(gen(2, 1, 1, Sign::plus), Sign::plus);
  EXPECT_EQ(c.w, WeylElt::simple(2, 1));
  EXPECT_EQ(c.params, (QVec{1}));
  c = unipotent_cell(QMat::identity(3), Sign::plus);
  EXPECT_EQ(c.w, WeylElt::identity(3));
  EXPECT_TRUE(c.params.empty());
  GroupElt u = gen(3, 1, 1, Sign::plus) * gen(3, 2, 1, Sign::plus) * gen(3, 1, 1, Sign::plus);
  c = unipotent_cell(u, Sign::plus);
  EXPECT_EQ(c.w, longest(3, IndexSet::full(3)));
  EXPECT_EQ(word_product(3, c.w.word(), c.params, Sign::plus), u);
  EXPECT_THROW(unipotent_cell(gen(3, 1, -1, Sign::plus), Sign::plus), std::invalid_argument);
  EXPECT_THROW(unipotent_cell(gen(3, 1, 1, Sign::minus), Sign::plus), std::invalid_argument);
}

TEST(FactorCell, Examples) {
  EXPECT_EQ(factor_cell(mat_from({{3, 1}, {1, 1}})), cp({1}, {1}, {2, 1}, {1}, {1}));
  EXPECT_EQ(factor_cell(QMat::diag({2, 1})), cp({}, {}, {2, 1}, {}, {}));
}

TEST(FactorCell, RoundTripAndCommutedForm) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 30; ++k) {
      Rng rng = Rng::for_trial(7, n * 100 + k);
      CellPoint p = random_cellpoint(n, rng);
      GroupElt g = realize(p);
      EXPECT_EQ(factor_cell(g), p);
      CellPoint q = factor_cell(realize_minus_first(p));
      EXPECT_EQ(q.w1(), p.w1());
      EXPECT_EQ(q.w2(), p.w2());
    }
}

TEST(FactorCell, ProductLaw) {
  for (int k = 0; k < 40; ++k) {
    Rng rng = Rng::for_trial(8, k);
    int n = 2 + k % 3;
    CellPoint p = random_cellpoint(n, rng), q = random_cellpoint(n, rng);
    CellPoint r = factor_cell(realize(p) * realize(q));
    EXPECT_EQ(r.w1(), demazure(p.w1(), q.w1()));
    EXPECT_EQ(r.w2(), demazure(p.w2(), q.w2()));
  }
}

TEST(LeviProject, Examples) {
  EXPECT_TRUE(levi_project(gen(3, 2, 5, Sign::plus), IndexSet{1}, Sign::plus).is_identity());
  EXPECT_EQ(levi_project(gen(3, 1, 7, Sign::plus), IndexSet{1}, Sign::plus), gen(3, 1, 7, Sign::plus));
  GroupElt t = torus({3, 2, 1});
  EXPECT_EQ(levi_project(t, IndexSet{2}, Sign::plus), t);
  EXPECT_EQ(levi_project(t, IndexSet{2}, Sign::minus), t);
  EXPECT_THROW(levi_project(gen(3, 2, 1, Sign::minus), IndexSet{1}, Sign::plus), std::invalid_argument);
}

TEST(LeviProject, GeneratorTableAndPositivity) {
  for (int i = 1; i <= 3; ++i)
    for (std::uint32_t b = 0; b < 8; ++b) {
      IndexSet J(b << 1);
      GroupElt x = gen(4, i, 3, Sign::plus);
      GroupElt want = J.contains(i) ? x : QMat::identity(4);
      EXPECT_EQ(levi_project(x, J, Sign::plus), want);
      GroupElt y = gen(4, i, 3, Sign::minus);
      EXPECT_EQ(levi_project(y, J, Sign::minus), J.contains(i) ? y : QMat::identity(4));
    }
  for (int k = 0; k < 20; ++k) {
    Rng rng = Rng::for_trial(9, k);
    CellPoint p = random_cellpoint(4, rng);
    GroupElt g = word_product(4, p.word1, p.params1, Sign::plus) * torus(p.t);
    IndexSet J(static_cast<std::uint32_t>(rng.uniform(0, 7)) << 1);
    EXPECT_TRUE(is_tnn(levi_project(g, J, Sign::plus)));
  }
}

TEST(Oscillatory, Examples) {
  EXPECT_EQ(oscillatory_order(mat_from({{3, 1}, {1, 1}}), 5), 1);
  EXPECT_FALSE(oscillatory_order(gen(2, 1, 1, Sign::plus), 10));
  // supp(w1) = {1}, supp(w2) = {2}: neither is full, so no power is positive.
  EXPECT_FALSE(oscillatory_order(realize(cp({1}, {1}, {1, 1, 1}, {2}, {1})), 10));
  GroupElt g = realize(cp({1, 2}, {1, 1}, {1, 1, 1}, {2, 1}, {1, 1}));
  auto m = oscillatory_order(g, 10);
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_tp_full(pow(g, *m)));
  if (*m > 1) EXPECT_FALSE(is_tp_full(pow(g, *m - 1)));
}

TEST(TorusOrbit, Examples) {
  auto d = torus_orbit_dominant({1, 2}, IndexSet{1});
  EXPECT_EQ(d.t_bar, (TorusElt{2, 1}));
  EXPECT_EQ(d.w, WeylElt::simple(2, 1));
  d = torus_orbit_dominant({3, 2, 1}, IndexSet{1, 2});
  EXPECT_EQ(d.t_bar, (TorusElt{3, 2, 1}));
  EXPECT_EQ(d.w, WeylElt::identity(3));
  d = torus_orbit_dominant({2, 1, 2}, IndexSet{2});
  EXPECT_EQ(d.t_bar, (TorusElt{2, 2, 1}));
  EXPECT_EQ(d.w, WeylElt::simple(3, 2));
}

TEST(TorusOrbit, ConjugationAndMinimality) {
  for (int k = 0; k < 50; ++k) {
    Rng rng = Rng::for_trial(10, k);
    int n = 2 + k % 4;
    TorusElt t;
    for (int i = 0; i < n; ++i) t.push_back(rng.uniform(1, 3));
    IndexSet J(static_cast<std::uint32_t>(rng.uniform(0, (1 << (n - 1)) - 1)) << 1);
    auto d = torus_orbit_dominant(t, J);
    GroupElt wd = wdot(d.w);
    EXPECT_EQ(wd * torus(t) * inverse(wd), torus(d.t_bar));
    EXPECT_TRUE(in_parabolic(d.w, J));
    for (int i : J.indices()) EXPECT_GE(alpha(d.t_bar, i), 1);
    // No shorter element of W_J achieves the same conjugate.
    for (const auto& v : all_elements(n))
      if (in_parabolic(v, J) && act_on_torus(v, t) == d.t_bar) EXPECT_GE(v.length(), d.w.length());
  }
}

TEST(Antidiagonal, ConjugationSwapsGenerators) {
  GroupElt j = antidiagonal(4);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(j * gen(4, i, 5, Sign::plus) * j, gen(4, 4 - i, 5, Sign::minus));
}
