#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "tpw/coxeter.hpp"

using namespace tpw;

namespace {

WeylElt W(int n, std::vector<int> word) { return WeylElt::from_word(n, word); }

// All reduced words of w, by stripping right descents in every possible order.
std::vector<std::vector<int>> reduced_words(const WeylElt& w) {
  if (w.length() == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < w.n(); ++i) {
    WeylElt v = w.times_simple(i);
    if (v.length() >= w.length()) continue;
    for (auto word : reduced_words(v)) {
      word.push_back(i);
      out.push_back(word);
    }
  }
  return out;
}

// Demazure accumulation using only inversion counts.
WeylElt demazure_by_length(const WeylElt& a, const std::vector<int>& word) {
  WeylElt w = a;
  for (int i : word) {
    WeylElt v = w.times_simple(i);
    if (v.length() > w.length()) w = v;
  }
  return w;
}

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (std::uint32_t b = 0; b < (1u << (n - 1)); ++b) out.emplace_back(b << 1);
  return out;
}

}  // namespace

TEST(Weyl, CanonicalWordIsReducedAndRoundTrips) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_elements(n)) {
      auto word = w.word();
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(WeylElt::from_word(n, word), w);
    }
  EXPECT_EQ(W(3, {2, 1}).images(), (std::vector<int>{3, 1, 2}));
}

TEST(Demazure, Examples) {
  EXPECT_EQ(demazure(W(3, {1}), W(3, {1})), W(3, {1}));
  EXPECT_EQ(demazure(W(3, {1}), W(3, {2})), W(3, {1, 2}));
  EXPECT_EQ(demazure(W(3, {1, 2}), W(3, {2, 1})), longest(3, IndexSet::full(3)));
}

TEST(Demazure, WellDefinedOverAllReducedWords) {
  auto S4 = all_elements(4);
  for (const auto& a : S4)
    for (const auto& b : S4) {
      WeylElt d = demazure(a, b);
      for (const auto& word : reduced_words(b)) EXPECT_EQ(demazure_by_length(a, word), d);
    }
}

TEST(Demazure, Associative) {
  auto S4 = all_elements(4);
  for (std::size_t i = 0; i < S4.size(); i += 3)
    for (const auto& b : S4)
      for (std::size_t k = 0; k < S4.size(); k += 5)
        EXPECT_EQ(demazure(demazure(S4[i], b), S4[k]), demazure(S4[i], demazure(b, S4[k])));
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(WeylElt::identity(3)).empty());
  EXPECT_EQ(support(longest(3, IndexSet::full(3))), (IndexSet{1, 2}));
  EXPECT_EQ(support(WeylElt::simple(4, 2)), (IndexSet{2}));
}

TEST(Support, UnionUnderDemazure) {
  auto S4 = all_elements(4);
  for (const auto& a : S4)
    for (const auto& b : S4) {
      EXPECT_EQ(support(demazure(a, b)), support(a) | support(b));
      for (const auto& word : reduced_words(a)) {
        IndexSet s;
        for (int i : word) s.insert(i);
        EXPECT_EQ(s, support(a));
      }
    }
}

TEST(PiJ, Examples) {
  EXPECT_EQ(pi_J(W(3, {1, 2, 1}), IndexSet{1}), W(3, {1}));
  auto w = W(4, {1, 3});
  EXPECT_EQ(pi_J(w, IndexSet{1, 3}), w);
  EXPECT_EQ(pi_J(w, IndexSet{}), WeylElt::identity(4));
}

TEST(PiJ, MonoidMorphism) {
  auto S4 = all_elements(4);
  for (const auto& J : all_subsets(4))
    for (const auto& a : S4)
      for (const auto& b : S4) {
        EXPECT_EQ(pi_J(demazure(a, b), J), demazure(pi_J(a, J), pi_J(b, J)));
        EXPECT_TRUE(in_parabolic(pi_J(a, J), J));
      }
}

TEST(Longest, Examples) {
  EXPECT_EQ(longest(3, IndexSet::full(3)).images(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(longest(3, IndexSet{}), WeylElt::identity(3));
  EXPECT_EQ(longest(3, IndexSet{1}), WeylElt::simple(3, 1));
}

TEST(Longest, IsMaximalInParabolic) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& J : all_subsets(n)) {
      WeylElt wj = longest(n, J);
      int best = 0;
      for (const auto& w : all_elements(n))
        if (in_parabolic(w, J)) best = std::max(best, w.length());
      EXPECT_EQ(wj.length(), best);
      EXPECT_TRUE(in_parabolic(wj, J));
    }
}

TEST(CosetSplit, Examples) {
  auto [x, y] = coset_split(WeylElt::simple(3, 1), IndexSet{1}, Side::right);
  EXPECT_EQ(x, WeylElt::identity(3));
  EXPECT_EQ(y, WeylElt::simple(3, 1));
  std::tie(x, y) = coset_split(W(3, {2, 1}), IndexSet{1}, Side::right);
  EXPECT_EQ(x, W(3, {2}));
  EXPECT_EQ(y, W(3, {1}));
  std::tie(x, y) = coset_split(WeylElt::identity(3), IndexSet{1, 2}, Side::right);
  EXPECT_EQ(x, WeylElt::identity(3));
  EXPECT_EQ(y, WeylElt::identity(3));
}

TEST(CosetSplit, LengthsAdditiveBothSides) {
  for (const auto& J : all_subsets(4))
    for (const auto& w : all_elements(4)) {
      auto [x, y] = coset_split(w, J, Side::right);
      EXPECT_EQ(x * y, w);
      EXPECT_EQ(w.length(), x.length() + y.length());
      EXPECT_TRUE(in_parabolic(y, J));
      EXPECT_TRUE(is_min_right_coset_rep(x, J));
      for (int j : J.indices()) EXPECT_TRUE(act_on_root(x, simple_root(j)).positive());
      auto [yl, xl] = coset_split(w, J, Side::left);
      EXPECT_EQ(yl * xl, w);
      EXPECT_EQ(w.length(), xl.length() + yl.length());
      EXPECT_TRUE(in_parabolic(yl, J));
      EXPECT_TRUE(is_min_right_coset_rep(xl.inverse(), J));
    }
}

TEST(Roots, ActionExamples) {
  EXPECT_EQ(act_on_root(WeylElt::simple(2, 1), simple_root(1)), (RootA{2, 1}));
  EXPECT_EQ(act_on_root(WeylElt::simple(3, 2), simple_root(1)), (RootA{1, 3}));
  EXPECT_EQ(act_on_root(WeylElt::identity(4), RootA{3, 1}), (RootA{3, 1}));
}

TEST(RootLemma, Examples) {
  EXPECT_EQ(root_lemma_witness(3, IndexSet{1}, IndexSet{2}), 1);
  int j = root_lemma_witness(3, IndexSet{}, IndexSet{});
  EXPECT_TRUE(j == 1 || j == 2);
  j = root_lemma_witness(4, IndexSet{1, 2}, IndexSet{2, 3});
  EXPECT_FALSE((IndexSet{2, 3}).contains(j));
  EXPECT_FALSE(in_phi_J(act_on_root(longest(4, IndexSet{2, 3}), simple_root(j)), IndexSet{1, 2}));
  EXPECT_THROW(root_lemma_witness(3, IndexSet{1, 2}, IndexSet{}), std::invalid_argument);
}

TEST(RootLemma, ExhaustiveUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    IndexSet I = IndexSet::full(n);
    for (const auto& J : all_subsets(n))
      for (const auto& Jp : all_subsets(n)) {
        if (J == I || Jp == I) continue;
        int j = root_lemma_witness(n, J, Jp);
        EXPECT_FALSE(Jp.contains(j));
        RootA r = act_on_root(longest(n, Jp), simple_root(j));
        EXPECT_FALSE(in_phi_J(r, J));
      }
  }
}
