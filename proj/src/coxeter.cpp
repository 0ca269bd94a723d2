#include "tpw/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tpw {

IndexSet::IndexSet(std::initializer_list<int> idx) {
  for (int i : idx) insert(i);
}

IndexSet IndexSet::from(const std::vector<int>& idx) {
  IndexSet s;
  for (int i : idx) {
    if (i < 1 || i > 30) throw std::invalid_argument("simple index out of range");
    s.insert(i);
  }
  return s;
}

IndexSet IndexSet::full(int n) {
  IndexSet s;
  for (int i = 1; i < n; ++i) s.insert(i);
  return s;
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> v;
  for (int i = 1; i < 32; ++i)
    if (contains(i)) v.push_back(i);
  return v;
}

std::vector<std::pair<int, int>> blocks(int n, const IndexSet& J) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int p = 1; p <= n; ++p) {
    if (p == n || !J.contains(p)) {
      out.emplace_back(start, p);
      start = p;
    }
  }
  return out;
}

RootA simple_root(int i) { return {i, i + 1}; }

bool in_phi_J(const RootA& r, const IndexSet& J) {
  int a = std::min(r.i, r.j), b = std::max(r.i, r.j);
  for (int k = a; k < b; ++k)
    if (!J.contains(k)) return false;
  return true;
}

WeylElt::WeylElt(std::vector<int> oneline) : p_(std::move(oneline)) {
  std::vector<int> s = p_;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i) throw std::invalid_argument("not a permutation");
}

WeylElt WeylElt::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return WeylElt(p);
}

WeylElt WeylElt::simple(int n, int i) { return identity(n).times_simple(i); }

WeylElt WeylElt::from_word(int n, const std::vector<int>& word) {
  WeylElt w = identity(n);
  for (int i : word) w = w.times_simple(i);
  return w;
}

WeylElt WeylElt::from_images(const std::vector<int>& images) {
  std::vector<int> p;
  for (int x : images) p.push_back(x - 1);
  return WeylElt(p);
}

std::vector<int> WeylElt::images() const {
  std::vector<int> v;
  for (int x : p_) v.push_back(x + 1);
  return v;
}

int WeylElt::length() const {
  int inv = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b) inv += p_[a] > p_[b];
  return inv;
}

WeylElt WeylElt::inverse() const {
  std::vector<int> q(p_.size());
  for (int j = 0; j < n(); ++j) q[p_[j]] = j;
  return WeylElt(q);
}

WeylElt WeylElt::times_simple(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("simple index out of range");
  WeylElt w = *this;
  std::swap(w.p_[i - 1], w.p_[i]);
  return w;
}

WeylElt WeylElt::simple_times(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("simple index out of range");
  WeylElt w = *this;
  for (int& x : w.p_) {
    if (x == i - 1) x = i;
    else if (x == i) x = i - 1;
  }
  return w;
}

bool WeylElt::left_descent(int i) const {
  auto a = std::find(p_.begin(), p_.end(), i - 1), b = std::find(p_.begin(), p_.end(), i);
  return a > b;
}

std::vector<int> WeylElt::word() const {
  std::vector<int> w;
  WeylElt cur = *this;
  for (;;) {
    int d = 0;
    for (int i = 1; i < n() && !d; ++i)
      if (cur.left_descent(i)) d = i;
    if (!d) break;
    w.push_back(d);
    cur = cur.simple_times(d);
  }
  return w;
}

WeylElt operator*(const WeylElt& a, const WeylElt& b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
  std::vector<int> c(a.n());
  for (int j = 0; j < a.n(); ++j) c[j] = a.p_[b.p_[j]];
  return WeylElt(c);
}

bool is_reduced(int n, const std::vector<int>& word) {
  return WeylElt::from_word(n, word).length() == static_cast<int>(word.size());
}

std::vector<WeylElt> all_elements(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElt> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

WeylElt longest(int n, const IndexSet& J) {
  std::vector<int> p(n);
  for (auto [b, e] : blocks(n, J))
    for (int k = b; k < e; ++k) p[k] = b + e - 1 - k;
  return WeylElt(p);
}

WeylElt demazure(const WeylElt& a, const WeylElt& b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
  WeylElt w = a;
  for (int i : b.word())
    if (!w.right_descent(i)) w = w.times_simple(i);
  return w;
}

IndexSet support(const WeylElt& w) {
  IndexSet s;
  for (int i : w.word()) s.insert(i);
  return s;
}

WeylElt pi_J(const WeylElt& w, const IndexSet& J) {
  WeylElt r = WeylElt::identity(w.n());
  for (int i : w.word())
    if (J.contains(i) && !r.right_descent(i)) r = r.times_simple(i);
  return r;
}

bool in_parabolic(const WeylElt& w, const IndexSet& J) { return support(w).subset_of(J); }

bool is_min_right_coset_rep(const WeylElt& w, const IndexSet& J) {
  for (int j : J.indices())
    if (j < w.n() && w.right_descent(j)) return false;
  return true;
}

std::pair<WeylElt, WeylElt> coset_split(const WeylElt& w, const IndexSet& J, Side side) {
  if (side == Side::left) {
    auto [x, y] = coset_split(w.inverse(), J, Side::right);
    return {y.inverse(), x.inverse()};
  }
  std::vector<int> p = w.oneline();
  for (auto [b, e] : blocks(w.n(), J)) std::sort(p.begin() + b, p.begin() + e);
  WeylElt x(p);
  return {x, x.inverse() * w};
}

RootA act_on_root(const WeylElt& w, const RootA& r) {
  return {w(r.i - 1) + 1, w(r.j - 1) + 1};
}

int root_lemma_witness(int n, const IndexSet& J, const IndexSet& Jp) {
  IndexSet I = IndexSet::full(n);
  if (J == I || Jp == I) throw std::invalid_argument("root_lemma_witness: J and J' must be proper");
  WeylElt wj = longest(n, Jp);
  for (int j = 1; j < n; ++j) {
    if (Jp.contains(j)) continue;
    if (!in_phi_J(act_on_root(wj, simple_root(j)), J)) return j;
  }
  throw std::logic_error("root_lemma_witness: no witness found");
}

}  // namespace tpw
