#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tpw {

// A subset of the simple indices {1..n-1}, stored as a bitmask (bit i = index i).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> idx);
  static IndexSet from(const std::vector<int>& idx);
  static IndexSet full(int n);  // I = {1..n-1}

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= 1u << i; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  std::vector<int> indices() const;
  bool subset_of(const IndexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  friend IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// Maximal runs of positions joined by J: position p-1 and p (0-based) share a
// block iff p is in J. Returned as half-open [begin, end) position ranges.
std::vector<std::pair<int, int>> blocks(int n, const IndexSet& J);

// Positive or negative root e_i - e_j, 1-based, i != j.
struct RootA {
  int i, j;
  bool positive() const { return i < j; }
  friend bool operator==(const RootA& a, const RootA& b) { return a.i == b.i && a.j == b.j; }
};

RootA simple_root(int i);
bool in_phi_J(const RootA& r, const IndexSet& J);

class WeylElt {
 public:
  WeylElt() = default;
  // One-line notation, 0-based images.
  explicit WeylElt(std::vector<int> oneline);
  static WeylElt identity(int n);
  static WeylElt simple(int n, int i);
  static WeylElt from_word(int n, const std::vector<int>& word);
  // One-line notation with 1-based images, as serialized.
  static WeylElt from_images(const std::vector<int>& images);

  int n() const { return static_cast<int>(p_.size()); }
  // Image of the 0-based position j.
  int operator()(int j) const { return p_[j]; }
  const std::vector<int>& oneline() const { return p_; }
  std::vector<int> images() const;  // 1-based

  int length() const;
  WeylElt inverse() const;
  WeylElt times_simple(int i) const;   // w * s_i
  WeylElt simple_times(int i) const;   // s_i * w
  bool right_descent(int i) const { return p_[i - 1] > p_[i]; }
  bool left_descent(int i) const;
  // Canonical reduced word: repeatedly strip the smallest left descent.
  std::vector<int> word() const;

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.p_ == b.p_; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

bool is_reduced(int n, const std::vector<int>& word);
std::vector<WeylElt> all_elements(int n);
WeylElt longest(int n, const IndexSet& J);
WeylElt demazure(const WeylElt& a, const WeylElt& b);
IndexSet support(const WeylElt& w);
WeylElt pi_J(const WeylElt& w, const IndexSet& J);
bool in_parabolic(const WeylElt& w, const IndexSet& J);
// w in W^J: minimal length in w W_J.
bool is_min_right_coset_rep(const WeylElt& w, const IndexSet& J);

enum class Side { left, right };
// right: (x, y) with w = x*y, x in W^J, y in W_J.
// left:  (y, x) with w = y*x, y in W_J, x in ^J W.
std::pair<WeylElt, WeylElt> coset_split(const WeylElt& w, const IndexSet& J, Side side);

RootA act_on_root(const WeylElt& w, const RootA& r);
// Smallest j not in Jp with longest(Jp)(alpha_j) outside Phi_J.
int root_lemma_witness(int n, const IndexSet& J, const IndexSet& Jp);

}  // namespace tpw
