#pragma once

#include <optional>
#include <vector>

#include "tpw/coxeter.hpp"
#include "tpw/ratlin.hpp"

namespace tpw {

using GroupElt = QMat;
using TorusElt = QVec;

enum class Sign { plus, minus };

// x_i(a) = I + a E_{i,i+1} (plus) or y_i(a) = I + a E_{i+1,i} (minus), i 1-based.
GroupElt gen(int n, int i, const Rat& a, Sign sign);
// Product gen(i_1, a_1) gen(i_2, a_2) ... in word order.
GroupElt word_product(int n, const std::vector<int>& word, const QVec& params, Sign sign);
GroupElt wdot(const WeylElt& w);
GroupElt torus(const TorusElt& t);
Rat alpha(const TorusElt& t, int i);
// diag with c at position i and 1/c at position i+1.
TorusElt coroot(int n, int i, const Rat& c);

struct CellPoint {
  std::vector<int> word1;
  QVec params1;
  TorusElt t;
  std::vector<int> word2;
  QVec params2;

  int n() const { return static_cast<int>(t.size()); }
  WeylElt w1() const { return WeylElt::from_word(n(), word1); }
  WeylElt w2() const { return WeylElt::from_word(n(), word2); }
  // Throws std::invalid_argument when a CellPoint invariant fails.
  void validate() const;
  friend bool operator==(const CellPoint&, const CellPoint&) = default;
};

GroupElt realize(const CellPoint& p);
// Same factors in the order U^- T U^+.
GroupElt realize_minus_first(const CellPoint& p);

// All minors of g indexed by (row mask, column mask); entries with unequal
// popcounts are left zero. Capped at n <= 8.
class MinorTable {
 public:
  explicit MinorTable(const QMat& g);
  const Rat& operator()(unsigned rows, unsigned cols) const { return m_[(rows << n_) | cols]; }
  int n() const { return n_; }
  bool all_nonnegative() const;
  bool all_positive() const;

 private:
  int n_;
  std::vector<Rat> m_;
};

bool is_tnn(const GroupElt& g);
bool is_tp(const GroupElt& g);       // initial-minor criterion
bool is_tp_full(const GroupElt& g);  // every minor

class FactorizationError : public Error {
 public:
  FactorizationError(int trailing_minor, const std::string& msg)
      : Error(msg), trailing_minor_(trailing_minor) {}
  int trailing_minor() const { return trailing_minor_; }

 private:
  int trailing_minor_;
};

struct GaussFactors {
  GroupElt u_plus;
  TorusElt t;
  GroupElt u_minus;
};
GaussFactors gauss_utu(const GroupElt& g);

struct UnipotentCell {
  WeylElt w;
  QVec params;  // along the canonical word of w
};
UnipotentCell unipotent_cell(const GroupElt& u, Sign sign);

CellPoint factor_cell(const GroupElt& g);

// Block-diagonal Levi part of g in P^+_J (sign plus) or P^-_J (sign minus).
GroupElt levi_project(const GroupElt& g, const IndexSet& J, Sign sign);
bool in_parabolic(const GroupElt& g, const IndexSet& J, Sign sign);

std::optional<int> oscillatory_order(const GroupElt& g, int m_max);

struct DominantTorus {
  TorusElt t_bar;
  WeylElt w;  // t_bar = w t w^{-1}
};
DominantTorus torus_orbit_dominant(const TorusElt& t, const IndexSet& J);
// Conjugate of a torus element by w: entry t_j moves to position w(j).
TorusElt act_on_torus(const WeylElt& w, const TorusElt& t);

// Antidiagonal permutation matrix; conjugation maps x_i to y_{n-i}.
GroupElt antidiagonal(int n);

}  // namespace tpw
