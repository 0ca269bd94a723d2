#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpw/classify.hpp"
#include "tpw/cone.hpp"
#include "tpw/sampling.hpp"

namespace tpw {

// k-th exterior power of the standard representation. Basis vectors are the
// k-subsets of {1..n} (bit i-1 stands for i) in lexicographic order.
class WedgeSpace {
 public:
  WedgeSpace(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  int dim() const { return static_cast<int>(subsets_.size()); }
  const std::vector<unsigned>& subsets() const { return subsets_; }
  int index_of(unsigned mask) const;
  std::string label(int idx) const;  // e.g. "{1,3}"

 private:
  int n_, k_;
  std::vector<unsigned> subsets_;
};

// Matrix of k x k minors acting on WedgeSpace(n, k).
QMat compound(const GroupElt& g, int k);

struct TopEigenspace {
  Rat c_M;  // product of the k largest eigenvalues
  std::vector<QVec> basis;
};
// Requires a rational spectrum; throws UnsupportedExact otherwise.
TopEigenspace top_generalized_eigenspace(const GroupElt& g, int k);

// Subsets spanning the L_J-module generated by e_1 ^ ... ^ e_k.
std::vector<unsigned> levi_submodule(int n, const IndexSet& J, int k);
// Subsets S maximizing the product of t over S (the top weight space of diag(t)).
std::vector<unsigned> top_weight_subsets(const TorusElt& t, int k);

// Product of s_i^{-1} = x_i(-1) y_i(1) x_i(-1) along a reduced word of w. For w in
// W^J it maps the nonnegative part of the L_J-module of e_1^..^e_k into the
// nonnegative orthant; wdot(w) can flip the sign of single basis vectors.
GroupElt positive_wdot(const WeylElt& w);

class OutOfScope : public Error {
 public:
  using Error::Error;
};

struct HPinningData {
  GroupElt h;        // h^{-1} g_s h = diag(t_bar), h^{-1} Z(g_s) h = L_J
  IndexSet J;
  TorusElt t_bar;
  std::string method;  // "scalar", "eigenbasis", "chain", "chain-flipped", "gl3"
};
// Throws UnsupportedExact for an irrational semisimple part and OutOfScope for
// cells the construction does not cover.
HPinningData h_pinning(const GroupElt& g);

struct ConjectureReport {
  std::string route;  // "pinning" or "real-algebraic"
  std::string method;
  IndexSet J;
  GroupElt h;
  bool part1 = false;
  std::vector<bool> flipped;  // per J-block orientation used in part (1)
  std::vector<bool> part2;    // index k-1
  std::vector<int> sign;      // overall sign of the pinned basis per k
  bool holds() const;
};
ConjectureReport check_conjecture(const GroupElt& g);

// u = y-word of w with the given parameters; w must be in W^J.
bool check_lemma_uv(int n, const IndexSet& J, const WeylElt& w, const QVec& params, int k);
bool top_eigenspace_matches_levi_module(const GroupElt& g, int k);

// Sampling for the conjecture corpus.
enum class AlphaCase { generic, both_one, a1_one_a2_gt, a1_one_a2_lt, a2_one_a1_gt, a2_one_a1_lt };
const std::vector<AlphaCase>& all_alpha_cases();
std::string to_string(AlphaCase c);
// Element of G_{s1,s2,>0} (s1_first) or G_{s2,s1,>0} in GL_3 with the torus in the given case.
CellPoint gl3_mixed_sample(bool s1_first, AlphaCase c, Rng& rng);
// Point of G_{w1,w2,>0} (supports must be comparable) whose Levi blocks have rational spectra and,
// at random, coinciding eigenvalues across blocks. Empty if the rational search gives up.
std::optional<CellPoint> comparable_support_sample(const WeylElt& w1, const WeylElt& w2, Rng& rng);
// Same, over random comparable supports.
std::optional<CellPoint> comparable_support_sample(int n, Rng& rng);

}  // namespace tpw
