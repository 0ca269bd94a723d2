#include "tpw/theorems.hpp"

#include <stdexcept>

#include "tpw/sampling.hpp"

namespace tpw {

namespace {

bool upper_unipotent(const GroupElt& u) {
  if (!u.square() || !u.is_upper_triangular()) return false;
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (u(i, i) != 1) return false;
  return true;
}

// Doolittle factorization v = l r with l lower unipotent, no pivoting.
GroupElt lower_unipotent_factor(QMat v) {
  std::size_t n = v.rows();
  GroupElt l = QMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v(k, k) == 0) throw std::logic_error("attracting_conjugator: eigenvector flag not in general position");
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = v(i, k) / v(k, k);
      l(i, k) = f;
      for (std::size_t j = k; j < n; ++j) v(i, j) -= f * v(k, j);
    }
  }
  return l;
}

Rat inf_norm(const QMat& m) {
  Rat best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    if (s > best) best = s;
  }
  return best;
}

std::vector<int> range(int b, int e) {
  std::vector<int> r;
  for (int i = b; i < e; ++i) r.push_back(i);
  return r;
}

GroupElt embed(const GroupElt& small, int n, int b) {
  GroupElt g = QMat::identity(n);
  for (std::size_t r = 0; r < small.rows(); ++r)
    for (std::size_t c = 0; c < small.cols(); ++c) g(b + r, b + c) = small(r, c);
  return g;
}

IndexSet word_support(int n, const std::vector<int>& word) {
  return support(WeylElt::from_word(n, word));
}

void check_words(const CellWords& in) {
  if (in.n < 1) throw std::invalid_argument("witness: n must be positive");
  if (in.word1.size() != in.params1.size() || in.word2.size() != in.params2.size())
    throw std::invalid_argument("witness: word and parameter lengths differ");
  for (const auto* w : {&in.word1, &in.word2}) {
    if (!is_reduced(in.n, *w)) throw std::invalid_argument("witness: word not reduced");
  }
  for (const auto* p : {&in.params1, &in.params2})
    for (const auto& a : *p)
      if (a <= 0) throw std::invalid_argument("witness: parameters must be positive");
}

// pi^+_K(u1) pi^-_K(u2).
GroupElt levi_product(const CellWords& in, const IndexSet& K) {
  GroupElt u1 = word_product(in.n, in.word1, in.params1, Sign::plus);
  GroupElt u2 = word_product(in.n, in.word2, in.params2, Sign::minus);
  return levi_project(u1, K, Sign::plus) * levi_project(u2, K, Sign::minus);
}

GroupElt block_of(const GroupElt& g, std::pair<int, int> bl) {
  auto idx = range(bl.first, bl.second);
  return g.submatrix(idx, idx);
}

// Eigenvalue of rank r (0 = largest) of a block with distinct positive eigenvalues,
// if it is rational.
std::optional<Rat> ranked_eigenvalue(const GroupElt& blk, int r) {
  QPoly p = charpoly(blk);
  if (!is_squarefree(p)) throw std::logic_error("witness: Levi block has a repeated eigenvalue");
  auto ivs = isolate_positive_roots(p);
  if (static_cast<int>(ivs.size()) != p.degree()) throw std::logic_error("witness: Levi block spectrum not positive");
  const auto& iv = ivs[r];
  if (iv.exact()) return iv.lo;
  for (const auto& x : rational_roots(p))
    if (x > iv.lo && x <= iv.hi) return x;
  return std::nullopt;
}

// Moves the first x-parameter inside the block so that its rank-r eigenvalue
// becomes rational.
Rat pin_eigenvalue(CellWords& w, const IndexSet& K, std::pair<int, int> bl, int r) {
  int k = -1;
  for (std::size_t s = 0; s < w.word1.size() && k < 0; ++s)
    if (w.word1[s] > bl.first && w.word1[s] < bl.second) k = static_cast<int>(s);
  if (k < 0) throw std::logic_error("witness: no x-letter inside the Levi block");
  auto family = [&](const Rat& a) {
    CellWords v = w;
    v.params1[k] = a;
    return block_of(levi_product(v, K), bl);
  };
  auto pin = pin_affine_eigenvalue(family, w.params1[k], r);
  if (!pin) throw UnsupportedExact("witness: could not pin a rational eigenvalue");
  w.params1[k] = pin->first;
  return pin->second;
}

// u1 u2 t = u1 t (t^{-1} u2 t); conjugating y_i(a) by t^{-1} rescales a by t_i / t_{i+1}.
CellPoint as_cellpoint(const CellWords& w, const TorusElt& t) {
  CellPoint p{w.word1, w.params1, t, w.word2, w.params2};
  for (std::size_t s = 0; s < w.word2.size(); ++s) {
    int i = w.word2[s];
    p.params2[s] *= t[i - 1] / t[i];
  }
  return p;
}

void assemble(WitnessReport& r) {
  const CellWords& w = r.used;
  GroupElt u1 = word_product(w.n, w.word1, w.params1, Sign::plus);
  GroupElt u2 = word_product(w.n, w.word2, w.params2, Sign::minus);
  r.trace = {{"u1", u1}, {"u2", u2}, {"t", torus(r.t)}};
  r.element = u1 * u2 * torus(r.t);
  r.cell = as_cellpoint(w, r.t);
  if (realize(r.cell) != r.element) throw std::logic_error("witness: cell rewrite does not match");
}

// Eigenvalues of the K-blocks at positions p and q must coincide after scaling
// p's block; returns the torus element of T' doing that.
WitnessReport degenerate_witness(const CellWords& in, const std::string& kind, int j, const WeylElt& sigma) {
  WitnessReport r;
  r.kind = kind;
  r.input = in;
  r.used = in;
  int n = in.n;
  r.K = word_support(n, in.word1) & word_support(n, in.word2);
  r.j = j;
  auto bl = blocks(n, r.K);
  WeylElt sinv = sigma.inverse();
  int pos[2] = {sinv(j - 1), sinv(j)};
  Rat val[2];
  int which[2];
  for (int s = 0; s < 2; ++s) {
    for (std::size_t k = 0; k < bl.size(); ++k)
      if (pos[s] >= bl[k].first && pos[s] < bl[k].second) which[s] = static_cast<int>(k);
    auto blk = bl[which[s]];
    int rank = pos[s] - blk.first;
    if (blk.second - blk.first == 1) {
      val[s] = 1;
      continue;
    }
    auto v = ranked_eigenvalue(block_of(levi_product(r.used, r.K), blk), rank);
    if (!v) {
      v = pin_eigenvalue(r.used, r.K, blk, rank);
      r.pinned = true;
    }
    val[s] = *v;
  }
  if (which[0] == which[1]) throw std::logic_error("witness: positions share a Levi block");
  r.t = TorusElt(n, Rat(1));
  auto [b, e] = bl[which[0]];
  for (int i = b; i < e; ++i) r.t[i] = val[1] / val[0];
  r.conjugators.push_back({"weyl", wdot(sigma)});
  assemble(r);
  return r;
}

}  // namespace

AttractingConjugator attracting_conjugator(const GroupElt& g) {
  if (!g.square()) throw std::invalid_argument("attracting_conjugator: not square");
  int n = static_cast<int>(g.rows());
  if (n > 8 || det(g) == 0 || !is_tnn(g) || !oscillatory_order(g, default_oscillatory_bound(n)))
    throw std::invalid_argument("attracting_conjugator: element is not oscillatory");
  auto spec = rational_spectrum(g);
  if (!spec) throw UnsupportedExact("attracting_conjugator: irrational spectrum");
  QMat v(n, n);
  for (int k = 0; k < n; ++k) {
    GroupElt m = g;
    for (int i = 0; i < n; ++i) m(i, i) -= (*spec)[k];
    auto ker = kernel_basis(m);
    if (ker.size() != 1) throw std::logic_error("attracting_conjugator: eigenvalue not simple");
    for (int i = 0; i < n; ++i) v(i, k) = ker[0][i];
  }
  AttractingConjugator out;
  out.u = lower_unipotent_factor(v);
  out.b = inverse(out.u) * g * out.u;
  if (!out.b.is_upper_triangular()) throw std::logic_error("attracting_conjugator: conjugate not upper triangular");
  out.t = out.b.diagonal();
  return out;
}

ConjStep torus_conj_step(const TorusElt& t, int i, const GroupElt& u) {
  int n = static_cast<int>(t.size());
  if (i < 1 || i >= n) throw std::invalid_argument("torus_conj_step: index out of range");
  if (!upper_unipotent(u) || static_cast<int>(u.rows()) != n)
    throw std::invalid_argument("torus_conj_step: u is not upper unipotent");
  if (!support(unipotent_cell(u, Sign::plus).w).contains(i))
    throw std::invalid_argument("torus_conj_step: i not in the support of u");
  ConjStep s;
  s.i = i;
  s.c = alpha(t, i);
  if (s.c >= 1) throw std::invalid_argument("torus_conj_step: alpha_i(t) >= 1");
  s.a = levi_project(u, IndexSet{i}, Sign::plus)(i - 1, i);
  s.b = (1 - s.c) / (s.c * s.a);
  s.result = gen(n, i, -s.b, Sign::minus) * torus(t) * u * gen(n, i, s.b, Sign::minus);
  return s;
}

TorusConj torus_conj(const TorusElt& t, const GroupElt& u) {
  int n = static_cast<int>(t.size());
  if (!upper_unipotent(u) || static_cast<int>(u.rows()) != n)
    throw std::invalid_argument("torus_conj: u is not upper unipotent");
  IndexSet J = support(unipotent_cell(u, Sign::plus).w);
  TorusConj out;
  out.u_prime = QMat::identity(n);
  out.dominant = torus_orbit_dominant(t, J);
  TorusElt cur_t = t;
  GroupElt cur_u = u;
  for (;;) {
    int i = 0;
    for (int k : J.indices())
      if (alpha(cur_t, k) < 1) {
        i = k;
        break;
      }
    if (i == 0) break;
    ConjStep s = torus_conj_step(cur_t, i, cur_u);
    out.u_prime = out.u_prime * gen(n, i, s.b, Sign::minus);
    cur_t = s.result.diagonal();
    TorusElt inv(n);
    for (int k = 0; k < n; ++k) inv[k] = 1 / cur_t[k];
    cur_u = torus(inv) * s.result;
    out.steps.push_back(std::move(s));
  }
  out.result = torus(cur_t) * cur_u;
  if (cur_t != out.dominant.t_bar) throw std::logic_error("torus_conj: final torus part is not the dominant one");
  return out;
}

GroupElt trace_product(const WitnessReport& r) {
  GroupElt g = QMat::identity(r.element.rows());
  for (const auto& s : r.trace) g = g * s.m;
  return g;
}

WitnessReport rss_witness(const CellWords& in) {
  check_words(in);
  WitnessReport r;
  r.kind = "rss";
  r.input = in;
  r.used = in;
  int n = in.n;
  r.K = word_support(n, in.word1) & word_support(n, in.word2);
  auto bl = blocks(n, r.K);
  GroupElt B = levi_product(in, r.K);

  // Spectral enclosure of each block: |lambda| in [1/|B^{-1}|, |B|] (row-sum norm).
  std::vector<Rat> lo, hi;
  for (std::size_t k = 0; k < bl.size(); ++k) {
    GroupElt blk = block_of(B, bl[k]);
    hi.push_back(inf_norm(blk));
    lo.push_back(1 / inf_norm(inverse(blk)));
    if (blk.rows() > 1) {
      try {
        auto ac = attracting_conjugator(blk);
        r.conjugators.push_back({"levi", embed(ac.u, n, bl[k].first)});
      } catch (const UnsupportedExact&) {
      }
    }
  }
  int nb = static_cast<int>(bl.size());
  for (Rat M = 2; M < Rat(mpz_class(1) << 64); M *= 2) {
    bool separated = true;
    for (int k = 0; k + 1 < nb; ++k) separated &= M * lo[k] > hi[k + 1];
    if (!separated) continue;
    r.t = TorusElt(n);
    Rat tau = 1;
    for (int k = nb - 1; k >= 0; --k) {
      for (int i = bl[k].first; i < bl[k].second; ++i) r.t[i] = tau;
      tau *= M;
    }
    assemble(r);
    r.outcome = is_regular_semisimple(r.element);
    if (r.outcome) return r;
  }
  throw std::logic_error("rss_witness: ladder exhausted");
}

WitnessReport non_rss_witness(const CellWords& in) {
  check_words(in);
  int n = in.n;
  IndexSet I = IndexSet::full(n), J1 = word_support(n, in.word1), J2 = word_support(n, in.word2);
  if (J1 == I && J2 == I) throw std::invalid_argument("non_rss_witness: both supports are full");
  // With supp(w2) full the roles of the two words swap (transpose symmetry).
  IndexSet Ja = J2 == I ? J1 : J2;
  IndexSet K = J1 & J2;
  int j = 0;
  for (int i = 1; i < n && j == 0; ++i)
    if (!Ja.contains(i)) j = i;
  WitnessReport r = degenerate_witness(in, "non-rss", j, longest(n, Ja) * longest(n, K));
  r.outcome = is_regular_semisimple(r.element);
  return r;
}

WitnessReport non_regular_witness(const CellWords& in) {
  check_words(in);
  int n = in.n;
  if (n < 2) throw std::invalid_argument("non_regular_witness: n must be at least 2");
  IndexSet I = IndexSet::full(n), J1 = word_support(n, in.word1), J2 = word_support(n, in.word2);
  if (J1 == I || J2 == I) throw std::invalid_argument("non_regular_witness: a support is full");
  int j = root_lemma_witness(n, J1, J2);
  WitnessReport r = degenerate_witness(in, "non-regular", j, longest(n, J2) * longest(n, J1 & J2));
  r.outcome = is_regular(r.element);
  return r;
}

RegularUnipotentReport regular_unipotent_classification(int n, int sample_count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("regular_unipotent_classification: n must be at least 2");
  RegularUnipotentReport rep;
  rep.n = n;
  IndexSet I = IndexSet::full(n);
  std::uint64_t trial = 0;
  auto elems = all_elements(n);
  for (const auto& w : elems) {
    if (!(support(w) == I)) continue;
    auto word = w.word();
    for (int s = 0; s < sample_count; ++s) {
      Rng rng = Rng::for_trial(seed, trial++);
      QVec a = random_params(word.size(), rng);
      for (Sign sg : {Sign::plus, Sign::minus}) {
        ++rep.full_support_samples;
        if (!is_regular_unipotent(word_product(n, word, a, sg)))
          rep.violations.push_back("full support " + std::string(sg == Sign::plus ? "U+" : "U-") +
                                   " sample not regular unipotent: " + to_string(word_product(n, word, a, sg)));
      }
    }
  }
  for (const auto& w1 : elems) {
    IndexSet s1 = support(w1);
    if (s1.empty()) continue;
    for (const auto& w2 : elems) {
      IndexSet s2 = support(w2);
      if (s2.empty() || !(s1 & s2).empty()) continue;
      for (int s = 0; s < sample_count; ++s) {
        Rng rng = Rng::for_trial(seed, trial++);
        GroupElt g = word_product(n, w1.word(), random_params(w1.length(), rng), Sign::plus) *
                     word_product(n, w2.word(), random_params(w2.length(), rng), Sign::minus);
        ++rep.mixed_samples;
        if (!is_unipotent(g) || is_regular(g))
          rep.violations.push_back("mixed-support sample misclassified: " + to_string(g));
      }
    }
  }
  return rep;
}

}  // namespace tpw
