#include "tpw/jordanconj.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "tpw/theorems.hpp"

namespace tpw {

namespace {

void lex_subsets(int n, int k, int start, unsigned mask, std::vector<unsigned>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = start; i <= n - k; ++i) lex_subsets(n, k - 1, i + 1, mask | (1u << i), out);
}

std::vector<int> range(int b, int e) {
  std::vector<int> r(e - b);
  std::iota(r.begin(), r.end(), b);
  return r;
}

GroupElt block_of(const GroupElt& g, std::pair<int, int> bl) {
  auto idx = range(bl.first, bl.second);
  return g.submatrix(idx, idx);
}

GroupElt embed(const GroupElt& small, int n, int b) {
  GroupElt g = QMat::identity(n);
  for (std::size_t r = 0; r < small.rows(); ++r)
    for (std::size_t c = 0; c < small.cols(); ++c) g(b + r, b + c) = small(r, c);
  return g;
}

// Upper unipotent u with s u = u diag(d), u_ij = 0 whenever d_i = d_j.
GroupElt eigen_unipotent(const GroupElt& s, const TorusElt& d) {
  int n = static_cast<int>(d.size());
  GroupElt u = QMat::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      Rat sum = 0;
      for (int l = i + 1; l <= j; ++l) sum += s(i, l) * u(l, j);
      if (d[i] != d[j]) {
        u(i, j) = sum / (d[j] - d[i]);
      } else if (sum != 0) {
        throw std::logic_error("h_pinning: semisimple part not diagonalizable by a unipotent");
      }
    }
  return u;
}

// Sorting permutation: w(j) is the position of the j-th largest entry of d
// (stable), so wdot(w)^{-1} diag(d) wdot(w) is decreasing.
WeylElt sorting_weyl(const TorusElt& d) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });
  return WeylElt(order);
}

// Proof chain for g in G_{w1,w2,>0} with supp(w2) inside supp(w1).
HPinningData chain(const GroupElt& g, const CellPoint& cell) {
  int n = cell.n();
  IndexSet J2 = support(cell.w2());
  // Attracting conjugator on each block of the Levi part of g in P^+_{J2}.
  GroupElt p = levi_project(g, J2, Sign::plus);
  GroupElt u1 = QMat::identity(n);
  for (auto bl : blocks(n, J2)) {
    if (bl.second - bl.first < 2) continue;
    auto ac = attracting_conjugator(block_of(p, bl));
    u1 = u1 * embed(ac.u, n, bl.first);
  }
  GroupElt b1 = inverse(u1) * g * u1;
  if (!b1.is_upper_triangular()) throw std::logic_error("h_pinning: conjugate is not upper triangular");
  TorusElt t = b1.diagonal();
  TorusElt tinv;
  for (const auto& a : t) tinv.push_back(1 / a);
  auto tc = torus_conj(t, torus(tinv) * b1);
  GroupElt u_minus = u1 * tc.u_prime;
  const GroupElt& g1 = tc.result;
  TorusElt d = g1.diagonal();
  GroupElt u_plus = eigen_unipotent(jordan_chevalley_mult(g1).first, d);
  GroupElt h = u_minus * u_plus * positive_wdot(sorting_weyl(d));
  TorusElt tbar = d;
  std::stable_sort(tbar.begin(), tbar.end(), std::greater<Rat>());
  return {h, levi_type(tbar), tbar, "chain"};
}

// GL_3 cells G_{s1,s2,>0} and G_{s2,s1,>0} with exactly one alpha_i(t) = 1: a single
// root-subgroup element conjugates g to t u with u in the Levi of {i}.
HPinningData gl3_case(const GroupElt& g, bool s1_first) {
  const Rat &g11 = g(0, 0), &g22 = g(1, 1), &g33 = g(2, 2);
  GroupElt h;
  IndexSet J;
  if (s1_first && g11 == g22) {
    h = gen(3, 2, g(2, 1) / (g22 - g33), Sign::minus);
    J = IndexSet{1};
  } else if (s1_first) {
    h = gen(3, 1, g(0, 1) / (g22 - g11), Sign::plus);
    J = IndexSet{2};
  } else if (g11 == g22) {
    h = gen(3, 2, g(1, 2) / (g33 - g22), Sign::plus);
    J = IndexSet{1};
  } else {
    h = gen(3, 1, g(1, 0) / (g11 - g22), Sign::minus);
    J = IndexSet{2};
  }
  GroupElt c = inverse(h) * g * h;
  if (!in_parabolic(c, J, Sign::plus) || levi_project(c, J, Sign::plus) != c)
    throw std::logic_error("h_pinning: GL_3 conjugate is not in the Levi");
  return {h, J, g.diagonal(), "gl3"};
}

// Sign pattern of the eigenvector for the largest eigenvalue of m, decided
// exactly at the isolated real root. +1 / -1 if it can be chosen nonnegative /
// nonpositive, 0 if it has entries of both signs.
int top_eigenvector_sign(const QMat& m) {
  int N = static_cast<int>(m.rows());
  QPoly p = charpoly(m);
  QPoly q = squarefree_part(p);
  auto ivs = isolate_positive_roots(q);
  if (ivs.empty()) throw std::logic_error("top eigenvector: no positive eigenvalue");
  RootInterval iv = ivs[0];
  if (sign_at_root(q, iv, p.derivative()) == 0) throw UnsupportedExact("top eigenvector: multiple top eigenvalue");
  // adj(xI - m) has polynomial entries of degree < N; interpolate at points above every root.
  Rat bound = 1;
  for (int i = 0; i < q.degree(); ++i) bound += abs(q.coeff(i) / q.lead());
  std::vector<Rat> xs;
  std::vector<QMat> adj;
  for (int s = 0; s < N; ++s) {
    Rat x = bound + s;
    QMat a = x * QMat::identity(N) - m;
    xs.push_back(x);
    adj.push_back(det(a) * inverse(a));
  }
  auto entry_poly = [&](int r, int c) {
    QPoly out;
    for (int s = 0; s < N; ++s) {
      QPoly basis = QPoly::constant(1);
      Rat denom = 1;
      for (int l = 0; l < N; ++l) {
        if (l == s) continue;
        basis = basis * (QPoly::x() - QPoly::constant(xs[l]));
        denom *= xs[s] - xs[l];
      }
      out = out + (adj[s](r, c) / denom) * basis;
    }
    return out;
  };
  for (int c = 0; c < N; ++c) {
    bool pos = false, neg = false;
    for (int r = 0; r < N; ++r) {
      int sg = sign_at_root(q, iv, entry_poly(r, c));
      pos |= sg > 0;
      neg |= sg < 0;
    }
    if (!pos && !neg) continue;  // this column of the adjugate vanishes at the root
    return pos && neg ? 0 : (pos ? 1 : -1);
  }
  throw std::logic_error("top eigenvector: adjugate vanishes at a simple root");
}

ConjectureReport real_algebraic_route(const GroupElt& g, const GroupElt& gu) {
  int n = static_cast<int>(g.rows());
  ConjectureReport rep;
  rep.route = "real-algebraic";
  rep.method = "rss";
  rep.part1 = gu.is_identity();
  for (int k = 1; k <= n; ++k) {
    int sg = top_eigenvector_sign(compound(g, k));
    rep.part2.push_back(sg != 0);
    rep.sign.push_back(sg);
  }
  return rep;
}

Rat small_param(Rng& rng) { return frac(rng.uniform(1, 4), rng.uniform(1, 4)); }

// For an affine family a -> m(a), det(x - m(a)) = f0(x) + a f1(x), so every rational
// eigenvalue target r fixes a = -f0(r)/f1(r). Targets run through p/q in order of
// p + q <= max_height; returns the first positive a with a fully rational spectrum.
std::optional<std::pair<Rat, QVec>> rational_spectrum_on_line(const std::function<QMat(const Rat&)>& m,
                                                              int max_height) {
  QPoly f0 = charpoly(m(0));
  QPoly f1 = charpoly(m(1)) - f0;
  for (int h = 2; h <= max_height; ++h)
    for (int q = 1; q < h; ++q) {
      if (std::gcd(h - q, q) != 1) continue;
      Rat r = frac(h - q, q);
      Rat d = f1.eval(r);
      if (d == 0) continue;
      Rat a = -f0.eval(r) / d;
      if (a <= 0) continue;
      QPoly rest = divmod(f0 + a * f1, QPoly::x() - QPoly::constant(r)).first;
      if (rest.degree() == 2) {
        Rat disc = rest.coeff(1) * rest.coeff(1) - 4 * rest.coeff(0) * rest.coeff(2);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_num_mpz_t()) || !mpz_perfect_square_p(disc.get_den_mpz_t()))
          continue;
      }
      if (auto spec = rational_spectrum(m(a))) return std::make_pair(a, *spec);
    }
  return std::nullopt;
}

}  // namespace

WedgeSpace::WedgeSpace(int n, int k) : n_(n), k_(k) {
  if (k < 0 || k > n || n > 31) throw std::invalid_argument("WedgeSpace: need 0 <= k <= n");
  lex_subsets(n, k, 0, 0, subsets_);
}

int WedgeSpace::index_of(unsigned mask) const {
  for (std::size_t i = 0; i < subsets_.size(); ++i)
    if (subsets_[i] == mask) return static_cast<int>(i);
  throw std::invalid_argument("WedgeSpace: subset not in the basis");
}

std::string WedgeSpace::label(int idx) const {
  std::string s = "{";
  for (int i = 0; i < n_; ++i)
    if ((subsets_[idx] >> i) & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

QMat compound(const GroupElt& g, int k) {
  int n = static_cast<int>(g.rows());
  if (!g.square() || k < 1 || k > n) throw std::invalid_argument("compound: need 1 <= k <= n");
  WedgeSpace V(n, k);
  QMat c(V.dim(), V.dim());
  auto members = [&](unsigned m) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) out.push_back(i);
    return out;
  };
  if (n <= 8) {
    MinorTable mt(g);
    for (int r = 0; r < V.dim(); ++r)
      for (int s = 0; s < V.dim(); ++s) c(r, s) = mt(V.subsets()[r], V.subsets()[s]);
  } else {
    for (int r = 0; r < V.dim(); ++r)
      for (int s = 0; s < V.dim(); ++s) c(r, s) = det(g.submatrix(members(V.subsets()[r]), members(V.subsets()[s])));
  }
  return c;
}

TopEigenspace top_generalized_eigenspace(const GroupElt& g, int k) {
  auto spec = rational_spectrum(g);
  if (!spec) throw UnsupportedExact("top_generalized_eigenspace: irrational spectrum");
  int n = static_cast<int>(g.rows());
  TopEigenspace out;
  out.c_M = 1;
  for (int i = 0; i < k; ++i) out.c_M *= (*spec)[i];
  int mult = 0;
  WedgeSpace V(n, k);
  for (unsigned m : V.subsets()) {
    Rat prod = 1;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) prod *= (*spec)[i];
    mult += prod == out.c_M;
  }
  QMat c = compound(g, k);
  QMat d = c - out.c_M * QMat::identity(c.rows());
  out.basis = kernel_basis(pow(d, static_cast<unsigned>(mult)));
  if (static_cast<int>(out.basis.size()) != mult) throw std::logic_error("top_generalized_eigenspace: dimension mismatch");
  return out;
}

std::vector<unsigned> levi_submodule(int n, const IndexSet& J, int k) {
  WedgeSpace V(n, k);
  std::set<unsigned> seen{(1u << k) - 1};
  std::queue<unsigned> todo;
  todo.push((1u << k) - 1);
  while (!todo.empty()) {
    unsigned m = todo.front();
    todo.pop();
    for (int j : J.indices()) {
      // y_j sends e_j to e_{j+1}.
      if (((m >> (j - 1)) & 1u) && !((m >> j) & 1u)) {
        unsigned next = m ^ (1u << (j - 1)) ^ (1u << j);
        if (seen.insert(next).second) todo.push(next);
      }
    }
  }
  std::vector<unsigned> out;
  for (unsigned m : V.subsets())
    if (seen.count(m)) out.push_back(m);
  return out;
}

std::vector<unsigned> top_weight_subsets(const TorusElt& t, int k) {
  int n = static_cast<int>(t.size());
  WedgeSpace V(n, k);
  std::vector<Rat> prod;
  for (unsigned m : V.subsets()) {
    Rat p = 1;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) p *= t[i];
    prod.push_back(p);
  }
  Rat best = *std::max_element(prod.begin(), prod.end());
  std::vector<unsigned> out;
  for (int i = 0; i < V.dim(); ++i)
    if (prod[i] == best) out.push_back(V.subsets()[i]);
  return out;
}

GroupElt positive_wdot(const WeylElt& w) { return inverse(wdot(w.inverse())); }

HPinningData h_pinning(const GroupElt& g) {
  if (!g.square() || det(g) == 0 || !is_tnn(g)) throw std::invalid_argument("h_pinning: expected an invertible TNN element");
  int n = static_cast<int>(g.rows());
  JordanPair jp = jordan(g);
  if (!jp.levi) throw UnsupportedExact("h_pinning: semisimple part has an irrational spectrum");
  const TorusElt& spec = jp.levi->t_std;
  HPinningData out;
  if (std::all_of(spec.begin(), spec.end(), [&](const Rat& a) { return a == spec[0]; })) {
    out = {QMat::identity(n), IndexSet::full(n), spec, "scalar"};
  } else if (jp.levi->J.empty()) {
    out = {jp.levi->h, IndexSet(), spec, "eigenbasis"};
  } else {
    CellPoint cell = factor_cell(g);
    IndexSet J1 = support(cell.w1()), J2 = support(cell.w2());
    if (n == 3 && J1 == IndexSet{1} && J2 == IndexSet{2}) {
      out = gl3_case(g, true);
    } else if (n == 3 && J1 == IndexSet{2} && J2 == IndexSet{1}) {
      out = gl3_case(g, false);
    } else if (J2.subset_of(J1)) {
      out = chain(g, cell);
    } else if (J1.subset_of(J2)) {
      // Conjugating by the antidiagonal swaps x_i and y_{n-i} and moves g to the cell
      // handled above.
      GroupElt j0 = antidiagonal(n);
      GroupElt gt = j0 * g * j0;
      out = chain(gt, factor_cell(gt));
      out.h = j0 * out.h;
      out.method = "chain-flipped";
    } else {
      throw OutOfScope("h_pinning: supports are not comparable");
    }
  }
  if (inverse(out.h) * jp.s * out.h != torus(out.t_bar))
    throw std::logic_error("h_pinning: conjugator does not diagonalize the semisimple part");
  return out;
}

bool ConjectureReport::holds() const {
  return part1 && std::all_of(part2.begin(), part2.end(), [](bool b) { return b; });
}

ConjectureReport check_conjecture(const GroupElt& g) {
  int n = static_cast<int>(g.rows());
  auto [gs, gu] = jordan_chevalley_mult(g);
  HPinningData hp;
  try {
    hp = h_pinning(g);
  } catch (const UnsupportedExact&) {
    if (is_squarefree(charpoly(g))) return real_algebraic_route(g, gu);
    throw;
  }
  ConjectureReport rep;
  rep.route = "pinning";
  rep.method = hp.method;
  rep.J = hp.J;
  rep.h = hp.h;
  GroupElt hinv = inverse(hp.h);

  // Part (1): h^{-1} g_u h in L_{J,>=0}, each block in either orientation.
  GroupElt m = hinv * gu * hp.h;
  rep.part1 = in_parabolic(m, hp.J, Sign::plus) && levi_project(m, hp.J, Sign::plus) == m;
  for (auto bl : blocks(n, hp.J)) {
    GroupElt b = block_of(m, bl);
    GroupElt j0 = antidiagonal(bl.second - bl.first);
    bool straight = is_tnn(b);
    bool flip = !straight && is_tnn(j0 * b * j0);
    rep.flipped.push_back(flip);
    rep.part1 = rep.part1 && (straight || flip);
  }

  // Part (2): for each fundamental representation, the pinned cone equals the
  // orthant slice of the top generalized eigenspace, up to an overall sign.
  for (int k = 1; k <= n; ++k) {
    WedgeSpace V(n, k);
    QMat ch = compound(hp.h, k);
    auto S = top_weight_subsets(hp.t_bar, k);
    TopEigenspace top = top_generalized_eigenspace(g, k);
    Cone right = cone_meet_orthant(top.basis);
    bool ok = false;
    int used = 0;
    if (top.basis.size() == S.size()) {
      for (int sg : {1, -1}) {
        Cone left;
        for (unsigned s : S) {
          QVec v = ch.column(V.index_of(s));
          for (auto& x : v) x *= sg;
          left.gens.push_back(v);
        }
        if (cone_equal(left, right)) {
          ok = true;
          used = sg;
          break;
        }
      }
    }
    rep.part2.push_back(ok);
    rep.sign.push_back(used);
  }
  return rep;
}

bool check_lemma_uv(int n, const IndexSet& J, const WeylElt& w, const QVec& params, int k) {
  if (!is_min_right_coset_rep(w, J)) throw std::invalid_argument("check_lemma_uv: w is not in W^J");
  GroupElt u = word_product(n, w.word(), params, Sign::minus);
  WedgeSpace V(n, k);
  QMat cu = compound(u, k);
  Cone pushed;
  for (unsigned s : levi_submodule(n, J, k)) pushed.gens.push_back(cu.column(V.index_of(s)));
  return cone_equal(pushed, cone_meet_orthant(pushed.gens));
}

bool top_eigenspace_matches_levi_module(const GroupElt& g, int k) {
  int n = static_cast<int>(g.rows());
  JordanPair jp = jordan(g);
  if (!jp.levi) throw UnsupportedExact("top_eigenspace_matches_levi_module: semisimple part has an irrational spectrum");
  return top_generalized_eigenspace(g, k).basis.size() == levi_submodule(n, jp.levi->J, k).size();
}

const std::vector<AlphaCase>& all_alpha_cases() {
  static const std::vector<AlphaCase> cases{AlphaCase::generic,      AlphaCase::both_one,
                                            AlphaCase::a1_one_a2_gt, AlphaCase::a1_one_a2_lt,
                                            AlphaCase::a2_one_a1_gt, AlphaCase::a2_one_a1_lt};
  return cases;
}

std::string to_string(AlphaCase c) {
  switch (c) {
    case AlphaCase::generic: return "generic";
    case AlphaCase::both_one: return "a1=a2=1";
    case AlphaCase::a1_one_a2_gt: return "a1=1,a2>1";
    case AlphaCase::a1_one_a2_lt: return "a1=1,a2<1";
    case AlphaCase::a2_one_a1_gt: return "a2=1,a1>1";
    case AlphaCase::a2_one_a1_lt: return "a2=1,a1<1";
  }
  return "?";
}

namespace {

// realize() without the positivity validation, for affine families through 0.
GroupElt realize_unchecked(const CellPoint& p) {
  int n = p.n();
  return word_product(n, p.word1, p.params1, Sign::plus) * torus(p.t) * word_product(n, p.word2, p.params2, Sign::minus);
}

}  // namespace

CellPoint gl3_mixed_sample(bool s1_first, AlphaCase c, Rng& rng) {
  CellPoint p;
  p.word1 = {s1_first ? 1 : 2};
  p.word2 = {s1_first ? 2 : 1};
  p.params1 = {rng.param()};
  p.params2 = {rng.param()};
  Rat a = rng.param();
  Rat up = a * (1 + rng.param()), down = a / (1 + rng.param());
  switch (c) {
    case AlphaCase::generic:
      // Distinct entries; t1 = t3 would make g non-regular-semisimple.
      do p.t = {rng.param(), rng.param(), rng.param()};
      while (p.t[0] == p.t[1] || p.t[1] == p.t[2] || p.t[0] == p.t[2]);
      break;
    case AlphaCase::both_one: p.t = {a, a, a}; break;
    case AlphaCase::a1_one_a2_gt: p.t = {a, a, down}; break;
    case AlphaCase::a1_one_a2_lt: p.t = {a, a, up}; break;
    case AlphaCase::a2_one_a1_gt: p.t = {up, a, a}; break;
    case AlphaCase::a2_one_a1_lt: p.t = {down, a, a}; break;
  }
  return p;
}

namespace {

std::optional<CellPoint> comparable_support_attempt(const WeylElt& w1, const WeylElt& w2, Rng& rng) {
  int n = w1.n();
  IndexSet Jx = support(w1), Jy = support(w2);
  CellPoint p = random_cellpoint(w1, w2, rng);
  IndexSet small = Jx & Jy;
  Sign side = small == Jy ? Sign::plus : Sign::minus;
  auto bls = blocks(n, small);
  auto block_at = [&](const CellPoint& q, std::pair<int, int> bl) {
    return block_of(levi_project(realize_unchecked(q), small, side), bl);
  };
  std::vector<QVec> spectra;
  for (auto bl : bls) {
    int m = bl.second - bl.first;
    if (m == n) return p;  // both supports full: regular semisimple, any spectrum
    auto inside = [&](int letter) { return letter > bl.first && letter < bl.second; };
    // Every parameter enters the block affinely, each letter occurring once.
    std::vector<Rat*> knobs;
    for (std::size_t s = 0; s < p.word1.size(); ++s)
      if (inside(p.word1[s])) knobs.push_back(&p.params1[s]);
    for (std::size_t s = 0; s < p.word2.size(); ++s)
      if (inside(p.word2[s])) knobs.push_back(&p.params2[s]);
    std::optional<QVec> spec = rational_spectrum(block_at(p, bl));
    for (int attempt = 0; attempt < 24 && !spec; ++attempt) {
      if (attempt > 0 && attempt % knobs.size() == 0) {
        for (Rat* k : knobs) *k = small_param(rng);
        for (int i = bl.first; i < bl.second; ++i) p.t[i] = small_param(rng);
      }
      Rat* knob = knobs[attempt % knobs.size()];
      auto family = [&](const Rat& a) {
        Rat keep = *knob;
        *knob = a;
        GroupElt b = block_at(p, bl);
        *knob = keep;
        return b;
      };
      if (auto hit = rational_spectrum_on_line(family, m == 2 ? 12 : 80)) {
        *knob = hit->first;
        spec = hit->second;
      }
    }
    if (!spec) return std::nullopt;
    spectra.push_back(*spec);
  }
  // Force eigenvalue coincidences across blocks by rescaling t on a block.
  for (std::size_t b = 1; b < bls.size(); ++b) {
    if (!rng.coin()) continue;
    std::size_t other = rng.uniform(0, static_cast<int>(b) - 1);
    const Rat& target = spectra[other][rng.uniform(0, static_cast<int>(spectra[other].size()) - 1)];
    Rat scale = target / spectra[b][rng.uniform(0, static_cast<int>(spectra[b].size()) - 1)];
    for (int i = bls[b].first; i < bls[b].second; ++i) p.t[i] *= scale;
    for (auto& x : spectra[b]) x *= scale;
  }
  return p;
}

}  // namespace

std::optional<CellPoint> comparable_support_sample(const WeylElt& w1, const WeylElt& w2, Rng& rng) {
  IndexSet Jx = support(w1), Jy = support(w2);
  if (!Jx.subset_of(Jy) && !Jy.subset_of(Jx)) throw std::invalid_argument("comparable_support_sample: supports not comparable");
  for (int redraw = 0; redraw < 8; ++redraw)
    if (auto p = comparable_support_attempt(w1, w2, rng)) return p;
  return std::nullopt;
}

std::optional<CellPoint> comparable_support_sample(int n, Rng& rng) {
  IndexSet big, small;
  for (int i = 1; i < n; ++i)
    if (rng.coin()) {
      big.insert(i);
      if (rng.coin()) small.insert(i);
    }
  WeylElt wb = random_weyl_with_support(n, big, rng), ws = random_weyl_with_support(n, small, rng);
  return rng.coin() ? comparable_support_sample(ws, wb, rng) : comparable_support_sample(wb, ws, rng);
}

}  // namespace tpw
