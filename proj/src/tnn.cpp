#include "tpw/tnn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tpw {

GroupElt gen(int n, int i, const Rat& a, Sign sign) {
  if (i < 1 || i >= n) throw std::invalid_argument("gen: index out of range");
  GroupElt g = QMat::identity(n);
  if (sign == Sign::plus) g(i - 1, i) = a;
  else g(i, i - 1) = a;
  return g;
}

GroupElt word_product(int n, const std::vector<int>& word, const QVec& params, Sign sign) {
  if (word.size() != params.size()) throw std::invalid_argument("word/parameter length mismatch");
  GroupElt g = QMat::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) {
    // Right multiplication by x_i(a) adds a * column i to column i+1; y_i(a) the reverse.
    int i = word[k];
    if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range");
    int src = sign == Sign::plus ? i - 1 : i, dst = sign == Sign::plus ? i : i - 1;
    for (int r = 0; r < n; ++r)
      if (g(r, src) != 0) g(r, dst) += params[k] * g(r, src);
  }
  return g;
}

GroupElt wdot(const WeylElt& w) {
  int n = w.n();
  GroupElt g = QMat::identity(n);
  for (int i : w.word()) {
    GroupElt s = gen(n, i, 1, Sign::plus) * gen(n, i, -1, Sign::minus) * gen(n, i, 1, Sign::plus);
    g = g * s;
  }
  return g;
}

GroupElt torus(const TorusElt& t) { return QMat::diag(t); }

Rat alpha(const TorusElt& t, int i) { return t[i - 1] / t[i]; }

TorusElt coroot(int n, int i, const Rat& c) {
  TorusElt t(n, Rat(1));
  t[i - 1] = c;
  t[i] = 1 / c;
  return t;
}

void CellPoint::validate() const {
  int N = n();
  if (N < 1) throw std::invalid_argument("CellPoint: empty torus");
  for (const auto& x : t)
    if (x <= 0) throw std::invalid_argument("CellPoint: torus entries must be positive");
  auto check = [N](const std::vector<int>& word, const QVec& params) {
    if (word.size() != params.size()) throw std::invalid_argument("CellPoint: word/parameter length mismatch");
    for (int i : word)
      if (i < 1 || i >= N) throw std::invalid_argument("CellPoint: letter out of range");
    if (!is_reduced(N, word)) throw std::invalid_argument("CellPoint: word not reduced");
    for (const auto& a : params)
      if (a <= 0) throw std::invalid_argument("CellPoint: parameters must be positive");
  };
  check(word1, params1);
  check(word2, params2);
}

GroupElt realize(const CellPoint& p) {
  p.validate();
  int n = p.n();
  GroupElt g = word_product(n, p.word1, p.params1, Sign::plus);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) *= p.t[c];
  return g * word_product(n, p.word2, p.params2, Sign::minus);
}

GroupElt realize_minus_first(const CellPoint& p) {
  p.validate();
  int n = p.n();
  return word_product(n, p.word2, p.params2, Sign::minus) * torus(p.t) *
         word_product(n, p.word1, p.params1, Sign::plus);
}

MinorTable::MinorTable(const QMat& g) : n_(static_cast<int>(g.rows())) {
  if (!g.square()) throw std::invalid_argument("MinorTable: non-square");
  if (n_ > 8) throw std::invalid_argument("MinorTable: n > 8 not supported");
  const unsigned full = 1u << n_;
  m_.assign(std::size_t(full) * full, Rat(0));
  std::vector<std::vector<unsigned>> by_size(n_ + 1);
  for (unsigned s = 0; s < full; ++s) by_size[std::popcount(s)].push_back(s);
  m_[0] = 1;
  for (int k = 1; k <= n_; ++k)
    for (unsigned R : by_size[k]) {
      int r0 = std::countr_zero(R);
      unsigned R1 = R & (R - 1);
      for (unsigned C : by_size[k]) {
        Rat acc = 0;
        int pos = 0;
        for (unsigned rest = C; rest; rest &= rest - 1, ++pos) {
          int c = std::countr_zero(rest);
          const Rat& e = g(r0, c);
          if (e == 0) continue;
          const Rat& sub = (*this)(R1, C & ~(1u << c));
          if (sub == 0) continue;
          if (pos % 2) acc -= e * sub;
          else acc += e * sub;
        }
        m_[(std::size_t(R) << n_) | C] = acc;
      }
    }
}

bool MinorTable::all_nonnegative() const {
  const unsigned full = 1u << n_;
  for (unsigned R = 1; R < full; ++R)
    for (unsigned C = 1; C < full; ++C)
      if (std::popcount(R) == std::popcount(C) && (*this)(R, C) < 0) return false;
  return true;
}

bool MinorTable::all_positive() const {
  const unsigned full = 1u << n_;
  for (unsigned R = 1; R < full; ++R)
    for (unsigned C = 1; C < full; ++C)
      if (std::popcount(R) == std::popcount(C) && (*this)(R, C) <= 0) return false;
  return true;
}

bool is_tnn(const GroupElt& g) { return MinorTable(g).all_nonnegative(); }

bool is_tp_full(const GroupElt& g) { return MinorTable(g).all_positive(); }

bool is_tp(const GroupElt& g) {
  int n = static_cast<int>(g.rows());
  // Initial minors: contiguous rows and columns, one of them starting at the first index.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = std::min(i, j) + 1;
      std::vector<int> rows(k), cols(k);
      std::iota(rows.begin(), rows.end(), i - k + 1);
      std::iota(cols.begin(), cols.end(), j - k + 1);
      if (det(g.submatrix(rows, cols)) <= 0) return false;
    }
  return true;
}

GaussFactors gauss_utu(const GroupElt& g) {
  if (!g.square()) throw std::invalid_argument("gauss_utu: non-square");
  int n = static_cast<int>(g.rows());
  QMat a = g;
  for (int k = n - 1; k >= 0; --k) {
    if (a(k, k) == 0)
      throw FactorizationError(n - k, "gauss_utu: trailing principal minor of size " +
                                          std::to_string(n - k) + " vanishes");
    for (int i = 0; i < k; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int j = 0; j <= k; ++j) a(i, j) -= f * a(k, j);
    }
  }
  GaussFactors out;
  out.t = a.diagonal();
  QMat lower = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) lower(i, j) /= out.t[i];
  out.u_minus = lower;
  out.u_plus = g * inverse(a);
  return out;
}

namespace {

bool is_unipotent_triangular(const GroupElt& u, Sign sign) {
  if (!u.square()) return false;
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (u(i, i) != 1) return false;
  return sign == Sign::plus ? u.is_upper_triangular() : u.is_lower_triangular();
}

// Largest a with gen(i, -a) * u still totally nonnegative.
Rat peel_bound(const MinorTable& mt, int i, Sign sign) {
  int n = mt.n();
  unsigned top = 1u << (i - 1), bot = 1u << i;
  unsigned keep = sign == Sign::plus ? top : bot, drop = sign == Sign::plus ? bot : top;
  std::optional<Rat> best;
  for (unsigned R = 1; R < (1u << n); ++R) {
    if (!(R & keep) || (R & drop)) continue;
    unsigned R2 = (R & ~keep) | drop;
    for (unsigned C = 1; C < (1u << n); ++C) {
      if (std::popcount(C) != std::popcount(R)) continue;
      const Rat& den = mt(R2, C);
      if (den <= 0) continue;
      Rat q = mt(R, C) / den;
      if (!best || q < *best) best = q;
    }
  }
  return best.value_or(Rat(0));
}

}  // namespace

UnipotentCell unipotent_cell(const GroupElt& u, Sign sign) {
  if (!is_unipotent_triangular(u, sign)) throw std::invalid_argument("unipotent_cell: not unipotent triangular");
  int n = static_cast<int>(u.rows());
  GroupElt cur = u;
  std::vector<int> word;
  QVec params;
  while (!cur.is_identity()) {
    MinorTable mt(cur);
    if (!mt.all_nonnegative()) throw std::invalid_argument("unipotent_cell: not totally nonnegative");
    int chosen = 0;
    Rat a;
    for (int i = 1; i < n && !chosen; ++i) {
      a = peel_bound(mt, i, sign);
      if (a > 0) chosen = i;
    }
    if (!chosen) throw std::invalid_argument("unipotent_cell: no admissible generator");
    word.push_back(chosen);
    params.push_back(a);
    cur = gen(n, chosen, -a, sign) * cur;
    if (word.size() > static_cast<std::size_t>(n * (n - 1) / 2))
      throw std::invalid_argument("unipotent_cell: peeling exceeded the longest length");
  }
  WeylElt w = WeylElt::from_word(n, word);
  if (w.length() != static_cast<int>(word.size()) || word_product(n, word, params, sign) != u)
    throw std::logic_error("unipotent_cell: re-multiplication mismatch");
  return {w, params};
}

CellPoint factor_cell(const GroupElt& g) {
  GaussFactors f = gauss_utu(g);
  for (const auto& x : f.t)
    if (x <= 0) throw std::invalid_argument("factor_cell: torus part not positive");
  UnipotentCell up = unipotent_cell(f.u_plus, Sign::plus);
  UnipotentCell um = unipotent_cell(f.u_minus, Sign::minus);
  return CellPoint{up.w.word(), up.params, f.t, um.w.word(), um.params};
}

bool in_parabolic(const GroupElt& g, const IndexSet& J, Sign sign) {
  int n = static_cast<int>(g.rows());
  std::vector<int> block_of(n);
  auto bl = blocks(n, J);
  for (std::size_t b = 0; b < bl.size(); ++b)
    for (int k = bl[b].first; k < bl[b].second; ++k) block_of[k] = static_cast<int>(b);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      bool outside = sign == Sign::plus ? block_of[r] > block_of[c] : block_of[r] < block_of[c];
      if (outside && g(r, c) != 0) return false;
    }
  return true;
}

GroupElt levi_project(const GroupElt& g, const IndexSet& J, Sign sign) {
  if (!in_parabolic(g, J, sign)) throw std::invalid_argument("levi_project: element not in the parabolic");
  int n = static_cast<int>(g.rows());
  GroupElt out(n, n);
  for (auto [b, e] : blocks(n, J))
    for (int r = b; r < e; ++r)
      for (int c = b; c < e; ++c) out(r, c) = g(r, c);
  return out;
}

std::optional<int> oscillatory_order(const GroupElt& g, int m_max) {
  GroupElt p = g;
  for (int m = 1; m <= m_max; ++m) {
    if (is_tp(p)) return m;
    if (m < m_max) p = p * g;
  }
  return std::nullopt;
}

TorusElt act_on_torus(const WeylElt& w, const TorusElt& t) {
  TorusElt out(t.size());
  for (int j = 0; j < w.n(); ++j) out[w(j)] = t[j];
  return out;
}

DominantTorus torus_orbit_dominant(const TorusElt& t, const IndexSet& J) {
  int n = static_cast<int>(t.size());
  std::vector<int> w(n);
  for (auto [b, e] : blocks(n, J)) {
    std::vector<int> order(e - b);
    std::iota(order.begin(), order.end(), b);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return t[x] > t[y]; });
    for (int k = 0; k < e - b; ++k) w[order[k]] = b + k;
  }
  WeylElt we(w);
  return {act_on_torus(we, t), we};
}

GroupElt antidiagonal(int n) {
  GroupElt j(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

}  // namespace tpw
