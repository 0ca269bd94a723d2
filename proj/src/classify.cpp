#include "tpw/classify.hpp"

#include <stdexcept>

namespace tpw {

namespace {

void require_invertible(const GroupElt& g) {
  if (!g.square() || det(g) == 0) throw std::invalid_argument("expected an invertible square matrix");
}

QPoly unipotent_poly(int n) { return QPoly::from_roots(QVec(n, Rat(1))); }

}  // namespace

bool is_regular(const GroupElt& g) {
  require_invertible(g);
  return minpoly(g) == charpoly(g);
}

bool is_regular_semisimple(const GroupElt& g) {
  require_invertible(g);
  return is_squarefree(charpoly(g));
}

bool is_unipotent(const GroupElt& g) {
  require_invertible(g);
  return charpoly(g) == unipotent_poly(static_cast<int>(g.rows()));
}

bool is_regular_unipotent(const GroupElt& g) {
  return is_unipotent(g) && minpoly(g) == unipotent_poly(static_cast<int>(g.rows()));
}

IndexSet levi_type(const TorusElt& t) {
  IndexSet J;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) J.insert(static_cast<int>(i));
  return J;
}

LeviData centralizer_levi(const GroupElt& s) {
  require_invertible(s);
  if (!is_squarefree(minpoly(s))) throw std::invalid_argument("centralizer_levi: element not semisimple");
  auto spec = rational_spectrum(s);
  if (!spec) throw UnsupportedExact("centralizer_levi: irrational spectrum");
  if ((*spec).back() <= 0) throw UnsupportedExact("centralizer_levi: nonpositive eigenvalue");
  int n = static_cast<int>(s.rows());
  GroupElt h(n, n);
  int col = 0;
  for (std::size_t k = 0; k < spec->size(); ++k) {
    if (k > 0 && (*spec)[k] == (*spec)[k - 1]) continue;
    GroupElt m = s;
    for (int i = 0; i < n; ++i) m(i, i) -= (*spec)[k];
    for (const auto& v : kernel_basis(m)) {
      for (int i = 0; i < n; ++i) h(i, col) = v[i];
      ++col;
    }
  }
  LeviData out{h, levi_type(*spec), *spec};
  if (col != n || inverse(h) * s * h != torus(out.t_std))
    throw std::logic_error("centralizer_levi: eigenbasis does not diagonalize");
  return out;
}

JordanPair jordan(const GroupElt& g) {
  require_invertible(g);
  auto [s, u] = jordan_chevalley_mult(g);
  JordanPair jp{s, u, std::nullopt};
  try {
    jp.levi = centralizer_levi(s);
  } catch (const UnsupportedExact&) {
  }
  return jp;
}

std::vector<int> bplus_eigenspace_dims(const GroupElt& g) {
  int n = static_cast<int>(g.rows());
  if (!g.square() || !g.is_upper_triangular()) throw std::invalid_argument("bplus_eigenspace_dims: not upper triangular");
  for (int i = 0; i < n; ++i)
    if (g(i, i) <= 0) throw std::invalid_argument("bplus_eigenspace_dims: nonpositive diagonal");
  if (!is_tnn(g)) throw std::invalid_argument("bplus_eigenspace_dims: not totally nonnegative");
  std::vector<int> dims;
  for (int k = 0; k < n; ++k) {
    GroupElt m = g;
    Rat a = g(k, k);
    for (int i = 0; i < n; ++i) m(i, i) -= a;
    dims.push_back(n - rank(m));
  }
  return dims;
}

int default_oscillatory_bound(int n) { return std::max(1, n - 1); }

ClassReport classify(const GroupElt& g) {
  require_invertible(g);
  ClassReport r;
  QPoly cp = charpoly(g), mp = minpoly(g);
  int n = static_cast<int>(g.rows());
  r.regular = cp == mp;
  r.regular_semisimple = is_squarefree(cp);
  r.unipotent = cp == unipotent_poly(n);
  r.regular_unipotent = r.unipotent && r.regular;
  if (n <= 8 && is_tnn(g)) r.oscillatory_order = oscillatory_order(g, default_oscillatory_bound(n));
  return r;
}

}  // namespace tpw
