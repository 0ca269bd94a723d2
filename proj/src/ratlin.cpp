#include "tpw/ratlin.hpp"

#include <algorithm>
#include <sstream>

namespace tpw {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str(10);
}

int sgn(const Rat& r) { return ::sgn(r); }

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::diag(const QVec& d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMat QMat::submatrix(const std::vector<int>& r, const std::vector<int>& c) const {
  QMat s(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
  return s;
}

QVec QMat::column(std::size_t j) const {
  QVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVec QMat::diagonal() const {
  QVec v(std::min(rows_, cols_));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(i, i);
  return v;
}

bool QMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

bool QMat::is_identity() const { return square() && *this == identity(rows_); }

bool QMat::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool QMat::is_lower_triangular() const { return transpose().is_upper_triangular(); }

bool QMat::is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

bool operator==(const QMat& a, const QMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  QMat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  QMat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  QMat c(a.rows_, b.cols_);
  Rat t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) == 0) continue;
        t = x * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

QMat operator*(const Rat& s, const QMat& a) {
  QMat c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

QVec operator*(const QMat& a, const QVec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch");
  QVec r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

QMat pow(const QMat& m, unsigned e) {
  QMat r = QMat::identity(m.rows()), b = m;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string to_string(const QMat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_rat(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---- polynomials

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::x() { return QPoly({Rat(0), Rat(1)}); }

QPoly QPoly::constant(const Rat& c) { return QPoly({c}); }

QPoly QPoly::from_roots(const QVec& roots) {
  QPoly p = constant(1);
  for (const auto& r : roots) p = p * QPoly({Rat(-r), Rat(1)});
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0);
}

Rat QPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QMat QPoly::eval(const QMat& m) const {
  QMat r(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += *it;
  }
  return r;
}

QPoly QPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return QPoly(d);
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rat l = lead();
  std::vector<Rat> d = c_;
  for (auto& x : d) x /= l;
  return QPoly(d);
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return QPoly(c);
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return QPoly(c);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(c);
}

QPoly operator*(const Rat& s, const QPoly& a) { return QPoly::constant(s) * a; }

std::string QPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << format_rat(c_[i]);
  os << ']';
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rat> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    Rat f = r[i] / b.lead();
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(q), QPoly(r)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return QPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool is_squarefree(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

// ---- elimination

Rat det(const QMat& m) {
  if (!m.square()) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  QMat a = m;
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

QMat rref(const QMat& m, std::vector<int>* pivots) {
  QMat a = m;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(static_cast<int>(c));
    ++r;
  }
  return a;
}

int rank(const QMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

std::vector<QVec> kernel_basis(const QMat& m) {
  std::vector<int> piv;
  QMat r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  QMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> piv;
  QMat r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == static_cast<int>(m.cols())) return std::nullopt;
  QVec x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
  return x;
}

QMat inverse(const QMat& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  QMat r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw Error("singular matrix");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

QPoly charpoly(const QMat& m) {
  if (!m.square()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  QMat h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h(i, k - 1) == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(k, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, k));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (h(r, k - 1) == 0) continue;
      Rat f = h(r, k - 1) / h(k, k - 1);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= f * h(k, j);
      for (std::size_t j = 0; j < n; ++j) h(j, k) += f * h(j, r);
    }
  }
  std::vector<QPoly> p(n + 1);
  p[0] = QPoly::constant(1);
  for (std::size_t m1 = 1; m1 <= n; ++m1) {
    p[m1] = QPoly({Rat(-h(m1 - 1, m1 - 1)), Rat(1)}) * p[m1 - 1];
    Rat prod = 1;
    for (std::size_t i = m1 - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      p[m1] = p[m1] - (prod * h(i - 1, m1 - 1)) * p[i - 1];
    }
  }
  return p[n];
}

QPoly minpoly(const QMat& m) {
  if (!m.square()) throw std::invalid_argument("minpoly of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return QPoly::constant(1);
  std::vector<QMat> powers{QMat::identity(n)};
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    QMat a(n * n, d);
    QVec b(n * n);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i * n + j, c) = powers[c](i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i * n + j] = powers[d](i, j);
    if (auto x = solve(a, b)) {
      std::vector<Rat> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = -(*x)[i];
      c[d] = 1;
      return QPoly(c);
    }
  }
  throw Error("minpoly: no annihilating polynomial found");
}

// ---- real roots

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    QPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(Rat(-1) * r);
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

int sturm_variations(const std::vector<QPoly>& chain, const std::optional<Rat>& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = x ? sgn(q.eval(*x)) : sgn(q.lead());
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

int count_distinct_positive_roots(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  QPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  if (q.coeff(0) == 0) q = divmod(q, QPoly::x()).first;
  auto chain = sturm_chain(q);
  return sturm_variations(chain, Rat(0)) - sturm_variations(chain, std::nullopt);
}

namespace {

Rat cauchy_bound(const QPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.lead())));
  return m + 1;
}

// Clears denominators and content so a rational root u/v has v | lead.
QPoly integer_primitive(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rat> c;
  mpz_class g = 0;
  for (const auto& x : p.coeffs()) {
    Rat y = x * l;
    c.push_back(y);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
  }
  for (auto& x : c) x /= g;
  return QPoly(c);
}

}  // namespace

std::vector<RootInterval> isolate_positive_roots(const QPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  QPoly q = squarefree_part(p);
  auto chain = sturm_chain(q);
  struct Item {
    Rat a, b;
    int c;
  };
  Rat bound = cauchy_bound(q);
  std::vector<Item> stack{{Rat(0), bound, count_roots(chain, 0, bound)}};
  // Depth-first with the right half processed first gives decreasing order.
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.c == 0) continue;
    if (it.c == 1) {
      RootInterval iv{it.a, it.b};
      if (q.eval(it.b) == 0) iv.lo = it.b;
      out.push_back(iv);
      continue;
    }
    Rat mid = (it.a + it.b) / 2;
    int left = count_roots(chain, it.a, mid);
    stack.push_back({it.a, mid, left});
    stack.push_back({mid, it.b, it.c - left});
  }
  return out;
}

void refine(const QPoly& sqfree, RootInterval& iv, const Rat& width) {
  auto chain = sturm_chain(sqfree);
  while (!iv.exact() && iv.hi - iv.lo > width) {
    Rat mid = (iv.lo + iv.hi) / 2;
    if (sqfree.eval(mid) == 0) {
      iv.lo = iv.hi = mid;
    } else if (count_roots(chain, iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rat(c) <= hi) return Rat(c);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rat fr(f);
  Rat inner = simplest_between(1 / (hi - fr), 1 / (lo - fr));
  return fr + 1 / inner;
}

QVec rational_roots(const QPoly& p) {
  QVec roots;
  if (p.degree() <= 0) return roots;
  QPoly q = integer_primitive(squarefree_part(p));
  Rat l = abs(q.lead());
  Rat width = 1 / (2 * l * l);
  auto scan = [&](const QPoly& poly, int s) {
    QPoly sq = squarefree_part(poly);
    for (auto iv : isolate_positive_roots(sq)) {
      refine(sq, iv, width);
      Rat cand = iv.exact() ? iv.lo : simplest_between(iv.lo, iv.hi);
      if (sq.eval(cand) == 0) roots.push_back(s * cand);
    }
  };
  scan(q, 1);
  if (q.coeff(0) == 0) roots.push_back(0);
  std::vector<Rat> neg = q.coeffs();
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  scan(QPoly(neg), -1);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::optional<QVec> rational_spectrum(const QMat& m) {
  QPoly p = charpoly(m);
  QVec out;
  for (const auto& r : rational_roots(p)) {
    QPoly lin({Rat(-r), Rat(1)});
    while (p.degree() > 0) {
      auto [q, rem] = divmod(p, lin);
      if (!rem.is_zero()) break;
      p = q;
      out.push_back(r);
    }
  }
  if (p.degree() > 0) return std::nullopt;
  return out;
}

int sign_at_root(const QPoly& p, RootInterval iv, const QPoly& q) {
  if (iv.exact()) return sgn(q.eval(iv.lo));
  if (q.is_zero()) return 0;
  QPoly g = gcd(p, q);
  if (g.degree() > 0 && count_roots(sturm_chain(g), iv.lo, iv.hi) > 0) return 0;
  auto qchain = sturm_chain(squarefree_part(q));
  while (count_roots(qchain, iv.lo, iv.hi) > 0) {
    refine(p, iv, (iv.hi - iv.lo) / 2);
    if (iv.exact()) return sgn(q.eval(iv.lo));
  }
  return sgn(q.eval(iv.hi));
}

std::optional<std::pair<Rat, Rat>> pin_affine_eigenvalue(const std::function<QMat(const Rat&)>& m,
                                                         const Rat& a0, int r) {
  QMat id = QMat::identity(m(a0).rows());
  int dim = static_cast<int>(id.rows());
  QPoly p = charpoly(m(a0));
  if (!is_squarefree(p)) return std::nullopt;
  auto ivs = isolate_positive_roots(p);
  if (static_cast<int>(ivs.size()) != dim || r < 0 || r >= dim) return std::nullopt;
  RootInterval iv = ivs[r];
  for (int bits = 4; bits <= 200; bits += 4) {
    Rat width = Rat(1) / Rat(mpz_class(1) << bits);
    refine(p, iv, width);
    Rat x = iv.exact() ? iv.lo : simplest_between(iv.lo + width / 4, iv.hi);
    Rat f0 = det(x * id - m(0));
    Rat f1 = det(x * id - m(1)) - f0;
    if (f1 == 0) continue;
    Rat a = -f0 / f1;
    if (a <= 0) continue;
    QPoly q = charpoly(m(a));
    if (q.eval(x) != 0 || !is_squarefree(q) || count_distinct_positive_roots(q) != dim) continue;
    auto chain = sturm_chain(q);
    if (sturm_variations(chain, x) - sturm_variations(chain, std::nullopt) != r) continue;
    return std::make_pair(a, x);
  }
  return std::nullopt;
}

std::pair<QMat, QMat> jordan_chevalley_mult(const QMat& g) {
  if (!g.square()) throw std::invalid_argument("non-square matrix");
  if (det(g) == 0) throw std::invalid_argument("jordan_chevalley_mult: singular matrix");
  QPoly r = squarefree_part(charpoly(g));
  QPoly dr = r.derivative();
  QMat s = g;
  for (int it = 0; it < 64; ++it) {
    QMat rs = r.eval(s);
    if (rs.is_zero()) return {s, inverse(s) * g};
    s = s - rs * inverse(dr.eval(s));
  }
  throw Error("jordan_chevalley_mult: Newton iteration did not converge");
}

}  // namespace tpw
