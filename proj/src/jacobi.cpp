#include "tpw/jacobi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tpw {

namespace {

constexpr long double kUnit = std::numeric_limits<long double>::epsilon() / 2;

long double to_ld(const Rat& r) {
  return static_cast<long double>(r.get_num().get_d()) / static_cast<long double>(r.get_den().get_d());
}

[[maybe_unused]] long double factorial(int k) {
  long double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

long double dot(const std::vector<long double>& a, const std::vector<long double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

DMat DMat::identity(std::size_t n) {
  DMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DMat operator*(const DMat& x, const DMat& y) {
  DMat z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      long double a = x(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += a * y(k, j);
    }
  return z;
}

long double inf_norm(const DMat& m) {
  long double best = 0;
  for (std::size_t i = 0; i < m.n; ++i) {
    long double s = 0;
    for (std::size_t j = 0; j < m.n; ++j) s += std::fabs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

long double det(DMat m) {
  long double d = 1;
  for (std::size_t c = 0; c < m.n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < m.n; ++r)
      if (std::fabs(m(r, c)) > std::fabs(m(p, c))) p = r;
    if (m(p, c) == 0) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < m.n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < m.n; ++r) {
      long double f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < m.n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

DMat JacobiElt::matrix() const {
  DMat m(n());
  for (std::size_t i = 0; i < n(); ++i) m(i, i) = diag[i];
  for (std::size_t i = 0; i + 1 < n(); ++i) m(i, i + 1) = m(i + 1, i) = off[i];
  return m;
}

long double JacobiElt::charpoly(long double x) const {
  long double prev = 1, cur = x - diag[0];
  for (std::size_t k = 1; k < n(); ++k) {
    long double next = (x - diag[k]) * cur - off[k - 1] * off[k - 1] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

JacobiElt jacobi_from_spectrum(const std::vector<long double>& lambdas) {
  const std::size_t n = lambdas.size();
  if (n == 0) throw std::invalid_argument("jacobi_from_spectrum: empty spectrum");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(lambdas[i] > lambdas[i + 1])) throw std::invalid_argument("jacobi_from_spectrum: spectrum must be strictly decreasing");
  JacobiElt j;
  std::vector<std::vector<long double>> q{std::vector<long double>(n, 1.0L / std::sqrt(static_cast<long double>(n)))};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<long double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lambdas[i] * q[k][i];
    j.diag.push_back(dot(q[k], v));
    if (k + 1 == n) break;
    // Full reorthogonalization, twice.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& qi : q) {
        long double c = dot(qi, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * qi[i];
      }
    long double beta = std::sqrt(dot(v, v));
    if (!(beta > 0)) throw std::logic_error("jacobi_from_spectrum: Lanczos breakdown");
    for (auto& a : v) a /= beta;
    j.off.push_back(beta);
    q.push_back(std::move(v));
  }
  auto res = spectrum_residuals(j, lambdas);
  if (*std::max_element(res.begin(), res.end()) > kJacobiResidualTol)
    throw Error("jacobi_from_spectrum: spectrum residual above tolerance");
  return j;
}

std::vector<long double> spectrum_residuals(const JacobiElt& j, const std::vector<long double>& lambdas) {
  std::vector<long double> out;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    long double gap = 1;
    for (std::size_t k = 0; k < lambdas.size(); ++k)
      if (k != i) gap *= std::fabs(lambdas[i] - lambdas[k]);
    out.push_back(std::fabs(j.charpoly(lambdas[i])) / gap);
  }
  return out;
}

ApproxMat expm(const DMat& x, long double tol) {
  if (!(tol > 0)) throw std::invalid_argument("expm: tol must be positive");
  const std::size_t n = x.n;
  long double norm = inf_norm(x);
  if (norm == 0) return {DMat::identity(n), 0};
  int s = 0;
  while (std::ldexp(norm, -s) > 0.5L) ++s;
  DMat a = x;
  for (auto& v : a.a) v = std::ldexp(v, -s);  // exact
  const long double an = std::ldexp(norm, -s);
  const long double ea = std::exp(an) * (1 + 1e-3L);

  DMat e = DMat::identity(n), term = DMat::identity(n);
  int m = 0;
  long double trunc = 0;
  for (;;) {
    ++m;
    term = term * a;
    for (auto& v : term.a) v /= m;
    for (std::size_t i = 0; i < e.a.size(); ++i) e.a[i] += term.a[i];
    trunc = std::pow(an, m + 1) / factorial(m + 1) / (1 - an / (m + 2));
    if (trunc <= kUnit || m >= 40) break;
  }
  // Truncation, rounding in the term products and in the running sum.
  long double bound = trunc + (n + 2) * kUnit * an * ea + m * kUnit * ea;
  const long double gamma = n * kUnit / (1 - n * kUnit);
  for (int k = 0; k < s; ++k) {
    long double en = inf_norm(e) + bound;
    e = e * e;
    bound = 2 * en * bound + bound * bound + gamma * en * en;
  }
  return {e, bound};
}

long double minor_margin(const DMat& sub, long double eps) {
  const long double k = static_cast<long double>(sub.n);
  long double with = 1, without = 1;
  for (std::size_t r = 0; r < sub.n; ++r) {
    long double norm = 0;
    for (std::size_t c = 0; c < sub.n; ++c) norm += sub(r, c) * sub(r, c);
    norm = std::sqrt(norm);
    with *= norm + std::sqrt(k) * eps;
    without *= norm;
  }
  return 10 * (with - without) + 10 * k * k * k * kUnit * without;
}

TGt1Report t_gt1_witness(const TorusElt& t, long double tol) {
  const int n = static_cast<int>(t.size());
  if (n < 1 || n > 8) throw std::invalid_argument("t_gt1_witness: need 1 <= n <= 8");
  for (int i = 0; i < n; ++i)
    if (t[i] <= 0 || (i + 1 < n && t[i] <= t[i + 1]))
      throw std::invalid_argument("t_gt1_witness: t is not in T_{>1}");
  TGt1Report rep;
  rep.t = t;
  rep.tol = tol;
  std::vector<long double> tv, logs;
  for (const auto& a : t) {
    tv.push_back(to_ld(a));
    logs.push_back(std::log(tv.back()));
  }
  rep.x = jacobi_from_spectrum(logs);
  rep.jacobi_residuals = spectrum_residuals(rep.x, logs);
  rep.g = expm(rep.x.matrix(), tol);
  rep.exp_bound_ok = rep.g.error_bound <= tol;

  const DMat& g = rep.g.m;
  long double worst = std::numeric_limits<long double>::infinity();
  for (unsigned rows = 1; rows < (1u << n); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      int k = std::popcount(rows);
      if (std::popcount(cols) != k) continue;
      DMat sub(k);
      int r = 0;
      for (int i = 0; i < n; ++i) {
        if (!((rows >> i) & 1u)) continue;
        int c = 0;
        for (int j = 0; j < n; ++j)
          if ((cols >> j) & 1u) sub(r, c++) = g(i, j);
        ++r;
      }
      MinorMargin mm{rows, cols, det(sub), minor_margin(sub, tol)};
      if (mm.value - mm.required < worst) {
        worst = mm.value - mm.required;
        rep.tightest = mm;
      }
    }
  rep.minors_ok = worst > 0;

  rep.spectrum_ok = true;
  for (int i = 0; i < n; ++i) {
    DMat shifted = g;
    for (auto& v : shifted.a) v = -v;
    for (int k = 0; k < n; ++k) shifted(k, k) += tv[i];
    long double gap = 1;
    for (int k = 0; k < n; ++k)
      if (k != i) gap *= std::fabs(tv[i] - tv[k]);
    rep.spectral_residuals.push_back(std::fabs(det(shifted)) / gap);
    rep.spectrum_ok = rep.spectrum_ok && rep.spectral_residuals.back() < kSpectralResidualTol;
  }
  return rep;
}

TorusElt random_t_gt1(int n, Rng& rng) {
  TorusElt t(n);
  t[n - 1] = frac(rng.uniform(1, 10), 10);
  for (int i = n - 2; i >= 0; --i) t[i] = t[i + 1] * (1 + frac(rng.uniform(1, 15), 10));
  return t;
}

}  // namespace tpw
