#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tpw {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact computation would need an irrational number.
class UnsupportedExact : public Error {
 public:
  using Error::Error;
};

// mpq_class(p, q) does not canonicalize; always build fractions through here.
inline Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);
int sgn(const Rat& r);

class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat identity(std::size_t n);
  static QMat diag(const QVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMat transpose() const;
  QMat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  QVec column(std::size_t j) const;
  QVec diagonal() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;

  friend bool operator==(const QMat& a, const QMat& b);
  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator*(const Rat& c, const QMat& a);
  friend QVec operator*(const QMat& a, const QVec& v);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

QMat pow(const QMat& m, unsigned e);

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly x();
  static QPoly constant(const Rat& c);
  // Product of (x - r) over the given roots.
  static QPoly from_roots(const QVec& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& lead() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  QMat eval(const QMat& m) const;
  QPoly derivative() const;
  QPoly monic() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& s, const QPoly& a);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, gcd(0,0)=0
QPoly squarefree_part(const QPoly& p);        // monic

Rat det(const QMat& m);
QPoly charpoly(const QMat& m);
QPoly minpoly(const QMat& m);
std::vector<QVec> kernel_basis(const QMat& m);
int rank(const QMat& m);
QMat inverse(const QMat& m);
// Reduced row echelon form; pivots receives pivot column indices.
QMat rref(const QMat& m, std::vector<int>* pivots = nullptr);
// Solves m x = b; empty if inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

bool is_squarefree(const QPoly& p);
// Number of sign changes of the Sturm chain at x, or at +inf when x is absent.
std::vector<QPoly> sturm_chain(const QPoly& p);
int sturm_variations(const std::vector<QPoly>& chain, const std::optional<Rat>& x);
// Distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<QPoly>& chain, const Rat& a, const Rat& b);
int count_distinct_positive_roots(const QPoly& p);

// An isolating interval for a real root of a squarefree polynomial: the root
// is the unique one in (lo, hi], or lo == hi is the root itself.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

// Positive real roots of p in decreasing order, isolated and separated.
std::vector<RootInterval> isolate_positive_roots(const QPoly& p);
void refine(const QPoly& sqfree, RootInterval& iv, const Rat& width);
// Rational roots of p in decreasing order (distinct).
QVec rational_roots(const QPoly& p);
// All roots of p (with multiplicity) if every root is rational, in decreasing order.
std::optional<QVec> rational_spectrum(const QMat& m);
// Simplest rational in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);
// Sign of q at the root isolated by iv of the squarefree polynomial p.
int sign_at_root(const QPoly& p, RootInterval iv, const QPoly& q);

// For an affine family a -> m(a) of matrices with distinct positive eigenvalues,
// finds a parameter near a0 at which the rank-r eigenvalue (0 = largest) is
// rational. det(x - m(a)) is affine in a, so a is solved for exactly while x runs
// through the simplest rationals near the current eigenvalue. Returns (a, x) or
// nothing if no positive parameter was found.
std::optional<std::pair<Rat, Rat>> pin_affine_eigenvalue(const std::function<QMat(const Rat&)>& m,
                                                         const Rat& a0, int r);
std::pair<QMat, QMat> jordan_chevalley_mult(const QMat& g);

std::string to_string(const QMat& m);

}  // namespace tpw
