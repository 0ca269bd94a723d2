#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpw/sampling.hpp"
#include "tpw/tnn.hpp"

// Numeric side of the T_{>1} construction: everything here is floating point
// with explicit error bounds, unlike the rest of the library.
namespace tpw {

// Dense row-major long double matrix.
struct DMat {
  std::size_t n = 0;
  std::vector<long double> a;
  DMat() = default;
  explicit DMat(std::size_t n) : n(n), a(n * n, 0.0L) {}
  static DMat identity(std::size_t n);
  long double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  long double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};
DMat operator*(const DMat& x, const DMat& y);
long double inf_norm(const DMat& m);  // max row sum of |entries|
long double det(DMat m);              // partial pivoting

// Symmetric tridiagonal matrix with positive off-diagonal (a_i = b_i).
struct JacobiElt {
  std::vector<long double> diag;
  std::vector<long double> off;  // size n-1, all > 0
  std::size_t n() const { return diag.size(); }
  DMat matrix() const;
  // det(x - J) by the three-term recurrence.
  long double charpoly(long double x) const;
};

// Lanczos on diag(lambdas) with equal weights. Throws invalid_argument unless
// lambdas is strictly decreasing.
JacobiElt jacobi_from_spectrum(const std::vector<long double>& lambdas);
// |det(l_i - J)| / prod_{j != i} |l_i - l_j| for each i: first-order distance
// from l_i to the spectrum of J.
std::vector<long double> spectrum_residuals(const JacobiElt& j, const std::vector<long double>& lambdas);

struct ApproxMat {
  DMat m;
  long double error_bound = 0;  // bound on max |entry error|
};
// Scaling and squaring with a Taylor kernel. The bound covers truncation and
// rounding; if it exceeds tol the result is still returned and the caller decides.
ApproxMat expm(const DMat& x, long double tol);

struct MinorMargin {
  unsigned rows = 0, cols = 0;  // bitmasks, bit i = index i
  long double value = 0;        // computed minor
  long double required = 0;     // margin it must exceed
};

struct TGt1Report {
  TorusElt t;
  JacobiElt x;
  ApproxMat g;
  long double tol = 0;
  std::vector<long double> jacobi_residuals;    // spectrum of x against log t
  std::vector<long double> spectral_residuals;  // charpoly(g) at each t_i, normalized as above
  MinorMargin tightest;                         // minor with the smallest value - required
  bool exp_bound_ok = false;
  bool minors_ok = false;
  bool spectrum_ok = false;
  bool passes() const { return exp_bound_ok && minors_ok && spectrum_ok; }
  // The margins are floating-point evidence for total positivity, not a proof.
  static constexpr const char* note = "numeric evidence: minors are floating-point values with a margin, not a proof";
};

inline constexpr long double kJacobiResidualTol = 1e-10L;
inline constexpr long double kSpectralResidualTol = 1e-8L;

// Margin a computed k x k minor must exceed when the matrix is known to within
// eps entrywise: 10 times the Hadamard bound on the perturbation,
// prod(|a_r| + sqrt(k) eps) - prod(|a_r|) over the rows a_r of sub, plus the
// rounding error of the elimination.
long double minor_margin(const DMat& sub, long double eps);

// Requires t strictly decreasing and positive (alpha_i(t) > 1), n <= 8.
TGt1Report t_gt1_witness(const TorusElt& t, long double tol);

// Random element of T_{>1}: t_n in [1/10, 1], consecutive ratios in (1, 5/2].
TorusElt random_t_gt1(int n, Rng& rng);

}  // namespace tpw
