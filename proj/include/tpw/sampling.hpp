#pragma once

#include <cstdint>

#include "tpw/tnn.hpp"

namespace tpw {

// splitmix64 stream. Trial k of a run with seed s draws from Rng::for_trial(s, k),
// so results do not depend on how trials are scheduled.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return next() >> 63; }
  // p/q with p, q uniform in [1, 20].
  Rat param();

 private:
  std::uint64_t state_;
};

WeylElt random_weyl(int n, Rng& rng);
WeylElt random_weyl_with_support(int n, const IndexSet& supp, Rng& rng);
QVec random_params(std::size_t count, Rng& rng);
TorusElt random_torus(int n, Rng& rng);
CellPoint random_cellpoint(int n, Rng& rng);
CellPoint random_cellpoint(const WeylElt& w1, const WeylElt& w2, Rng& rng);

// Oscillatory tridiagonal matrix with a rational spectrum: the monic
// orthogonal-polynomial recurrence for a random discrete measure, shifted until
// totally nonnegative and conjugated by a random positive diagonal.
GroupElt random_oscillatory_rational(int n, Rng& rng);

}  // namespace tpw
