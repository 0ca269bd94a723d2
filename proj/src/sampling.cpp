#include "tpw/sampling.hpp"

#include <numeric>
#include <stdexcept>

namespace tpw {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix(seed ^ mix(trial + 0x9e3779b97f4a7c15ULL)));
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rat Rng::param() {
  int p = uniform(1, 20);
  int q = uniform(1, 20);
  return frac(p, q);
}

WeylElt random_weyl(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return WeylElt(p);
}

WeylElt random_weyl_with_support(int n, const IndexSet& supp, Rng& rng) {
  // Uniform over W_supp, then rejection until the support is exactly supp.
  for (;;) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (auto [b, e] : blocks(n, supp))
      for (int i = e - 1; i > b; --i) std::swap(p[i], p[rng.uniform(b, i)]);
    WeylElt w(p);
    if (support(w) == supp) return w;
  }
}

QVec random_params(std::size_t count, Rng& rng) {
  QVec v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(rng.param());
  return v;
}

TorusElt random_torus(int n, Rng& rng) { return random_params(n, rng); }

CellPoint random_cellpoint(const WeylElt& w1, const WeylElt& w2, Rng& rng) {
  CellPoint p;
  p.word1 = w1.word();
  p.params1 = random_params(p.word1.size(), rng);
  p.t = random_torus(w1.n(), rng);
  p.word2 = w2.word();
  p.params2 = random_params(p.word2.size(), rng);
  return p;
}

CellPoint random_cellpoint(int n, Rng& rng) {
  WeylElt w1 = random_weyl(n, rng);
  WeylElt w2 = random_weyl(n, rng);
  return random_cellpoint(w1, w2, rng);
}

GroupElt random_oscillatory_rational(int n, Rng& rng) {
  QVec nodes, weights;
  Rat x = 0;
  for (int i = 0; i < n; ++i) {
    x += rng.param();
    nodes.push_back(x);
    weights.push_back(rng.param());
  }
  auto inner = [&](const QPoly& f, const QPoly& g, const QPoly& h) {
    Rat s = 0;
    for (int i = 0; i < n; ++i) s += weights[i] * f.eval(nodes[i]) * g.eval(nodes[i]) * h.eval(nodes[i]);
    return s;
  };
  QPoly one = QPoly::constant(1), prev, cur = one;
  GroupElt J(n, n);
  Rat norm_prev = 0;
  for (int k = 0; k < n; ++k) {
    Rat norm = inner(cur, cur, one);
    Rat a = inner(QPoly::x(), cur, cur) / norm;
    J(k, k) = a;
    if (k > 0) {
      J(k, k - 1) = norm / norm_prev;
      J(k - 1, k) = 1;
    }
    QPoly next = (QPoly::x() - QPoly::constant(a)) * cur;
    if (k > 0) next = next - (norm / norm_prev) * prev;
    prev = cur;
    cur = next;
    norm_prev = norm;
  }
  for (int s = 0;; ++s) {
    GroupElt g = J;
    for (int i = 0; i < n; ++i) g(i, i) += s;
    if (det(g) != 0 && is_tnn(g)) {
      TorusElt d = random_torus(n, rng);
      TorusElt dinv;
      for (const auto& v : d) dinv.push_back(1 / v);
      return torus(d) * g * torus(dinv);
    }
  }
}

}  // namespace tpw
