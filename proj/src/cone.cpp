#include "tpw/cone.hpp"

#include <stdexcept>

namespace tpw {

namespace {

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int rank_of_rows(const std::vector<QVec>& rows, const std::vector<int>& pick, std::size_t d) {
  if (pick.empty()) return 0;
  QMat m(pick.size(), d);
  for (std::size_t r = 0; r < pick.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rows[pick[r]][c];
  return rank(m);
}

struct Ray {
  QVec c;
  std::vector<char> zero;  // constraint i is tight at c
};

}  // namespace

Cone cone_meet_orthant(const std::vector<QVec>& basis) {
  if (basis.empty()) return {};
  const std::size_t d = basis.size(), N = basis[0].size();
  if (static_cast<int>(d) > kConeDimCap) throw std::invalid_argument("cone_meet_orthant: subspace dimension above cap");
  // In coordinates c of the subspace, the cone is {c : a_i . c >= 0} with a_i the rows of [basis].
  std::vector<QVec> a(N, QVec(d));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i][j] = basis[j][i];

  std::vector<int> init;
  for (std::size_t i = 0; i < N && init.size() < d; ++i) {
    init.push_back(static_cast<int>(i));
    if (rank_of_rows(a, init, d) != static_cast<int>(init.size())) init.pop_back();
  }
  if (init.size() != d) throw std::invalid_argument("cone_meet_orthant: basis is linearly dependent");

  // Initial simplicial cone: rays are the columns of A0^{-1}.
  QMat a0(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) a0(r, c) = a[init[r]][c];
  QMat inv = inverse(a0);
  std::vector<char> done(N, 0);
  for (int i : init) done[i] = 1;
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Ray r{inv.column(j), std::vector<char>(N, 0)};
    for (std::size_t i = 0; i < N; ++i) r.zero[i] = dot(a[i], r.c) == 0;
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < N; ++i) {
    if (done[i]) continue;
    std::vector<Ray> pos, neg, next;
    std::vector<Rat> spos, sneg;
    for (auto& r : rays) {
      Rat s = dot(a[i], r.c);
      if (s > 0) {
        spos.push_back(s);
        pos.push_back(r);
      } else if (s < 0) {
        sneg.push_back(s);
        neg.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    for (std::size_t p = 0; p < pos.size(); ++p)
      for (std::size_t q = 0; q < neg.size(); ++q) {
        std::vector<int> common;
        for (std::size_t k = 0; k < N; ++k)
          if (done[k] && pos[p].zero[k] && neg[q].zero[k]) common.push_back(static_cast<int>(k));
        if (rank_of_rows(a, common, d) != static_cast<int>(d) - 2) continue;
        Ray r;
        r.c = QVec(d);
        for (std::size_t j = 0; j < d; ++j) r.c[j] = spos[p] * neg[q].c[j] - sneg[q] * pos[p].c[j];
        r.zero.assign(N, 0);
        for (std::size_t k = 0; k < N; ++k) r.zero[k] = dot(a[k], r.c) == 0;
        next.push_back(std::move(r));
      }
    for (auto& r : pos) next.push_back(std::move(r));
    rays = std::move(next);
    done[i] = 1;
  }

  Cone out;
  for (const auto& r : rays) {
    QVec x(N);
    Rat sum = 0;
    for (std::size_t i = 0; i < N; ++i) {
      x[i] = dot(a[i], r.c);
      sum += x[i];
    }
    if (sum == 0) continue;
    for (auto& v : x) v /= sum;
    bool seen = false;
    for (const auto& g : out.gens) seen |= g == x;
    if (!seen) out.gens.push_back(std::move(x));
  }
  return out;
}

bool cone_contains(const Cone& c, const QVec& v) {
  const std::size_t N = v.size(), m = c.gens.size(), W = m + N;
  for (const auto& g : c.gens)
    if (g.size() != N) throw std::invalid_argument("cone_contains: dimension mismatch");
  // Tableau for G lambda + s = v (rows sign-normalized), artificials s as the start basis.
  std::vector<std::vector<Rat>> T(N, std::vector<Rat>(W + 1));
  std::vector<std::size_t> basis(N);
  for (std::size_t i = 0; i < N; ++i) {
    int sg = v[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) T[i][j] = sg * c.gens[j][i];
    T[i][m + i] = 1;
    T[i][W] = sg * v[i];
    basis[i] = m + i;
  }
  // Reduced costs of the phase-one objective sum(s).
  std::vector<Rat> obj(W + 1);
  for (std::size_t j = 0; j <= W; ++j) {
    if (j >= m && j < W) continue;
    for (std::size_t i = 0; i < N; ++i) obj[j] -= T[i][j];
  }
  for (;;) {
    std::size_t e = W;
    for (std::size_t j = 0; j < W; ++j)
      if (obj[j] < 0) {
        e = j;
        break;
      }
    if (e == W) break;
    std::size_t leave = N;
    Rat best;
    for (std::size_t i = 0; i < N; ++i) {
      if (T[i][e] <= 0) continue;
      Rat ratio = T[i][W] / T[i][e];
      if (leave == N || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == N) break;  // cannot happen: the phase-one objective is bounded below
    Rat piv = T[leave][e];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < N; ++i) {
      if (i == leave || T[i][e] == 0) continue;
      Rat f = T[i][e];
      for (std::size_t j = 0; j <= W; ++j) T[i][j] -= f * T[leave][j];
    }
    Rat f = obj[e];
    for (std::size_t j = 0; j <= W; ++j) obj[j] -= f * T[leave][j];
    basis[leave] = e;
  }
  return obj[W] == 0;
}

bool cone_equal(const Cone& a, const Cone& b) {
  for (const auto& g : a.gens)
    if (!cone_contains(b, g)) return false;
  for (const auto& g : b.gens)
    if (!cone_contains(a, g)) return false;
  return true;
}

}  // namespace tpw
