#include "tpw/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "tpw/sampling.hpp"

namespace tpw {

namespace {

using Job = std::function<json()>;

std::vector<json> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<json> out(jobs.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = jobs[i]();
    } catch (const std::exception& e) {
      out[i] = json{{"pass", false}, {"error", e.what()}};
    }
    out[i]["index"] = i;
  };
  const std::size_t w = std::clamp<std::size_t>(workers < 1 ? 1 : workers, 1, std::max<std::size_t>(jobs.size(), 1));
  if (w == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) run_one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

GroupElt x(int n, int i, const Rat& a) { return gen(n, i, a, Sign::plus); }
GroupElt y(int n, int i, const Rat& a) { return gen(n, i, a, Sign::minus); }

IndexSet random_subset(int n, Rng& rng) {
  IndexSet J;
  for (int i = 1; i < n; ++i)
    if (rng.coin()) J.insert(i);
  return J;
}

CellWords random_words(int n, const WeylElt& w1, const WeylElt& w2, Rng& rng) {
  CellWords c{n, w1.word(), {}, w2.word(), {}};
  c.params1 = random_params(c.word1.size(), rng);
  c.params2 = random_params(c.word2.size(), rng);
  return c;
}

TorusElt inverse_torus(const TorusElt& t) {
  TorusElt out;
  for (const auto& a : t) out.push_back(1 / a);
  return out;
}

// Consistency every witness must satisfy regardless of its outcome.
bool witness_consistent(const WitnessReport& r) {
  if (!(trace_product(r) == r.element) || !(realize(r.cell) == r.element) || !is_tnn(r.element)) return false;
  for (int i : r.K.indices())
    if (r.t[i - 1] != r.t[i]) return false;
  return true;
}

struct Ctx {
  SuiteConfig cfg;
  int lo, hi, trials;
  int n_for(int k) const { return lo + k % (hi - lo + 1); }
  Rng rng(std::uint64_t k) const { return Rng::for_trial(cfg.seed, k); }
};

std::vector<Job> cells_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      CellPoint p = random_cellpoint(c.n_for(k), rng);
      GroupElt g = realize(p);
      bool tnn = is_tnn(g);
      bool round_trip = factor_cell(g) == p;
      return json{{"cell", p}, {"matrix", g}, {"tnn", tnn}, {"round_trip", round_trip}, {"pass", tnn && round_trip}};
    });
  return jobs;
}

std::vector<Job> gk_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      WeylElt w0 = longest(n, IndexSet::full(n));
      CellPoint p = random_cellpoint(w0, w0, rng);
      GroupElt g = realize(p);
      QPoly f = charpoly(g);
      bool tp = is_tp(g), sq = is_squarefree(f);
      int roots = count_distinct_positive_roots(f);
      return json{{"cell", p},          {"matrix", g},        {"charpoly", f.to_string()}, {"totally_positive", tp},
                  {"squarefree", sq},   {"positive_roots", roots}, {"pass", tp && sq && roots == n}};
    });
  return jobs;
}

std::vector<Job> product_law_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      CellPoint p = random_cellpoint(n, rng), q = random_cellpoint(n, rng);
      CellPoint r = factor_cell(realize(p) * realize(q));
      WeylElt d1 = demazure(p.w1(), q.w1()), d2 = demazure(p.w2(), q.w2());
      return json{{"left", p},
                  {"right", q},
                  {"product_cell", {{"w1", r.w1()}, {"w2", r.w2()}}},
                  {"demazure", {{"w1", d1}, {"w2", d2}}},
                  {"pass", r.w1() == d1 && r.w2() == d2}};
    });
  return jobs;
}

std::vector<Job> main1_1_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      auto r = rss_witness(random_words(n, random_weyl(n, rng), random_weyl(n, rng), rng));
      bool rss = is_regular_semisimple(r.element);
      return json{{"witness", r}, {"regular_semisimple", rss},
                  {"pass", r.outcome && rss && witness_consistent(r)}};
    });
  return jobs;
}

// Only-if directions: the witness must fail the classification. Inputs outside the
// hypothesis (full supports) are recorded as vacuous.
std::vector<Job> only_if_jobs(const Ctx& c, bool regular) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      IndexSet I = IndexSet::full(n), J1 = random_subset(n, rng), J2 = random_subset(n, rng);
      CellWords w = random_words(n, random_weyl_with_support(n, J1, rng), random_weyl_with_support(n, J2, rng), rng);
      bool vacuous = regular ? (J1 == I || J2 == I) : (J1 == I && J2 == I);
      if (vacuous) {
        std::string err;
        try {
          regular ? non_regular_witness(w) : non_rss_witness(w);
        } catch (const std::invalid_argument& e) {
          err = e.what();
        }
        return json{{"input", w}, {"vacuous", true}, {"error", err}, {"pass", !err.empty()}};
      }
      auto r = regular ? non_regular_witness(w) : non_rss_witness(w);
      bool cls = regular ? is_regular(r.element) : is_regular_semisimple(r.element);
      return json{{"witness", r}, {"vacuous", false}, {regular ? "regular" : "regular_semisimple", cls},
                  {"pass", !r.outcome && !cls && witness_consistent(r)}};
    });
  return jobs;
}

std::vector<Job> main1_3_if_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      IndexSet I = IndexSet::full(n);
      bool first_full = rng.coin();
      IndexSet other = random_subset(n, rng);
      WeylElt w1 = random_weyl_with_support(n, first_full ? I : other, rng);
      WeylElt w2 = random_weyl_with_support(n, first_full ? other : I, rng);
      CellPoint p = random_cellpoint(w1, w2, rng);
      GroupElt g = realize(p);
      bool reg = is_regular(g);
      return json{{"cell", p}, {"matrix", g}, {"regular", reg}, {"pass", reg}};
    });
  return jobs;
}

std::vector<Job> reg_uni_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int n = c.lo; n <= c.hi; ++n)
    jobs.push_back([=] {
      auto rep = regular_unipotent_classification(n, c.trials, c.cfg.seed + static_cast<std::uint64_t>(n));
      return json{{"n", n},
                  {"draws_per_element", c.trials},
                  {"full_support_samples", rep.full_support_samples},
                  {"mixed_samples", rep.mixed_samples},
                  {"violations", rep.violations},
                  {"pass", rep.violations.empty()}};
    });
  return jobs;
}

std::vector<Job> lem_conj_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      WeylElt w = random_weyl(n, rng);
      GroupElt u = word_product(n, w.word(), random_params(w.length(), rng), Sign::plus);
      TorusElt t(n);
      for (int i = 0; i < n; ++i) t[i] = rng.coin() ? Rat(rng.uniform(1, 3)) : rng.param();
      auto r = torus_conj(t, u);

      // Dominant form: each supp(w)-block sorted in decreasing order.
      TorusElt tbar = t;
      for (auto [b, e] : blocks(n, support(w))) std::stable_sort(tbar.begin() + b, tbar.begin() + e, std::greater<Rat>());
      bool conj = inverse(r.u_prime) * torus(t) * u * r.u_prime == r.result;
      bool factors = r.result.is_upper_triangular() && r.result.diagonal() == tbar &&
                     unipotent_cell(torus(inverse_torus(tbar)) * r.result, Sign::plus).w == w;

      // Replay each step from its input and check the projection identity.
      bool steps_ok = true;
      TorusElt cur_t = t;
      GroupElt cur_u = u;
      json steps = json::array();
      for (const auto& s : r.steps) {
        Rat b = (1 - s.c) / (s.c * s.a);
        bool ok = s.b == b && s.result == y(n, s.i, -b) * torus(cur_t) * cur_u * y(n, s.i, b) &&
                  levi_project(s.result, IndexSet{s.i}, Sign::plus) ==
                      torus(cur_t) * x(n, s.i, s.a / s.c) * torus(coroot(n, s.i, 1 / s.c));
        steps.push_back(json{{"i", s.i}, {"a", s.a}, {"c", s.c}, {"b", s.b}, {"ok", ok}});
        steps_ok = steps_ok && ok;
        cur_t = s.result.diagonal();
        cur_u = torus(inverse_torus(cur_t)) * s.result;
      }
      return json{{"w", w},         {"t", t},           {"u", u},          {"result", r.result},
                  {"t_bar", tbar},  {"steps", steps},   {"conjugation", conj}, {"factors", factors},
                  {"pass", conj && factors && steps_ok}};
    });
  return jobs;
}

std::vector<Job> w_to_1_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      GroupElt g = random_oscillatory_rational(n, rng);
      auto ac = attracting_conjugator(g);
      bool lower_unipotent = ac.u.is_lower_triangular() && ac.u.diagonal() == QVec(n, Rat(1));
      bool conj = g * ac.u == ac.u * ac.b && ac.b.is_upper_triangular() && ac.b.diagonal() == ac.t;
      bool attracting = true;
      for (int i = 1; i < n; ++i) attracting = attracting && alpha(ac.t, i) > 1;
      return json{{"g", g},   {"u", ac.u},  {"b", ac.b}, {"t", ac.t}, {"attracting", attracting},
                  {"pass", lower_unipotent && conj && attracting}};
    });
  return jobs;
}

std::vector<Job> lem_root_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int n = c.lo; n <= c.hi; ++n)
    jobs.push_back([=] {
      IndexSet I = IndexSet::full(n);
      int pairs = 0;
      json failures = json::array();
      for (std::uint32_t a = 0; a < (1u << n); a += 2)
        for (std::uint32_t b = 0; b < (1u << n); b += 2) {
          IndexSet J(a & I.bits()), Jp(b & I.bits());
          if (a != J.bits() || b != Jp.bits() || J == I || Jp == I) continue;
          ++pairs;
          int j = root_lemma_witness(n, J, Jp);
          if (Jp.contains(j) || in_phi_J(act_on_root(longest(n, Jp), simple_root(j)), J))
            failures.push_back(json{{"J", J}, {"J_prime", Jp}, {"j", j}});
        }
      return json{{"n", n}, {"pairs", pairs}, {"failures", failures}, {"pass", failures.empty()}};
    });
  return jobs;
}

std::vector<Job> lemma_uv_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  std::uint64_t idx = 0;
  // Exhaustive grid: l(w) <= 3, w in W^J, every k. Unit and random parameters
  // are recorded separately.
  for (int n = c.lo; n <= std::min(c.hi, 4); ++n)
    for (const WeylElt& w : all_elements(n)) {
      if (w.length() > 3) continue;
      for (std::uint32_t bits = 0; bits < (1u << n); bits += 2) {
        IndexSet J(bits & ((1u << n) - 2));
        if (J.bits() != bits || !is_min_right_coset_rep(w, J)) continue;
        for (int k = 1; k <= n; ++k) {
          std::uint64_t my = idx++;
          jobs.push_back([=] {
            Rng rng = c.rng(my);
            QVec params = random_params(w.length(), rng);
            bool unit = check_lemma_uv(n, J, w, QVec(w.length(), Rat(1)), k);
            bool random = check_lemma_uv(n, J, w, params, k);
            return json{{"kind", "grid"}, {"n", n},     {"J", J},           {"w", w.word()}, {"k", k},
                        {"params", params}, {"unit_params", unit}, {"random_params", random},
                        {"pass", unit && random}};
          });
        }
      }
    }
  for (int t = 0; t < c.trials; ++t) {
    std::uint64_t my = idx++;
    jobs.push_back([=] {
      Rng rng = c.rng(my);
      int n = c.n_for(t);
      WeylElt w = random_weyl(n, rng);
      IndexSet J;
      for (int i = 1; i < n; ++i)
        if (!w.right_descent(i) && rng.coin()) J.insert(i);
      int k = rng.uniform(1, n);
      QVec params = random_params(w.length(), rng);
      bool ok = check_lemma_uv(n, J, w, params, k);
      return json{{"kind", "random"}, {"n", n}, {"J", J}, {"w", w.word()}, {"k", k}, {"params", params}, {"pass", ok}};
    });
  }
  return jobs;
}

json conjecture_record(const GroupElt& g) {
  ConjectureReport rep = check_conjecture(g);
  json j{{"matrix", g}, {"report", rep}, {"pass", rep.holds()}};
  if (!rep.holds() && jordan(g).levi) {
    // Diagnose part (2) failures: a cone equal to the image of the orthant of a
    // d-dimensional space has exactly d extreme rays.
    json diag = json::array();
    for (std::size_t k = 1; k <= rep.part2.size(); ++k) {
      if (rep.part2[k - 1]) continue;
      auto top = top_generalized_eigenspace(g, static_cast<int>(k));
      diag.push_back(json{{"k", k},
                          {"top_dim", top.basis.size()},
                          {"orthant_slice_rays", cone_meet_orthant(top.basis).gens.size()}});
    }
    j["part2_failures"] = diag;
  }
  return j;
}

std::vector<Job> conjecture_gl3_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  std::uint64_t idx = 0;
  for (bool s1_first : {true, false})
    for (AlphaCase ac : all_alpha_cases())
      for (int d = 0; d < c.trials; ++d) {
        std::uint64_t my = idx++;
        jobs.push_back([=] {
          Rng rng = c.rng(my);
          CellPoint p = gl3_mixed_sample(s1_first, ac, rng);
          GroupElt g = realize(p);
          json j = conjecture_record(g);
          bool in_cell = factor_cell(g).w1() == WeylElt::simple(3, s1_first ? 1 : 2);
          j["cell"] = p;
          j["case"] = std::string(s1_first ? "s1,s2 " : "s2,s1 ") + to_string(ac);
          j["in_cell"] = in_cell;
          j["pass"] = j["pass"].get<bool>() && in_cell;
          return j;
        });
      }
  return jobs;
}

std::vector<Job> conjecture_prop_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  std::uint64_t idx = 0;
  for (int n = c.lo; n <= c.hi; ++n) {
    auto elems = all_elements(n);
    for (const WeylElt& w1 : elems)
      for (const WeylElt& w2 : elems) {
        IndexSet J1 = support(w1), J2 = support(w2);
        if (!J1.subset_of(J2) && !J2.subset_of(J1)) continue;
        for (int d = 0; d < c.trials; ++d) {
          std::uint64_t my = idx++;
          jobs.push_back([=] {
            Rng rng = c.rng(my);
            auto p = comparable_support_sample(w1, w2, rng);
            json cell{{"n", n}, {"w1", w1.word()}, {"w2", w2.word()}};
            if (!p) return json{{"cell_words", cell}, {"error", "rational-spectrum sampler gave up"}, {"pass", false}};
            json j = conjecture_record(realize(*p));
            j["cell_words"] = cell;
            j["cell"] = *p;
            return j;
          });
        }
      }
  }
  return jobs;
}

std::vector<Job> bplus_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      int n = c.n_for(k);
      TorusElt t = random_torus(n, rng);
      // Force repeated entries in most samples.
      int repeats = rng.uniform(0, n - 1);
      for (int r = 0; r < repeats; ++r) t[rng.uniform(0, n - 1)] = t[rng.uniform(0, n - 1)];
      WeylElt w0 = longest(n, IndexSet::full(n));
      GroupElt g = torus(t) * word_product(n, w0.word(), random_params(w0.length(), rng), Sign::plus);
      auto dims = bplus_eigenspace_dims(g);
      bool ones = std::all_of(dims.begin(), dims.end(), [](int d) { return d == 1; });
      return json{{"t", t}, {"matrix", g}, {"eigenspace_dims", dims}, {"pass", ones}};
    });
  return jobs;
}

std::vector<Job> t_gt1_jobs(const Ctx& c) {
  std::vector<Job> jobs;
  for (int k = 0; k < c.trials; ++k)
    jobs.push_back([=] {
      Rng rng = c.rng(k);
      TGt1Report rep = t_gt1_witness(random_t_gt1(c.n_for(k), rng), c.cfg.tol);
      json j = rep;
      j["pass"] = rep.passes();
      return j;
    });
  return jobs;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog{
      {"cells", 2, 5, 200, "realize is totally nonnegative and factor_cell inverts it"},
      {"product-law", 2, 4, 100, "cell of a product is the Demazure product of the cells"},
      {"main1-1", 2, 4, 100, "rss witness is regular semisimple"},
      {"main1-2", 2, 4, 100, "non-rss witness for deficient supports is not regular semisimple"},
      {"main1-3", 2, 4, 100, "non-regular witness for proper supports is not regular"},
      {"main1-3-if", 2, 4, 200, "elements with a full-support side are regular"},
      {"reg-uni", 2, 4, 10, "full-support words are regular unipotent, disjoint mixed pairs are not"},
      {"lem-conj", 2, 5, 100, "torus conjugation factors as dominant torus times the same cell"},
      {"lem-w-to-1", 2, 4, 50, "oscillatory elements conjugate into B with all alpha_i(t) > 1"},
      {"lem-root", 2, 6, 0, "root lemma witness exists for all proper J, J'"},
      {"lemma-uv", 2, 4, 100, "u-orbit cone equals the orthant slice of u V_J"},
      {"conjecture-gl3", 3, 3, 25, "Jordan-decomposition conjecture on the GL_3 mixed cells"},
      {"conjecture-prop", 3, 4, 1, "Jordan-decomposition conjecture on cells with comparable supports"},
      {"b-plus-regular", 2, 6, 200, "T U+ elements have one-dimensional eigenspaces"},
      {"gk-eigen", 2, 5, 200, "totally positive elements have n distinct positive eigenvalues"},
      {"t-gt1", 2, 5, 50, "exp of the Jacobi matrix is totally positive with the given spectrum"},
  };
  return catalog;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown property: " + name);
}

json run_suite(const std::string& property, const SuiteConfig& cfg) {
  const SuiteInfo& info = suite_info(property);
  Ctx c{cfg, info.n_min, info.n_max, cfg.trials < 0 ? info.default_trials : cfg.trials};
  if (cfg.n != 0) {
    if (cfg.n < info.n_min || cfg.n > info.n_max)
      throw std::invalid_argument(property + ": n must be in [" + std::to_string(info.n_min) + ", " +
                                  std::to_string(info.n_max) + "]");
    c.lo = c.hi = cfg.n;
  }

  std::vector<Job> jobs;
  if (property == "cells") jobs = cells_jobs(c);
  else if (property == "product-law") jobs = product_law_jobs(c);
  else if (property == "main1-1") jobs = main1_1_jobs(c);
  else if (property == "main1-2") jobs = only_if_jobs(c, false);
  else if (property == "main1-3") jobs = only_if_jobs(c, true);
  else if (property == "main1-3-if") jobs = main1_3_if_jobs(c);
  else if (property == "reg-uni") jobs = reg_uni_jobs(c);
  else if (property == "lem-conj") jobs = lem_conj_jobs(c);
  else if (property == "lem-w-to-1") jobs = w_to_1_jobs(c);
  else if (property == "lem-root") jobs = lem_root_jobs(c);
  else if (property == "lemma-uv") jobs = lemma_uv_jobs(c);
  else if (property == "conjecture-gl3") jobs = conjecture_gl3_jobs(c);
  else if (property == "conjecture-prop") jobs = conjecture_prop_jobs(c);
  else if (property == "b-plus-regular") jobs = bplus_jobs(c);
  else if (property == "gk-eigen") jobs = gk_jobs(c);
  else jobs = t_gt1_jobs(c);

  auto records = run_jobs(jobs, cfg.workers);
  int passed = 0;
  for (const auto& r : records) passed += r.at("pass").get<bool>();
  const int failed = static_cast<int>(records.size()) - passed;
  json cfg_out{{"seed", cfg.seed}, {"trials", c.trials}, {"n_min", c.lo}, {"n_max", c.hi}};
  if (property == "t-gt1") cfg_out["tol"] = static_cast<double>(cfg.tol);
  return json{{"property", property}, {"config", cfg_out}, {"passed", passed},
              {"failed", failed},     {"pass", failed == 0}, {"records", records}};
}

int default_workers() {
  const char* env = std::getenv("TPW_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 256) return 1;
  return static_cast<int>(v);
}

}  // namespace tpw
