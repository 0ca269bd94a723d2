// tpw: corpus generation, classification, factorization and property checks for
// the totally nonnegative monoid of GL_n. Input and output are JSON lines.
//
// Exit codes: 0 pass, 1 property failure (the report names the counterexample),
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "tpw/json_io.hpp"
#include "tpw/sampling.hpp"
#include "tpw/suites.hpp"

using namespace tpw;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  std::uint64_t seed = 1;
  int trials = -1;
  double tol = 1e-12;
  std::string out, in;
  int workers = 0;
  bool table = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open output file: " + path);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }
  void line(const json& j) { os() << dump_line(j) << '\n'; }
  void finish() {
    os().flush();
    if (!os()) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Each nonempty input line is a matrix (array of rows) or an object with a "matrix" key.
template <class F>
int for_each_matrix(const Common& c, Output& out, F&& f) {
  std::ifstream file;
  if (!c.in.empty() && c.in != "-") {
    file.open(c.in);
    if (!file) throw std::runtime_error("cannot open input file: " + c.in);
  }
  std::istream& is = file.is_open() ? static_cast<std::istream&>(file) : std::cin;
  int status = kPass;
  std::string text;
  for (int line = 1; std::getline(is, text); ++line) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec{{"line", line}};
    try {
      json j = json::parse(text);
      QMat g = (j.is_object() ? j.at("matrix") : j).get<QMat>();
      rec["matrix"] = g;
      status = std::max(status, f(g, rec));
    } catch (const std::exception& e) {
      rec["error"] = e.what();
    }
    out.line(rec);
  }
  return status;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad word entry: " + item);
    }
  }
  return w;
}

int cmd_sample(const Common& c, const std::string& word1, const std::string& word2) {
  int n = c.n == 0 ? 3 : c.n;
  auto w1 = parse_word(word1), w2 = parse_word(word2);
  if (n < 1 || n > 8) throw UsageError("sample: n must be in [1, 8]");
  std::optional<WeylElt> e1, e2;
  if (!w1.empty() || !w2.empty()) {
    if (n < 2) throw UsageError("sample: words need n >= 2");
    for (int i : w1)
      if (i < 1 || i >= n) throw UsageError("sample: word letters must be in [1, n-1]");
    for (int i : w2)
      if (i < 1 || i >= n) throw UsageError("sample: word letters must be in [1, n-1]");
    e1 = WeylElt::from_word(n, w1);
    e2 = WeylElt::from_word(n, w2);
  }
  Output out(c.out);
  int trials = c.trials < 0 ? 1 : c.trials;
  for (int k = 0; k < trials; ++k) {
    Rng rng = Rng::for_trial(c.seed, static_cast<std::uint64_t>(k));
    CellPoint p = e1 ? random_cellpoint(*e1, *e2, rng) : random_cellpoint(n, rng);
    out.line(json{{"trial", k}, {"cell", p}, {"matrix", realize(p)}});
  }
  out.finish();
  return kPass;
}

int cmd_classify(const Common& c) {
  Output out(c.out);
  int status = for_each_matrix(c, out, [](const QMat& g, json& rec) {
    rec["report"] = classify(g);
    return kPass;
  });
  out.finish();
  return status;
}

int cmd_factor(const Common& c) {
  Output out(c.out);
  int status = for_each_matrix(c, out, [](const QMat& g, json& rec) {
    CellPoint p = factor_cell(g);
    rec["cell"] = p;
    rec["round_trip"] = realize(p) == g;
    return kPass;
  });
  out.finish();
  return status;
}

int cmd_conjecture(const Common& c) {
  Output out(c.out);
  int status = kPass;
  if (c.trials >= 0) {
    // Sampled corpus instead of input matrices.
    int n = c.n == 0 ? 3 : c.n;
    if (n < 2 || n > 4) throw UsageError("conjecture: sampled n must be in [2, 4]");
    for (int k = 0; k < c.trials; ++k) {
      Rng rng = Rng::for_trial(c.seed, static_cast<std::uint64_t>(k));
      json rec{{"trial", k}};
      if (auto p = comparable_support_sample(n, rng)) {
        GroupElt g = realize(*p);
        ConjectureReport r = check_conjecture(g);
        rec["cell"] = *p;
        rec["matrix"] = g;
        rec["report"] = r;
        if (!r.holds()) status = kFail;
      } else {
        rec["error"] = "rational-spectrum sampler gave up";
      }
      out.line(rec);
    }
  } else {
    status = for_each_matrix(c, out, [](const QMat& g, json& rec) {
      ConjectureReport r = check_conjecture(g);
      rec["report"] = r;
      return r.holds() ? kPass : kFail;
    });
  }
  out.finish();
  return status;
}

int cmd_verify(const Common& c, const std::string& property) {
  SuiteConfig cfg;
  cfg.n = c.n;
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.tol = c.tol;
  cfg.workers = c.workers > 0 ? c.workers : default_workers();
  json rep;
  try {
    rep = run_suite(property, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out(c.out);
  if (c.table) {
    out.os() << property << "  passed " << rep["passed"].get<int>() << "  failed " << rep["failed"].get<int>() << '\n';
    for (const auto& r : rep["records"])
      if (!r["pass"].get<bool>()) out.os() << "  FAIL record " << r["index"].get<int>() << '\n';
  } else {
    out.line(rep);
  }
  out.finish();
  return rep["pass"].get<bool>() ? kPass : kFail;
}

int cmd_jacobi(const Common& c, const std::string& spectrum) {
  TorusElt t;
  std::stringstream ss(spectrum);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      t.push_back(parse_rat(item));
    } catch (const std::exception&) {
      throw UsageError("bad spectrum entry: " + item);
    }
  }
  TGt1Report rep;
  try {
    rep = t_gt1_witness(t, static_cast<long double>(c.tol));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out(c.out);
  out.line(rep);
  out.finish();
  return rep.passes() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the totally nonnegative monoid of GL_n"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "matrix size");
    sub->add_option("--seed", c.seed, "64-bit seed");
    sub->add_option("--trials", c.trials, "number of trials (suite default when omitted)");
    sub->add_option("--tol", c.tol, "numeric tolerance (jacobi, t-gt1)");
    sub->add_option("--out", c.out, "output file (stdout when omitted)");
    sub->add_option("--in", c.in, "input file of JSON lines (stdin when omitted)");
    sub->add_option("--workers", c.workers, "worker threads (default: TPW_WORKERS or 1)")->check(CLI::Range(1, 256));
  };

  std::string word1, word2, property, spectrum;
  auto* sample = app.add_subcommand("sample", "random cell points and their matrices");
  add_common(sample);
  sample->add_option("--word1", word1, "x-word, e.g. 1,2");
  sample->add_option("--word2", word2, "y-word");
  auto* classify_cmd = app.add_subcommand("classify", "regularity, semisimplicity, unipotence");
  add_common(classify_cmd);
  auto* factor = app.add_subcommand("factor", "cell and parameters of a totally nonnegative matrix");
  add_common(factor);
  auto* verify = app.add_subcommand("verify", "run a property suite");
  add_common(verify);
  std::string names;
  for (const auto& s : suite_catalog()) names += (names.empty() ? "" : ", ") + s.name;
  verify->add_option("property", property, "one of: " + names)->required();
  verify->add_flag("--table", c.table, "plain-text summary instead of JSON");
  auto* conjecture = app.add_subcommand("conjecture", "check the Jordan-decomposition conjecture");
  add_common(conjecture);
  auto* jacobi = app.add_subcommand("jacobi", "totally positive exp of a Jacobi matrix with given spectrum");
  add_common(jacobi);
  jacobi->add_option("--spectrum", spectrum, "decreasing positive rationals, e.g. 4,2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sample) return cmd_sample(c, word1, word2);
    if (*classify_cmd) return cmd_classify(c);
    if (*factor) return cmd_factor(c);
    if (*verify) return cmd_verify(c, property);
    if (*conjecture) return cmd_conjecture(c);
    return cmd_jacobi(c, spectrum);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
