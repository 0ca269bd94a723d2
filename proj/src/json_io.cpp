#include "tpw/json_io.hpp"

#include <stdexcept>

namespace nlohmann {

void adl_serializer<tpw::Rat>::from_json(const json& j, tpw::Rat& r) {
  if (j.is_number_integer()) {
    r = tpw::Rat(j.get<long>());
    return;
  }
  if (!j.is_string()) throw std::invalid_argument("rational must be a string or an integer");
  r = tpw::parse_rat(j.get<std::string>());
}

}  // namespace nlohmann

namespace tpw {

void to_json(json& j, const QMat& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
}

void from_json(const json& j, QMat& m) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  m = QMat(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<Rat>();
  }
}

void to_json(json& j, const IndexSet& s) { j = s.indices(); }

void to_json(json& j, const WeylElt& w) { j = w.images(); }

void to_json(json& j, const CellPoint& p) {
  j = json{{"n", p.n()},           {"word1", p.word1}, {"params1", p.params1}, {"t", p.t},
           {"word2", p.word2},     {"params2", p.params2}};
}

void from_json(const json& j, CellPoint& p) {
  p.word1 = j.at("word1").get<std::vector<int>>();
  p.params1 = j.at("params1").get<QVec>();
  p.t = j.at("t").get<QVec>();
  p.word2 = j.at("word2").get<std::vector<int>>();
  p.params2 = j.at("params2").get<QVec>();
  p.validate();
}

void to_json(json& j, const ClassReport& r) {
  j = json{{"regular", r.regular},
           {"regular_semisimple", r.regular_semisimple},
           {"unipotent", r.unipotent},
           {"regular_unipotent", r.regular_unipotent}};
  j["oscillatory_order"] = r.oscillatory_order ? json(*r.oscillatory_order) : json(nullptr);
}

void to_json(json& j, const CellWords& w) {
  j = json{{"n", w.n}, {"word1", w.word1}, {"params1", w.params1}, {"word2", w.word2}, {"params2", w.params2}};
}

void to_json(json& j, const WitnessReport& r) {
  auto steps = [](const std::vector<TraceStep>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(json{{"label", s.label}, {"matrix", s.m}});
    return out;
  };
  j = json{{"kind", r.kind},       {"input", r.input},     {"used", r.used},         {"pinned", r.pinned},
           {"K", r.K},             {"t", r.t},             {"element", r.element},   {"cell", r.cell},
           {"outcome", r.outcome}, {"trace", steps(r.trace)}, {"conjugators", steps(r.conjugators)}};
  j["j"] = r.j ? json(*r.j) : json(nullptr);
}

void to_json(json& j, const HPinningData& d) {
  j = json{{"h", d.h}, {"J", d.J}, {"t_bar", d.t_bar}, {"method", d.method}};
}

void to_json(json& j, const ConjectureReport& r) {
  j = json{{"route", r.route}, {"method", r.method},   {"J", r.J},     {"part1", r.part1},
           {"flipped", r.flipped}, {"part2", r.part2}, {"sign", r.sign}, {"holds", r.holds()}};
  if (r.route == "pinning") j["h"] = r.h;
}

void to_json(json& j, const DMat& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n; ++c) row.push_back(static_cast<double>(m(r, c)));
    j.push_back(std::move(row));
  }
}

namespace {

json doubles(const std::vector<long double>& v) {
  json out = json::array();
  for (auto a : v) out.push_back(static_cast<double>(a));
  return out;
}

json subset(unsigned mask) {
  json out = json::array();
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace

void to_json(json& j, const TGt1Report& r) {
  j = json{{"t", r.t},
           {"tol", static_cast<double>(r.tol)},
           {"x_diag", doubles(r.x.diag)},
           {"x_off", doubles(r.x.off)},
           {"exp", r.g.m},
           {"exp_error_bound", static_cast<double>(r.g.error_bound)},
           {"jacobi_residuals", doubles(r.jacobi_residuals)},
           {"spectral_residuals", doubles(r.spectral_residuals)},
           {"tightest_minor",
            {{"rows", subset(r.tightest.rows)},
             {"cols", subset(r.tightest.cols)},
             {"value", static_cast<double>(r.tightest.value)},
             {"required", static_cast<double>(r.tightest.required)}}},
           {"exp_bound_ok", r.exp_bound_ok},
           {"minors_ok", r.minors_ok},
           {"spectrum_ok", r.spectrum_ok},
           {"pass", r.passes()},
           {"note", TGt1Report::note}};
}

std::string dump_line(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::strict); }

}  // namespace tpw
