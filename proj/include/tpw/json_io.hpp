#pragma once

#include <string>

#include "json.hpp"
#include "tpw/classify.hpp"
#include "tpw/jacobi.hpp"
#include "tpw/jordanconj.hpp"
#include "tpw/theorems.hpp"

// Rationals serialize as exact strings ("3", "-7/2"), never as floats.
namespace nlohmann {
template <>
struct adl_serializer<tpw::Rat> {
  static void to_json(json& j, const tpw::Rat& r) { j = tpw::format_rat(r); }
  static void from_json(const json& j, tpw::Rat& r);
};
}  // namespace nlohmann

namespace tpw {

using json = nlohmann::json;

// Matrices are arrays of rows.
void to_json(json& j, const QMat& m);
void from_json(const json& j, QMat& m);
void to_json(json& j, const IndexSet& s);  // sorted index list
void to_json(json& j, const WeylElt& w);   // 1-based one-line notation
void to_json(json& j, const CellPoint& p);
void from_json(const json& j, CellPoint& p);
void to_json(json& j, const ClassReport& r);
void to_json(json& j, const CellWords& w);
void to_json(json& j, const WitnessReport& r);
void to_json(json& j, const HPinningData& d);
void to_json(json& j, const ConjectureReport& r);
void to_json(json& j, const DMat& m);
void to_json(json& j, const TGt1Report& r);

// One line, no trailing newline. Key order is sorted, so output is stable.
std::string dump_line(const json& j);

}  // namespace tpw
