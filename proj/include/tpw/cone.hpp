#pragma once

#include <vector>

#include "tpw/ratlin.hpp"

namespace tpw {

// Finitely generated cone; no generators means the zero cone.
struct Cone {
  std::vector<QVec> gens;
};

inline constexpr int kConeDimCap = 12;

// Extreme rays of span(basis) intersected with the nonnegative orthant, each
// scaled to coordinate sum 1, by double description. basis must be linearly
// independent with at most kConeDimCap vectors.
Cone cone_meet_orthant(const std::vector<QVec>& basis);

// v in cone(c.gens), decided by a phase-one simplex with Bland's rule.
bool cone_contains(const Cone& c, const QVec& v);
bool cone_equal(const Cone& a, const Cone& b);

}  // namespace tpw
