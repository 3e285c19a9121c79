#pragma once

#include <vector>

#include "kr/weyl.hpp"

namespace kr {

/// Exact test whether `v` is a convex combination of `points`.
/// Phase-one simplex over the rationals with Bland's rule, so it always
/// terminates. All points must have the length of `v`.
bool convex_hull_contains(const std::vector<QVec>& points, const QVec& v);

}  // namespace kr
