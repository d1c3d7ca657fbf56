#pragma once

#include <vector>

#include "fiberfan/cone.hpp"

namespace fiberfan {

/// Closures of the relatively open faces cut out of `region` by the hyperplanes h.x = 0.
std::vector<Cone> arrangement_faces(const Cone& region, const std::vector<Vector>& hyperplanes);

/// Maximal cells of `region` cut out by the hyperplanes, sorted.
std::vector<Cone> arrangement_chambers(const Cone& region, const std::vector<Vector>& hyperplanes);

/// True iff the union of `pieces` contains `target`.
bool union_covers(const std::vector<Cone>& pieces, const Cone& target);

}  // namespace fiberfan
