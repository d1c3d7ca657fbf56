#pragma once

#include "fiberfan/io.hpp"

namespace fiberfan {

Json rows_json(const std::vector<Vector>& rows);
Json int_rows_json(const IntMatrix& rows);
Json cell_json(const Cell& c);
Json sublattice_json(const SublatticeData& s);
Json lattice_fan_json(const LatticeFan& f);
Json quotient_json(const QuotientReport& q);
Json cox_json(const CoxData& c);
Json poset_json(const PosetReport& p);

/// Covering relations of the cell poset.
Graph hasse_diagram(const CellComplex& gamma);
/// Maximal cones, adjacent when they meet in a common facet.
Graph wall_graph(const Fan& fan);

}  // namespace fiberfan
