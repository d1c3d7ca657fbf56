#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fiberfan/chamber.hpp"

namespace fiberfan {

enum class Provenance { Candidate, Coherent, LocallyCoherent, Transported };

std::string_view provenance_name(Provenance p);

/// Set of faces of P, identified by vertex labels.
struct FaceCollection {
  std::vector<LabelSet> faces;
  Provenance provenance = Provenance::Candidate;
  std::optional<Vector> witness;

  static FaceCollection of(std::vector<LabelSet> faces, Provenance p = Provenance::Candidate);
  bool operator==(const FaceCollection& o) const { return faces == o.faces; }
  bool operator<(const FaceCollection& o) const { return faces < o.faces; }
};

/// Set of cones drawn from a host fan.
struct ConeCollection {
  std::vector<Cone> cones;
  Provenance provenance = Provenance::Candidate;

  static ConeCollection of(std::vector<Cone> cones, Provenance p = Provenance::Candidate);
  bool operator==(const ConeCollection& o) const { return cones == o.cones; }
  bool operator<(const ConeCollection& o) const { return cones < o.cones; }
};

struct CheckReport {
  bool ok = true;
  std::string violation;

  static CheckReport fail(std::string why) { return {false, std::move(why)}; }
};

template <typename T>
struct Enumeration {
  std::vector<T> items;
  bool truncated = false;
  std::size_t nodes = 0;
};

/// Order on collections by inclusion of the unions of their members.
bool string_leq(const FaceCollection& a, const FaceCollection& b);
bool costring_leq(const ConeCollection& a, const ConeCollection& b);

// Strings.
FaceCollection coherent_string(const ProjectedPolytope& pp, const CellComplex& gamma, const Vector& psi);
CheckReport validate_string_subdivision(const ProjectedPolytope& pp, const FaceCollection& fc);
bool is_locally_coherent_string(const ProjectedPolytope& pp, const FaceCollection& fc);
Enumeration<FaceCollection> enumerate_locally_coherent_strings(const ProjectedPolytope& pp, const CellComplex& gamma,
                                                               std::size_t cap);
bool is_tight_string(const ProjectedPolytope& pp, const FaceCollection& fc);

// Costrings. `map` sends the host space onto the target (the dual projection for normal fans).
ConeCollection coherent_costring(const ProjectedPolytope& pp, const FiberFan& gstar, const Cell& c);
CheckReport validate_costring(const ConeCollection& cc, const Fan& host, const Matrix& map);
bool is_locally_coherent_costring(const ConeCollection& cc, const Fan& host, const Matrix& map);
Enumeration<ConeCollection> enumerate_locally_coherent_costrings(const Fan& host, const Matrix& map, std::size_t cap);
bool is_tight_costring(const ConeCollection& cc, const Matrix& map);

/// Collections F(Psi) over all locally coherent maps from the cells to (ker pi)*, unvalidated.
Enumeration<FaceCollection> string_selections(const ProjectedPolytope& pp, const CellComplex& gamma, std::size_t cap);

/// Coherent data the virtual notions are measured against.
struct DualityData {
  CellComplex gamma;
  FiberFan gstar;
  /// Coherent string of each cone of gstar, same order.
  std::vector<FaceCollection> strings;
  /// Coherent costring of each cell of gamma, same order.
  std::vector<ConeCollection> costrings;
};

DualityData duality_data(const ProjectedPolytope& pp);

/// Meets every coherent string in a nonempty set with a unique minimal member (necessary for virtual cells).
bool meets_coherent_strings_once(const FaceCollection& fc, const std::vector<FaceCollection>& strings);
/// Meets every coherent costring in a nonempty set with a unique maximal member (necessary for virtual cones).
bool meets_coherent_costrings_once(const ConeCollection& cc, const std::vector<ConeCollection>& costrings);

/// fc = F(c) for a locally coherent map c from the fiber fan to Q.
bool is_virtual_cell(const ProjectedPolytope& pp, const DualityData& data, const FaceCollection& fc);
/// cc = C(s) for a locally coherent map s from the cells to (ker pi)*.
bool is_virtual_cone(const ProjectedPolytope& pp, const DualityData& data, const ConeCollection& cc);
/// Pointwise order: the minimal member shared with each coherent string of a lies in that of b.
bool virtual_cell_leq(const DualityData& data, const FaceCollection& a, const FaceCollection& b);
/// Pointwise order: the maximal member shared with each coherent costring of a lies in that of b.
bool virtual_cone_leq(const DualityData& data, const ConeCollection& a, const ConeCollection& b);
Enumeration<FaceCollection> enumerate_virtual_cells(const ProjectedPolytope& pp, const DualityData& data,
                                                    std::size_t cap);
Enumeration<ConeCollection> enumerate_virtual_cones(const ProjectedPolytope& pp, const DualityData& data,
                                                    std::size_t cap);

ConeCollection transport(const ProjectedPolytope& pp, const FaceCollection& fc);
FaceCollection transport(const ProjectedPolytope& pp, const ConeCollection& cc);

struct PosetReport {
  std::size_t elements = 0;
  std::size_t relations = 0;
  std::string map;
  bool order_reversing = true;
  bool bijective = true;
  std::vector<std::string> counterexamples;
};

/// Checks that map: A -> B is a bijection with x <= y iff map(x) >= map(y).
PosetReport check_anti_isomorphism(std::size_t na, const std::function<bool(std::size_t, std::size_t)>& leq_a,
                                   std::size_t nb, const std::function<bool(std::size_t, std::size_t)>& leq_b,
                                   const std::vector<std::size_t>& map, std::string name);

/// Indices of the minimal elements of a finite poset.
std::vector<std::size_t> minimal_elements(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

}  // namespace fiberfan
