#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberfan/fan.hpp"
#include "fiberfan/integer.hpp"
#include "fiberfan/strings.hpp"

namespace fiberfan {

/// Fan of strongly convex cones in a lattice Z^rank.
struct LatticeFan {
  std::size_t rank = 0;
  Fan fan;

  /// Cones given as index lists into `rays`; rays must be primitive.
  static LatticeFan from_rays(std::size_t rank, const std::vector<IntVector>& rays,
                              const std::vector<std::vector<std::size_t>>& cones);
  static LatticeFan of(Fan fan);
  std::vector<Vector> rays() const;
  bool complete() const { return fan.is_complete(); }
};

/// 0 -> N1 -> N -> N2 -> 0 with N = Z^ambient.
struct SublatticeData {
  std::size_t ambient = 0;
  IntMatrix n1_basis;
  /// pi: N -> N2 as an integer matrix with rows spanning the integer annihilator of N1.
  Matrix projection;
  /// Invariant factors above 1 of N1 inside its saturation.
  IntVector torsion;

  static SublatticeData from_kernel(const IntMatrix& basis, std::size_t ambient);
  static SublatticeData from_projection(const Matrix& map);
  std::size_t quotient_rank() const { return projection.rows(); }
};

struct Reduction {
  /// Integer basis of the lineality divided out.
  IntMatrix lineality;
  Matrix map;
  /// Reduced images; may still carry lineality when the offending images disagree.
  Fan fan;
  bool best_effort = true;
};

struct QuotientReport {
  bool valid_costring = false;
  bool strongly_convex = false;
  std::optional<LatticeFan> quotient_fan;
  bool categorical = false;
  bool geometric = false;
  bool degenerate = false;
  std::optional<Reduction> reduction;
  std::string violation;
};

QuotientReport quotient_fan(const LatticeFan& host, const std::vector<Cone>& subset, const SublatticeData& sub);

struct GroupData {
  std::size_t free_rank = 0;
  IntVector torsion;
};

struct CoxData {
  SublatticeData ambient;
  LatticeFan orthant;
  ConeCollection costring;
  GroupData group;
  bool geometric = false;
  bool round_trip = false;
};

CoxData cox_construction(const LatticeFan& fan);

struct ProjectivityResult {
  bool projective = false;
  /// One linear functional per maximal cone (in maximal_cones() order) when projective.
  std::vector<Vector> certificate;
};

ProjectivityResult is_projective_fan(const LatticeFan& fan);

/// Sign vectors use the characters '+', '0', '-', 'u'.
using SignVector = std::string;

struct SpanArrangement {
  /// Primitive integer normals with the first nonzero entry positive, sorted.
  std::vector<Vector> normals;
  Fan extended;
};

SpanArrangement span_arrangement(const LatticeFan& fan);

struct GeneralizedSignVector {
  SignVector entries;
  Cone source;
};

std::vector<GeneralizedSignVector> generalized_sign_vectors(const Fan& fan, const SpanArrangement& arr);
SignVector sign_vector(const Cone& c, const std::vector<Vector>& normals);

struct ExtensionReport {
  std::vector<SignVector> covectors;
  bool matches_extended_fan = false;
  CheckReport axioms;
};

ExtensionReport canonical_extension(const std::vector<SignVector>& vectors, const SpanArrangement& arr);
CheckReport covector_axioms(const std::vector<SignVector>& vectors);

}  // namespace fiberfan
