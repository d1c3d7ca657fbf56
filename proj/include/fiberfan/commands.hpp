#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberfan/io.hpp"

namespace fiberfan {

struct Options {
  /// Covector on the kernel, e.g. "1,-1/2".
  std::optional<std::string> witness;
  /// Point of Q, e.g. "1/2".
  std::optional<std::string> point;
  /// Faces as label lists separated by ';', e.g. "0 1;2 3".
  std::optional<std::string> faces;
  /// Cone names or bracketed ray index lists separated by ','.
  std::optional<std::string> delta;
  /// Sublattice basis vectors, e.g. "(0,1);(1,1)".
  std::optional<std::string> sublattice;
  std::string kind = "strings";
  bool all_vertices = false;
  std::size_t cap = 1000000;
};

struct CommandResult {
  Json report;
  std::optional<Graph> graph;
  std::vector<std::string> graph_labels;
  /// False when the computation ran but the checked property does not hold.
  bool ok = true;
};

const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& command, const Input& in, const Options& opt);

/// Every invariant suite that applies to the input.
CommandResult verify_all(const Input& in, const Options& opt);

Vector parse_vector_option(const std::string& text);
FaceCollection parse_faces_option(const std::string& text);
IntMatrix parse_sublattice_option(const std::string& text);

}  // namespace fiberfan
