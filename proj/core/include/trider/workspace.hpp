#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trider/derivations.hpp"
#include "trider/standard.hpp"
#include "trider/triangular.hpp"

namespace trider {

/// Malformed input document. `location` is a JSON pointer into the document,
/// or "line L, column C" for syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct BimoduleEntry {
  std::string left;
  std::string right;
  Bimodule module;
};

struct TriangularEntry {
  std::string a;
  std::string m;
  std::string b;
  std::string description;
};

struct SequenceEntry {
  /// Name of a triangular entry, or of an algebra when `on_algebra` is set.
  std::string target;
  bool on_algebra = false;
  HigherMapSequence sequence;
};

/// Everything one input document defines, keyed by name.
///
/// Document layout (scalars are strings "p" or "p/q"):
///   algebras:   {name: {dim, unit: [..], structure_constants: c[i][j] = [..]}}
///   bimodules:  {name: {left, right, dim, left_action: l[i][j] = [..],
///                       right_action: r[j][i] = [..]}}
///   triangular: {name: {A, M, B, description?}}
///   sequences:  {name: {triangular | algebra, kind, levels: [[row, ..], ..]}}
struct Workspace {
  std::map<std::string, Algebra> algebras;
  std::map<std::string, BimoduleEntry> bimodules;
  std::map<std::string, TriangularEntry> triangular;
  std::map<std::string, SequenceEntry> sequences;
};

/// Parses and resolves references. Throws InputError.
Workspace parse_workspace(std::string_view json_text);
Workspace load_workspace(const std::filesystem::path& path);

/// Canonical serialization: two-space indentation, names in sorted order.
std::string dump_workspace(const Workspace& ws);

/// Document holding one seed corpus entry and its constituents.
Workspace corpus_workspace(const standard::CorpusEntry& entry);

/// Validates every object in dependency order; violations are prefixed with
/// the kind and name of the object they belong to.
ValidationReport check_workspace(const Workspace& ws);

/// Builds a named triangular algebra. Throws InputError for unknown names or
/// mismatched constituents and TriangularError if the construction is refused.
TriangularAlgebra resolve_triangular(const Workspace& ws, const std::string& name);

/// The algebra a sequence lives on.
Algebra sequence_algebra(const Workspace& ws, const SequenceEntry& entry);

}  // namespace trider
